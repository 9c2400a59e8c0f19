// Copyright 2026 The Pastel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pastel/pastel.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>
#include <utility>

#include "anodyne.hpp"
#include "catalog.hpp"
#include "compositor.hpp"
#include "io.hpp"
#include "marked.hpp"
#include "pasting.hpp"
#include "paths.hpp"
#include "plane_graph.hpp"
#include "render.hpp"
#include "scat.hpp"
#include "text.hpp"
#include "twocat.hpp"

struct pastel_graph {
    pastel::PlaneGraph g;
};

struct pastel_diagram {
    pastel::PastingDiagram d;
    std::string name;
};

namespace {

using namespace pastel;

thread_local std::string last_error;

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
pastel_status guard(F&& body) {
    try {
        body();
        last_error.clear();
        return PASTEL_OK;
    }
    catch (const Error& e) {
        last_error = e.what();
        return static_cast<pastel_status>(e.code());
    }
    catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return PASTEL_INTERNAL;
    }
    catch (const std::exception& e) {
        last_error = e.what();
        return PASTEL_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (p == nullptr) {
        fail(ErrorCode::InvalidArgument, std::string("null ") + what);
    }
}

void put(char** out, const std::string& s) {
    need(out, "output");
    *out = dup(s);
}

std::string path_line(const PlaneGraph& g, const std::vector<int>& edges) {
    return edges.empty() ? std::string("()") : g.path_to_string(edges);
}

int default_dim(const PlaneGraph& g) {
    return std::max(1, poset_of(g, g.all_edges())->height());
}

FiniteTwoCategory twocat_by_name(std::string_view name, const PlaneGraph* g) {
    if (name == "chain") {
        return chain_2cat();
    }
    if (name == "crossed-module") {
        return crossed_module_2cat();
    }
    if (name == "paths") {
        need(g, "graph");
        return path_2cat(*g);
    }
    return parse_twocat(name);
}

std::string nerve_table(const PlaneGraph& g, const FiniteSSet& n, int max_dim, bool marked) {
    std::ostringstream out;
    int top = n.top_dim();
    if (max_dim >= 0 && max_dim < top) {
        top = max_dim;
    }
    for (int k = 0; k <= top; ++k) {
        out << "dim " << k << ": " << n.count(k) << "\n";
        for (int id = 0; id < n.count(k); ++id) {
            Simplex x{k, id, identity_op(k)};
            out << "  " << k << " " << id << " ";
            if (marked) {
                out << marked_key(g, simplex_to_marked(g, g.all_edges(), x));
            }
            else {
                out << n.label(k, id);
            }
            out << "\n";
        }
    }
    return out.str();
}

Op parse_op(std::string_view text) {
    Op op;
    for (const std::string& t : text::split_list(text, ',')) {
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(t, &used);
            if (used != t.size()) {
                throw std::invalid_argument(t);
            }
        }
        catch (const std::exception&) {
            fail(ErrorCode::ParseError, "bad operator entry '" + t + "'");
        }
        op.push_back(v);
    }
    if (op.empty()) {
        fail(ErrorCode::ParseError, "empty operator");
    }
    return op;
}

std::string diagram_report(const PastingDiagram& d) {
    const PlaneGraph& g = d.graph();
    std::ostringstream out;
    out << "carrier " << g.edges_to_string(d.carrier()) << "\n";
    out << "members " << d.members().size() << "\n";
    for (EdgeSet m : d.members()) {
        out << "  " << g.edges_to_string(m) << "\n";
    }
    out << "complete " << (d.is_complete() ? "yes" : "no") << "\n";
    out << "subdivision-closed " << (d.is_subdivision_closed() ? "yes" : "no") << "\n";
    out << "wide-generated " << (d.is_wide_generated() ? "yes" : "no") << "\n";
    return out.str();
}

struct Target {
    std::unique_ptr<NerveTwoCatSCat> scat;
};

Target make_target(const PlaneGraph& g, const char* spec, int dim) {
    need(spec, "target");
    Target t;
    t.scat = std::make_unique<NerveTwoCatSCat>(twocat_by_name(spec, &g),
                                               dim > 0 ? dim : default_dim(g));
    return t;
}

} // namespace

extern "C" {

const char* pastel_version(void) {
    return "0.1.0";
}

const char* pastel_status_name(int status) {
    static thread_local std::string name;
    if (status == 0) {
        return "Ok";
    }
    name = std::string(pastel::to_string(static_cast<pastel::ErrorCode>(status)));
    return name.c_str();
}

const char* pastel_last_error(void) {
    return last_error.c_str();
}

void pastel_string_free(char* s) {
    std::free(s);
}

pastel_status pastel_catalog_names(char** out) {
    return guard([&] {
        std::string s;
        for (const auto& n : catalog_names()) {
            s += n + "\n";
        }
        put(out, s);
    });
}

int pastel_catalog_contains(const char* name) {
    return name != nullptr && in_catalog(name) ? 1 : 0;
}

pastel_status pastel_catalog_twocat(const char* name, char** out) {
    return guard([&] {
        need(name, "name");
        std::string n = name;
        if (n != "chain" && n != "crossed-module") {
            fail(ErrorCode::InvalidArgument, "unknown 2-category '" + n + "'");
        }
        put(out, twocat_to_text(twocat_by_name(n, nullptr)));
    });
}

pastel_status pastel_graph_parse(const char* text, pastel_graph** out) {
    return guard([&] {
        need(text, "text");
        need(out, "output");
        auto g = std::make_unique<pastel_graph>();
        g->g = PlaneGraph::parse(text);
        *out = g.release();
    });
}

pastel_status pastel_graph_catalog(const char* name, pastel_graph** out) {
    return guard([&] {
        need(name, "name");
        need(out, "output");
        auto g = std::make_unique<pastel_graph>();
        g->g = catalog_graph(name);
        *out = g.release();
    });
}

void pastel_graph_free(pastel_graph* g) {
    delete g;
}

pastel_status pastel_graph_to_text(const pastel_graph* g, char** out) {
    return guard([&] {
        need(g, "graph");
        put(out, g->g.to_text());
    });
}

int pastel_graph_num_vertices(const pastel_graph* g) {
    return g == nullptr ? -1 : g->g.num_vertices();
}

int pastel_graph_num_edges(const pastel_graph* g) {
    return g == nullptr ? -1 : g->g.num_edges();
}

int pastel_graph_num_faces(const pastel_graph* g) {
    return g == nullptr ? -1 : g->g.num_interior_faces();
}

pastel_status pastel_graph_check(const pastel_graph* g, char** report) {
    return guard([&] {
        need(g, "graph");
        const PlaneGraph& pg = g->g;
        const GlobularityReport& r = check_globular(pg);
        std::ostringstream out;
        out << "graph " << pg.name() << ": " << pg.num_vertices() << " vertices, "
            << pg.num_edges() << " edges, " << pg.num_interior_faces() << " faces\n";
        out << "source " << pg.vertex_name(r.source) << "\n";
        out << "target " << pg.vertex_name(r.target) << "\n";
        out << "dom " << path_line(pg, r.dom.edges) << "\n";
        out << "cod " << path_line(pg, r.cod.edges) << "\n";
        put(report, out.str());
    });
}

pastel_status pastel_graph_faces(const pastel_graph* g, char** out) {
    return guard([&] {
        need(g, "graph");
        const PlaneGraph& pg = g->g;
        std::ostringstream s;
        for (const Face& f : pg.faces()) {
            s << (f.exterior ? "exterior" : "face") << " " << f.name << ":";
            for (int d : f.boundary) {
                s << " " << pg.dart_name(d);
            }
            if (!f.exterior && f.globular) {
                s << "  [" << path_line(pg, f.dom) << " => " << path_line(pg, f.cod) << "]";
            }
            s << "\n";
        }
        put(out, s.str());
    });
}

pastel_status pastel_graph_paths(const pastel_graph* g, char** out) {
    return guard([&] {
        need(g, "graph");
        const PlaneGraph& pg = g->g;
        auto poset = poset_of(pg, pg.all_edges());
        std::ostringstream s;
        s << "paths " << poset->size() << " height " << poset->height() << "\n";
        for (int i = 0; i < poset->size(); ++i) {
            s << "  " << i << " " << path_line(pg, poset->paths[i].edges) << "\n";
        }
        s << hasse_to_dot(pg, *poset);
        put(out, s.str());
    });
}

pastel_status pastel_graph_nerve(const pastel_graph* g, int max_dim, int marked, char** out) {
    return guard([&] {
        need(g, "graph");
        put(out, nerve_table(g->g, *nerve(g->g), max_dim, marked != 0));
    });
}

pastel_status pastel_graph_nerve_json(const pastel_graph* g, char** out) {
    return guard([&] {
        need(g, "graph");
        put(out, sset_to_json(*nerve(g->g)).dump(2) + "\n");
    });
}

pastel_status pastel_graph_act(const pastel_graph* g, const char* marked_key_text,
                               const char* op, char** out) {
    return guard([&] {
        need(g, "graph");
        need(marked_key_text, "key");
        need(op, "operator");
        MarkedSubgraph m = parse_marked_key(g->g, marked_key_text);
        MarkedSubgraph r = act_operator(g->g, m, parse_op(op));
        put(out, marked_key(g->g, r) + "\n");
    });
}

pastel_status pastel_graph_render(const pastel_graph* g, const char* format, char** out) {
    return guard([&] {
        need(g, "graph");
        need(format, "format");
        put(out, render_graph(g->g, format));
    });
}

pastel_status pastel_diagram_parse(const char* text, pastel_diagram** out) {
    return guard([&] {
        need(text, "text");
        need(out, "output");
        auto d = std::make_unique<pastel_diagram>();
        d->d = parse_diagram(text, &d->name);
        *out = d.release();
    });
}

pastel_status pastel_diagram_named(const pastel_graph* g, const char* name, pastel_diagram** out) {
    return guard([&] {
        need(g, "graph");
        need(name, "name");
        need(out, "output");
        auto pd = named_diagram(g->g, name);
        if (!pd) {
            fail(ErrorCode::InvalidArgument,
                 std::string("unknown diagram '") + name + "' (min, min-complete, max)");
        }
        auto d = std::make_unique<pastel_diagram>();
        d->d = std::move(*pd);
        d->name = name;
        *out = d.release();
    });
}

void pastel_diagram_free(pastel_diagram* d) {
    delete d;
}

pastel_status pastel_diagram_to_text(const pastel_diagram* d, char** out) {
    return guard([&] {
        need(d, "diagram");
        put(out, diagram_to_text(d->d, d->name.empty() ? "d" : d->name));
    });
}

int pastel_diagram_num_members(const pastel_diagram* d) {
    return d == nullptr ? -1 : static_cast<int>(d->d.members().size());
}

pastel_status pastel_diagram_check(const pastel_diagram* d, char** out) {
    return guard([&] {
        need(d, "diagram");
        put(out, diagram_report(d->d));
    });
}

pastel_status pastel_diagram_nerve(const pastel_diagram* d, char** out) {
    return guard([&] {
        need(d, "diagram");
        put(out, sset_table(nerve_pd_sset(d->d)));
    });
}

pastel_status pastel_diagram_hc(const pastel_diagram* sigma, const pastel_diagram* pi,
                                pastel_diagram** out, char** report) {
    return guard([&] {
        need(sigma, "sigma");
        need(pi, "pi");
        std::vector<EdgeSet> fresh = hc_new_members(sigma->d, pi->d);
        PastingDiagram h = hc(sigma->d, pi->d);
        if (report != nullptr) {
            const PlaneGraph& g = h.graph();
            std::ostringstream s;
            s << "new " << fresh.size() << "\n";
            for (EdgeSet m : fresh) {
                s << "  " << g.edges_to_string(m) << "\n";
            }
            *report = dup(s.str());
        }
        if (out != nullptr) {
            auto d = std::make_unique<pastel_diagram>();
            d->d = std::move(h);
            d->name = "hc";
            *out = d.release();
        }
    });
}

pastel_status pastel_diagram_hom(const pastel_diagram* d, const char* x, const char* y, int json,
                                 char** out) {
    return guard([&] {
        need(d, "diagram");
        need(x, "x");
        need(y, "y");
        CSigma c(d->d);
        int a = c.object(x);
        int b = c.object(y);
        const FiniteSSet* h = c.hom(a, b);
        if (h == nullptr) {
            put(out, json ? std::string("null\n") : std::string("empty\n"));
            return;
        }
        put(out, json ? sset_to_json(*h).dump(2) + "\n" : sset_table(*h));
    });
}

pastel_status pastel_certificate_build(const pastel_diagram* sigma, const pastel_diagram* pi,
                                       char** out) {
    return guard([&] {
        need(sigma, "sigma");
        need(pi, "pi");
        AnodyneCertificate cert = build_certificate(sigma->d, pi->d);
        ValidationReport r = validate_certificate(cert);
        if (!r.ok) {
            fail(ErrorCode::Internal, "built certificate does not validate: " + r.reason);
        }
        put(out, certificate_to_text(cert, sigma->d, pi->d));
    });
}

pastel_status pastel_certificate_validate(const pastel_diagram* sigma, const pastel_diagram* pi,
                                          const char* certificate, char** report) {
    return guard([&] {
        need(sigma, "sigma");
        need(pi, "pi");
        need(certificate, "certificate");
        AnodyneCertificate cert = load_certificate(certificate, sigma->d, pi->d);
        ValidationReport r = validate_certificate(cert);
        if (!r.ok) {
            std::string where = r.step >= 0 ? " at step " + std::to_string(r.step) : "";
            fail(ErrorCode::InvalidCertificate,
                 std::string(violation_name(r.kind)) + where + ": " + r.reason);
        }
        put(report, "valid: " + std::to_string(cert.steps.size()) + " steps\n");
    });
}

pastel_status pastel_label(const pastel_graph* g, const char* labeling, const char* target,
                           int dim, char** out) {
    return guard([&] {
        need(g, "graph");
        need(labeling, "labeling");
        Target t = make_target(g->g, target, dim);
        CSigma dom(complete(sigma_min(g->g)));
        Labeling l = parse_labeling(g->g, *t.scat, labeling);
        SFunctor f = labeling_to_functor(dom, *t.scat, l);
        put(out, functor_table(dom, *t.scat, f));
    });
}

pastel_status pastel_extend(const pastel_graph* g, const char* labeling, const char* target,
                            int dim, char** out) {
    return guard([&] {
        need(g, "graph");
        need(labeling, "labeling");
        Target t = make_target(g->g, target, dim);
        CSigma dom(complete(sigma_min(g->g)));
        CSigma big(pi_max(g->g));
        Labeling l = parse_labeling(g->g, *t.scat, labeling);
        EnumeratingOracle oracle(true);
        Extension ext = find_extension(dom, big, *t.scat, l, oracle);
        std::ostringstream s;
        s << "pairs " << ext.report.pairs << " steps " << ext.report.steps << " searched "
          << ext.report.searched << " glued " << ext.report.glued << "\n";
        s << functor_table(big, *t.scat, ext.functor);
        put(out, s.str());
    });
}

pastel_status pastel_paste(const pastel_graph* g, const char* labeling, const char* twocat,
                           char** out) {
    return guard([&] {
        need(g, "graph");
        need(twocat, "2-category");
        const PlaneGraph& pg = g->g;
        std::string spec = twocat;
        bool no_labeling = labeling == nullptr || text::trim(labeling).empty();
        bool builtin = spec == "chain" || spec == "crossed-module" || spec == "paths";
        if (spec == "free" || (!builtin && is_computad_text(spec))) {
            FreeTwoCategory c(spec == "free" ? computad_of_graph(pg) : parse_computad(spec));
            TwoLabeling l = no_labeling && spec == "free" ? canonical_labeling(pg, c)
                                                          : parse_two_labeling(pg, c, labeling);
            put(out, c.name2(paste_2cat(pg, c, l)) + "\n");
            return;
        }
        need(labeling, "labeling");
        FiniteTwoCategory c = twocat_by_name(spec, &pg);
        TwoLabeling l = parse_two_labeling(pg, c, labeling);
        put(out, c.name2(paste_2cat(pg, c, l)) + "\n");
    });
}

} // extern "C"
