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

// Elementwise checks of the nerve identities for pasting diagrams, shared by
// the unit tests and the acceptance runner. Each check returns an empty
// string on success and a description of the first mismatch otherwise.

#pragma once

#include <string>
#include <vector>

#include "pasting.hpp"

namespace pastel::laws {

struct NamedDiagram {
    std::string name;
    PastingDiagram d;
};

using Family = std::vector<NamedDiagram>;

/// The named diagrams of a catalog graph: min, min-complete and max.
inline Family catalog_diagrams(const PlaneGraph& g) {
    PastingDiagram smin = sigma_min(g);
    return {{"min", smin}, {"min-complete", complete(smin)}, {"max", pi_max(g)}};
}

/// Catalog diagrams plus the diagram generated by each interior face.
inline Family diagram_family(const PlaneGraph& g) {
    Family out = catalog_diagrams(g);
    for (int f : g.interior_faces()) {
        EdgeSet face = g.faces()[f].dom_set | g.faces()[f].cod_set;
        out.push_back({"face " + g.faces()[f].name, generate(g, {face})});
    }
    return out;
}

inline std::vector<EdgeSet> wide_subgraphs(const PlaneGraph& g) {
    std::vector<EdgeSet> out;
    for_each_subset(g.all_edges(), [&](EdgeSet h) {
        if (!h.empty()) {
            const SubgraphInfo& info = g.sub(h);
            if (info.globular && info.source == g.source() && info.target == g.target()) {
                out.push_back(h);
            }
        }
    });
    return out;
}

inline std::string union_law(const PlaneGraph& g, const Family& fam) {
    for (const auto& a : fam) {
        for (const auto& b : fam) {
            if (!(nerve_pd(union_pd(a.d, b.d)) == (nerve_pd(a.d) | nerve_pd(b.d)))) {
                return g.name() + ": union law fails for " + a.name + " and " + b.name;
            }
        }
    }
    return {};
}

inline std::string restriction_law(const PlaneGraph& g, const Family& fam) {
    const EdgeSet all = g.all_edges();
    for (const auto& a : fam) {
        Subcomplex whole = nerve_pd(a.d);
        for (EdgeSet h : wide_subgraphs(g)) {
            Subcomplex lhs = embed_subcomplex(g, h, nerve_pd(restrict(a.d, h)), all);
            Subcomplex rhs = whole & carrier_subcomplex(g, h, all);
            if (!(lhs == rhs)) {
                return g.name() + ": restriction square fails for " + a.name + " on " +
                       g.edges_to_string(h);
            }
        }
    }
    return {};
}

inline std::string pushout_law(const PlaneGraph& g, const Family& fam) {
    const EdgeSet all = g.all_edges();
    for (const auto& a : fam) {
        for (EdgeSet h : wide_subgraphs(g)) {
            PastingDiagram sh = restrict(a.d, h);
            for (const PastingDiagram& t : {pi_max(g, h), complete(sh)}) {
                // S u T on G: T's members joined into S.
                std::set<EdgeSet> members = a.d.members();
                members.insert(t.members().begin(), t.members().end());
                PastingDiagram st(g, all, members);
                Subcomplex ns = nerve_pd(a.d);
                Subcomplex nt = embed_subcomplex(g, h, nerve_pd(t), all);
                Subcomplex nsh = embed_subcomplex(g, h, nerve_pd(sh), all);
                if (!(nerve_pd(st) == (ns | nt))) {
                    return g.name() + ": pushout square is not cocartesian for " + a.name +
                           " on " + g.edges_to_string(h);
                }
                if (!((ns & nt) == nsh)) {
                    return g.name() + ": pushout square is not cartesian for " + a.name + " on " +
                           g.edges_to_string(h);
                }
            }
        }
    }
    return {};
}

inline Subcomplex through_vertex(const PastingDiagram& d, const std::vector<int>& cuts) {
    const PlaneGraph& g = d.graph();
    std::vector<int> stops{d.source()};
    stops.insert(stops.end(), cuts.begin(), cuts.end());
    stops.push_back(d.target());
    PastingDiagram acc = restrict_xy(d, stops[0], stops[1]);
    for (std::size_t i = 2; i < stops.size(); ++i) {
        PastingDiagram next = restrict_xy(d, stops[i - 1], stops[i]);
        acc = join_pd(acc, acc.wide_elements(), next, next.wide_elements());
    }
    return embed_subcomplex(g, acc.carrier(), nerve_pd(acc), d.carrier());
}

inline std::string join_intersection_law(const PlaneGraph& g, const Family& fam) {
    for (const auto& a : fam) {
        if (!a.d.is_complete()) {
            continue;
        }
        for (int x = 0; x < g.num_vertices(); ++x) {
            for (int y = 0; y < g.num_vertices(); ++y) {
                if (x == y || x == g.source() || x == g.target() || y == g.source() ||
                    y == g.target()) {
                    continue;
                }
                Subcomplex both = through_vertex(a.d, {x}) & through_vertex(a.d, {y});
                if (g.reaches(x, y)) {
                    if (!(both == through_vertex(a.d, {x, y}))) {
                        return g.name() + ": join intersection fails at " + g.vertex_name(x) +
                               ", " + g.vertex_name(y) + " for " + a.name;
                    }
                }
                else if (!g.reaches(y, x) && both.total() != 0) {
                    return g.name() + ": incomparable vertices " + g.vertex_name(x) + ", " +
                           g.vertex_name(y) + " meet in the nerve";
                }
            }
        }
    }
    return {};
}

inline std::string hc_law(const PlaneGraph& g, const Family& fam) {
    for (const auto& s : fam) {
        for (const auto& p : fam) {
            if (!p.d.is_complete()) {
                continue;
            }
            bool included = true;
            for (EdgeSet m : s.d.members()) {
                included = included && p.d.contains(m);
            }
            if (!included) {
                continue;
            }
            Subcomplex rhs = nerve_pd(s.d);
            for (int x = 0; x < g.num_vertices(); ++x) {
                if (x != g.source() && x != g.target()) {
                    rhs = rhs | through_vertex(p.d, {x});
                }
            }
            if (!(nerve_pd(hc(s.d, p.d)) == rhs)) {
                return g.name() + ": nerve of hc fails for " + s.name + " in " + p.name;
            }
        }
    }
    return {};
}

inline std::string subdivision_lifting_law(const PlaneGraph& g, const Family& fam, int max_dim) {
    auto nv = nerve(g);
    for (const auto& s : fam) {
        if (!s.d.is_subdivision_closed()) {
            continue;
        }
        Subcomplex ns = nerve_pd(s.d);
        for (const auto& t : fam) {
            bool included = true;
            for (EdgeSet m : s.d.members()) {
                included = included && t.d.contains(m);
            }
            if (!included) {
                continue;
            }
            Subcomplex nt = nerve_pd(t.d);
            for (int n = 2; n <= std::min(max_dim, nv->top_dim()); ++n) {
                for (int id = 0; id < nv->count(n); ++id) {
                    if (!nt.contains(n, id) || ns.contains(n, id)) {
                        continue;
                    }
                    for (int i = 1; i < n; ++i) {
                        if (ns.contains(nv->face(n, id, i))) {
                            return g.name() + ": inner face of " + nv->label(n, id) +
                                   " lies in " + s.name + " but the simplex does not";
                        }
                    }
                }
            }
        }
    }
    return {};
}

} // namespace pastel::laws
