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

#include <doctest.h>

#include <regex>

#include "anodyne.hpp"
#include "catalog.hpp"
#include "io.hpp"
#include "pasting_laws.hpp"
#include "render.hpp"
#include "text.hpp"

using namespace pastel;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    }
    catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Ok;
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
    auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    return s.replace(pos, from.size(), to);
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("hash and edge sets") {
    // Published FNV-1a 64 test vectors.
    CHECK(text_hash("") == "cbf29ce484222325");
    CHECK(text_hash("a") == "af63dc4c8601ec8c");
    PlaneGraph b3 = catalog_graph("B3");
    CHECK(parse_edge_set(b3, "{e0, e2}") == EdgeSet::of(std::vector<int>{0, 2}));
    CHECK(parse_edge_set(b3, "e1") == EdgeSet::single(1));
    CHECK(parse_edge_set(b3, "{}").empty());
    CHECK(code_of([&] { parse_edge_set(b3, "{e0, x}"); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { parse_edge_set(b3, "{e0"); }) == ErrorCode::ParseError);
}

TEST_CASE("diagram round trip") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        PlaneGraph g = catalog_graph(name);
        for (const auto& [dname, d] : laws::diagram_family(g)) {
            CAPTURE(dname);
            std::string label = "d";
            std::string text = diagram_to_text(d, label);
            std::string back_name;
            PastingDiagram back = parse_diagram(text, &back_name);
            CHECK(back == d);
            CHECK(back.graph() == g);
            CHECK(back_name == "d");
            CHECK(diagram_to_text(back, "d") == text);
            CHECK(diagram_hash(back) == diagram_hash(d));
        }
        for (const char* n : {"min", "min-complete", "max"}) {
            CHECK(named_diagram(g, n).has_value());
        }
        CHECK_FALSE(named_diagram(g, "huge"));
    }
}

TEST_CASE("diagram flags") {
    PlaneGraph h = catalog_graph("H");
    std::string faces;
    for (int f : h.interior_faces()) {
        const Face& phi = h.faces()[f];
        std::string list;
        for (int e : (phi.dom_set | phi.cod_set).to_vector()) {
            list += (list.empty() ? "" : ", ") + h.edge_name(e);
        }
        faces += (faces.empty() ? "" : "; ") + list;
    }
    std::string base = h.to_text() + "diagram m: generators = {" + faces + "}";
    CHECK(parse_diagram(base) == sigma_min(h));
    CHECK(parse_diagram(base + " complete") == complete(sigma_min(h)));
    PastingDiagram sub = parse_diagram(base + " subdivision-closed");
    CHECK(sub.is_subdivision_closed());
    PastingDiagram both = parse_diagram(base + " complete subdivision-closed");
    CHECK(both.is_complete());
    CHECK(both.is_subdivision_closed());
    CHECK(code_of([&] { parse_diagram(base + " shiny"); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { parse_diagram(h.to_text()); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { parse_diagram(base + "\n" + "diagram n: generators = {}"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([&] { parse_diagram(h.to_text() + "diagram m: generators = {a, b}"); }) ==
          ErrorCode::NotGlobularSubgraph);

    // A carrier other than the whole graph survives the round trip.
    PlaneGraph b3 = catalog_graph("B3");
    PastingDiagram part = pi_max(b3, parse_edge_set(b3, "{e0, e1}"));
    CHECK(parse_diagram(diagram_to_text(part, "part")) == part);
}

TEST_CASE("labeling round trip") {
    NerveTwoCatSCat target(chain_2cat(), 3);
    for (const char* name : {"B2", "J"}) {
        PlaneGraph g = catalog_graph(name);
        long long n = enumerate_labelings(g, target, [&](const Labeling& l) {
            std::string text = labeling_to_text(g, target, l);
            CHECK(parse_labeling(g, target, text) == l);
        });
        CHECK(n > 0);
    }
    PlaneGraph b2 = catalog_graph("B2");
    CSigma pi(pi_max(b2));
    Labeling canon = canonical_scat_labeling(pi);
    std::string text = labeling_to_text(b2, pi, canon);
    CHECK(parse_labeling(b2, pi, text) == canon);
    std::string bad = text;
    bad = replace_once(bad, "edge e0 = ", "edge e0 = 99");
    CHECK(code_of([&] { parse_labeling(b2, pi, bad); }) == ErrorCode::ParseError);
    std::string missing = text.substr(0, text.rfind("face"));
    CHECK(code_of([&] { parse_labeling(b2, pi, missing); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { parse_labeling(b2, pi, "obj s = s\n"); }) == ErrorCode::ParseError);

    // Swapped face labels are well formed but not a labeling.
    Labeling crossed = canon;
    std::swap(crossed.face[*b2.find_face("phi1")], crossed.face[*b2.find_face("phi2")]);
    CHECK(code_of([&] { parse_labeling(b2, pi, labeling_to_text(b2, pi, crossed)); }) ==
          ErrorCode::InvalidLabeling);
}

TEST_CASE("two labelings and 2-category files") {
    for (const FiniteTwoCategory& c : {chain_2cat(), crossed_module_2cat()}) {
        CAPTURE(c.name());
        std::string text = twocat_to_text(c);
        CHECK_FALSE(is_computad_text(text));
        FiniteTwoCategory back = parse_twocat(text);
        CHECK(twocat_to_text(back) == text);
        CHECK(back.check_axioms() == "");
    }
    FiniteTwoCategory cm = crossed_module_2cat();
    PlaneGraph j = catalog_graph("J");
    int seen = 0;
    for_each_two_labeling(j, cm, [&](const TwoLabeling& l) {
        if (seen++ % 37 == 0) {
            CHECK(parse_two_labeling(j, cm, two_labeling_to_text(j, cm, l)) == l);
        }
    });
    CHECK(seen > 0);

    // Dropping a table line is a parse error.
    std::string text = twocat_to_text(chain_2cat());
    auto pos = text.find("hcomp");
    std::string cut = text.substr(0, pos) + text.substr(text.find('\n', pos) + 1);
    CHECK(code_of([&] { parse_twocat(cut); }) == ErrorCode::ParseError);

    // Computads and free labelings by generator names.
    Computad cd = computad_of_graph(j);
    std::string ctext = computad_to_text(cd);
    CHECK(is_computad_text(ctext));
    CHECK(computad_to_text(parse_computad(ctext)) == ctext);
    FreeTwoCategory free(parse_computad(ctext));
    TwoLabeling canon = canonical_labeling(j, free);
    std::string ltext = two_labeling_to_text(j, free, canon);
    CHECK(parse_two_labeling(j, free, ltext) == canon);
    CHECK(code_of([&] { parse_computad(ctext + "gen2 bad e0 => nowhere\n"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([&] { parse_computad(ctext + "object s\n"); }) == ErrorCode::DuplicateId);
}

TEST_CASE("certificate round trip") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        PlaneGraph g = catalog_graph(name);
        PastingDiagram sigma = complete(sigma_min(g));
        PastingDiagram pi = pi_max(g);
        AnodyneCertificate cert = build_certificate(sigma, pi);
        std::string text = certificate_to_text(cert, sigma, pi);
        CHECK(parse_certificate(text, sigma, pi) == cert.steps);
        AnodyneCertificate loaded = load_certificate(text, sigma, pi);
        CHECK(validate_certificate(loaded).ok);
        // Every step line names its filler by marked-subgraph key.
        std::regex step(R"(step (\d+): dim=(\d+) horn=(\d+) filler=\{[^}]*\}\|[^|]*\|\d+)");
        int lines = 0;
        for (std::string_view l : text::split_lines(text)) {
            if (l.starts_with("step")) {
                CHECK(std::regex_match(std::string(l), step));
                ++lines;
            }
        }
        CHECK(lines == static_cast<int>(cert.steps.size()));
        // Certificates are tied to their diagrams.
        if (!(sigma == pi)) {
            CHECK(code_of([&] { parse_certificate(text, pi, pi); }) ==
                  ErrorCode::InvalidCertificate);
        }
    }
    PlaneGraph b2 = catalog_graph("B2");
    PastingDiagram sigma = complete(sigma_min(b2));
    PastingDiagram pi = pi_max(b2);
    std::string text = certificate_to_text(build_certificate(sigma, pi), sigma, pi);
    CHECK(text.find("step 0: dim=2 horn=1 filler=") != std::string::npos);
    std::string outer = replace_once(text, "horn=1", "horn=0");
    ValidationReport r = validate_certificate(load_certificate(outer, sigma, pi));
    CHECK_FALSE(r.ok);
    CHECK(r.kind == Violation::InnerIndex);
    std::string renumbered = replace_once(text, "step 0:", "step 3:");
    CHECK(code_of([&] { parse_certificate(renumbered, sigma, pi); }) == ErrorCode::ParseError);
    std::string other_graph = replace_once(text, "graph ", "graph 0");
    CHECK(code_of([&] { parse_certificate(other_graph, sigma, pi); }) ==
          ErrorCode::InvalidCertificate);
}

TEST_CASE("simplicial set dumps") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        PlaneGraph g = catalog_graph(name);
        auto n = nerve(g);
        auto j = sset_to_json(*n);
        std::string dumped = j.dump();
        CHECK(dumped.starts_with("{\"format\":\"pastel-sset 1\",\"dim_bound\""));
        FiniteSSet back = sset_from_json(nlohmann::ordered_json::parse(dumped));
        CHECK(sset_to_json(back) == j);
        CHECK(sset_iso(back, *n).has_value());
        CHECK(sset_table(back) == sset_table(*n));
    }
    CHECK(code_of([] { sset_from_json(nlohmann::ordered_json::parse("{\"format\":1}")); }) ==
          ErrorCode::ParseError);
    FiniteSSet d2 = standard_simplex(2);
    std::string table = sset_table(d2);
    CHECK(std::count(table.begin(), table.end(), '\n') == 7);
}

TEST_CASE("functor tables") {
    PlaneGraph b2 = catalog_graph("B2");
    CSigma pi(pi_max(b2));
    std::string t = functor_table(pi, pi, identity_functor(pi));
    CHECK(t.starts_with("obj s -> s\nobj t -> t\nhom s t\n"));
    CHECK(std::count(t.begin(), t.end(), '\n') == 2 + 1 + pi.hom(0, 1)->total());
}

TEST_CASE("rendering") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        PlaneGraph g = catalog_graph(name);
        Layout l = layout_graph(g);
        for (int e = 0; e < g.num_edges(); ++e) {
            CHECK(l.vertex_x[g.src(e)] < l.vertex_x[g.dst(e)]);
        }
        // dom above cod for every face.
        for (int f : g.interior_faces()) {
            const Face& phi = g.faces()[f];
            for (int a : phi.dom) {
                for (int b : phi.cod) {
                    CHECK(l.edge_y[a] < l.edge_y[b]);
                }
            }
        }
        std::string dot = render_graph(g, "dot");
        CHECK(dot.starts_with("digraph"));
        CHECK(std::count(dot.begin(), dot.end(), '>') >= g.num_edges());
        std::string svg = render_graph(g, "svg");
        CHECK(svg.starts_with("<svg"));
        CHECK(svg.ends_with("</svg>\n"));
        std::size_t polylines = 0;
        for (auto pos = svg.find("<polyline"); pos != std::string::npos;
             pos = svg.find("<polyline", pos + 1)) {
            ++polylines;
        }
        CHECK(polylines == static_cast<std::size_t>(g.num_edges()));
        std::string tikz = render_graph(g, "tikz");
        CHECK(tikz.starts_with("\\begin{tikzpicture}"));
        CHECK(render_graph(g, "svg") == svg);
    }
    CHECK(code_of([] { render_graph(catalog_graph("B1"), "png"); }) == ErrorCode::InvalidArgument);
    PlaneGraph b2 = catalog_graph("B2");
    std::string hasse = hasse_to_dot(b2, *poset_of(b2, b2.all_edges()));
    CHECK(std::count(hasse.begin(), hasse.end(), '>') == 2);
}

} // TEST_SUITE
