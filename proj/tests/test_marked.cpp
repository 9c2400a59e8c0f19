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

#include "catalog.hpp"
#include "marked.hpp"
#include "oracles.hpp"

using namespace pastel;

namespace {

int path_index(const PlaneGraph& g, const std::vector<std::string>& names) {
    std::vector<int> edges;
    for (const auto& n : names) {
        edges.push_back(g.edge(n));
    }
    return poset_of(g, g.all_edges())->index_of(EdgeSet::of(edges));
}

int label_of(const PlaneGraph& g, const MarkedSubgraph& m, const std::string& face) {
    return m.label[*g.find_face(face)];
}

// s, m, t with an arc a over three s-m edges and two m-t edges.
PlaneGraph five_marked_graph() {
    return PlaneGraph::parse(R"(pastel-format 1
graph M
vertex s: a+, u0+, u1+, u2+
vertex m: v0+, v1+, u2-, u1-, u0-
vertex t: v1-, v0-, a-
edge a: s -> t
edge u0: s -> m
edge u1: s -> m
edge u2: s -> m
edge v0: m -> t
edge v1: m -> t
exterior: u2+
face top: a+
face upper: u0+
face lower: u1+
face right: v0+
dom: a
)");
}

} // namespace

TEST_SUITE("marked") {

TEST_CASE("nerve of a bouquet") {
    for (int n = 1; n <= 4; ++n) {
        PlaneGraph b = make_bouquet(n);
        auto nv = nerve(b);
        CHECK(nv->top_dim() == n);
        CHECK(sset_iso(*nv, standard_simplex(n)).has_value());
    }
}

TEST_CASE("B2 chain to marked") {
    PlaneGraph b = catalog_graph("B2");
    std::vector<int> chain{path_index(b, {"e0"}), path_index(b, {"e1"}), path_index(b, {"e2"})};
    MarkedSubgraph m = chain_to_marked(b, b.all_edges(), chain);
    CHECK(m.p == b.all_edges());
    CHECK(label_of(b, m, "phi1") == 1);
    CHECK(label_of(b, m, "phi2") == 2);
    CHECK(marked_to_chain(b, b.all_edges(), m) == chain);
    CHECK(marked_key(b, m) == "{e0,e1,e2}|phi1=1,phi2=2|2");
    CHECK(parse_marked_key(b, marked_key(b, m)) == m);
}

TEST_CASE("constant chain is a bare path") {
    PlaneGraph f = catalog_graph("F");
    int p = path_index(f, {"e1", "e7", "e8"});
    MarkedSubgraph m = chain_to_marked(f, f.all_edges(), {p, p});
    CHECK(m.n == 1);
    CHECK(m.p == f.sub(m.p).edges);
    CHECK(is_path(f, m.p));
    for (int l : m.label) {
        CHECK(l == 0);
    }
    CHECK(marked_to_chain(f, f.all_edges(), m) == std::vector<int>{p, p});
}

TEST_CASE("F chain sweeping phi2, phi1, phi3") {
    PlaneGraph f = catalog_graph("F");
    std::vector<int> chain{
        path_index(f, {"e1", "e2", "e3", "e4"}),
        path_index(f, {"e1", "e2", "e5", "e6", "e4"}),
        path_index(f, {"e1", "e7", "e6", "e4"}),
        path_index(f, {"e1", "e7", "e8"}),
    };
    MarkedSubgraph m = chain_to_marked(f, f.all_edges(), chain);
    CHECK(label_of(f, m, "phi2") == 1);
    CHECK(label_of(f, m, "phi1") == 2);
    CHECK(label_of(f, m, "phi3") == 3);
    CHECK(is_admissible(f, f.all_edges(), m));
    CHECK(marked_to_chain(f, f.all_edges(), m) == chain);
}

TEST_CASE("F has two nondegenerate 3-simplices") {
    PlaneGraph f = catalog_graph("F");
    auto nv = nerve(f);
    REQUIRE(nv->count(3) == 2);
    CHECK(nv->count(4) == 0);
    std::set<std::vector<int>> orders;
    for (int id = 0; id < 2; ++id) {
        MarkedSubgraph m = simplex_to_marked(f, f.all_edges(), nondegenerate(3, id));
        CHECK(m.p == f.all_edges());
        orders.insert({label_of(f, m, "phi1"), label_of(f, m, "phi2"), label_of(f, m, "phi3")});
    }
    // phi2 < phi1 < phi3 and phi2 < phi3 < phi1
    CHECK(orders == std::set<std::vector<int>>{{2, 1, 3}, {3, 1, 2}});
}

TEST_CASE("five-marked subgraph rewrites to six paths") {
    PlaneGraph g = five_marked_graph();
    REQUIRE(g.is_globular());
    MarkedSubgraph m{g.all_edges(), 5, std::vector<int>(g.faces().size(), 0)};
    m.label[*g.find_face("top")] = 1;
    m.label[*g.find_face("upper")] = 2;
    m.label[*g.find_face("lower")] = 5;
    m.label[*g.find_face("right")] = 3;
    REQUIRE(is_admissible(g, g.all_edges(), m));
    auto chain = marked_to_chain(g, g.all_edges(), m);
    std::vector<int> expected{
        path_index(g, {"a"}),        path_index(g, {"u0", "v0"}), path_index(g, {"u1", "v0"}),
        path_index(g, {"u1", "v1"}), path_index(g, {"u1", "v1"}), path_index(g, {"u2", "v1"}),
    };
    CHECK(chain == expected);
    CHECK(chain_to_marked(g, g.all_edges(), chain) == m);
    // Swapping upper and lower breaks admissibility.
    std::swap(m.label[*g.find_face("upper")], m.label[*g.find_face("lower")]);
    std::string why;
    CHECK_FALSE(is_admissible(g, g.all_edges(), m, &why));
    CHECK_THROWS_AS(marked_to_chain(g, g.all_edges(), m), Error);
}

TEST_CASE("bijection with chains on the catalog") {
    for (const auto& name : catalog_names()) {
        PlaneGraph g = catalog_graph(name);
        auto poset = poset_of(g, g.all_edges());
        auto nv = nerve(g);
        for (int n = 0; n <= 4; ++n) {
            auto marked = enumerate_marked(g, g.all_edges(), n);
            CHECK(static_cast<long long>(marked.size()) == oracle::count_chains(poset->leq, n, false));
            std::set<std::vector<int>> seen;
            for (const auto& m : marked) {
                auto chain = marked_to_chain(g, g.all_edges(), m);
                CHECK(chain_to_marked(g, g.all_edges(), chain) == m);
                seen.insert(chain);
            }
            CHECK(seen.size() == marked.size());
            for (const Simplex& x : nv->all_simplices(n)) {
                MarkedSubgraph m = simplex_to_marked(g, g.all_edges(), x);
                CHECK(marked_to_simplex(g, g.all_edges(), m) == x);
            }
        }
    }
}

TEST_CASE("operator action matches reindexing") {
    for (const auto& name : catalog_names()) {
        PlaneGraph g = catalog_graph(name);
        auto nv = nerve(g);
        for (int n = 0; n <= 3; ++n) {
            for (const Simplex& x : nv->all_simplices(n)) {
                auto chain = chain_of(*nv, x);
                MarkedSubgraph m = chain_to_marked(g, g.all_edges(), chain);
                for (int k = 0; k <= 3; ++k) {
                    for (const Op& a : monotone_maps(k, n)) {
                        std::vector<int> q;
                        for (int v : a) {
                            q.push_back(chain[v]);
                        }
                        CHECK(act_operator(g, m, a) == chain_to_marked(g, g.all_edges(), q));
                    }
                }
            }
        }
    }
}

TEST_CASE("face computation example on W") {
    PlaneGraph w = catalog_graph("W");
    MarkedSubgraph m{w.all_edges(), 3, std::vector<int>(w.faces().size(), 0)};
    m.label[*w.find_face("top")] = 1;
    m.label[*w.find_face("left")] = 3;
    m.label[*w.find_face("right")] = 2;
    REQUIRE(is_admissible(w, w.all_edges(), m));
    MarkedSubgraph d1 = act_operator(w, m, coface(3, 1));
    CHECK(d1.n == 2);
    CHECK(d1.p == w.all_edges() - EdgeSet::single(w.edge("v0")));
    CHECK(label_of(w, d1, "top") == 1);
    CHECK(label_of(w, d1, "right") == 1);
    CHECK(label_of(w, d1, "left") == 2);
    MarkedSubgraph d2 = act_operator(w, m, coface(3, 2));
    CHECK(d2.p == w.all_edges());
    CHECK(label_of(w, d2, "top") == 1);
    CHECK(label_of(w, d2, "right") == 2);
    CHECK(label_of(w, d2, "left") == 2);
    CHECK(act_operator(w, m, identity_op(3)) == m);
}

TEST_CASE("functoriality of the action") {
    PlaneGraph f = catalog_graph("F");
    auto nv = nerve(f);
    for (int id = 0; id < nv->count(3); ++id) {
        MarkedSubgraph m = simplex_to_marked(f, f.all_edges(), nondegenerate(3, id));
        for (const Op& a : monotone_maps(2, 3)) {
            for (const Op& b : monotone_maps(2, 2)) {
                CHECK(act_operator(f, m, compose_ops(a, b)) ==
                      act_operator(f, act_operator(f, m, a), b));
            }
        }
    }
}

TEST_CASE("join isomorphism") {
    PlaneGraph b1 = make_bouquet(1);
    PlaneGraph j = join(b1, b1);
    auto nj = nerve(j);
    CHECK(sset_iso(*nj, sset_product(standard_simplex(1), standard_simplex(1))).has_value());
    auto n1 = nerve(b1);
    // (e0 <= e1) joined with itself is the diagonal: both faces labelled 1.
    MarkedSubgraph a = simplex_to_marked(b1, b1.all_edges(), nondegenerate(1, 0));
    MarkedSubgraph d = join_iso(b1, a, b1, a, j);
    CHECK(d.p == j.all_edges());
    for (int f : j.interior_faces()) {
        CHECK(d.label[f] == 1);
    }
    CHECK(is_admissible(j, j.all_edges(), d));
    auto [x, y] = split_iso(b1, b1, j, d);
    CHECK(x == a);
    CHECK(y == a);
    // 0-simplices join to concatenated paths.
    MarkedSubgraph p0 = simplex_to_marked(b1, b1.all_edges(), nondegenerate(0, 0));
    MarkedSubgraph p1 = simplex_to_marked(b1, b1.all_edges(), nondegenerate(0, 1));
    MarkedSubgraph c = join_iso(b1, p0, b1, p1, j);
    CHECK(is_path(j, c.p));
    CHECK(c.p.size() == 2);
    // Naturality on all pairs of simplices up to dimension 2.
    for (int n = 0; n <= 2; ++n) {
        for (const Simplex& s : n1->all_simplices(n)) {
            for (const Simplex& t : n1->all_simplices(n)) {
                MarkedSubgraph ms = simplex_to_marked(b1, b1.all_edges(), s);
                MarkedSubgraph mt = simplex_to_marked(b1, b1.all_edges(), t);
                MarkedSubgraph joined = join_iso(b1, ms, b1, mt, j);
                CHECK(is_admissible(j, j.all_edges(), joined));
                for (const Op& alpha : monotone_maps(1, n)) {
                    CHECK(act_operator(j, joined, alpha) ==
                          join_iso(b1, act_operator(b1, ms, alpha), b1,
                                   act_operator(b1, mt, alpha), j));
                }
            }
        }
    }
}

TEST_CASE("join isomorphism is associative") {
    PlaneGraph b = make_bouquet(1);
    PlaneGraph left = join(join(b, b), b);
    PlaneGraph right = join(b, join(b, b));
    PlaneGraph bb = join(b, b);
    auto nb = nerve(b);
    for (int n = 0; n <= 2; ++n) {
        for (const Simplex& x : nb->all_simplices(n)) {
            MarkedSubgraph m = simplex_to_marked(b, b.all_edges(), x);
            MarkedSubgraph l = join_iso(bb, join_iso(b, m, b, m, bb), b, m, left);
            MarkedSubgraph r = join_iso(b, m, bb, join_iso(b, m, b, m, bb), right);
            CHECK(marked_key(left, l) == marked_key(right, r));
        }
    }
}

} // TEST_SUITE
