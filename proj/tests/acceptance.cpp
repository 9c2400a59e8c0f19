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

// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "anodyne.hpp"
#include "catalog.hpp"
#include "compositor.hpp"
#include "marked.hpp"
#include "oracles.hpp"
#include "pasting.hpp"
#include "pasting_laws.hpp"
#include "paths.hpp"
#include "scat.hpp"
#include "sset.hpp"
#include "twocat.hpp"
#include "two_examples.hpp"

using namespace pastel;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 20) {
            failures_.push_back(what);
        }
        failed_ += ok ? 0 : 1;
    }
    // Empty string means success.
    void expect_empty(const std::string& why, const std::string& what) {
        expect(why.empty(), what + ": " + why);
    }
    void within(double elapsed, double limit, const std::string& what) {
        std::ostringstream s;
        s << what << " took " << elapsed << " s, limit " << limit << " s";
        expect(elapsed < limit, s.str());
    }

    bool ok() const {
        return failed_ == 0;
    }
    long long checks() const {
        return checks_;
    }
    long long failed() const {
        return failed_;
    }
    const std::vector<std::string>& failures() const {
        return failures_;
    }

private:
    long long checks_ = 0;
    long long failed_ = 0;
    std::vector<std::string> failures_;
};

std::vector<PlaneGraph> catalog_graphs() {
    std::vector<PlaneGraph> out;
    for (const auto& name : catalog_names()) {
        out.push_back(catalog_graph(name));
    }
    return out;
}

PastingDiagram min_complete(const PlaneGraph& g) {
    return complete(sigma_min(g));
}

int poset_height(const PlaneGraph& g) {
    return std::max(1, poset_of(g, g.all_edges())->height());
}

EdgeSet edges(const PlaneGraph& g, std::initializer_list<const char*> names) {
    EdgeSet out;
    for (const char* n : names) {
        out.insert(g.edge(n));
    }
    return out;
}

// 1. Nerves of bouquets and their joins.
void nerve_goldens(Checker& c) {
    for (int n = 1; n <= 4; ++n) {
        auto start = Clock::now();
        PlaneGraph b = make_bouquet(n);
        bool iso = sset_iso(*nerve(b), standard_simplex(n)).has_value();
        std::string what = "N(B" + std::to_string(n) + ") = Delta^" + std::to_string(n);
        c.expect(iso, what);
        c.within(seconds_since(start), 1.0, what);
    }
    for (int n = 1; n <= 3; ++n) {
        for (int m = 1; m <= 3; ++m) {
            auto start = Clock::now();
            PlaneGraph j = join(make_bouquet(n, "e", "phi"), make_bouquet(m, "d", "psi"));
            FiniteSSet prod = sset_product(standard_simplex(n), standard_simplex(m));
            bool iso = sset_iso(*nerve(j), prod).has_value();
            std::string what = "N(B" + std::to_string(n) + " join B" + std::to_string(m) + ")";
            c.expect(iso, what);
            c.within(seconds_since(start), 1.0, what);
        }
    }
}

// 2. n-chains of the path poset against admissible n-marked wide subgraphs.
void marked_bijection(Checker& c) {
    auto start = Clock::now();
    for (const PlaneGraph& g : catalog_graphs()) {
        auto poset = poset_of(g, g.all_edges());
        auto nv = nerve(g);
        for (int n = 0; n <= 5; ++n) {
            std::string where = g.name() + " n=" + std::to_string(n);
            auto marked = enumerate_marked(g, g.all_edges(), n);
            c.expect(static_cast<long long>(marked.size()) ==
                         oracle::count_chains(poset->leq, n, false),
                     where + ": count");
            std::set<std::vector<int>> chains;
            for (const auto& m : marked) {
                c.expect(is_admissible(g, g.all_edges(), m), where + ": admissible");
                auto chain = marked_to_chain(g, g.all_edges(), m);
                c.expect(chain_to_marked(g, g.all_edges(), chain) == m, where + ": marked round trip");
                chains.insert(chain);
            }
            c.expect(chains.size() == marked.size(), where + ": distinct chains");
            for (const Simplex& x : nv->all_simplices(n)) {
                c.expect(marked_to_simplex(g, g.all_edges(), simplex_to_marked(g, g.all_edges(), x)) ==
                             x,
                         where + ": simplex round trip");
            }
        }
    }
    c.within(seconds_since(start), 10.0, "all graphs");
}

// 3. act_operator against reindexing of chains.
void operator_action(Checker& c) {
    std::mt19937 rng(20261015);
    for (const PlaneGraph& g : catalog_graphs()) {
        auto nv = nerve(g);
        const EdgeSet all = g.all_edges();
        auto agrees = [&](const Simplex& x, const Op& a, const std::string& what) {
            auto chain = chain_of(*nv, x);
            std::vector<int> q;
            for (int v : a) {
                q.push_back(chain[v]);
            }
            MarkedSubgraph m = chain_to_marked(g, all, chain);
            c.expect(act_operator(g, m, a) == chain_to_marked(g, all, q), g.name() + ": " + what);
        };
        // Generators on every simplex up to dimension 4.
        for (int n = 0; n <= 4; ++n) {
            for (const Simplex& x : nv->all_simplices(n)) {
                for (int i = 0; i <= n && n >= 1; ++i) {
                    agrees(x, coface(n, i), "d" + std::to_string(i));
                }
                for (int i = 0; i <= n && n + 1 <= 4; ++i) {
                    agrees(x, codegeneracy(n, i), "s" + std::to_string(i));
                }
            }
        }
        // 50 random composites of generators, all dimensions at most 4.
        for (int trial = 0; trial < 50; ++trial) {
            int n = std::uniform_int_distribution<int>(0, 4)(rng);
            auto simplices = nv->all_simplices(n);
            Simplex x = simplices[std::uniform_int_distribution<std::size_t>(0, simplices.size() - 1)(rng)];
            Op a = identity_op(n);
            int k = n;
            int length = std::uniform_int_distribution<int>(2, 5)(rng);
            for (int step = 0; step < length; ++step) {
                bool up = k == 0 || (k < 4 && std::uniform_int_distribution<int>(0, 1)(rng) == 1);
                Op gen = up ? codegeneracy(k, std::uniform_int_distribution<int>(0, k)(rng))
                            : coface(k, std::uniform_int_distribution<int>(0, k)(rng));
                a = compose_ops(a, gen);
                k = static_cast<int>(a.size()) - 1;
            }
            agrees(x, a, "random " + op_to_string(a));
        }
    }
}

// 4. The hc example.
void hc_golden(Checker& c) {
    PlaneGraph h = catalog_graph("H");
    auto added = hc_new_members(min_complete(h), pi_max(h));
    std::set<EdgeSet> got(added.begin(), added.end());
    std::set<EdgeSet> expected{
        edges(h, {"a", "c0", "c1", "c2"}),
        edges(h, {"a", "c0", "c2"}),
        edges(h, {"c0", "c2"}),
    };
    std::string listed;
    for (EdgeSet e : got) {
        listed += " " + h.edges_to_string(e);
    }
    c.expect(got.size() == 3, "expected 3 new subgraphs, got " + std::to_string(got.size()) + ":" +
                                  listed);
    c.expect(got == expected, "new subgraphs differ from the expected three");
}

// 5. Nerve identities on the diagrams of each catalog graph.
void nerve_interplay(Checker& c) {
    auto start = Clock::now();
    for (const PlaneGraph& g : catalog_graphs()) {
        auto fam = laws::catalog_diagrams(g);
        c.expect_empty(laws::union_law(g, fam), g.name() + " union");
        c.expect_empty(laws::restriction_law(g, fam), g.name() + " restriction");
        c.expect_empty(laws::pushout_law(g, fam), g.name() + " pushout");
        c.expect_empty(laws::join_intersection_law(g, fam), g.name() + " join");
        c.expect_empty(laws::hc_law(g, fam), g.name() + " hc");
    }
    c.within(seconds_since(start), 30.0, "all graphs");
}

// 6. Certificates for the minimal complete diagram into the maximal one.
void anodyne_certificates(Checker& c) {
    for (const PlaneGraph& g : catalog_graphs()) {
        if (g.num_edges() > 8) {
            continue;
        }
        auto start = Clock::now();
        AnodyneCertificate cert = build_certificate(min_complete(g), pi_max(g));
        ValidationReport r = validate_certificate(cert);
        c.expect(r.ok, g.name() + ": " + r.reason);
        c.expect(2 * static_cast<int>(cert.steps.size()) == cert.top.total() - cert.base.total(),
                 g.name() + ": two simplices per step");
        if (g.name() == "B2") {
            c.expect(cert.steps.size() == 1, "B2 has one step");
            auto found = search_certificate(*cert.ambient, cert.base, cert.top);
            c.expect(found.size() == 1, "exhaustive search on B2 finds one step");
        }
        c.within(seconds_since(start), 60.0, g.name());
    }
}

// (n-1)-simplex id -> (n-simplex id, face index) over nondegenerate faces.
std::map<int, std::vector<std::pair<int, int>>> cofaces(const FiniteSSet& s, int n) {
    std::map<int, std::vector<std::pair<int, int>>> out;
    for (int id = 0; id < s.count(n); ++id) {
        for (int j = 0; j <= n; ++j) {
            const Simplex& f = s.face(n, id, j);
            if (!f.degenerate()) {
                out[f.id].push_back({id, j});
            }
        }
    }
    return out;
}

// 7. Fillable simplices on every 2-connected G_{x,y} with two or more faces.
void fillable_lemmata(Checker& c) {
    int carriers = 0;
    int fillable_seen = 0;
    for (const PlaneGraph& g : catalog_graphs()) {
        for (int x = 0; x < g.num_vertices(); ++x) {
            for (int y = 0; y < g.num_vertices(); ++y) {
                auto h = subgraph_xy(g, x, y);
                if (x == y || !h || g.sub(*h).interior_faces().size() < 2 ||
                    !is_two_connected(g, *h)) {
                    continue;
                }
                ++carriers;
                const std::string where =
                    g.name() + "(" + g.vertex_name(x) + "," + g.vertex_name(y) + ")";
                Split s = split_graph(g, *h);
                auto nerve_h = nerve(g, *h);
                const FiniteSSet& ns = *nerve_h;
                const int top = std::min(4, ns.top_dim());
                std::vector<std::vector<FillableInfo>> info(top + 1);
                for (int n = 0; n <= top; ++n) {
                    for (int id = 0; id < ns.count(n); ++id) {
                        info[n].push_back(classify_fillable(g, s, nondegenerate(n, id)));
                    }
                }
                for (int n = 1; n <= top; ++n) {
                    auto up = cofaces(ns, n);
                    for (int id = 0; id < ns.count(n); ++id) {
                        const FillableInfo& f = info[n][id];
                        if (!f.fillable) {
                            continue;
                        }
                        ++fillable_seen;
                        const std::string at = where + " " + std::to_string(n) + "-simplex " +
                                               std::to_string(id);
                        // Either in the colimit or c in 2..n.
                        c.expect(f.in_colim || (f.c >= 2 && f.c <= n), at + ": c out of range");
                        if (f.c < 2 || f.c > n) {
                            continue;
                        }
                        const int cc = f.c;
                        // (a)
                        for (int i = 0; i <= n; ++i) {
                            if (i != cc - 1 && i != cc) {
                                c.expect(info[n - 1][ns.face(n, id, i).id].fillable,
                                         at + ": (a) face " + std::to_string(i));
                            }
                        }
                        // (b)
                        const int missing = ns.face(n, id, cc - 1).id;
                        c.expect(!info[n - 1][missing].fillable, at + ": (b) inner face fillable");
                        for (auto [tau, j] : up[missing]) {
                            if (tau != id) {
                                const FillableInfo& t = info[n][tau];
                                c.expect(!(t.fillable && t.c >= cc), at + ": (b) second filler");
                            }
                        }
                        // (c)
                        const int dc = ns.face(n, id, cc).id;
                        if (!info[n - 1][dc].fillable) {
                            bool found = false;
                            for (auto [tau, j] : up[dc]) {
                                const FillableInfo& t = info[n][tau];
                                found = found || (t.fillable && t.c > cc);
                            }
                            c.expect(found, at + ": (c) no fillable tau");
                        }
                    }
                }
            }
        }
    }
    c.expect(carriers > 0 && fillable_seen > 0, "no carrier exercised the lemmata");
}

// 8. Labelings and functors into the nerve of the chain 2-category.
void labelings_classify(Checker& c) {
    NerveTwoCatSCat target(chain_2cat(), 3);
    for (const char* name : {"B2", "J"}) {
        PlaneGraph g = catalog_graph(name);
        CSigma dom(min_complete(g));
        long long labelings = enumerate_labelings(g, target, [&](const Labeling& l) {
            SFunctor u = labeling_to_functor(dom, target, l);
            c.expect_empty(check_functor(dom, target, u, 3), std::string(name) + " functor");
            c.expect(functor_to_labeling(dom, target, u) == l, std::string(name) + " labeling round trip");
        });
        long long functors = enumerate_functors(dom, target, [&](const SFunctor& u) {
            c.expect(labeling_to_functor(dom, target, functor_to_labeling(dom, target, u)) == u,
                     std::string(name) + " functor round trip");
        });
        long long oracle = for_each_two_labeling(g, chain_2cat(), [](const TwoLabeling&) {});
        c.expect(labelings == oracle, std::string(name) + ": labelings " + std::to_string(labelings) +
                                          " vs 2-category labelings " + std::to_string(oracle));
        c.expect(functors == labelings, std::string(name) + ": functors " + std::to_string(functors) +
                                            " vs labelings " + std::to_string(labelings));
    }
    // Canonical labelings of every catalog graph in C[Pi_max].
    for (const PlaneGraph& g : catalog_graphs()) {
        CSigma dom(min_complete(g));
        CSigma big(pi_max(g));
        Labeling l = canonical_scat_labeling(big);
        SFunctor u = labeling_to_functor(dom, big, l);
        c.expect(functor_to_labeling(dom, big, u) == l, g.name() + " canonical round trip");
    }
}

// 9. Composites along every maximal chain agree.
void power_recovery(Checker& c) {
    auto start = Clock::now();
    FiniteTwoCategory chain = chain_2cat();
    FiniteTwoCategory crossed = crossed_module_2cat();
    for (const PlaneGraph& g : catalog_graphs()) {
        // The generic labeling of the free 2-category; every other labeling
        // in it is the image of this one under a 2-functor.
        FreeTwoCategory free(computad_of_graph(g));
        TwoLabeling l = canonical_labeling(g, free);
        auto results = exhaustive_composite_oracle(g, free, l);
        c.expect(results.size() == 1, g.name() + ": free composites not unique");
        c.expect(!results.empty() && *results.begin() == paste_2cat(g, free, l),
                 g.name() + ": free paste_2cat");
        for (const FiniteTwoCategory* tc : {&chain, &crossed}) {
            long long n = for_each_two_labeling(g, *tc, [&](const TwoLabeling& t) {
                auto r = exhaustive_composite_oracle(g, *tc, t);
                c.expect(r.size() == 1, g.name() + ": " + tc->name() + " composites not unique");
                c.expect(!r.empty() && *r.begin() == paste_2cat(g, *tc, t),
                         g.name() + ": " + tc->name() + " paste_2cat");
            });
            c.expect(n > 0, g.name() + ": no " + tc->name() + " labelings");
        }
    }
    // Overview pasting: xi.ba, then w.phi.a, then wv.psi.
    PlaneGraph g = PlaneGraph::parse(examples::kOverview);
    FreeTwoCategory free(computad_of_graph(g));
    TwoLabeling l = canonical_labeling(g, free);
    auto cell = [&](const char* face) { return l.cell2[*g.find_face(face)]; };
    auto one = [&](const char* e) { return l.cell1[g.edge(e)]; };
    int expected = free.vcompose(
        free.vcompose(free.whisker(free.compose1(one("a"), one("b")), cell("xi"), -1),
                      free.whisker(one("a"), cell("phi"), one("w"))),
        free.whisker(-1, cell("psi"), free.compose1(one("v"), one("w"))));
    c.expect(expected == paste_2cat(g, free, l), "overview: paste_2cat");
    c.expect(exhaustive_composite_oracle(g, free, l).size() == 1, "overview: oracle");

    // Two globs side by side: phi then psi equals psi then phi, in the free
    // 2-category and for every labeling in the crossed-module 2-category.
    PlaneGraph j = catalog_graph("J");
    auto both_ways = [&](const TwoCategory& tc, const TwoLabeling& t) {
        int phi = t.cell2[*j.find_face("phi")];
        int psi = t.cell2[*j.find_face("psi")];
        auto e = [&](const char* name) { return t.cell1[j.edge(name)]; };
        int left = tc.vcompose(tc.whisker(-1, phi, e("d0")), tc.whisker(e("e1"), psi, -1));
        int right = tc.vcompose(tc.whisker(e("e0"), psi, -1), tc.whisker(-1, phi, e("d1")));
        c.expect(left == right, tc.name() + ": interchange orders differ");
        c.expect(left == paste_2cat(j, tc, t), tc.name() + ": interchange paste_2cat");
    };
    FreeTwoCategory free_j(computad_of_graph(j));
    both_ways(free_j, canonical_labeling(j, free_j));
    for_each_two_labeling(j, crossed, [&](const TwoLabeling& t) { both_ways(crossed, t); });
    c.within(seconds_since(start), 60.0, "all graphs");
}

// Every edge and face of g sent to its own cell of the path 2-category.
Labeling free_labeling(const PlaneGraph& g, const NerveTwoCatSCat& free) {
    const FiniteTwoCategory& c = free.two_category();
    Labeling l;
    for (int v = 0; v < g.num_vertices(); ++v) {
        l.object.push_back(v);
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        l.edge.push_back(free.vertex_of(*c.find1(g.edge_name(e))));
    }
    l.face.assign(g.faces().size(), Simplex{});
    for (int f : g.interior_faces()) {
        const Face& phi = g.faces()[f];
        l.face[f] = free.edge_of(
            *c.find2(g.path_to_string(phi.dom) + "=>" + g.path_to_string(phi.cod)));
    }
    return l;
}

// One lift with all tie orders; checks p l = v and l|Sigma = u.
void check_lift(Checker& c, const std::string& where, const CSigma& sigma, const CSigma& pi,
                const SCat& b, const SCat& a, const SFunctor& u, const SFunctor& p,
                const SFunctor& v, const FillerOracle& oracle) {
    SFunctor l = recursive_lift(sigma, pi, b, a, u, p, v, oracle);
    c.expect_empty(check_functor(pi, b, l, 2), where + " functor");
    c.expect_empty(compare_functors(pi, a, compose_functors(pi, b, a, l, p), v), where + " p l = v");
    c.expect_empty(compare_functors(sigma, b, restrict_to_sigma(sigma, pi, b, l), u),
                   where + " l|Sigma = u");
    LiftOptions reversed;
    reversed.reverse_ties = true;
    c.expect(recursive_lift(sigma, pi, b, a, u, p, v, oracle, reversed) == l, where + " reversed ties");
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        LiftOptions shuffled;
        shuffled.tie_seed = seed;
        c.expect(recursive_lift(sigma, pi, b, a, u, p, v, oracle, shuffled) == l,
                 where + " shuffled ties " + std::to_string(seed));
    }
}

// 10. recursive_lift into nerves of 2-categories.
void lift_correctness(Checker& c) {
    EnumeratingOracle oracle(true);
    TerminalSCat one;
    for (const PlaneGraph& g : catalog_graphs()) {
        CSigma sigma(min_complete(g));
        CSigma pi(pi_max(g));
        NerveTwoCatSCat free(path_2cat(g), poset_height(g));
        SFunctor u = labeling_to_functor(sigma, free, free_labeling(g, free));
        // Over the terminal category.
        check_lift(c, g.name() + " terminal", sigma, pi, free, one, u, to_terminal(free),
                   to_terminal(pi), oracle);
        // Over the identity, with v the lift just found.
        Extension ext = find_extension(sigma, pi, free, free_labeling(g, free), oracle);
        check_lift(c, g.name() + " identity", sigma, pi, free, free, u, identity_functor(free),
                   ext.functor, oracle);
    }
    NerveTwoCatSCat chain(chain_2cat(), 3);
    for (const char* name : {"B2", "J"}) {
        PlaneGraph g = catalog_graph(name);
        CSigma sigma(min_complete(g));
        CSigma pi(pi_max(g));
        enumerate_labelings(g, chain, [&](const Labeling& l) {
            SFunctor u = labeling_to_functor(sigma, chain, l);
            check_lift(c, std::string(name) + " chain", sigma, pi, chain, one, u, to_terminal(chain),
                       to_terminal(pi), oracle);
        });
    }
}

struct Criterion {
    int number;
    const char* name;
    std::function<void(Checker&)> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "nerve goldens", nerve_goldens},
        {2, "marked-subgraph bijection", marked_bijection},
        {3, "operator-action equivalence", operator_action},
        {4, "hc golden", hc_golden},
        {5, "nerve-interplay suite", nerve_interplay},
        {6, "anodyne certificates", anodyne_certificates},
        {7, "fillable-simplex lemmata", fillable_lemmata},
        {8, "labelings classify functors", labelings_classify},
        {9, "power recovery", power_recovery},
        {10, "lift correctness", lift_correctness},
    };
    int failed = 0;
    for (const Criterion& k : criteria) {
        Checker c;
        auto start = Clock::now();
        try {
            k.run(c);
        }
        catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double elapsed = seconds_since(start);
        char line[160];
        std::snprintf(line, sizeof line, "%-4s criterion %2d %-30s %lld checks, %.2f s",
                      c.ok() ? "PASS" : "FAIL", k.number, k.name, c.checks(), elapsed);
        std::cout << line << "\n";
        for (const auto& f : c.failures()) {
            std::cout << "     " << f << "\n";
        }
        if (c.failed() > static_cast<long long>(c.failures().size())) {
            std::cout << "     ... " << c.failed() - static_cast<long long>(c.failures().size())
                      << " more\n";
        }
        std::cout.flush();
        failed += c.ok() ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail")
              << "\n";
    return failed == 0 ? 0 : 1;
}
