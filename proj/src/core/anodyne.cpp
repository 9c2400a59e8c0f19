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

#include "anodyne.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "marked.hpp"
#include "paths.hpp"

namespace pastel {

namespace {

std::vector<char> faces_inside(const PlaneGraph& g, EdgeSet h) {
    std::vector<char> out(g.faces().size(), 0);
    const SubgraphInfo& info = g.sub(h);
    for (int f : info.interior_faces()) {
        for (int gf : info.faces[f].gfaces) {
            out[gf] = 1;
        }
    }
    return out;
}

bool has_subpath(EdgeSet path, EdgeSet sub) {
    return !sub.empty() && sub.subset_of(path);
}

// Ambient id of every nondegenerate simplex of nerve(g, small), per
// dimension.
std::vector<std::vector<int>> ids_into(const PlaneGraph& g, EdgeSet small, EdgeSet big) {
    auto ns = nerve(g, small);
    auto nb = nerve(g, big);
    auto ps = poset_of(g, small);
    auto pb = poset_of(g, big);
    std::vector<std::vector<int>> out(ns->top_dim() + 1);
    for (int n = 0; n <= ns->top_dim(); ++n) {
        for (int id = 0; id < ns->count(n); ++id) {
            std::vector<int> chain;
            for (int v : ns->key(n, id)) {
                int idx = pb->index_of(ps->paths[v].set);
                check(idx >= 0, "carriers share source and target");
                chain.push_back(idx);
            }
            auto found = nb->find(n, chain);
            check(found.has_value(), "chain survives in the larger poset");
            out[n].push_back(*found);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> missing_in(const FiniteSSet& ambient, const Subcomplex& have,
                                            const Subcomplex& want) {
    std::vector<std::pair<int, int>> out;
    for (int n = 0; n <= ambient.top_dim(); ++n) {
        for (int id = 0; id < ambient.count(n); ++id) {
            if (want.contains(n, id) && !have.contains(n, id)) {
                out.emplace_back(n, id);
            }
        }
    }
    return out;
}

// Novelty and horn conditions of one step against `cur`.
Violation step_violation(const FiniteSSet& ambient, const Subcomplex& cur, int n, int id, int i) {
    if (cur.contains(n, id)) {
        return Violation::Novelty;
    }
    const Simplex& missing = ambient.face(n, id, i);
    if (missing.degenerate() || cur.contains(missing)) {
        return Violation::Novelty;
    }
    for (int j = 0; j <= n; ++j) {
        if (j != i && !cur.contains(ambient.face(n, id, j))) {
            return Violation::Horn;
        }
    }
    return Violation::None;
}

void apply_step(const FiniteSSet& ambient, Subcomplex& cur, int n, int id, int i) {
    cur.add(n, id);
    const Simplex& missing = ambient.face(n, id, i);
    cur.add(missing.nd_dim, missing.id);
}

std::string describe_missing(const FiniteSSet& ambient,
                             const std::vector<std::pair<int, int>>& missing) {
    std::string out = std::to_string(missing.size()) + " simplices missing";
    for (std::size_t k = 0; k < missing.size() && k < 4; ++k) {
        out += k == 0 ? ": " : ", ";
        out += ambient.simplex_to_string(nondegenerate(missing[k].first, missing[k].second));
    }
    if (missing.size() > 4) {
        out += ", ...";
    }
    return out;
}

class Builder {
public:
    Builder(const PlaneGraph& g, EdgeSet carrier, Subcomplex base, const BuildOptions& options)
        : g_(g),
          carrier_(carrier),
          ambient_(nerve(g, carrier)),
          cur_(std::move(base)),
          options_(options) {
    }

    void grow(const PastingDiagram& sigma, const PastingDiagram& pi) {
        const EdgeSet c = pi.carrier();
        Subcomplex target = embed_subcomplex(g_, c, nerve_pd(pi), carrier_);
        if (target.subset_of(cur_)) {
            return;
        }
        const SubgraphInfo& info = g_.sub(c);
        if (info.interior_faces().size() < 2 || !is_two_connected(g_, c)) {
            search_to(target);
            return;
        }
        Split split = split_graph(g_, c);
        grow(restrict(sigma, split.g1), restrict(pi, split.g1));
        grow(restrict(sigma, split.g2), restrict(pi, split.g2));
        filtrate(pi, split);
        if (!target.subset_of(cur_)) {
            search_to(target);
        }
    }

    Subcomplex& cur() {
        return cur_;
    }
    std::vector<CertificateStep>& steps() {
        return steps_;
    }
    int searched() const {
        return searched_;
    }
    std::shared_ptr<const FiniteSSet> ambient() const {
        return ambient_;
    }

private:
    // The Y_{n,c} filtration: fillable simplices by n ascending, c
    // descending, each filling the horn at c - 1.
    void filtrate(const PastingDiagram& pi, const Split& split) {
        const EdgeSet c = pi.carrier();
        auto small = nerve(g_, c);
        Subcomplex members = nerve_pd(pi);
        auto ids = ids_into(g_, c, carrier_);
        struct Item {
            int n;
            int c;
            std::string key;
            int id;
        };
        std::vector<Item> items;
        for (int n = 2; n <= small->top_dim(); ++n) {
            for (int id = 0; id < small->count(n); ++id) {
                if (!members.contains(n, id) || cur_.contains(n, ids[n][id])) {
                    continue;
                }
                FillableInfo f = classify_fillable(g_, split, nondegenerate(n, id));
                if (!f.fillable || f.c < 2 || f.c > n) {
                    continue;
                }
                items.push_back({n, f.c, marked_key(g_, chain_to_marked(g_, c, f.chain)), ids[n][id]});
            }
        }
        const bool reverse = options_.reverse_ties;
        std::sort(items.begin(), items.end(), [reverse](const Item& a, const Item& b) {
            if (a.n != b.n) {
                return a.n < b.n;
            }
            if (a.c != b.c) {
                return a.c > b.c;
            }
            return reverse ? a.key > b.key : a.key < b.key;
        });
        std::vector<Item> deferred;
        for (const Item& it : items) {
            if (!try_step(it.n, it.id, it.c - 1)) {
                deferred.push_back(it);
            }
        }
        for (bool progress = true; progress && !deferred.empty();) {
            progress = false;
            std::vector<Item> rest;
            for (const Item& it : deferred) {
                if (try_step(it.n, it.id, it.c - 1)) {
                    progress = true;
                }
                else {
                    rest.push_back(it);
                }
            }
            deferred = std::move(rest);
        }
    }

    // True when the step was applied or its filler is already present.
    bool try_step(int n, int id, int i) {
        if (cur_.contains(n, id)) {
            return true;
        }
        if (step_violation(*ambient_, cur_, n, id, i) != Violation::None) {
            return false;
        }
        apply_step(*ambient_, cur_, n, id, i);
        steps_.push_back({n, i, id});
        return true;
    }

    void search_to(const Subcomplex& target) {
        Subcomplex top = cur_ | target;
        auto found = search_certificate(*ambient_, cur_, top, options_.search_budget);
        for (const CertificateStep& s : found) {
            apply_step(*ambient_, cur_, s.dim, s.filler, s.horn);
            steps_.push_back(s);
        }
        searched_ += static_cast<int>(found.size());
    }

    const PlaneGraph& g_;
    EdgeSet carrier_;
    std::shared_ptr<const FiniteSSet> ambient_;
    Subcomplex cur_;
    BuildOptions options_;
    std::vector<CertificateStep> steps_;
    int searched_ = 0;
};

} // namespace

Split split_graph(const PlaneGraph& g, EdgeSet h) {
    const SubgraphInfo& info = g.sub(h);
    if (!info.globular) {
        fail(ErrorCode::NotGlobularSubgraph, g.edges_to_string(h) + " is not globular");
    }
    const std::vector<int> interior = info.interior_faces();
    if (interior.size() < 2) {
        fail(ErrorCode::TooFewFaces, g.edges_to_string(h) + " has fewer than two interior faces");
    }
    if (!is_two_connected(g, h)) {
        fail(ErrorCode::NotTwoConnected, g.edges_to_string(h) + " has a cut vertex");
    }
    Split out;
    out.carrier = h;
    const EdgeSet dom = info.dom.set;
    for (int f : interior) {
        if (info.faces[f].dom_set.subset_of(dom)) {
            out.phi = f;
            break;
        }
    }
    check(out.phi >= 0, "some face has its domain on the domain of the graph");
    out.phi_dom = info.faces[out.phi].dom_set;
    out.phi_cod = info.faces[out.phi].cod_set;
    for (const Path& p : poset_of(g, h)->paths) {
        const bool through = has_subpath(p.set, out.phi_dom) || has_subpath(p.set, out.phi_cod);
        const bool avoids = !p.set.intersects(out.phi_dom);
        if (through) {
            out.g1 |= p.set;
        }
        if (avoids) {
            out.g2 |= p.set;
        }
        if (through && avoids) {
            out.g0 |= p.set;
        }
    }
    check(out.g0 == (out.g1 & out.g2), "G0 is the intersection of G1 and G2");
    for (EdgeSet gi : {out.g0, out.g1, out.g2}) {
        check(g.sub(gi).globular, "the pieces of a split are globular");
        check(gi.size() < h.size(), "the pieces of a split are smaller");
    }
    const SubgraphInfo& one = g.sub(out.g1);
    out.boundary1 = one.dom.set | one.cod.set;
    out.inside1 = faces_inside(g, out.g1);
    return out;
}

Split split_graph(const PlaneGraph& g) {
    return split_graph(g, g.all_edges());
}

FillableInfo classify_fillable(const PlaneGraph& g, const Split& split, const Simplex& s) {
    auto ns = nerve(g, split.carrier);
    auto poset = poset_of(g, split.carrier);
    FillableInfo out;
    out.simplex = s;
    out.chain = chain_of(*ns, s);
    const int n = s.dim();
    bool in1 = true;
    bool in2 = true;
    for (int p : out.chain) {
        in1 = in1 && poset->paths[p].set.subset_of(split.g1);
        in2 = in2 && poset->paths[p].set.subset_of(split.g2);
    }
    out.in_colim = in1 || in2;
    out.c = n + 1;
    for (int i = 1; i <= n; ++i) {
        EdgeSet w = poset->witness[out.chain[i - 1]][out.chain[i]];
        out.witnesses.push_back(w);
        if (out.c == n + 1 && !w.subset_of(split.g1)) {
            out.c = i;
        }
    }
    out.fillable = out.c == n + 1 || meets_only_boundary(g, split, out.witnesses[out.c - 1]);
    if (!s.degenerate() && out.fillable && !out.in_colim) {
        check(out.c >= 2 && out.c <= n, "a fillable simplex outside the colimit has 2 <= c <= n");
    }
    return out;
}

bool meets_only_boundary(const PlaneGraph& g, const Split& split, EdgeSet gamma) {
    if (!(gamma & split.g1).subset_of(split.boundary1)) {
        return false;
    }
    if (gamma.empty()) {
        return true;
    }
    std::vector<char> inside = faces_inside(g, gamma);
    for (std::size_t f = 0; f < inside.size(); ++f) {
        if (inside[f] && split.inside1[f]) {
            return false;
        }
    }
    return true;
}

std::optional<int> cut_path(const PlaneGraph& g, const Split& split, int p, int r) {
    auto poset = poset_of(g, split.carrier);
    for (int q = 0; q < poset->size(); ++q) {
        if (!poset->less(p, q) || !poset->less(q, r)) {
            continue;
        }
        if (poset->witness[p][q].subset_of(split.g1) &&
            meets_only_boundary(g, split, poset->witness[q][r])) {
            return q;
        }
    }
    return std::nullopt;
}

std::string check_local_hypotheses(const PastingDiagram& sigma, const PastingDiagram& pi) {
    if (!(sigma.graph() == pi.graph()) || sigma.carrier() != pi.carrier()) {
        return "the diagrams live on different carriers";
    }
    for (EdgeSet m : sigma.members()) {
        if (!pi.contains(m)) {
            return "sigma is not included in pi";
        }
    }
    for (const auto* d : {&sigma, &pi}) {
        const char* which = d == &sigma ? "sigma" : "pi";
        if (!d->is_complete()) {
            return std::string(which) + " is not complete";
        }
        if (!d->is_subdivision_closed()) {
            return std::string(which) + " is not closed under subdivisions";
        }
    }
    const PlaneGraph& g = pi.graph();
    const SubgraphInfo& info = g.sub(pi.carrier());
    for (int f : info.interior_faces()) {
        EdgeSet face = info.faces[f].dom_set | info.faces[f].cod_set;
        if (!sigma.contains(face)) {
            return "sigma misses the interior face " + g.edges_to_string(face);
        }
    }
    return "";
}

AnodyneCertificate build_certificate(const PastingDiagram& sigma, const PastingDiagram& pi,
                                     const BuildOptions& options) {
    if (std::string why = check_local_hypotheses(sigma, pi); !why.empty()) {
        fail(ErrorCode::HypothesisViolated, why);
    }
    const PlaneGraph& g = pi.graph();
    AnodyneCertificate out;
    out.graph = g;
    out.carrier = pi.carrier();
    out.base = nerve_pd(sigma);
    out.top = nerve_pd(pi);
    Builder b(g, out.carrier, out.base, options);
    b.grow(sigma, pi);
    check(b.cur() == out.top, "the certificate ends at the nerve of pi");
    out.ambient = b.ambient();
    out.steps = std::move(b.steps());
    out.searched = b.searched();
    return out;
}

std::vector<CertificateStep> search_certificate(const FiniteSSet& ambient, const Subcomplex& base,
                                                const Subcomplex& top, long long budget) {
    if (!base.subset_of(top)) {
        fail(ErrorCode::InvalidArgument, "the base is not inside the top");
    }
    const auto candidates = missing_in(ambient, base, top);
    Subcomplex cur = base;
    std::vector<CertificateStep> steps;
    long long remaining = static_cast<long long>(candidates.size());
    std::function<bool()> dfs = [&]() -> bool {
        if (remaining == 0) {
            return true;
        }
        for (auto [n, id] : candidates) {
            if (cur.contains(n, id)) {
                continue;
            }
            for (int i = 1; i < n; ++i) {
                if (step_violation(ambient, cur, n, id, i) != Violation::None) {
                    continue;
                }
                if (--budget < 0) {
                    fail(ErrorCode::SearchExhausted,
                         "search budget spent; " +
                             describe_missing(ambient, missing_in(ambient, cur, top)));
                }
                const Simplex missing = ambient.face(n, id, i);
                apply_step(ambient, cur, n, id, i);
                remaining -= 2;
                steps.push_back({n, i, id});
                if (dfs()) {
                    return true;
                }
                steps.pop_back();
                remaining += 2;
                cur.remove(n, id);
                cur.remove(missing.nd_dim, missing.id);
            }
        }
        return false;
    };
    if (!dfs()) {
        fail(ErrorCode::SearchExhausted,
             "no inner horn filtration; " + describe_missing(ambient, missing_in(ambient, base, top)));
    }
    return steps;
}

std::string_view violation_name(Violation v) {
    switch (v) {
    case Violation::None: return "None";
    case Violation::Shape: return "ShapeViolation";
    case Violation::BadFiller: return "BadFiller";
    case Violation::InnerIndex: return "InnerIndexViolation";
    case Violation::Horn: return "HornViolation";
    case Violation::Novelty: return "NoveltyViolation";
    case Violation::OutsideTop: return "OutsideTop";
    case Violation::Coverage: return "CoverageViolation";
    }
    return "Unknown";
}

ValidationReport validate_certificate(const FiniteSSet& ambient, const Subcomplex& base,
                                      const Subcomplex& top,
                                      const std::vector<CertificateStep>& steps) {
    auto report = [](Violation v, int step, std::string why) {
        return ValidationReport{false, v, step, std::move(why)};
    };
    if (!base.is_closed(ambient) || !top.is_closed(ambient)) {
        return report(Violation::Shape, -1, "base or top is not a simplicial subset");
    }
    if (!base.subset_of(top)) {
        return report(Violation::Shape, -1, "base is not inside top");
    }
    Subcomplex cur = base;
    for (int k = 0; k < static_cast<int>(steps.size()); ++k) {
        const CertificateStep& s = steps[k];
        if (s.dim < 0 || s.dim > ambient.top_dim() || s.filler < 0 ||
            s.filler >= ambient.count(s.dim)) {
            return report(Violation::BadFiller, k, "no such nondegenerate simplex");
        }
        if (s.horn <= 0 || s.horn >= s.dim) {
            return report(Violation::InnerIndex, k,
                          "horn " + std::to_string(s.horn) + " is not inner in dimension " +
                              std::to_string(s.dim));
        }
        const std::string name = ambient.simplex_to_string(nondegenerate(s.dim, s.filler));
        if (!top.contains(s.dim, s.filler)) {
            return report(Violation::OutsideTop, k, name + " is not in the top");
        }
        switch (step_violation(ambient, cur, s.dim, s.filler, s.horn)) {
        case Violation::Novelty:
            return report(Violation::Novelty, k, name + " or its missing face is already present");
        case Violation::Horn:
            return report(Violation::Horn, k, "the horn of " + name + " is not present");
        default:
            break;
        }
        apply_step(ambient, cur, s.dim, s.filler, s.horn);
    }
    if (!(cur == top)) {
        auto missing = missing_in(ambient, cur, top);
        return report(Violation::Coverage, -1, describe_missing(ambient, missing));
    }
    return {};
}

ValidationReport validate_certificate(const AnodyneCertificate& c) {
    check(c.ambient != nullptr, "certificate has an ambient set");
    return validate_certificate(*c.ambient, c.base, c.top, c.steps);
}

} // namespace pastel
