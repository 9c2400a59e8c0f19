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

#include "pasting.hpp"

#include <algorithm>
#include <functional>

namespace pastel {

namespace {

bool is_globular_sub(const PlaneGraph& g, EdgeSet a) {
    return !a.empty() && g.sub(a).globular;
}

void add_closed(const PlaneGraph& g, EdgeSet a, std::set<EdgeSet>& out) {
    if (out.count(a) || is_path(g, a)) {
        return;
    }
    for_each_subset(a, [&](EdgeSet b) {
        if (is_globular_sub(g, b) && !is_path(g, b)) {
            out.insert(b);
        }
    });
}

void require_same(const PastingDiagram& a, const PastingDiagram& b) {
    if (!(a.graph() == b.graph())) {
        fail(ErrorCode::InvalidArgument, "pasting diagrams live on different graphs");
    }
}

} // namespace

PastingDiagram::PastingDiagram(PlaneGraph g, EdgeSet carrier, std::set<EdgeSet> members)
    : g_(std::move(g))
    , carrier_(carrier)
    , members_(std::move(members)) {
}

int PastingDiagram::source() const {
    return g_.sub(carrier_).source;
}

int PastingDiagram::target() const {
    return g_.sub(carrier_).target;
}

bool PastingDiagram::contains(EdgeSet a) const {
    if (!a.subset_of(carrier_) || a.empty()) {
        return false;
    }
    return members_.count(a) > 0 || is_path(g_, a);
}

bool PastingDiagram::covers(EdgeSet a) const {
    if (a.empty() || is_path(g_, a)) {
        return a.subset_of(carrier_);
    }
    return std::any_of(members_.begin(), members_.end(),
                       [&](EdgeSet m) { return a.subset_of(m); });
}

std::vector<EdgeSet> PastingDiagram::wide_elements() const {
    std::vector<EdgeSet> out;
    const int s = source();
    const int t = target();
    for (EdgeSet m : members_) {
        const SubgraphInfo& info = g_.sub(m);
        if (info.source == s && info.target == t) {
            out.push_back(m);
        }
    }
    for (const Path& p : enumerate_paths(g_, s, t, carrier_)) {
        out.push_back(p.set);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeSet> all_paths_in(const PlaneGraph& g, EdgeSet h) {
    std::set<EdgeSet> found;
    std::function<void(int, EdgeSet)> dfs = [&](int v, EdgeSet cur) {
        for (int e : h.to_vector()) {
            if (g.src(e) == v) {
                EdgeSet next = cur;
                next.insert(e);
                found.insert(next);
                dfs(g.dst(e), next);
            }
        }
    };
    for (int v = 0; v < g.num_vertices(); ++v) {
        dfs(v, EdgeSet());
    }
    return {found.begin(), found.end()};
}

namespace {

// Members plus paths, i.e. every element of the diagram.
std::vector<EdgeSet> elements(const PastingDiagram& d) {
    std::vector<EdgeSet> out(d.members().begin(), d.members().end());
    auto paths = all_paths_in(d.graph(), d.carrier());
    out.insert(out.end(), paths.begin(), paths.end());
    return out;
}

} // namespace

bool PastingDiagram::is_complete() const {
    auto elems = elements(*this);
    for (EdgeSet x : elems) {
        for (EdgeSet y : elems) {
            if (g_.sub(x).target == g_.sub(y).source && !contains(x | y)) {
                return false;
            }
        }
    }
    return true;
}

bool PastingDiagram::is_subdivision_closed() const {
    for (EdgeSet m : members_) {
        for (EdgeSet k : subdivisions(g_, m, carrier_)) {
            if (!contains(k)) {
                return false;
            }
        }
    }
    return true;
}

bool PastingDiagram::is_wide_generated() const {
    return generate(g_, carrier_, wide_elements()) == *this;
}

PastingDiagram generate(const PlaneGraph& g, EdgeSet carrier, const std::vector<EdgeSet>& gens) {
    if (!is_globular_sub(g, carrier)) {
        fail(ErrorCode::NotGlobularSubgraph, g.edges_to_string(carrier) + " is not globular");
    }
    std::set<EdgeSet> members;
    for (EdgeSet a : gens) {
        if (!a.subset_of(carrier) || !is_globular_sub(g, a)) {
            fail(ErrorCode::NotGlobularSubgraph,
                 g.edges_to_string(a) + " is not a globular subgraph of " +
                     g.edges_to_string(carrier));
        }
        add_closed(g, a, members);
    }
    return PastingDiagram(g, carrier, std::move(members));
}

PastingDiagram generate(const PlaneGraph& g, const std::vector<EdgeSet>& gens) {
    return generate(g, g.all_edges(), gens);
}

PastingDiagram sigma_min(const PlaneGraph& g, EdgeSet carrier) {
    std::vector<EdgeSet> faces;
    for (int f : g.interior_faces()) {
        EdgeSet a = g.faces()[f].dom_set | g.faces()[f].cod_set;
        if (a.subset_of(carrier)) {
            faces.push_back(a);
        }
    }
    return generate(g, carrier, faces);
}

PastingDiagram sigma_min(const PlaneGraph& g) {
    return sigma_min(g, g.all_edges());
}

PastingDiagram pi_max(const PlaneGraph& g, EdgeSet carrier) {
    return generate(g, carrier, {carrier});
}

PastingDiagram pi_max(const PlaneGraph& g) {
    return pi_max(g, g.all_edges());
}

PastingDiagram complete(const PastingDiagram& d) {
    const PlaneGraph& g = d.graph();
    std::set<EdgeSet> members = d.members();
    auto paths = all_paths_in(g, d.carrier());
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<EdgeSet> elems(members.begin(), members.end());
        elems.insert(elems.end(), paths.begin(), paths.end());
        for (EdgeSet x : elems) {
            for (EdgeSet y : elems) {
                if (g.sub(x).target != g.sub(y).source) {
                    continue;
                }
                EdgeSet j = x | y;
                if (!members.count(j) && !is_path(g, j)) {
                    add_closed(g, j, members);
                    changed = true;
                }
            }
        }
    }
    return PastingDiagram(g, d.carrier(), std::move(members));
}

PastingDiagram restrict(const PastingDiagram& d, EdgeSet h) {
    if (!h.subset_of(d.carrier()) || !is_globular_sub(d.graph(), h)) {
        fail(ErrorCode::NotGlobularSubgraph,
             d.graph().edges_to_string(h) + " is not a globular subgraph of the carrier");
    }
    std::set<EdgeSet> members;
    for (EdgeSet m : d.members()) {
        if (m.subset_of(h)) {
            members.insert(m);
        }
    }
    return PastingDiagram(d.graph(), h, std::move(members));
}

PastingDiagram restrict_xy(const PastingDiagram& d, int x, int y) {
    EdgeSet h;
    for (const Path& p : enumerate_paths(d.graph(), x, y, d.carrier())) {
        h |= p.set;
    }
    if (h.empty()) {
        fail(ErrorCode::InvalidArgument, "no directed path from " + d.graph().vertex_name(x) +
                                             " to " + d.graph().vertex_name(y));
    }
    return restrict(d, h);
}

PastingDiagram union_pd(const PastingDiagram& a, const PastingDiagram& b) {
    require_same(a, b);
    if (a.carrier() != b.carrier()) {
        fail(ErrorCode::InvalidArgument, "union of diagrams on different carriers");
    }
    std::set<EdgeSet> members = a.members();
    members.insert(b.members().begin(), b.members().end());
    return PastingDiagram(a.graph(), a.carrier(), std::move(members));
}

std::vector<EdgeSet> subdivisions(const PlaneGraph& g, EdgeSet h, EdgeSet within) {
    const SubgraphInfo& base = g.sub(h);
    std::vector<EdgeSet> out;
    for_each_subset(within - h, [&](EdgeSet extra) {
        EdgeSet k = h | extra;
        const SubgraphInfo& info = g.sub(k);
        if (info.globular && info.dom.edges == base.dom.edges && info.cod.edges == base.cod.edges) {
            out.push_back(k);
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

PastingDiagram join_pd(const PastingDiagram& a, const std::vector<EdgeSet>& gens_a,
                       const PastingDiagram& b, const std::vector<EdgeSet>& gens_b) {
    require_same(a, b);
    if (a.target() != b.source()) {
        fail(ErrorCode::InvalidArgument, "carriers are not consecutive");
    }
    std::vector<EdgeSet> gens;
    for (EdgeSet x : gens_a) {
        for (EdgeSet y : gens_b) {
            gens.push_back(x | y);
        }
    }
    return generate(a.graph(), a.carrier() | b.carrier(), gens);
}

PastingDiagram join_pd(const PastingDiagram& a, const PastingDiagram& b) {
    for (const PastingDiagram* d : {&a, &b}) {
        if (!d->is_wide_generated()) {
            fail(ErrorCode::NotWideGenerated, "diagram on " +
                                                  d->graph().edges_to_string(d->carrier()) +
                                                  " is not generated by wide subgraphs");
        }
    }
    return join_pd(a, a.wide_elements(), b, b.wide_elements());
}

PastingDiagram join_pd_graphs(const PastingDiagram& a, const PastingDiagram& b) {
    for (const PastingDiagram* d : {&a, &b}) {
        if (d->carrier() != d->graph().all_edges()) {
            fail(ErrorCode::InvalidArgument, "graph join needs diagrams on whole graphs");
        }
        if (!d->is_wide_generated()) {
            fail(ErrorCode::NotWideGenerated, "diagram is not generated by wide subgraphs");
        }
    }
    PlaneGraph j = join(a.graph(), b.graph());
    const int shift = a.graph().num_edges();
    std::vector<EdgeSet> gens;
    for (EdgeSet x : a.wide_elements()) {
        for (EdgeSet y : b.wide_elements()) {
            gens.push_back(x | EdgeSet(y.bits() << shift));
        }
    }
    return generate(j, gens);
}

PastingDiagram hc(const PastingDiagram& sigma, const PastingDiagram& pi) {
    require_same(sigma, pi);
    if (sigma.carrier() != pi.carrier()) {
        fail(ErrorCode::InvalidArgument, "hc of diagrams on different carriers");
    }
    for (EdgeSet m : sigma.members()) {
        if (!pi.contains(m)) {
            fail(ErrorCode::NotIncluded,
                 sigma.graph().edges_to_string(m) + " lies in the first diagram only");
        }
    }
    const PlaneGraph& g = sigma.graph();
    std::vector<EdgeSet> gens(sigma.members().begin(), sigma.members().end());
    const int s = sigma.source();
    const int t = sigma.target();
    for (int x : g.sub(sigma.carrier()).vertices) {
        if (x == s || x == t) {
            continue;
        }
        PastingDiagram left = restrict_xy(pi, s, x);
        PastingDiagram right = restrict_xy(pi, x, t);
        for (EdgeSet a : left.wide_elements()) {
            for (EdgeSet b : right.wide_elements()) {
                gens.push_back(a | b);
            }
        }
    }
    return generate(g, sigma.carrier(), gens);
}

std::vector<EdgeSet> hc_new_members(const PastingDiagram& sigma, const PastingDiagram& pi) {
    PastingDiagram r = hc(sigma, pi);
    std::vector<EdgeSet> out;
    for (EdgeSet m : r.members()) {
        if (!sigma.contains(m)) {
            out.push_back(m);
        }
    }
    return out;
}

Subcomplex nerve_pd(const PastingDiagram& d) {
    const PlaneGraph& g = d.graph();
    auto nv = nerve(g, d.carrier());
    auto poset = poset_of(g, d.carrier());
    Subcomplex sub(*nv);
    for (int n = 0; n <= nv->top_dim(); ++n) {
        for (int id = 0; id < nv->count(n); ++id) {
            const auto& chain = nv->key(n, id);
            EdgeSet w;
            for (int i = 1; i <= n; ++i) {
                w |= poset->witness[chain[i - 1]][chain[i]];
            }
            if (d.covers(w)) {
                sub.add(n, id);
            }
        }
    }
    return sub;
}

Subcomplex nerve_pd_complete(const PastingDiagram& d) {
    if (!d.is_complete()) {
        fail(ErrorCode::NotComplete, "diagram is not complete");
    }
    const PlaneGraph& g = d.graph();
    auto nv = nerve(g, d.carrier());
    auto poset = poset_of(g, d.carrier());
    Subcomplex sub(*nv);
    for (int n = 0; n <= nv->top_dim(); ++n) {
        for (int id = 0; id < nv->count(n); ++id) {
            EdgeSet p;
            for (int v : nv->key(n, id)) {
                p |= poset->paths[v].set;
            }
            if (d.contains(p)) {
                sub.add(n, id);
            }
        }
    }
    return sub;
}

FiniteSSet nerve_pd_sset(const PastingDiagram& d) {
    return restrict_to(*nerve(d.graph(), d.carrier()), nerve_pd(d));
}

Subcomplex embed_subcomplex(const PlaneGraph& g, EdgeSet small, const Subcomplex& sub,
                            EdgeSet big) {
    auto ns = nerve(g, small);
    auto nb = nerve(g, big);
    auto ps = poset_of(g, small);
    auto pb = poset_of(g, big);
    Subcomplex out(*nb);
    for (int n = 0; n <= ns->top_dim(); ++n) {
        for (int id = 0; id < ns->count(n); ++id) {
            if (!sub.contains(n, id)) {
                continue;
            }
            std::vector<int> chain;
            for (int v : ns->key(n, id)) {
                int idx = pb->index_of(ps->paths[v].set);
                check(idx >= 0, "carriers share source and target");
                chain.push_back(idx);
            }
            auto found = nb->find(n, chain);
            check(found.has_value(), "chain survives in the larger poset");
            out.add(n, *found);
        }
    }
    return out;
}

Subcomplex carrier_subcomplex(const PlaneGraph& g, EdgeSet small, EdgeSet big) {
    auto ns = nerve(g, small);
    Subcomplex all(*ns);
    for (int n = 0; n <= ns->top_dim(); ++n) {
        for (int id = 0; id < ns->count(n); ++id) {
            all.add(n, id);
        }
    }
    return embed_subcomplex(g, small, all, big);
}

} // namespace pastel
