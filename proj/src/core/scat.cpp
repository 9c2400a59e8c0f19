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

#include "scat.hpp"

#include <algorithm>
#include <tuple>

#include "marked.hpp"

namespace pastel {

namespace {

bool valid_simplex(const FiniteSSet& s, const Simplex& x) {
    if (x.nd_dim < 0 || x.nd_dim > s.top_dim() || x.id < 0 || x.id >= s.count(x.nd_dim)) {
        return false;
    }
    return !x.sur.empty() && is_monotone(x.sur) && is_surjective(x.sur, x.nd_dim);
}

std::shared_ptr<const FiniteSSet> point() {
    static const auto p = std::make_shared<const FiniteSSet>(standard_simplex(0));
    return p;
}

std::string pair_name(const SCat& c, int x, int y) {
    return c.object_name(x) + "," + c.object_name(y);
}

int face_with_edges(const PlaneGraph& g, EdgeSet edges) {
    for (int f : g.interior_faces()) {
        const Face& face = g.faces()[f];
        if ((face.dom_set | face.cod_set) == edges) {
            return f;
        }
    }
    return -1;
}

} // namespace

std::optional<int> SCat::find_object(std::string_view name) const {
    for (int x = 0; x < num_objects(); ++x) {
        if (object_name(x) == name) {
            return x;
        }
    }
    return std::nullopt;
}

int SCat::object(std::string_view name) const {
    auto x = find_object(name);
    if (!x) {
        fail(ErrorCode::InvalidArgument, "no object named " + std::string(name));
    }
    return *x;
}

Simplex SCat::compose_chain(const std::vector<int>& objects,
                            const std::vector<Simplex>& pieces) const {
    check(!pieces.empty() && objects.size() == pieces.size() + 1, "chain of composable pieces");
    Simplex acc = pieces[0];
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        acc = compose(objects[0], objects[i], objects[i + 1], acc, pieces[i]);
    }
    return acc;
}

std::string check_scat(const SCat& c, int max_dim) {
    const int n_obj = c.num_objects();
    auto simplices = [&](int x, int y, int n) {
        const FiniteSSet* h = c.hom(x, y);
        return h ? h->all_simplices(n) : std::vector<Simplex>{};
    };
    for (int x = 0; x < n_obj; ++x) {
        const FiniteSSet* h = c.hom(x, x);
        if (!h || c.identity(x) < 0 || c.identity(x) >= h->count(0)) {
            return "no identity at " + c.object_name(x);
        }
    }
    for (int x = 0; x < n_obj; ++x) {
        for (int y = 0; y < n_obj; ++y) {
            for (int n = 0; n <= max_dim; ++n) {
                for (const Simplex& a : simplices(x, y, n)) {
                    if (c.compose(x, x, y, c.identity_simplex(x, n), a) != a ||
                        c.compose(x, y, y, a, c.identity_simplex(y, n)) != a) {
                        return "unit law fails on hom(" + pair_name(c, x, y) + ")";
                    }
                }
            }
        }
    }
    for (int x = 0; x < n_obj; ++x) {
        for (int y = 0; y < n_obj; ++y) {
            if (!c.hom(x, y)) {
                continue;
            }
            for (int z = 0; z < n_obj; ++z) {
                if (!c.hom(y, z)) {
                    continue;
                }
                if (!c.hom(x, z)) {
                    return "hom(" + pair_name(c, x, z) + ") is empty but composites exist";
                }
                for (int n = 0; n <= max_dim; ++n) {
                    auto as = simplices(x, y, n);
                    auto bs = simplices(y, z, n);
                    for (const Simplex& a : as) {
                        for (const Simplex& b : bs) {
                            Simplex ab = c.compose(x, y, z, a, b);
                            for (int i = 0; i <= n && n > 0; ++i) {
                                Simplex lhs = c.hom(x, z)->face_of(ab, i);
                                Simplex rhs = c.compose(x, y, z, c.hom(x, y)->face_of(a, i),
                                                        c.hom(y, z)->face_of(b, i));
                                if (lhs != rhs) {
                                    return "composition does not commute with d" +
                                           std::to_string(i) + " on " + c.object_name(x) + "," +
                                           c.object_name(y) + "," + c.object_name(z);
                                }
                            }
                            for (int w = 0; w < n_obj; ++w) {
                                if (!c.hom(z, w)) {
                                    continue;
                                }
                                for (const Simplex& d : simplices(z, w, n)) {
                                    Simplex left = c.compose(x, z, w, ab, d);
                                    Simplex right = c.compose(x, y, w, a, c.compose(y, z, w, b, d));
                                    if (left != right) {
                                        return "composition is not associative on " +
                                               c.object_name(x) + "," + c.object_name(y) + "," +
                                               c.object_name(z) + "," + c.object_name(w);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return "";
}

// CSigma

CSigma::CSigma(PastingDiagram d)
    : d_(std::move(d))
    , point_(point()) {
    const PlaneGraph& g = d_.graph();
    if (d_.carrier() != g.all_edges()) {
        fail(ErrorCode::InvalidArgument, "C[Sigma] needs a diagram on the whole graph");
    }
    if (!d_.is_complete()) {
        fail(ErrorCode::NotComplete, "C[Sigma] needs a complete diagram");
    }
    const int n = g.num_vertices();
    homs_.assign(n, std::vector<Hom>(n));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y || !g.reaches(x, y)) {
                continue;
            }
            EdgeSet gxy = *subgraph_xy(g, x, y);
            Hom& h = homs_[x][y];
            h.poset = poset_of(g, gxy);
            Subcomplex sub = nerve_pd(restrict_xy(d_, x, y));
            h.sset = std::make_shared<const FiniteSSet>(restrict_to(*nerve(g, gxy), sub));
        }
    }
}

std::string CSigma::name() const {
    return "C[" + graph().name() + "]";
}

int CSigma::num_objects() const {
    return graph().num_vertices();
}

std::string CSigma::object_name(int x) const {
    return graph().vertex_name(x);
}

const FiniteSSet* CSigma::hom(int x, int y) const {
    if (x == y) {
        return point_.get();
    }
    return homs_.at(x).at(y).sset.get();
}

const CSigma::Hom& CSigma::hom_data(int x, int y) const {
    const Hom& h = homs_.at(x).at(y);
    if (!h.sset) {
        fail(ErrorCode::InvalidArgument,
             "no paths from " + object_name(x) + " to " + object_name(y));
    }
    return h;
}

const PathPoset& CSigma::poset(int x, int y) const {
    return *hom_data(x, y).poset;
}

std::vector<EdgeSet> CSigma::paths_of(int x, int y, const Simplex& s) const {
    if (x == y) {
        return std::vector<EdgeSet>(s.dim() + 1);
    }
    const Hom& h = hom_data(x, y);
    std::vector<EdgeSet> out;
    for (int i : chain_of(*h.sset, s)) {
        out.push_back(h.poset->paths[i].set);
    }
    return out;
}

EdgeSet CSigma::carrier_of(int x, int y, const Simplex& s) const {
    EdgeSet out;
    for (EdgeSet p : paths_of(x, y, s)) {
        out |= p;
    }
    return out;
}

Simplex CSigma::simplex_of_paths(int x, int y, const std::vector<EdgeSet>& paths) const {
    if (x == y) {
        return Simplex{0, 0, Op(paths.size(), 0)};
    }
    const Hom& h = hom_data(x, y);
    std::vector<int> chain;
    for (EdgeSet p : paths) {
        int i = h.poset->index_of(p);
        if (i < 0) {
            fail(ErrorCode::NotComparable, graph().edges_to_string(p) + " is not a path from " +
                                               object_name(x) + " to " + object_name(y));
        }
        chain.push_back(i);
    }
    return simplex_of_chain(*h.sset, chain);
}

Simplex CSigma::compose(int x, int y, int z, const Simplex& a, const Simplex& b) const {
    if (a.dim() != b.dim()) {
        fail(ErrorCode::InvalidArgument, "composed simplices differ in dimension");
    }
    if (x == y) {
        return b;
    }
    if (y == z) {
        return a;
    }
    auto pa = paths_of(x, y, a);
    auto pb = paths_of(y, z, b);
    for (std::size_t i = 0; i < pa.size(); ++i) {
        pa[i] |= pb[i];
    }
    return simplex_of_paths(x, z, pa);
}

// NerveTwoCatSCat

NerveTwoCatSCat::NerveTwoCatSCat(FiniteTwoCategory c, int dim)
    : c_(std::move(c))
    , dim_(dim) {
    if (dim < 1) {
        fail(ErrorCode::InvalidArgument, "nerve dimension must be at least 1");
    }
    const int n = c_.num_objects();
    homs_.assign(n, std::vector<Hom>(n));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            Hom& h = homs_[x][y];
            h.cat = c_.hom_category(x, y, &h.objects, &h.morphisms);
            for (std::size_t i = 0; i < h.objects.size(); ++i) {
                h.object_of[h.objects[i]] = static_cast<int>(i);
            }
            for (std::size_t i = 0; i < h.morphisms.size(); ++i) {
                h.morphism_of[h.morphisms[i]] = static_cast<int>(i);
            }
            if (h.cat.num_objects > 0) {
                h.sset = std::make_shared<const FiniteSSet>(nerve_of_category(h.cat, dim));
            }
        }
    }
}

const FiniteSSet* NerveTwoCatSCat::hom(int x, int y) const {
    return homs_.at(x).at(y).sset.get();
}

int NerveTwoCatSCat::identity(int x) const {
    const Hom& h = homs_.at(x).at(x);
    return *h.sset->find(0, {h.object_of.at(c_.identity1(x))});
}

std::pair<std::vector<int>, std::vector<int>> NerveTwoCatSCat::decode(int x, int y,
                                                                      const Simplex& s) const {
    const Hom& h = homs_.at(x).at(y);
    check(h.sset != nullptr, "decoded simplex lives in a nonempty hom");
    std::vector<int> cells1;
    for (int v : h.sset->vertices_of(s)) {
        cells1.push_back(h.objects.at(h.sset->key(0, v)[0]));
    }
    std::vector<int> cells2;
    for (int i = 1; i <= s.dim(); ++i) {
        Simplex e = h.sset->apply(s, Op{i - 1, i});
        cells2.push_back(e.nd_dim == 0 ? c_.identity2(cells1[i - 1])
                                       : h.morphisms.at(h.sset->key(1, e.id)[0]));
    }
    return {cells1, cells2};
}

Simplex NerveTwoCatSCat::encode(int x, int y, const std::vector<int>& cells1,
                                const std::vector<int>& cells2) const {
    const Hom& h = homs_.at(x).at(y);
    check(h.sset != nullptr && cells1.size() == cells2.size() + 1, "encodable string");
    std::vector<int> kept;
    Op sur{0};
    for (int a : cells2) {
        int m = h.morphism_of.at(a);
        if (!h.cat.is_identity(m)) {
            kept.push_back(m);
        }
        sur.push_back(static_cast<int>(kept.size()));
    }
    const int k = static_cast<int>(kept.size());
    if (k > dim_) {
        fail(ErrorCode::LimitExceeded, "simplex above the stored dimension " + std::to_string(dim_));
    }
    auto id = k == 0 ? h.sset->find(0, {h.object_of.at(cells1[0])}) : h.sset->find(k, kept);
    check(id.has_value(), "string of 2-cells is a nerve simplex");
    return Simplex{k, *id, sur};
}

Simplex NerveTwoCatSCat::vertex_of(int f) const {
    return encode(c_.src(f), c_.dst(f), {f}, {});
}

Simplex NerveTwoCatSCat::edge_of(int a) const {
    int f = c_.src2(a);
    return encode(c_.src(f), c_.dst(f), {f, c_.dst2(a)}, {a});
}

Simplex NerveTwoCatSCat::compose(int x, int y, int z, const Simplex& a, const Simplex& b) const {
    if (a.dim() != b.dim()) {
        fail(ErrorCode::InvalidArgument, "composed simplices differ in dimension");
    }
    auto [a1, a2] = decode(x, y, a);
    auto [b1, b2] = decode(y, z, b);
    for (std::size_t i = 0; i < a1.size(); ++i) {
        a1[i] = c_.compose1(a1[i], b1[i]);
    }
    for (std::size_t i = 0; i < a2.size(); ++i) {
        a2[i] = c_.hcompose(a2[i], b2[i]);
    }
    return encode(x, z, a1, a2);
}

// LozengeSCat

LozengeSCat::LozengeSCat(const SCat& a)
    : a_(&a)
    , point_(point()) {
}

std::string LozengeSCat::object_name(int x) const {
    if (x == s()) {
        return "_s";
    }
    if (x == t()) {
        return "_t";
    }
    return a_->object_name(x);
}

const FiniteSSet* LozengeSCat::hom(int x, int y) const {
    if (x == s() || y == t()) {
        return point_.get();
    }
    if (x == t() || y == s()) {
        return nullptr;
    }
    return a_->hom(x, y);
}

int LozengeSCat::identity(int x) const {
    return x == s() || x == t() ? 0 : a_->identity(x);
}

Simplex LozengeSCat::compose(int x, int y, int z, const Simplex& a, const Simplex& b) const {
    if (x == s() || z == t()) {
        return Simplex{0, 0, Op(a.dim() + 1, 0)};
    }
    return a_->compose(x, y, z, a, b);
}

// OverSCat

OverSCat::OverSCat(const CSigma& c, std::shared_ptr<const FiniteSSet> x, SMap u)
    : c_(&c)
    , x_(std::move(x))
    , u_(std::move(u))
    , s_(c.graph().source())
    , t_(c.graph().target()) {
    std::string why;
    if (!is_simplicial(*c.hom(s_, t_), *x_, u_, -1, &why)) {
        fail(ErrorCode::InvalidArgument, "u is not a simplicial map out of N(Sigma): " + why);
    }
}

const FiniteSSet* OverSCat::hom(int x, int y) const {
    if (x == s_ && y == t_) {
        return x_.get();
    }
    return c_->hom(x, y);
}

Simplex OverSCat::compose(int x, int y, int z, const Simplex& a, const Simplex& b) const {
    if (x == s_ && z == t_) {
        if (y == s_) {
            return b;
        }
        if (y == t_) {
            return a;
        }
        return u_.apply(*x_, c_->compose(x, y, z, a, b));
    }
    return c_->compose(x, y, z, a, b);
}

// Functors

Simplex SFunctor::apply(const SCat& target, int x, int y, const Simplex& s) const {
    auto it = homs.find({x, y});
    check(it != homs.end(), "functor has a map on this hom");
    return it->second.apply(*target.hom(object.at(x), object.at(y)), s);
}

std::string check_functor(const SCat& dom, const SCat& target, const SFunctor& f, int max_dim) {
    const int n_obj = dom.num_objects();
    if (static_cast<int>(f.object.size()) != n_obj) {
        return "object map has the wrong size";
    }
    for (int v : f.object) {
        if (v < 0 || v >= target.num_objects()) {
            return "object map leaves the target";
        }
    }
    for (int x = 0; x < n_obj; ++x) {
        for (int y = 0; y < n_obj; ++y) {
            const FiniteSSet* h = dom.hom(x, y);
            if (!h) {
                continue;
            }
            const FiniteSSet* th = target.hom(f.object[x], f.object[y]);
            if (!th || !f.homs.count({x, y})) {
                return "no map on hom(" + pair_name(dom, x, y) + ")";
            }
            std::string why;
            if (!is_simplicial(*h, *th, f.homs.at({x, y}), max_dim, &why)) {
                return "map on hom(" + pair_name(dom, x, y) + ") is not simplicial: " + why;
            }
        }
        Simplex id = f.apply(target, x, x, dom.identity_simplex(x, 0));
        if (id != target.identity_simplex(f.object[x], 0)) {
            return "identity of " + dom.object_name(x) + " is not preserved";
        }
    }
    for (int x = 0; x < n_obj; ++x) {
        for (int y = 0; y < n_obj; ++y) {
            for (int z = 0; z < n_obj; ++z) {
                if (!dom.hom(x, y) || !dom.hom(y, z)) {
                    continue;
                }
                const int fx = f.object[x], fy = f.object[y], fz = f.object[z];
                for (int n = 0; n <= max_dim; ++n) {
                    auto as = dom.hom(x, y)->all_simplices(n);
                    auto bs = dom.hom(y, z)->all_simplices(n);
                    for (const Simplex& a : as) {
                        Simplex fa = f.apply(target, x, y, a);
                        for (const Simplex& b : bs) {
                            Simplex lhs = f.apply(target, x, z, dom.compose(x, y, z, a, b));
                            Simplex rhs = target.compose(fx, fy, fz, fa, f.apply(target, y, z, b));
                            if (lhs != rhs) {
                                return "composition through " + dom.object_name(y) + " from " +
                                       dom.object_name(x) + " to " + dom.object_name(z) +
                                       " is not preserved";
                            }
                        }
                    }
                }
            }
        }
    }
    return "";
}

SFunctor compose_functors(const SCat& a, const SCat& b, const SCat& c, const SFunctor& f,
                          const SFunctor& g) {
    (void)b;
    SFunctor out;
    for (int x = 0; x < a.num_objects(); ++x) {
        out.object.push_back(g.object.at(f.object.at(x)));
    }
    for (const auto& [xy, map] : f.homs) {
        const int fx = f.object[xy.first], fy = f.object[xy.second];
        SMap m;
        m.images.resize(map.images.size());
        for (std::size_t n = 0; n < map.images.size(); ++n) {
            for (const Simplex& s : map.images[n]) {
                m.images[n].push_back(g.apply(c, fx, fy, s));
            }
        }
        out.homs[xy] = std::move(m);
    }
    return out;
}

SFunctor identity_functor(const SCat& c) {
    SFunctor out;
    for (int x = 0; x < c.num_objects(); ++x) {
        out.object.push_back(x);
    }
    for (int x = 0; x < c.num_objects(); ++x) {
        for (int y = 0; y < c.num_objects(); ++y) {
            const FiniteSSet* h = c.hom(x, y);
            if (!h) {
                continue;
            }
            SMap m;
            m.images.resize(std::max(0, h->top_dim() + 1));
            for (int n = 0; n <= h->top_dim(); ++n) {
                for (int id = 0; id < h->count(n); ++id) {
                    m.images[n].push_back(nondegenerate(n, id));
                }
            }
            out.homs[{x, y}] = std::move(m);
        }
    }
    return out;
}

// Atomic decomposition and cubes

std::vector<AtomicFactor> atomic_decomposition(const CSigma& c, int x, int y, const Simplex& s) {
    if (x == y) {
        return {};
    }
    const PlaneGraph& g = c.graph();
    auto paths = c.paths_of(x, y, s);
    EdgeSet carrier;
    for (EdgeSet p : paths) {
        carrier |= p;
    }
    std::vector<AtomicFactor> out;
    for (EdgeSet f : join_factors(g, carrier)) {
        const SubgraphInfo& info = g.sub(f);
        std::vector<EdgeSet> part;
        for (EdgeSet p : paths) {
            part.push_back(p & f);
        }
        Simplex r = c.simplex_of_paths(info.source, info.target, part);
        out.push_back({info.source, info.target, f, nondegenerate(r.nd_dim, r.id), r.sur});
    }
    return out;
}

std::vector<int> CubeRep::at(int j) const {
    std::vector<int> out;
    for (const Op& b : beta) {
        out.push_back(b.at(j));
    }
    return out;
}

CubeRep cube_rep(const CSigma& c, int x, int y, const Simplex& s) {
    const PlaneGraph& g = c.graph();
    CubeRep r;
    r.from = x;
    r.to = y;
    r.n = s.dim();
    r.factors = atomic_decomposition(c, x, y, s);
    for (const AtomicFactor& f : r.factors) {
        if (f.carrier.size() == 1) {
            check(f.atom.nd_dim == 0, "an edge factor is a vertex");
            r.eps.push_back(0);
            r.face.push_back(-1);
            r.beta.push_back(Op(r.n + 1, 0));
            continue;
        }
        int phi = face_with_edges(g, f.carrier);
        if (phi < 0) {
            fail(ErrorCode::NotMinimalComplete,
                 "atomic factor " + g.edges_to_string(f.carrier) + " is not a face");
        }
        check(f.atom.nd_dim == 1, "a face factor is an edge");
        r.eps.push_back(1);
        r.face.push_back(phi);
        r.beta.push_back(f.degeneracy);
    }
    return r;
}

std::vector<int> CubeMap::apply(const std::vector<int>& p) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < source.size(); ++i) {
        out.push_back(source[i] >= 0 ? p.at(source[i]) : constant[i]);
    }
    return out;
}

CubeMap epsilon_map(const CSigma& c, int x, int y, const Simplex& s, const Op& alpha) {
    const PlaneGraph& g = c.graph();
    Simplex sa = c.hom(x, y)->apply(s, alpha);
    CubeRep r = cube_rep(c, x, y, s);
    CubeRep ra = cube_rep(c, x, y, sa);
    EdgeSet first = x == y ? EdgeSet() : c.paths_of(x, y, sa).at(0);
    CubeMap m;
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        int source = -1;
        int constant = 0;
        if (r.face[i] >= 0) {
            auto it = std::find(ra.face.begin(), ra.face.end(), r.face[i]);
            if (it != ra.face.end()) {
                source = static_cast<int>(it - ra.face.begin());
            }
            else {
                // The face collapsed onto its domain (0) or codomain (1).
                const Face& phi = g.faces()[r.face[i]];
                EdgeSet part = first & r.factors[i].carrier;
                check(part == phi.dom_set || part == phi.cod_set, "collapsed face is a path");
                constant = part == phi.dom_set ? 0 : 1;
            }
        }
        m.source.push_back(source);
        m.constant.push_back(constant);
    }
    return m;
}

bool cube_square_commutes(const CSigma& c, int x, int y, const Simplex& s, const Op& alpha) {
    CubeRep r = cube_rep(c, x, y, s);
    CubeRep ra = cube_rep(c, x, y, c.hom(x, y)->apply(s, alpha));
    CubeMap e = epsilon_map(c, x, y, s, alpha);
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (r.at(alpha[j]) != e.apply(ra.at(static_cast<int>(j)))) {
            return false;
        }
    }
    return true;
}

// Labelings

namespace {

Simplex path_composite(const PlaneGraph& g, const SCat& target, const Labeling& l,
                       const std::vector<int>& edges) {
    std::vector<int> objects{l.object[g.src(edges.at(0))]};
    std::vector<Simplex> pieces;
    for (int e : edges) {
        objects.push_back(l.object[g.dst(e)]);
        pieces.push_back(l.edge[e]);
    }
    return target.compose_chain(objects, pieces);
}

} // namespace

std::string check_labeling(const PlaneGraph& g, const SCat& target, const Labeling& l) {
    if (static_cast<int>(l.object.size()) != g.num_vertices() ||
        static_cast<int>(l.edge.size()) != g.num_edges() || l.face.size() != g.faces().size()) {
        return "labeling has the wrong shape";
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (l.object[v] < 0 || l.object[v] >= target.num_objects()) {
            return "vertex " + g.vertex_name(v) + " has no object";
        }
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        const FiniteSSet* h = target.hom(l.object[g.src(e)], l.object[g.dst(e)]);
        if (!h || l.edge[e].dim() != 0 || !valid_simplex(*h, l.edge[e])) {
            return "edge " + g.edge_name(e) + " is not labelled by a vertex of its hom";
        }
    }
    for (int f : g.interior_faces()) {
        const Face& phi = g.faces()[f];
        const FiniteSSet* h = target.hom(l.object[phi.source], l.object[phi.target]);
        const Simplex& s = l.face[f];
        if (!h || s.dim() != 1 || !valid_simplex(*h, s)) {
            return "face " + phi.name + " is not labelled by an edge of its hom";
        }
        if (h->face_of(s, 1) != path_composite(g, target, l, phi.dom)) {
            return "face " + phi.name + " does not start at the composite of its domain";
        }
        if (h->face_of(s, 0) != path_composite(g, target, l, phi.cod)) {
            return "face " + phi.name + " does not end at the composite of its codomain";
        }
    }
    return "";
}

Labeling canonical_scat_labeling(const CSigma& c) {
    const PlaneGraph& g = c.graph();
    Labeling l;
    for (int v = 0; v < g.num_vertices(); ++v) {
        l.object.push_back(v);
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        l.edge.push_back(c.simplex_of_paths(g.src(e), g.dst(e), {EdgeSet::single(e)}));
    }
    l.face.assign(g.faces().size(), Simplex{});
    for (int f : g.interior_faces()) {
        const Face& phi = g.faces()[f];
        l.face[f] = c.simplex_of_paths(phi.source, phi.target, {phi.dom_set, phi.cod_set});
    }
    return l;
}

SFunctor labeling_to_functor(const CSigma& dom, const SCat& target, const Labeling& l) {
    const PlaneGraph& g = dom.graph();
    if (std::string why = check_labeling(g, target, l); !why.empty()) {
        fail(ErrorCode::InvalidLabeling, why);
    }
    SFunctor u;
    u.object = l.object;
    for (int x = 0; x < g.num_vertices(); ++x) {
        for (int y = 0; y < g.num_vertices(); ++y) {
            const FiniteSSet* h = dom.hom(x, y);
            if (!h) {
                continue;
            }
            SMap m;
            if (x == y) {
                m.images = {{target.identity_simplex(l.object[x], 0)}};
                u.homs[{x, y}] = std::move(m);
                continue;
            }
            const FiniteSSet* th = target.hom(l.object[x], l.object[y]);
            if (!th) {
                fail(ErrorCode::InvalidLabeling, "hom(" + target.object_name(l.object[x]) + "," +
                                                     target.object_name(l.object[y]) +
                                                     ") is empty");
            }
            m.images.resize(h->top_dim() + 1);
            for (int n = 0; n <= h->top_dim(); ++n) {
                for (int id = 0; id < h->count(n); ++id) {
                    CubeRep r = cube_rep(dom, x, y, nondegenerate(n, id));
                    std::vector<int> objects{l.object[x]};
                    std::vector<Simplex> pieces;
                    for (std::size_t i = 0; i < r.factors.size(); ++i) {
                        const AtomicFactor& f = r.factors[i];
                        const FiniteSSet* fh = target.hom(l.object[f.from], l.object[f.to]);
                        objects.push_back(l.object[f.to]);
                        if (r.face[i] < 0) {
                            int e = f.carrier.to_vector()[0];
                            pieces.push_back(fh->apply(l.edge[e], Op(n + 1, 0)));
                        }
                        else {
                            pieces.push_back(fh->apply(l.face[r.face[i]], r.beta[i]));
                        }
                    }
                    m.images[n].push_back(target.compose_chain(objects, pieces));
                }
            }
            std::string why;
            check(is_simplicial(*h, *th, m, -1, &why), "labeling functor is simplicial");
            u.homs[{x, y}] = std::move(m);
        }
    }
    return u;
}

Labeling functor_to_labeling(const CSigma& dom, const SCat& target, const SFunctor& u) {
    const PlaneGraph& g = dom.graph();
    Labeling l;
    l.object = u.object;
    for (int e = 0; e < g.num_edges(); ++e) {
        const int x = g.src(e), y = g.dst(e);
        l.edge.push_back(u.apply(target, x, y, dom.simplex_of_paths(x, y, {EdgeSet::single(e)})));
    }
    l.face.assign(g.faces().size(), Simplex{});
    for (int f : g.interior_faces()) {
        const Face& phi = g.faces()[f];
        Simplex s = dom.simplex_of_paths(phi.source, phi.target, {phi.dom_set, phi.cod_set});
        l.face[f] = u.apply(target, phi.source, phi.target, s);
    }
    return l;
}

// Enumeration

std::vector<SMap> enumerate_smaps(const FiniteSSet& a, const FiniteSSet& b) {
    const int top = a.top_dim();
    if (top < 0) {
        return {SMap{}};
    }
    if (b.dim_bound() >= 0 && b.dim_bound() < top) {
        fail(ErrorCode::LimitExceeded, "target is stored only up to dimension " +
                                           std::to_string(b.dim_bound()));
    }
    std::vector<std::vector<Simplex>> candidates(top + 1);
    for (int n = 0; n <= top; ++n) {
        candidates[n] = b.all_simplices(n);
    }
    std::vector<SMap> out;
    SMap cur;
    cur.images.resize(top + 1);
    std::function<void(int, int)> go = [&](int n, int id) {
        if (id == a.count(n)) {
            if (n == top) {
                out.push_back(cur);
            }
            else {
                go(n + 1, 0);
            }
            return;
        }
        for (const Simplex& cand : candidates[n]) {
            bool ok = true;
            for (int i = 0; i <= n && n > 0 && ok; ++i) {
                ok = b.face_of(cand, i) == cur.apply(b, a.face(n, id, i));
            }
            if (ok) {
                cur.images[n].push_back(cand);
                go(n, id + 1);
                cur.images[n].pop_back();
            }
        }
    };
    go(0, 0);
    return out;
}

long long enumerate_functors(const SCat& dom, const SCat& target,
                             const std::function<void(const SFunctor&)>& fn) {
    const int n_obj = dom.num_objects();
    const int t_obj = target.num_objects();
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> pair_index;
    for (int x = 0; x < n_obj; ++x) {
        for (int y = 0; y < n_obj; ++y) {
            if (dom.hom(x, y)) {
                pair_index[{x, y}] = static_cast<int>(pairs.size());
                pairs.emplace_back(x, y);
            }
        }
    }
    // Triples (x, y, z) become checkable once the last of their three homs
    // is assigned.
    std::vector<std::vector<std::tuple<int, int, int>>> due(pairs.size());
    for (int x = 0; x < n_obj; ++x) {
        for (int y = 0; y < n_obj; ++y) {
            for (int z = 0; z < n_obj; ++z) {
                auto a = pair_index.find({x, y});
                auto b = pair_index.find({y, z});
                auto c = pair_index.find({x, z});
                if (a == pair_index.end() || b == pair_index.end()) {
                    continue;
                }
                check(c != pair_index.end(), "domain has composites");
                due[std::max({a->second, b->second, c->second})].emplace_back(x, y, z);
            }
        }
    }
    std::map<std::tuple<int, int, int, int>, std::vector<SMap>> cache;
    long long count = 0;
    SFunctor cur;
    cur.object.assign(n_obj, 0);
    auto triple_ok = [&](int x, int y, int z) {
        const FiniteSSet* hxy = dom.hom(x, y);
        const FiniteSSet* hyz = dom.hom(y, z);
        const int fx = cur.object[x], fy = cur.object[y], fz = cur.object[z];
        const int max_n = std::max(0, hxy->top_dim()) + std::max(0, hyz->top_dim());
        for (int n = 0; n <= max_n; ++n) {
            for (const Simplex& a : hxy->all_simplices(n)) {
                Simplex fa = cur.apply(target, x, y, a);
                for (const Simplex& b : hyz->all_simplices(n)) {
                    if (cur.apply(target, x, z, dom.compose(x, y, z, a, b)) !=
                        target.compose(fx, fy, fz, fa, cur.apply(target, y, z, b))) {
                        return false;
                    }
                }
            }
        }
        return true;
    };
    std::function<void(std::size_t)> assign = [&](std::size_t k) {
        if (k == pairs.size()) {
            ++count;
            if (fn) {
                fn(cur);
            }
            return;
        }
        auto [x, y] = pairs[k];
        const int fx = cur.object[x], fy = cur.object[y];
        const FiniteSSet* th = target.hom(fx, fy);
        if (!th) {
            return;
        }
        auto key = std::make_tuple(x, y, fx, fy);
        auto it = cache.find(key);
        if (it == cache.end()) {
            std::vector<SMap> maps = enumerate_smaps(*dom.hom(x, y), *th);
            if (x == y) {
                std::erase_if(maps, [&](const SMap& m) {
                    return m.apply(*th, dom.identity_simplex(x, 0)) !=
                           target.identity_simplex(fx, 0);
                });
            }
            it = cache.emplace(key, std::move(maps)).first;
        }
        for (const SMap& m : it->second) {
            cur.homs[{x, y}] = m;
            bool ok = true;
            for (auto [a, b, c] : due[k]) {
                if (!triple_ok(a, b, c)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                assign(k + 1);
            }
        }
        cur.homs.erase({x, y});
    };
    std::function<void(int)> objects = [&](int v) {
        if (v == n_obj) {
            assign(0);
            return;
        }
        for (int o = 0; o < t_obj; ++o) {
            cur.object[v] = o;
            objects(v + 1);
        }
    };
    objects(0);
    return count;
}

long long enumerate_labelings(const PlaneGraph& g, const SCat& target,
                              const std::function<void(const Labeling&)>& fn) {
    Labeling l;
    l.object.assign(g.num_vertices(), 0);
    l.edge.assign(g.num_edges(), Simplex{});
    l.face.assign(g.faces().size(), Simplex{});
    auto interior = g.interior_faces();
    long long count = 0;
    std::function<void(std::size_t)> faces = [&](std::size_t k) {
        if (k == interior.size()) {
            ++count;
            if (fn) {
                fn(l);
            }
            return;
        }
        const Face& phi = g.faces()[interior[k]];
        const FiniteSSet* h = target.hom(l.object[phi.source], l.object[phi.target]);
        if (!h) {
            return;
        }
        Simplex d = path_composite(g, target, l, phi.dom);
        Simplex c = path_composite(g, target, l, phi.cod);
        for (const Simplex& s : h->all_simplices(1)) {
            if (h->face_of(s, 1) == d && h->face_of(s, 0) == c) {
                l.face[interior[k]] = s;
                faces(k + 1);
            }
        }
        l.face[interior[k]] = Simplex{};
    };
    std::function<void(int)> edges = [&](int e) {
        if (e == g.num_edges()) {
            faces(0);
            return;
        }
        const FiniteSSet* h = target.hom(l.object[g.src(e)], l.object[g.dst(e)]);
        if (!h) {
            return;
        }
        for (int id = 0; id < h->count(0); ++id) {
            l.edge[e] = nondegenerate(0, id);
            edges(e + 1);
        }
    };
    std::function<void(int)> objects = [&](int v) {
        if (v == g.num_vertices()) {
            edges(0);
            return;
        }
        for (int o = 0; o < target.num_objects(); ++o) {
            l.object[v] = o;
            objects(v + 1);
        }
    };
    objects(0);
    return count;
}

SFunctor v_over_w(const CSigma& pi, const OverSCat& target, const SMap& v) {
    const PlaneGraph& g = pi.graph();
    const int s = g.source(), t = g.target();
    SFunctor f = identity_functor(pi);
    for (auto& [xy, map] : f.homs) {
        auto [x, y] = xy;
        if (x == s && y == t) {
            std::string why;
            if (!is_simplicial(*pi.hom(s, t), *target.hom(s, t), v, -1, &why)) {
                fail(ErrorCode::InvalidArgument, "v is not a simplicial map out of N(Pi): " + why);
            }
            map = v;
            continue;
        }
        const FiniteSSet* src = pi.hom(x, y);
        const FiniteSSet* dst = target.hom(x, y);
        if (!dst) {
            fail(ErrorCode::BadInclusion, "hom(" + pair_name(pi, x, y) + ") is missing");
        }
        for (int n = 0; n <= src->top_dim(); ++n) {
            for (int id = 0; id < src->count(n); ++id) {
                auto found = dst->find(n, src->key(n, id));
                if (!found) {
                    fail(ErrorCode::BadInclusion, "simplex " + src->label(n, id) + " of hom(" +
                                                      pair_name(pi, x, y) + ") is missing");
                }
                map.images[n][id] = nondegenerate(n, *found);
            }
        }
    }
    return f;
}

int VertexPartition::part(int v) const {
    if (std::find(v0.begin(), v0.end(), v) != v0.end()) {
        return 0;
    }
    if (std::find(v1.begin(), v1.end(), v) != v1.end()) {
        return 1;
    }
    return 2;
}

VertexPartition vertex_partition(const PlaneGraph& g, int x, int y) {
    std::vector<int> in_xy;
    if (x == y) {
        in_xy = {x};
    }
    else {
        auto h = subgraph_xy(g, x, y);
        if (!h) {
            fail(ErrorCode::InvalidArgument,
                 "no directed path from " + g.vertex_name(x) + " to " + g.vertex_name(y));
        }
        in_xy = g.sub(*h).vertices;
    }
    VertexPartition p;
    for (int v : g.topo_order()) {
        if (std::find(in_xy.begin(), in_xy.end(), v) != in_xy.end()) {
            p.v1.push_back(v);
        }
        else if (std::any_of(in_xy.begin(), in_xy.end(), [&](int w) { return g.reaches(v, w); })) {
            p.v0.push_back(v);
        }
        else {
            p.v2.push_back(v);
        }
    }
    for (int a = 0; a < g.num_vertices(); ++a) {
        for (int b = 0; b < g.num_vertices(); ++b) {
            check(!g.reaches(a, b) || p.part(a) <= p.part(b), "no path goes back in the partition");
        }
    }
    return p;
}

} // namespace pastel
