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

#include "compositor.hpp"

#include <algorithm>
#include <random>
#include <tuple>

namespace pastel {

namespace {

Simplex point_simplex(int n) {
    return Simplex{0, 0, Op(n + 1, 0)};
}

std::string pair_label(const SCat& c, int x, int y) {
    return c.object_name(x) + ", " + c.object_name(y);
}

// Every nondegenerate simplex to the point, in each dimension of h.
SMap to_point(const FiniteSSet& h) {
    SMap m;
    m.images.resize(std::max(0, h.top_dim() + 1));
    for (int n = 0; n <= h.top_dim(); ++n) {
        m.images[n].assign(h.count(n), point_simplex(n));
    }
    return m;
}

int max_hom_dim(const SCat& c) {
    int d = 0;
    for (int x = 0; x < c.num_objects(); ++x) {
        for (int y = 0; y < c.num_objects(); ++y) {
            if (const FiniteSSet* h = c.hom(x, y)) {
                d = std::max(d, h->top_dim());
            }
        }
    }
    return d;
}

// The values of a lift on one mapping space of C[Pi].
class PairValues {
public:
    PairValues(const FiniteSSet& dom, const FiniteSSet& target)
        : dom_(&dom)
        , target_(&target) {
        h_.resize(std::max(0, dom.top_dim() + 1));
        for (int n = 0; n <= dom.top_dim(); ++n) {
            h_[n].resize(dom.count(n));
        }
    }

    bool defined(const Simplex& s) const {
        return h_[s.nd_dim][s.id].has_value();
    }
    Simplex value(const Simplex& s) const {
        check(defined(s), "lift is defined on the simplex");
        return target_->apply(*h_[s.nd_dim][s.id], s.sur);
    }
    // Records b as the value on s (nondegenerate); false on a conflict.
    bool set(const Simplex& s, const Simplex& b) {
        if (s.degenerate()) {
            return value(s) == b;
        }
        auto& slot = h_[s.nd_dim][s.id];
        if (slot) {
            return *slot == b;
        }
        slot = b;
        return true;
    }
    Subcomplex defined_part() const {
        Subcomplex sub(*dom_);
        for (int n = 0; n < static_cast<int>(h_.size()); ++n) {
            for (int id = 0; id < static_cast<int>(h_[n].size()); ++id) {
                if (h_[n][id]) {
                    sub.add(n, id);
                }
            }
        }
        return sub;
    }
    SMap to_map() const {
        SMap m;
        m.images.resize(h_.size());
        for (std::size_t n = 0; n < h_.size(); ++n) {
            for (std::size_t id = 0; id < h_[n].size(); ++id) {
                check(h_[n][id].has_value(), "lift is defined everywhere");
                m.images[n].push_back(*h_[n][id]);
            }
        }
        return m;
    }

private:
    const FiniteSSet* dom_;
    const FiniteSSet* target_;
    std::vector<std::vector<std::optional<Simplex>>> h_;
};

// Steps from the defined part of a pair to all of N(Pi_{x,z}), as
// (dim, horn, filler) in the ids of the mapping space.
std::vector<CertificateStep> pair_steps(const CSigma& sigma, const CSigma& pi, int x, int z,
                                        const Subcomplex& defined, bool reverse_ties,
                                        bool* searched) {
    const FiniteSSet& hom = *pi.hom(x, z);
    Subcomplex all(hom);
    for (int n = 0; n <= hom.top_dim(); ++n) {
        for (int id = 0; id < hom.count(n); ++id) {
            all.add(n, id);
        }
    }
    *searched = false;
    if (defined == all) {
        return {};
    }
    try {
        PastingDiagram pxz = restrict_xy(pi.diagram(), x, z);
        PastingDiagram base = hc(restrict_xy(sigma.diagram(), x, z), pxz);
        BuildOptions options;
        options.reverse_ties = reverse_ties;
        AnodyneCertificate cert = build_certificate(base, pxz, options);
        std::vector<CertificateStep> out;
        bool covered = true;
        for (int n = 0; n <= cert.ambient->top_dim() && covered; ++n) {
            for (int id = 0; id < cert.ambient->count(n); ++id) {
                if (!cert.base.contains(n, id)) {
                    continue;
                }
                auto mine = hom.find(n, cert.ambient->key(n, id));
                if (!mine || !defined.contains(n, *mine)) {
                    covered = false;
                    break;
                }
            }
        }
        if (covered) {
            for (const CertificateStep& step : cert.steps) {
                auto mine = hom.find(step.dim, cert.ambient->key(step.dim, step.filler));
                check(mine.has_value(), "certificate filler lies in N(Pi)");
                out.push_back(CertificateStep{step.dim, step.horn, *mine});
            }
            return out;
        }
    }
    catch (const Error& e) {
        if (e.code() != ErrorCode::HypothesisViolated && e.code() != ErrorCode::TooFewFaces &&
            e.code() != ErrorCode::NotTwoConnected && e.code() != ErrorCode::NotComplete) {
            throw;
        }
    }
    *searched = true;
    return search_certificate(hom, defined, all);
}

} // namespace

// Oracles

std::optional<Simplex> EnumeratingOracle::fill(
    const SCat& target, int x, int y, int n, int i, const std::vector<Simplex>& faces,
    const std::function<bool(const Simplex&)>& accept) const {
    ++queries_;
    const FiniteSSet* h = target.hom(x, y);
    if (!h) {
        return std::nullopt;
    }
    std::optional<Simplex> found;
    for (const Simplex& b : h->all_simplices(n)) {
        bool match = true;
        for (int j = 0; j <= n && match; ++j) {
            match = j == i || h->face_of(b, j) == faces.at(j);
        }
        if (!match || (accept && !accept(b))) {
            continue;
        }
        if (!unique_) {
            return b;
        }
        if (found) {
            fail(ErrorCode::OracleFailure, "inner horn in hom(" + pair_label(target, x, y) +
                                               ") has two fillers");
        }
        found = b;
    }
    return found;
}

// Small categories

TerminalSCat::TerminalSCat()
    : point_(std::make_shared<const FiniteSSet>(standard_simplex(0))) {
}

const FiniteSSet* TerminalSCat::hom(int, int) const {
    return point_.get();
}

Simplex TerminalSCat::compose(int, int, int, const Simplex& a, const Simplex&) const {
    return point_simplex(a.dim());
}

FullSubSCat::FullSubSCat(const SCat& c, std::vector<int> objects)
    : c_(&c)
    , objects_(std::move(objects)) {
    for (int x : objects_) {
        if (x < 0 || x >= c.num_objects()) {
            fail(ErrorCode::InvalidArgument, "object out of range");
        }
    }
}

std::string FullSubSCat::name() const {
    std::string out = c_->name() + "|";
    for (std::size_t i = 0; i < objects_.size(); ++i) {
        out += (i ? "," : "") + c_->object_name(objects_[i]);
    }
    return out;
}

// Functors

SFunctor to_terminal(const SCat& c) {
    SFunctor f;
    f.object.assign(c.num_objects(), 0);
    for (int x = 0; x < c.num_objects(); ++x) {
        for (int y = 0; y < c.num_objects(); ++y) {
            if (const FiniteSSet* h = c.hom(x, y)) {
                f.homs[{x, y}] = to_point(*h);
            }
        }
    }
    return f;
}

SFunctor key_inclusion(const SCat& small, const SCat& big) {
    if (small.num_objects() != big.num_objects()) {
        fail(ErrorCode::BadInclusion, "categories have different objects");
    }
    SFunctor f;
    for (int x = 0; x < small.num_objects(); ++x) {
        f.object.push_back(x);
    }
    for (int x = 0; x < small.num_objects(); ++x) {
        for (int y = 0; y < small.num_objects(); ++y) {
            const FiniteSSet* src = small.hom(x, y);
            if (!src) {
                continue;
            }
            const FiniteSSet* dst = big.hom(x, y);
            if (!dst) {
                fail(ErrorCode::BadInclusion, "hom(" + pair_label(small, x, y) + ") is missing");
            }
            SMap m;
            m.images.resize(std::max(0, src->top_dim() + 1));
            for (int n = 0; n <= src->top_dim(); ++n) {
                for (int id = 0; id < src->count(n); ++id) {
                    auto found = dst->find(n, src->key(n, id));
                    if (!found) {
                        fail(ErrorCode::BadInclusion, "simplex " + src->label(n, id) +
                                                          " of hom(" + pair_label(small, x, y) +
                                                          ") is missing");
                    }
                    m.images[n].push_back(nondegenerate(n, *found));
                }
            }
            f.homs[{x, y}] = std::move(m);
        }
    }
    return f;
}

SFunctor restrict_functor(const SFunctor& f, const FullSubSCat& sub) {
    const auto& obj = sub.objects();
    SFunctor out;
    for (int x : obj) {
        out.object.push_back(f.object.at(x));
    }
    for (int i = 0; i < sub.num_objects(); ++i) {
        for (int j = 0; j < sub.num_objects(); ++j) {
            auto it = f.homs.find({obj[i], obj[j]});
            if (it != f.homs.end()) {
                out.homs[{i, j}] = it->second;
            }
        }
    }
    return out;
}

std::string compare_functors(const SCat& dom, const SCat& target, const SFunctor& f,
                             const SFunctor& g) {
    if (f.object != g.object) {
        return "object maps differ";
    }
    for (int x = 0; x < dom.num_objects(); ++x) {
        for (int y = 0; y < dom.num_objects(); ++y) {
            const FiniteSSet* h = dom.hom(x, y);
            if (!h) {
                continue;
            }
            for (int n = 0; n <= h->top_dim(); ++n) {
                for (int id = 0; id < h->count(n); ++id) {
                    Simplex s = nondegenerate(n, id);
                    if (f.apply(target, x, y, s) != g.apply(target, x, y, s)) {
                        return "functors differ on " + h->label(n, id) + " in hom(" +
                               pair_label(dom, x, y) + ")";
                    }
                }
            }
        }
    }
    return "";
}

SFunctor restrict_to_sigma(const CSigma& sigma, const CSigma& pi, const SCat& target,
                           const SFunctor& f) {
    (void)target;
    SFunctor incl = key_inclusion(sigma, pi);
    SFunctor out;
    out.object = f.object;
    for (const auto& [xy, map] : incl.homs) {
        const SMap& fm = f.homs.at(xy);
        SMap m;
        m.images.resize(map.images.size());
        for (std::size_t n = 0; n < map.images.size(); ++n) {
            for (const Simplex& s : map.images[n]) {
                m.images[n].push_back(fm.images.at(s.nd_dim).at(s.id));
            }
        }
        out.homs[xy] = std::move(m);
    }
    return out;
}

// Recursive lifting

SFunctor recursive_lift(const CSigma& sigma, const CSigma& pi, const SCat& b, const SCat& a,
                        const SFunctor& u, const SFunctor& p, const SFunctor& v,
                        const FillerOracle& oracle, const LiftOptions& options,
                        LiftReport* report) {
    const PlaneGraph& g = pi.graph();
    if (sigma.graph().num_edges() != g.num_edges() ||
        sigma.num_objects() != pi.num_objects()) {
        fail(ErrorCode::InvalidArgument, "Sigma and Pi live on different graphs");
    }
    SFunctor incl = key_inclusion(sigma, pi);
    std::string why = compare_functors(sigma, a, compose_functors(sigma, b, a, u, p),
                                       compose_functors(sigma, pi, a, incl, v));
    if (!why.empty()) {
        fail(ErrorCode::Incompatible, "the square does not commute: " + why);
    }
    LiftReport local;
    LiftReport& rep = report ? *report : local;
    rep = LiftReport{};

    const int n_obj = g.num_vertices();
    SFunctor lift;
    lift.object = u.object;
    for (int x = 0; x < n_obj; ++x) {
        SMap id;
        id.images = {{b.identity_simplex(u.object[x], 0)}};
        lift.homs[{x, x}] = std::move(id);
    }

    std::vector<std::tuple<int, int, int>> pairs; // (size, x, z)
    for (int x = 0; x < n_obj; ++x) {
        for (int z = 0; z < n_obj; ++z) {
            if (x != z && pi.hom(x, z)) {
                pairs.emplace_back(subgraph_xy(g, x, z)->size(), x, z);
            }
        }
    }
    std::sort(pairs.begin(), pairs.end(), [&](const auto& l, const auto& r) {
        if (std::get<0>(l) != std::get<0>(r)) {
            return std::get<0>(l) < std::get<0>(r);
        }
        return options.reverse_ties ? l > r : l < r;
    });
    if (options.tie_seed != 0) {
        std::mt19937_64 rng(options.tie_seed);
        for (auto lo = pairs.begin(); lo != pairs.end();) {
            auto hi = std::find_if(lo, pairs.end(), [&](const auto& q) {
                return std::get<0>(q) != std::get<0>(*lo);
            });
            std::shuffle(lo, hi, rng);
            lo = hi;
        }
    }

    for (const auto& [size, x, z] : pairs) {
        (void)size;
        const int bx = u.object[x], bz = u.object[z];
        const FiniteSSet& hom = *pi.hom(x, z);
        const FiniteSSet* bhom = b.hom(bx, bz);
        if (!bhom) {
            fail(ErrorCode::Incompatible,
                 "hom(" + pair_label(b, bx, bz) + ") is empty but N(Pi) is not");
        }
        PairValues h(hom, *bhom);
        auto conflict = [&](const std::string& what, const Simplex& s) {
            fail(ErrorCode::Incompatible, what + " disagree on " + hom.simplex_to_string(s) +
                                              " in hom(" + pair_label(pi, x, z) + ")");
        };

        // Values from u.
        const FiniteSSet& shom = *sigma.hom(x, z);
        const SMap& inc = incl.homs.at({x, z});
        for (int n = 0; n <= shom.top_dim(); ++n) {
            for (int id = 0; id < shom.count(n); ++id) {
                h.set(inc.images[n][id], u.apply(b, x, z, nondegenerate(n, id)));
            }
        }

        // Values from composites of earlier lifts through interior vertices.
        EdgeSet gxz = *subgraph_xy(g, x, z);
        for (int y : g.sub(gxz).vertices) {
            if (y == x || y == z) {
                continue;
            }
            EdgeSet gxy = *subgraph_xy(g, x, y);
            EdgeSet gyz = *subgraph_xy(g, y, z);
            const PathPoset& first = pi.poset(x, y);
            const PathPoset& second = pi.poset(y, z);
            for (int n = 0; n <= hom.top_dim(); ++n) {
                for (int id = 0; id < hom.count(n); ++id) {
                    Simplex tau = nondegenerate(n, id);
                    std::vector<EdgeSet> p1, p2;
                    bool through = true;
                    for (EdgeSet path : pi.paths_of(x, z, tau)) {
                        EdgeSet l = path & gxy, r = path & gyz;
                        if ((l | r) != path || first.index_of(l) < 0 || second.index_of(r) < 0) {
                            through = false;
                            break;
                        }
                        p1.push_back(l);
                        p2.push_back(r);
                    }
                    if (!through) {
                        continue;
                    }
                    Simplex s1, s2;
                    try {
                        s1 = pi.simplex_of_paths(x, y, p1);
                        s2 = pi.simplex_of_paths(y, z, p2);
                    }
                    catch (const Error&) {
                        continue;
                    }
                    Simplex value = b.compose(bx, u.object[y], bz, lift.apply(b, x, y, s1),
                                              lift.apply(b, y, z, s2));
                    if (!h.defined(tau)) {
                        ++rep.glued;
                    }
                    if (!h.set(tau, value)) {
                        conflict("u and the composite through " + g.vertex_name(y), tau);
                    }
                }
            }
        }

        // Inner horn steps up to all of N(Pi_{x,z}).
        bool searched = false;
        auto steps = pair_steps(sigma, pi, x, z, h.defined_part(), options.reverse_ties, &searched);
        const int ax = p.object[bx], az = p.object[bz];
        for (const CertificateStep& step : steps) {
            const int n = step.dim, i = step.horn;
            Simplex tau = nondegenerate(n, step.filler);
            Simplex face_i = hom.face_of(tau, i);
            std::vector<Simplex> faces(n + 1);
            for (int j = 0; j <= n; ++j) {
                if (j != i) {
                    faces[j] = h.value(hom.face_of(tau, j));
                }
            }
            Simplex over = v.apply(a, x, z, tau);
            auto accept = [&](const Simplex& cand) {
                if (p.homs.at({bx, bz}).apply(*a.hom(ax, az), cand) != over) {
                    return false;
                }
                if (h.defined(tau) && h.value(tau) != cand) {
                    return false;
                }
                return !h.defined(face_i) || h.value(face_i) == bhom->face_of(cand, i);
            };
            auto filler = oracle.fill(b, bx, bz, n, i, faces, accept);
            if (!filler) {
                fail(ErrorCode::OracleFailure, "no filler for " + hom.simplex_to_string(tau) +
                                                   " over hom(" + pair_label(pi, x, z) + ")");
            }
            h.set(tau, *filler);
            h.set(face_i, bhom->face_of(*filler, i));
            ++(searched ? rep.searched : rep.steps);
        }
        lift.homs[{x, z}] = h.to_map();
        ++rep.pairs;
    }

    if (options.verify) {
        std::string err = check_functor(pi, b, lift, max_hom_dim(pi));
        if (err.empty()) {
            err = compare_functors(sigma, b, restrict_to_sigma(sigma, pi, b, lift), u);
        }
        if (err.empty()) {
            err = compare_functors(pi, a, compose_functors(pi, b, a, lift, p), v);
        }
        if (!err.empty()) {
            fail(ErrorCode::Internal, "lift failed verification: " + err);
        }
    }
    return lift;
}

Extension find_extension(const CSigma& min_complete, const CSigma& pi_max, const SCat& target,
                         const Labeling& l, const FillerOracle& oracle,
                         const LiftOptions& options) {
    SFunctor u = labeling_to_functor(min_complete, target, l);
    TerminalSCat one;
    Extension out;
    out.functor = recursive_lift(min_complete, pi_max, target, one, u, to_terminal(target),
                                 to_terminal(pi_max), oracle, options, &out.report);
    return out;
}

// Transports

SMap over_lift(const PastingDiagram& sigma, const PastingDiagram& pi,
               std::shared_ptr<const FiniteSSet> x, const SMap& u,
               std::shared_ptr<const FiniteSSet> y, const SMap& p, const SMap& v,
               const FillerOracle& oracle, std::string* transform) {
    CSigma chc(hc(sigma, pi));
    CSigma cpi(pi);
    const int s = cpi.graph().source(), t = cpi.graph().target();
    const FiniteSSet& base = *chc.hom(s, t);
    std::string why;
    if (!is_simplicial(base, *x, u, -1, &why) || !is_simplicial(*x, *y, p, -1, &why)) {
        fail(ErrorCode::InvalidArgument, "not a simplicial map: " + why);
    }
    SMap pu;
    pu.images.resize(u.images.size());
    for (std::size_t n = 0; n < u.images.size(); ++n) {
        for (const Simplex& img : u.images[n]) {
            pu.images[n].push_back(p.apply(*y, img));
        }
    }
    OverSCat over_x(chc, x, u);
    OverSCat over_y(chc, y, pu);

    SFunctor big_u = identity_functor(chc);
    big_u.homs[{s, t}] = u;
    SFunctor big_p = identity_functor(chc);
    big_p.homs[{s, t}] = p;
    SFunctor big_v = v_over_w(cpi, over_y, v);

    std::string square =
        compare_functors(chc, over_y, compose_functors(chc, over_x, over_y, big_u, big_p),
                         compose_functors(chc, cpi, over_y, key_inclusion(chc, cpi), big_v));
    if (transform) {
        *transform = square;
    }
    if (!square.empty()) {
        fail(ErrorCode::Incompatible, "transformed square does not commute: " + square);
    }
    SFunctor lift = recursive_lift(chc, cpi, over_x, over_y, big_u, big_p, big_v, oracle);
    return lift.homs.at({s, t});
}

SFunctor lozenge_functor(const LozengeSCat& b, const LozengeSCat& a, const SFunctor& p) {
    const SCat& bb = b.base();
    SFunctor out;
    for (int x = 0; x < bb.num_objects(); ++x) {
        out.object.push_back(p.object.at(x));
    }
    out.object.push_back(a.s());
    out.object.push_back(a.t());
    for (int x = 0; x < b.num_objects(); ++x) {
        for (int y = 0; y < b.num_objects(); ++y) {
            const FiniteSSet* h = b.hom(x, y);
            if (!h) {
                continue;
            }
            if (x < bb.num_objects() && y < bb.num_objects()) {
                out.homs[{x, y}] = p.homs.at({x, y});
            }
            else {
                out.homs[{x, y}] = to_point(*h);
            }
        }
    }
    return out;
}

SFunctor lozenge_extend(const SCat& c, const VertexPartition& part, const LozengeSCat& target,
                        const SFunctor& u) {
    SFunctor out;
    std::vector<int> index(c.num_objects(), -1);
    for (std::size_t i = 0; i < part.v1.size(); ++i) {
        index[part.v1[i]] = static_cast<int>(i);
    }
    for (int x = 0; x < c.num_objects(); ++x) {
        const int k = part.part(x);
        out.object.push_back(k == 0 ? target.s() : k == 2 ? target.t() : u.object.at(index[x]));
    }
    for (int x = 0; x < c.num_objects(); ++x) {
        for (int y = 0; y < c.num_objects(); ++y) {
            const FiniteSSet* h = c.hom(x, y);
            if (!h) {
                continue;
            }
            if (index[x] >= 0 && index[y] >= 0) {
                out.homs[{x, y}] = u.homs.at({index[x], index[y]});
            }
            else {
                out.homs[{x, y}] = to_point(*h);
            }
        }
    }
    return out;
}

SFunctor lozenge_lift(const CSigma& sigma, const CSigma& pi, int x, int y, const SCat& b,
                      const SCat& a, const SFunctor& u, const SFunctor& p, const SFunctor& v,
                      const FillerOracle& oracle) {
    VertexPartition part = vertex_partition(pi.graph(), x, y);
    LozengeSCat bl(b);
    LozengeSCat al(a);
    SFunctor pl = lozenge_functor(bl, al, p);
    SFunctor ul = lozenge_extend(sigma, part, bl, u);
    SFunctor vl = lozenge_extend(pi, part, al, v);
    SFunctor lift = recursive_lift(sigma, pi, bl, al, ul, pl, vl, oracle);
    return restrict_functor(lift, FullSubSCat(pi, part.v1));
}

} // namespace pastel
