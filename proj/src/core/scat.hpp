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

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pasting.hpp"
#include "paths.hpp"
#include "sset.hpp"
#include "twocat.hpp"

namespace pastel {

/// A simplicially enriched category with finite mapping spaces.
/// Composition is diagrammatic: compose(x, y, z, a, b) is a then b.
class SCat {
public:
    virtual ~SCat() = default;

    virtual std::string name() const = 0;
    virtual int num_objects() const = 0;
    virtual std::string object_name(int x) const = 0;
    /// nullptr when the mapping space is empty.
    virtual const FiniteSSet* hom(int x, int y) const = 0;
    /// a in hom(x, y) and b in hom(y, z), of the same dimension.
    virtual Simplex compose(int x, int y, int z, const Simplex& a, const Simplex& b) const = 0;
    /// The identity vertex of hom(x, x).
    virtual int identity(int x) const = 0;

    /// The identity as a (degenerate) n-simplex.
    Simplex identity_simplex(int x, int n) const {
        return Simplex{0, identity(x), Op(n + 1, 0)};
    }
    std::optional<int> find_object(std::string_view name) const;
    /// Throws InvalidArgument for unknown names.
    int object(std::string_view name) const;
    /// Composite of pieces[i] in hom(objects[i], objects[i + 1]).
    Simplex compose_chain(const std::vector<int>& objects, const std::vector<Simplex>& pieces) const;
};

/// Units, associativity and compatibility of composition with faces, for
/// simplices up to `max_dim`. Empty string on success.
std::string check_scat(const SCat& c, int max_dim);

/// C[Sigma] for a complete diagram on a whole graph: objects the vertices,
/// hom(x, y) = N(Sigma_{x,y}), hom(x, x) = Delta^0. Simplices are keyed by
/// chains of path indices of poset_of(g, G_{x,y}).
class CSigma final : public SCat {
public:
    /// Throws NotComplete.
    explicit CSigma(PastingDiagram d);

    std::string name() const override;
    int num_objects() const override;
    std::string object_name(int x) const override;
    const FiniteSSet* hom(int x, int y) const override;
    Simplex compose(int x, int y, int z, const Simplex& a, const Simplex& b) const override;
    int identity(int) const override {
        return 0;
    }

    const PastingDiagram& diagram() const {
        return d_;
    }
    const PlaneGraph& graph() const {
        return d_.graph();
    }
    /// Path poset behind hom(x, y) for x != y; throws InvalidArgument if
    /// y is not reachable.
    const PathPoset& poset(int x, int y) const;
    /// Union of the paths of a simplex of hom(x, y).
    EdgeSet carrier_of(int x, int y, const Simplex& s) const;
    /// Paths of a simplex as edge sets, in chain order.
    std::vector<EdgeSet> paths_of(int x, int y, const Simplex& s) const;
    /// Simplex with the given chain of paths; throws NotComparable.
    Simplex simplex_of_paths(int x, int y, const std::vector<EdgeSet>& paths) const;

private:
    struct Hom {
        std::shared_ptr<const PathPoset> poset;
        std::shared_ptr<const FiniteSSet> sset;
    };
    const Hom& hom_data(int x, int y) const;

    PastingDiagram d_;
    std::shared_ptr<const FiniteSSet> point_;
    std::vector<std::vector<Hom>> homs_;
};

/// Nerve-enriched strict 2-category: hom(x, y) is the nerve of the hom
/// category, truncated at `dim`.
class NerveTwoCatSCat final : public SCat {
public:
    NerveTwoCatSCat(FiniteTwoCategory c, int dim);

    std::string name() const override {
        return "N(" + c_.name() + ")";
    }
    int num_objects() const override {
        return c_.num_objects();
    }
    std::string object_name(int x) const override {
        return c_.object_name(x);
    }
    const FiniteSSet* hom(int x, int y) const override;
    Simplex compose(int x, int y, int z, const Simplex& a, const Simplex& b) const override;
    int identity(int x) const override;

    const FiniteTwoCategory& two_category() const {
        return c_;
    }
    int dim() const {
        return dim_;
    }
    /// A simplex as its string of 1-cells (n + 1) and 2-cells (n).
    std::pair<std::vector<int>, std::vector<int>> decode(int x, int y, const Simplex& s) const;
    /// Inverse of decode; throws LimitExceeded above the stored dimension.
    Simplex encode(int x, int y, const std::vector<int>& cells1, const std::vector<int>& cells2) const;
    /// The vertex of a 1-cell and the 1-simplex of a 2-cell.
    Simplex vertex_of(int f) const;
    Simplex edge_of(int a) const;

private:
    struct Hom {
        FiniteCategory cat;
        std::vector<int> objects;
        std::vector<int> morphisms;
        std::map<int, int> object_of;
        std::map<int, int> morphism_of;
        std::shared_ptr<const FiniteSSet> sset;
    };
    FiniteTwoCategory c_;
    int dim_;
    std::vector<std::vector<Hom>> homs_;
};

/// A with a free initial object s and terminal object t.
class LozengeSCat final : public SCat {
public:
    /// `a` must outlive the lozenge.
    explicit LozengeSCat(const SCat& a);

    std::string name() const override {
        return a_->name() + "_lozenge";
    }
    int num_objects() const override {
        return a_->num_objects() + 2;
    }
    std::string object_name(int x) const override;
    const FiniteSSet* hom(int x, int y) const override;
    Simplex compose(int x, int y, int z, const Simplex& a, const Simplex& b) const override;
    int identity(int x) const override;

    const SCat& base() const {
        return *a_;
    }
    int s() const {
        return a_->num_objects();
    }
    int t() const {
        return a_->num_objects() + 1;
    }

private:
    const SCat* a_;
    std::shared_ptr<const FiniteSSet> point_;
};

/// C[Sigma]_{/u}: C[Sigma] with hom(s, t) replaced by X and composites into
/// hom(s, t) pushed forward along u: N(Sigma) -> X.
class OverSCat final : public SCat {
public:
    /// `c` must outlive this category.
    OverSCat(const CSigma& c, std::shared_ptr<const FiniteSSet> x, SMap u);

    std::string name() const override {
        return c_->name() + "/u";
    }
    int num_objects() const override {
        return c_->num_objects();
    }
    std::string object_name(int x) const override {
        return c_->object_name(x);
    }
    const FiniteSSet* hom(int x, int y) const override;
    Simplex compose(int x, int y, int z, const Simplex& a, const Simplex& b) const override;
    int identity(int x) const override {
        return c_->identity(x);
    }

    const CSigma& base() const {
        return *c_;
    }
    const SMap& u() const {
        return u_;
    }

private:
    const CSigma* c_;
    std::shared_ptr<const FiniteSSet> x_;
    SMap u_;
    int s_;
    int t_;
};

/// A simplicial functor: an object map and one simplicial map per
/// nonempty mapping space of the domain.
struct SFunctor {
    std::vector<int> object;
    std::map<std::pair<int, int>, SMap> homs;

    Simplex apply(const SCat& target, int x, int y, const Simplex& s) const;
    friend bool operator==(const SFunctor&, const SFunctor&) = default;
};

/// Simpliciality of each hom map and preservation of identities and
/// composition, for simplices up to `max_dim`. Empty string on success.
std::string check_functor(const SCat& dom, const SCat& target, const SFunctor& f, int max_dim);
SFunctor compose_functors(const SCat& a, const SCat& b, const SCat& c, const SFunctor& f,
                          const SFunctor& g);
/// Identity functor of c.
SFunctor identity_functor(const SCat& c);

/// One factor of the atomic decomposition of a simplex of C[Sigma](x, y):
/// the restriction of the simplex to a join factor of its carrier is
/// atom . degeneracy.
struct AtomicFactor {
    int from = -1;
    int to = -1;
    EdgeSet carrier;
    Simplex atom;
    Op degeneracy;
};

/// Cuts the carrier of s at its cut vertices. The composite of the factors
/// is s again.
std::vector<AtomicFactor> atomic_decomposition(const CSigma& c, int x, int y, const Simplex& s);

/// The cube representation of a simplex s of C[Sigma](x, y) for a minimal
/// complete Sigma: the map [n] -> product of [eps_i] with coordinates
/// beta_i.
struct CubeRep {
    int from = -1;
    int to = -1;
    int n = 0;
    std::vector<AtomicFactor> factors;
    std::vector<int> eps;
    std::vector<int> face; // interior face behind each factor, -1 for edges
    std::vector<Op> beta;  // [n] -> [eps_i]

    /// The cube vertex of j in [n].
    std::vector<int> at(int j) const;
};

/// Throws NotMinimalComplete when a factor is neither an edge nor a face.
CubeRep cube_rep(const CSigma& c, int x, int y, const Simplex& s);

/// A map between cubes of 0/1 coordinates: coordinate i of the result is
/// coordinate source[i] of the argument, or constant[i] when source[i] < 0.
struct CubeMap {
    std::vector<int> source;
    std::vector<int> constant;

    std::vector<int> apply(const std::vector<int>& point) const;
    friend bool operator==(const CubeMap&, const CubeMap&) = default;
};

/// eps(alpha): the cube of s . alpha to the cube of s.
CubeMap epsilon_map(const CSigma& c, int x, int y, const Simplex& s, const Op& alpha);
/// alpha followed by the cube map of s equals the cube map of s . alpha
/// followed by eps(alpha).
bool cube_square_commutes(const CSigma& c, int x, int y, const Simplex& s, const Op& alpha);

/// Objects per vertex, a 0-simplex per edge and a 1-simplex per interior
/// face (entries for the exterior face are ignored).
struct Labeling {
    std::vector<int> object;
    std::vector<Simplex> edge;
    std::vector<Simplex> face;

    friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Empty string when l is a labeling of g in the target.
std::string check_labeling(const PlaneGraph& g, const SCat& target, const Labeling& l);
/// Each vertex, edge and face labelled by itself in C[Sigma].
Labeling canonical_scat_labeling(const CSigma& c);

/// The functor C[Sigma_min^c(G)] -> target classified by a labeling: a
/// simplex goes to the composite of the labels of its atoms, pulled back
/// along its cube map. Throws InvalidLabeling.
SFunctor labeling_to_functor(const CSigma& dom, const SCat& target, const Labeling& l);
Labeling functor_to_labeling(const CSigma& dom, const SCat& target, const SFunctor& u);

/// Every simplicial map a -> b. Requires b to be stored at least up to the
/// top dimension of a (LimitExceeded otherwise).
std::vector<SMap> enumerate_smaps(const FiniteSSet& a, const FiniteSSet& b);
/// Calls fn on every simplicial functor dom -> target; returns the count.
long long enumerate_functors(const SCat& dom, const SCat& target,
                             const std::function<void(const SFunctor&)>& fn = nullptr);
long long enumerate_labelings(const PlaneGraph& g, const SCat& target,
                              const std::function<void(const Labeling&)>& fn = nullptr);

/// v/w: the identity on hom(x, y) for (x, y) != (s, t) and v on hom(s, t).
/// Throws BadInclusion when a mapping space of pi is missing in the target.
SFunctor v_over_w(const CSigma& pi, const OverSCat& target, const SMap& v);

/// V1 = vertices of G_{x,y}, V0 = other vertices reaching V1, V2 = the
/// rest. No directed path goes from V_i to V_j with j < i.
struct VertexPartition {
    std::vector<int> v0;
    std::vector<int> v1;
    std::vector<int> v2;

    /// 0, 1 or 2 for a vertex.
    int part(int v) const;
};
VertexPartition vertex_partition(const PlaneGraph& g, int x, int y);

} // namespace pastel
