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

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "anodyne.hpp"
#include "scat.hpp"

namespace pastel {

/// Answers inner horn lifting problems in the mapping spaces of a target.
class FillerOracle {
public:
    virtual ~FillerOracle() = default;

    /// Set when fillers are unique (nerves of categories).
    virtual bool unique() const = 0;
    /// An n-simplex b of target.hom(x, y) with d_j b = faces[j] for every
    /// j != i and accept(b); nullopt when there is none. faces[i] is
    /// ignored.
    virtual std::optional<Simplex> fill(const SCat& target, int x, int y, int n, int i,
                                        const std::vector<Simplex>& faces,
                                        const std::function<bool(const Simplex&)>& accept) const = 0;
};

/// Scans every n-simplex of the mapping space in storage order. With
/// `unique` set, a second candidate is an OracleFailure.
class EnumeratingOracle final : public FillerOracle {
public:
    explicit EnumeratingOracle(bool unique = false)
        : unique_(unique) {
    }
    bool unique() const override {
        return unique_;
    }
    std::optional<Simplex> fill(const SCat& target, int x, int y, int n, int i,
                                const std::vector<Simplex>& faces,
                                const std::function<bool(const Simplex&)>& accept) const override;
    long long queries() const {
        return queries_;
    }

private:
    bool unique_;
    mutable long long queries_ = 0;
};

/// One object with a point as its only mapping space.
class TerminalSCat final : public SCat {
public:
    TerminalSCat();
    std::string name() const override {
        return "1";
    }
    int num_objects() const override {
        return 1;
    }
    std::string object_name(int) const override {
        return "*";
    }
    const FiniteSSet* hom(int x, int y) const override;
    Simplex compose(int x, int y, int z, const Simplex& a, const Simplex& b) const override;
    int identity(int) const override {
        return 0;
    }

private:
    std::shared_ptr<const FiniteSSet> point_;
};

/// The full simplicial subcategory on `objects`; `c` must outlive it.
class FullSubSCat final : public SCat {
public:
    FullSubSCat(const SCat& c, std::vector<int> objects);
    std::string name() const override;
    int num_objects() const override {
        return static_cast<int>(objects_.size());
    }
    std::string object_name(int x) const override {
        return c_->object_name(objects_.at(x));
    }
    const FiniteSSet* hom(int x, int y) const override {
        return c_->hom(objects_.at(x), objects_.at(y));
    }
    Simplex compose(int x, int y, int z, const Simplex& a, const Simplex& b) const override {
        return c_->compose(objects_.at(x), objects_.at(y), objects_.at(z), a, b);
    }
    int identity(int x) const override {
        return c_->identity(objects_.at(x));
    }
    const std::vector<int>& objects() const {
        return objects_;
    }

private:
    const SCat* c_;
    std::vector<int> objects_;
};

/// The unique functor to the terminal category.
SFunctor to_terminal(const SCat& c);
/// Identity on objects, simplices matched by key. Throws BadInclusion when
/// a simplex of `small` has no counterpart in `big`.
SFunctor key_inclusion(const SCat& small, const SCat& big);
/// Restriction of f: c -> target to the full subcategory `sub` of c.
SFunctor restrict_functor(const SFunctor& f, const FullSubSCat& sub);
/// Empty string when f and g agree on every nondegenerate simplex.
std::string compare_functors(const SCat& dom, const SCat& target, const SFunctor& f,
                             const SFunctor& g);

struct LiftOptions {
    /// Reverses tie-breaking in the pair order and in the certificates.
    bool reverse_ties = false;
    /// Nonzero: shuffles pairs of equal size with this seed.
    std::uint64_t tie_seed = 0;
    /// Verifies functoriality, the restriction and the projection.
    bool verify = true;
};

struct LiftReport {
    int pairs = 0;
    int steps = 0;     // certificate steps answered by the oracle
    int searched = 0;  // certificate steps found by search
    int glued = 0;     // simplices defined through some h_y
};

/// Solves the lifting problem C[Sigma] -> B over C[Pi] -> A against p, pair
/// by pair in the order of inclusion of the G_{x,z}: the data on N(Sigma_{x,z}
/// hc Pi_{x,z}) comes from u and composites of earlier lifts, and a
/// certificate for its inclusion into N(Pi_{x,z}) is replayed through the
/// oracle. Throws Incompatible and OracleFailure.
SFunctor recursive_lift(const CSigma& sigma, const CSigma& pi, const SCat& b, const SCat& a,
                        const SFunctor& u, const SFunctor& p, const SFunctor& v,
                        const FillerOracle& oracle, const LiftOptions& options = {},
                        LiftReport* report = nullptr);

/// A functor C[Pi_max] -> target extending the functor of a labeling.
struct Extension {
    SFunctor functor;
    LiftReport report;
};

/// `pi_max` and `min_complete` must be C[Pi_max(g)] and C[Sigma_min^c(g)].
Extension find_extension(const CSigma& min_complete, const CSigma& pi_max, const SCat& target,
                         const Labeling& l, const FillerOracle& oracle,
                         const LiftOptions& options = {});

/// Restriction of a functor out of C[Pi] along C[Sigma] -> C[Pi].
SFunctor restrict_to_sigma(const CSigma& sigma, const CSigma& pi, const SCat& target,
                           const SFunctor& f);

/// The lifting problem of a square u: N(Sigma hc Pi) -> X, p: X -> Y,
/// v: N(Pi) -> Y of simplicial sets, solved through C[Sigma hc Pi]_{/u}.
/// Returns l_{s,t}: N(Pi) -> X. `transform`, when given, receives the
/// result of comparing both composites of the transformed square.
SMap over_lift(const PastingDiagram& sigma, const PastingDiagram& pi,
               std::shared_ptr<const FiniteSSet> x, const SMap& u,
               std::shared_ptr<const FiniteSSet> y, const SMap& p, const SMap& v,
               const FillerOracle& oracle, std::string* transform = nullptr);

/// The lozenge transport of a lifting problem on the full subcategories of
/// C[Sigma] and C[Pi] on the vertices of G_{x,y}: u and v are functors out
/// of those subcategories. Solves C[Sigma] -> C[Pi] against
/// p_lozenge: B_lozenge -> A_lozenge and restricts the result.
SFunctor lozenge_lift(const CSigma& sigma, const CSigma& pi, int x, int y, const SCat& b,
                      const SCat& a, const SFunctor& u, const SFunctor& p, const SFunctor& v,
                      const FillerOracle& oracle);

/// p_lozenge: p on the mapping spaces of B, the identity elsewhere.
SFunctor lozenge_functor(const LozengeSCat& b, const LozengeSCat& a, const SFunctor& p);
/// u-hat: V0 to s, V1 through u, V2 to t. `u` is a functor out of the full
/// subcategory of c on part.v1 (in that order).
SFunctor lozenge_extend(const SCat& c, const VertexPartition& part, const LozengeSCat& target,
                        const SFunctor& u);

} // namespace pastel
