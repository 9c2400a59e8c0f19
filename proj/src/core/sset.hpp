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
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace pastel {

/// A simplicial operator [m] -> [n], stored as its list of values.
using Op = std::vector<int>;

Op identity_op(int n);
/// Coface map [n-1] -> [n] skipping i.
Op coface(int n, int i);
/// Codegeneracy map [n+1] -> [n] hitting i twice.
Op codegeneracy(int n, int i);
/// (a o b)(k) = a(b(k)).
Op compose_ops(const Op& a, const Op& b);
bool is_monotone(const Op& a);
bool is_injective(const Op& a);
bool is_surjective(const Op& a, int n);
/// Factors a monotone map as mono o epi. Returns {epi, mono}.
std::pair<Op, Op> epi_mono(const Op& a);
/// All monotone surjections [n] -> [k].
std::vector<Op> surjections(int n, int k);
/// All monotone maps [m] -> [n].
std::vector<Op> monotone_maps(int m, int n);
std::string op_to_string(const Op& a);

/// A simplex in Eilenberg-Zilber form: a nondegenerate simplex of
/// dimension `nd_dim` pulled back along the surjection `sur`.
struct Simplex {
    int nd_dim = 0;
    int id = 0;
    Op sur{0};

    int dim() const {
        return static_cast<int>(sur.size()) - 1;
    }
    bool degenerate() const {
        return dim() != nd_dim;
    }
    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex& a, const Simplex& b) {
        if (auto c = a.dim() <=> b.dim(); c != 0) {
            return c;
        }
        if (auto c = a.nd_dim <=> b.nd_dim; c != 0) {
            return c;
        }
        if (auto c = a.id <=> b.id; c != 0) {
            return c;
        }
        return a.sur <=> b.sur;
    }
};

Simplex nondegenerate(int dim, int id);

/// A finite simplicial set given by its nondegenerate simplices and their
/// faces. With a nonnegative dimension bound the set is a truncation: only
/// simplices up to that dimension are stored and meaningful.
class FiniteSSet {
public:
    explicit FiniteSSet(int dim_bound = -1)
        : dim_bound_(dim_bound) {
    }

    int dim_bound() const {
        return dim_bound_;
    }
    void set_dim_bound(int bound) {
        dim_bound_ = bound;
    }
    /// Largest dimension holding a nondegenerate simplex, or -1 if empty.
    int top_dim() const;
    int count(int n) const;
    int total() const;

    /// Adds a nondegenerate n-simplex. `faces` must have n+1 entries of
    /// dimension n-1 (none for n = 0). Keys are unique per dimension.
    int add(int n, std::vector<int> key, std::string label, std::vector<Simplex> faces);
    std::optional<int> find(int n, const std::vector<int>& key) const;
    const std::vector<int>& key(int n, int id) const;
    const std::string& label(int n, int id) const;
    const Simplex& face(int n, int id, int i) const;
    const std::vector<Simplex>& faces(int n, int id) const;

    /// x . alpha, for alpha: [m] -> [x.dim()].
    Simplex apply(const Simplex& x, const Op& alpha) const;
    Simplex face_of(const Simplex& x, int i) const;
    Simplex degeneracy_of(const Simplex& x, int i) const;
    /// The 0-simplices (vertices) of x, in order.
    std::vector<int> vertices_of(const Simplex& x) const;
    /// Every n-simplex, degenerate ones included, in a fixed order.
    std::vector<Simplex> all_simplices(int n) const;
    std::string simplex_to_string(const Simplex& x) const;

    /// Checks d_i d_j = d_{j-1} d_i (i < j) on every nondegenerate simplex.
    bool check_identities(std::string* why = nullptr) const;

private:
    struct Cell {
        std::vector<int> key;
        std::string label;
        std::vector<Simplex> faces;
    };
    int dim_bound_;
    std::vector<std::vector<Cell>> cells_;
    std::vector<std::map<std::vector<int>, int>> index_;
};

/// The standard simplex; keys are increasing vertex sequences.
FiniteSSet standard_simplex(int n);

/// Nerve of a finite poset. Nondegenerate simplices are strict chains,
/// keyed by their element sequences. `max_dim` < 0 means no truncation.
FiniteSSet nerve_of_poset(int size, const std::function<bool(int, int)>& leq,
                          const std::function<std::string(int)>& label = nullptr,
                          int max_dim = -1);

/// A finite category with morphisms numbered 0..m-1. `comp[f][g]` is the
/// diagrammatic composite (f then g), or -1 when not composable.
struct FiniteCategory {
    int num_objects = 0;
    std::vector<int> src;
    std::vector<int> dst;
    std::vector<int> identity;
    std::vector<std::vector<int>> comp;
    std::vector<std::string> object_labels;
    std::vector<std::string> morphism_labels;

    int num_morphisms() const {
        return static_cast<int>(src.size());
    }
    bool is_identity(int f) const {
        return identity[src[f]] == f;
    }
};

/// Nerve of a finite category truncated at `max_dim`. Simplices of
/// dimension >= 1 are keyed by their strings of non-identity morphisms.
FiniteSSet nerve_of_category(const FiniteCategory& c, int max_dim);

/// A simplicial map given by images of nondegenerate simplices.
struct SMap {
    std::vector<std::vector<Simplex>> images;

    Simplex apply(const FiniteSSet& target, const Simplex& x) const {
        return target.apply(images.at(x.nd_dim).at(x.id), x.sur);
    }
    friend bool operator==(const SMap&, const SMap&) = default;
};

/// Checks dimensions and face compatibility up to `max_dim` (< 0: all).
bool is_simplicial(const FiniteSSet& a, const FiniteSSet& b, const SMap& f, int max_dim = -1,
                   std::string* why = nullptr);

/// Product via Eilenberg-Zilber pairs. The result is truncated at the
/// smaller bound when either factor is truncated.
FiniteSSet sset_product(const FiniteSSet& a, const FiniteSSet& b);

/// Isomorphism search by backtracking; the map is given per dimension on
/// nondegenerate ids.
std::optional<std::vector<std::vector<int>>> sset_iso(const FiniteSSet& a, const FiniteSSet& b);

/// A simplicial subset of an ambient set, by membership of nondegenerate
/// simplices.
class Subcomplex {
public:
    Subcomplex() = default;
    explicit Subcomplex(const FiniteSSet& ambient);

    bool contains(const Simplex& x) const {
        return member_[x.nd_dim][x.id] != 0;
    }
    bool contains(int n, int id) const {
        return member_[n][id] != 0;
    }
    /// Adds x with all its faces.
    void add_closed(const FiniteSSet& ambient, int n, int id);
    void add(int n, int id) {
        member_[n][id] = 1;
    }
    void remove(int n, int id) {
        member_[n][id] = 0;
    }
    int count(int n) const;
    int total() const;
    bool is_closed(const FiniteSSet& ambient) const;
    friend bool operator==(const Subcomplex&, const Subcomplex&) = default;
    Subcomplex operator|(const Subcomplex& o) const;
    Subcomplex operator&(const Subcomplex& o) const;
    bool subset_of(const Subcomplex& o) const;
    int dims() const {
        return static_cast<int>(member_.size());
    }

private:
    std::vector<std::vector<char>> member_;
};

/// The subcomplex as a simplicial set on its own.
FiniteSSet restrict_to(const FiniteSSet& ambient, const Subcomplex& sub,
                       std::vector<std::vector<int>>* id_map = nullptr);

} // namespace pastel

template<>
struct std::hash<pastel::Simplex> {
    std::size_t operator()(const pastel::Simplex& s) const noexcept {
        std::size_t h = static_cast<std::size_t>(s.nd_dim) * 1000003u + s.id;
        for (int v : s.sur) {
            h = h * 31 + static_cast<std::size_t>(v);
        }
        return h;
    }
};
