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

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace pastel {

inline constexpr int kMaxEdges = 64;

/// A set of edge indices of a plane graph. Subgraphs are identified with
/// their edge sets; vertices are induced.
class EdgeSet {
public:
    constexpr EdgeSet() = default;
    constexpr explicit EdgeSet(std::uint64_t bits)
        : bits_(bits) {
    }

    static EdgeSet single(int edge) {
        return EdgeSet(std::uint64_t{1} << edge);
    }

    static EdgeSet first(int count) {
        return count >= 64 ? EdgeSet(~std::uint64_t{0})
                           : EdgeSet((std::uint64_t{1} << count) - 1);
    }

    template<typename Range>
    static EdgeSet of(const Range& edges) {
        EdgeSet result;
        for (int e : edges) {
            result.insert(e);
        }
        return result;
    }

    constexpr std::uint64_t bits() const {
        return bits_;
    }
    bool contains(int edge) const {
        return (bits_ >> edge) & 1u;
    }
    void insert(int edge) {
        bits_ |= std::uint64_t{1} << edge;
    }
    void erase(int edge) {
        bits_ &= ~(std::uint64_t{1} << edge);
    }
    bool empty() const {
        return bits_ == 0;
    }
    int size() const {
        return std::popcount(bits_);
    }
    bool subset_of(EdgeSet other) const {
        return (bits_ & ~other.bits_) == 0;
    }
    bool intersects(EdgeSet other) const {
        return (bits_ & other.bits_) != 0;
    }

    std::vector<int> to_vector() const {
        std::vector<int> result;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            result.push_back(std::countr_zero(b));
        }
        return result;
    }

    friend EdgeSet operator|(EdgeSet a, EdgeSet b) {
        return EdgeSet(a.bits_ | b.bits_);
    }
    friend EdgeSet operator&(EdgeSet a, EdgeSet b) {
        return EdgeSet(a.bits_ & b.bits_);
    }
    friend EdgeSet operator-(EdgeSet a, EdgeSet b) {
        return EdgeSet(a.bits_ & ~b.bits_);
    }
    EdgeSet& operator|=(EdgeSet other) {
        bits_ |= other.bits_;
        return *this;
    }
    EdgeSet& operator&=(EdgeSet other) {
        bits_ &= other.bits_;
        return *this;
    }

    friend constexpr auto operator<=>(EdgeSet, EdgeSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Calls fn on every subset of `set`, including the empty set and `set`.
template<typename Fn>
void for_each_subset(EdgeSet set, Fn&& fn) {
    const std::uint64_t full = set.bits();
    std::uint64_t sub = full;
    while (true) {
        fn(EdgeSet(sub));
        if (sub == 0) {
            break;
        }
        sub = (sub - 1) & full;
    }
}

} // namespace pastel

template<>
struct std::hash<pastel::EdgeSet> {
    std::size_t operator()(pastel::EdgeSet s) const noexcept {
        return std::hash<std::uint64_t>{}(s.bits());
    }
};
