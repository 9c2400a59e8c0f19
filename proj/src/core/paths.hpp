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

#include <memory>
#include <unordered_map>
#include <vector>

#include "plane_graph.hpp"

namespace pastel {

/// All directed x->y paths using only edges of `within`, ordered
/// lexicographically by edge index sequence.
std::vector<Path> enumerate_paths(const PlaneGraph& g, int x, int y,
                                  EdgeSet within = EdgeSet(~std::uint64_t{0}));
/// The st-paths of g.
std::vector<Path> enumerate_paths(const PlaneGraph& g);

/// The poset of source-to-target paths of a globular subgraph h of g,
/// ordered by p <= q iff q lies weakly below p.
struct PathPoset {
    EdgeSet carrier;
    int source = -1;
    int target = -1;
    std::vector<Path> paths;
    std::vector<std::vector<char>> leq;
    // Carrier of the minimal glob witnessing i <= j; empty when i == j or
    // the paths are incomparable.
    std::vector<std::vector<EdgeSet>> witness;
    std::unordered_map<std::uint64_t, int> index_by_set;

    int size() const {
        return static_cast<int>(paths.size());
    }
    bool less_equal(int i, int j) const {
        return leq[i][j] != 0;
    }
    bool less(int i, int j) const {
        return i != j && leq[i][j] != 0;
    }
    /// Index of the path with this edge set, or -1.
    int index_of(EdgeSet s) const;
    int bottom() const;
    int top() const;
    /// Longest strict chain length (number of steps).
    int height() const;
};

/// Builds the poset, verifying reflexivity, antisymmetry and transitivity.
/// Throws NotAPartialOrder if any of them fails.
PathPoset build_poset(const PlaneGraph& g, EdgeSet h);
PathPoset build_poset(const PlaneGraph& g);

/// Memoized per graph and carrier.
std::shared_ptr<const PathPoset> poset_of(const PlaneGraph& g, EdgeSet h);

/// Covering pairs (i, j) with i < j and nothing strictly between.
std::vector<std::pair<int, int>> hasse_edges(const PathPoset& p);

} // namespace pastel
