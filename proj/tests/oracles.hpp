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

// Brute-force reference computations used by the tests. These deliberately
// avoid the library's own algorithms (reachability tables, subgraph views,
// marked-subgraph calculus) so that agreement is meaningful.

#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "plane_graph.hpp"

namespace pastel::oracle {

/// Every directed x->y path as an edge sequence, by plain DFS.
inline std::vector<std::vector<int>> all_paths(const PlaneGraph& g, int x, int y,
                                               EdgeSet within = EdgeSet(~0ull)) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> dfs = [&](int v) {
        if (v == y) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e < g.num_edges(); ++e) {
            if (within.contains(e) && g.src(e) == v) {
                cur.push_back(e);
                dfs(g.dst(e));
                cur.pop_back();
            }
        }
    };
    dfs(x);
    return out;
}

inline EdgeSet union_of_paths(const PlaneGraph& g, int x, int y) {
    EdgeSet u;
    for (const auto& p : all_paths(g, x, y)) {
        u |= EdgeSet::of(p);
    }
    return u;
}

/// Vertices of the st-paths as sets, for comparing "left of" information.
inline std::set<int> path_vertices(const PlaneGraph& g, const std::vector<int>& p) {
    std::set<int> vs;
    for (int e : p) {
        vs.insert(g.src(e));
        vs.insert(g.dst(e));
    }
    return vs;
}

/// Number of strictly increasing chains p0 < ... < pn in a relation given as
/// a matrix (leq[i][j] means i <= j).
inline long long count_chains(const std::vector<std::vector<char>>& leq, int n, bool strict) {
    const int m = static_cast<int>(leq.size());
    // ways[k][j]: chains of length k+1 ending at j.
    std::vector<long long> ways(m, 1);
    for (int k = 1; k <= n; ++k) {
        std::vector<long long> next(m, 0);
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < m; ++i) {
                if (leq[i][j] && (!strict || i != j)) {
                    next[j] += ways[i];
                }
            }
        }
        ways = next;
    }
    long long total = 0;
    for (long long w : ways) {
        total += w;
    }
    return total;
}

} // namespace pastel::oracle

namespace pastel::oracle {

/// Order on st-paths as the reflexive-transitive closure of elementary face
/// moves p = a.dom(phi).b -> a.cod(phi).b.
inline std::vector<std::vector<char>> move_order(const PlaneGraph& g,
                                                 const std::vector<std::vector<int>>& paths) {
    const int n = static_cast<int>(paths.size());
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    auto index = [&](const std::vector<int>& p) {
        for (int i = 0; i < n; ++i) {
            if (paths[i] == p) {
                return i;
            }
        }
        return -1;
    };
    for (int i = 0; i < n; ++i) {
        leq[i][i] = 1;
        std::vector<int> stack{i};
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            const auto& p = paths[cur];
            for (int f : g.interior_faces()) {
                const Face& face = g.faces()[f];
                for (std::size_t k = 0; k + face.dom.size() <= p.size(); ++k) {
                    if (!std::equal(face.dom.begin(), face.dom.end(), p.begin() + k)) {
                        continue;
                    }
                    std::vector<int> r(p.begin(), p.begin() + k);
                    r.insert(r.end(), face.cod.begin(), face.cod.end());
                    r.insert(r.end(), p.begin() + k + face.dom.size(), p.end());
                    int j = index(r);
                    if (j >= 0 && !leq[i][j]) {
                        leq[i][j] = 1;
                        stack.push_back(j);
                    }
                }
            }
        }
    }
    return leq;
}

} // namespace pastel::oracle
