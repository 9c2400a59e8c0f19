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

#include "paths.hpp"

#include <algorithm>
#include <functional>

namespace pastel {

std::vector<Path> enumerate_paths(const PlaneGraph& g, int x, int y, EdgeSet within) {
    std::vector<std::vector<int>> out_edges(g.num_vertices());
    for (int e = 0; e < g.num_edges(); ++e) {
        if (within.contains(e)) {
            out_edges[g.src(e)].push_back(e);
        }
    }
    std::vector<Path> result;
    if (x == y) {
        result.push_back(empty_path(x));
        return result;
    }
    std::vector<int> cur;
    std::function<void(int)> dfs = [&](int v) {
        if (v == y) {
            result.push_back(make_path(g, cur));
            return;
        }
        for (int e : out_edges[v]) {
            cur.push_back(e);
            dfs(g.dst(e));
            cur.pop_back();
        }
    };
    dfs(x);
    std::sort(result.begin(), result.end(),
              [](const Path& a, const Path& b) { return a.edges < b.edges; });
    return result;
}

std::vector<Path> enumerate_paths(const PlaneGraph& g) {
    return enumerate_paths(g, g.source(), g.target());
}

int PathPoset::index_of(EdgeSet s) const {
    auto it = index_by_set.find(s.bits());
    return it == index_by_set.end() ? -1 : it->second;
}

int PathPoset::bottom() const {
    for (int i = 0; i < size(); ++i) {
        bool all = true;
        for (int j = 0; j < size() && all; ++j) {
            all = leq[i][j] != 0;
        }
        if (all) {
            return i;
        }
    }
    return -1;
}

int PathPoset::top() const {
    for (int j = 0; j < size(); ++j) {
        bool all = true;
        for (int i = 0; i < size() && all; ++i) {
            all = leq[i][j] != 0;
        }
        if (all) {
            return j;
        }
    }
    return -1;
}

int PathPoset::height() const {
    // Paths are few; longest chain by DP over a linear extension.
    const int n = size();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::vector<int> below(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            below[j] += less(i, j);
        }
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
    std::vector<int> len(n, 0);
    int best = 0;
    for (int j : order) {
        for (int i : order) {
            if (less(i, j)) {
                len[j] = std::max(len[j], len[i] + 1);
            }
        }
        best = std::max(best, len[j]);
    }
    return best;
}

PathPoset build_poset(const PlaneGraph& g, EdgeSet h) {
    const SubgraphInfo& info = g.sub(h);
    if (!info.globular) {
        fail(ErrorCode::NotGlobularSubgraph, g.edges_to_string(h) + " is not globular");
    }
    PathPoset p;
    p.carrier = h;
    p.source = info.source;
    p.target = info.target;
    p.paths = enumerate_paths(g, info.source, info.target, h);
    const int n = p.size();
    p.leq.assign(n, std::vector<char>(n, 0));
    p.witness.assign(n, std::vector<EdgeSet>(n));
    for (int i = 0; i < n; ++i) {
        p.index_by_set[p.paths[i].set.bits()] = i;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                p.leq[i][j] = 1;
                continue;
            }
            auto glob = try_glob_between(g, p.paths[i], p.paths[j]);
            if (glob) {
                p.leq[i][j] = 1;
                p.witness[i][j] = glob->carrier;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (p.leq[i][j] && p.leq[j][i]) {
                fail(ErrorCode::NotAPartialOrder,
                     "antisymmetry fails for " + g.path_to_string(p.paths[i].edges) + " and " +
                         g.path_to_string(p.paths[j].edges));
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                if (p.leq[i][j] && p.leq[j][k] && !p.leq[i][k]) {
                    fail(ErrorCode::NotAPartialOrder,
                         "transitivity fails at " + g.path_to_string(p.paths[j].edges));
                }
            }
        }
    }
    return p;
}

PathPoset build_poset(const PlaneGraph& g) {
    return build_poset(g, g.all_edges());
}

std::shared_ptr<const PathPoset> poset_of(const PlaneGraph& g, EdgeSet h) {
    return g.memo_as<PathPoset>("poset:" + std::to_string(h.bits()), [&] {
        return std::make_shared<const PathPoset>(build_poset(g, h));
    });
}

std::vector<std::pair<int, int>> hasse_edges(const PathPoset& p) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < p.size(); ++i) {
        for (int j = 0; j < p.size(); ++j) {
            if (!p.less(i, j)) {
                continue;
            }
            bool cover = true;
            for (int k = 0; k < p.size() && cover; ++k) {
                cover = !(p.less(i, k) && p.less(k, j));
            }
            if (cover) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

} // namespace pastel
