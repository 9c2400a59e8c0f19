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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edge_set.hpp"
#include "error.hpp"

namespace pastel {

// Darts are encoded as 2*edge for the forward dart (starting at the source of
// the edge) and 2*edge+1 for the backward dart.
inline int dart_of(int edge, bool forward) {
    return 2 * edge + (forward ? 0 : 1);
}
inline int dart_edge(int dart) {
    return dart >> 1;
}
inline bool dart_forward(int dart) {
    return (dart & 1) == 0;
}
inline int dart_rev(int dart) {
    return dart ^ 1;
}

/// A directed path given by its edge sequence. An empty path sits at a
/// single vertex (`from == to`).
struct Path {
    std::vector<int> edges;
    int from = -1;
    int to = -1;
    EdgeSet set;

    bool empty() const {
        return edges.empty();
    }
    friend bool operator==(const Path& a, const Path& b) {
        return a.edges == b.edges && a.from == b.from && a.to == b.to;
    }
};

struct Face {
    std::string name;
    std::vector<int> boundary; // dart walk, face on the right
    bool exterior = false;
    bool globular = false;
    // Only meaningful when `globular`.
    std::vector<int> dom;
    std::vector<int> cod;
    EdgeSet dom_set;
    EdgeSet cod_set;
    int source = -1;
    int target = -1;
};

struct GlobularityReport {
    int source = -1;
    int target = -1;
    Path dom;
    Path cod;
};

/// Face of a subgraph H, given as a union of faces of the ambient graph.
struct SubFace {
    std::vector<int> gfaces;
    std::vector<int> boundary;
    bool exterior = false;
    bool globular = false;
    std::vector<int> dom;
    std::vector<int> cod;
    EdgeSet dom_set;
    EdgeSet cod_set;
    int source = -1;
    int target = -1;
};

/// Derived data of a subgraph H (given by its edge set) with the embedding
/// inherited from the ambient graph.
struct SubgraphInfo {
    EdgeSet edges;
    std::vector<int> vertices;
    bool connected = false;
    bool globular = false;
    bool glob = false;
    int source = -1;
    int target = -1;
    Path dom;
    Path cod;
    std::vector<SubFace> faces;
    int exterior = -1;
    std::vector<int> face_of_gface; // H-face index for each ambient face

    std::vector<int> interior_faces() const;
};

struct Glob {
    EdgeSet carrier;
    Path dom;
    Path cod;
    bool degenerate = false;
    bool proper = false;
};

/// Raw input of a plane graph, before validation.
struct GraphData {
    struct EdgeDecl {
        std::string name;
        int src = -1;
        int dst = -1;
    };
    std::string name;
    std::vector<std::string> vertices;
    std::vector<EdgeDecl> edges;
    std::vector<std::vector<int>> rotation; // clockwise darts at each vertex
    int exterior_dart = -1;
    std::vector<std::pair<std::string, int>> face_names; // name, any dart on the face
    std::optional<std::vector<int>> declared_dom;
};

/// An immutable plane graph: a directed graph with a clockwise rotation
/// system and a designated exterior face. Copies share their data.
class PlaneGraph {
public:
    PlaneGraph() = default;

    /// Validates the rotation system, traces faces and checks the Euler
    /// formula. Globularity is computed but not enforced here.
    static PlaneGraph from_data(GraphData data);
    static PlaneGraph parse(std::string_view text);
    std::string to_text() const;

    const std::string& name() const;
    int num_vertices() const;
    int num_edges() const;
    const std::string& vertex_name(int v) const;
    const std::string& edge_name(int e) const;
    std::optional<int> find_vertex(std::string_view name) const;
    std::optional<int> find_edge(std::string_view name) const;
    int vertex(std::string_view name) const; // throws InvalidArgument
    int edge(std::string_view name) const;
    int src(int e) const;
    int dst(int e) const;
    int dart_start(int dart) const;
    int dart_end(int dart) const;
    std::string dart_name(int dart) const;
    const std::vector<int>& rotation(int v) const;
    int exterior_dart() const;
    EdgeSet all_edges() const;
    const GraphData& data() const;

    const std::vector<Face>& faces() const;
    int exterior_face() const;
    std::vector<int> interior_faces() const;
    int num_interior_faces() const;
    std::optional<int> find_face(std::string_view name) const;
    int face_of_dart(int dart) const;
    /// Face lying below `e`, i.e. with `e` on its domain.
    int face_below(int e) const;
    /// Face lying above `e`, i.e. with `e` on its codomain.
    int face_above(int e) const;

    bool is_globular() const;
    /// Throws the globularity failure when not globular.
    const GlobularityReport& globular() const;
    int source() const;
    int target() const;

    /// Vertices in a fixed topological order (globular graphs only).
    const std::vector<int>& topo_order() const;
    int topo_index(int v) const;
    bool reaches(int x, int y) const; // reflexive

    const SubgraphInfo& sub(EdgeSet h) const;

    /// Per-graph memo for derived structures (posets, nerves). `make` runs
    /// at most once per key while the graph is alive.
    std::shared_ptr<const void> memo(const std::string& key,
                                     const std::function<std::shared_ptr<const void>()>& make) const;
    template<typename T>
    std::shared_ptr<const T> memo_as(const std::string& key,
                                     const std::function<std::shared_ptr<const T>()>& make) const {
        return std::static_pointer_cast<const T>(
            memo(key, [&]() -> std::shared_ptr<const void> { return make(); }));
    }

    std::string edges_to_string(EdgeSet s) const;
    std::string path_to_string(const std::vector<int>& edges) const;

    friend bool operator==(const PlaneGraph& a, const PlaneGraph& b);

private:
    struct Impl;
    struct Cache;
    std::shared_ptr<const Impl> impl_;
    std::shared_ptr<Cache> cache_;
};

std::vector<Face> trace_faces(const PlaneGraph& g);
const GlobularityReport& check_globular(const PlaneGraph& g);

Path make_path(const PlaneGraph& g, const std::vector<int>& edges);
Path empty_path(int vertex);
Path concat(const Path& a, const Path& b);

/// Union of all directed x->y paths; nullopt when there is none. For x == y
/// the result is the empty edge set.
std::optional<EdgeSet> subgraph_xy(const PlaneGraph& g, int x, int y);
EdgeSet subgraph_xy_or_empty(const PlaneGraph& g, int x, int y);

/// The connected subgraph h as a plane graph with the inherited embedding.
/// `edge_map`, when given, receives the ambient index of every new edge.
PlaneGraph extract(const PlaneGraph& g, EdgeSet h, std::vector<int>* edge_map = nullptr);

/// Glues t(g1) to s(g2).
PlaneGraph join(const PlaneGraph& g1, const PlaneGraph& g2);

std::optional<Glob> try_glob_between(const PlaneGraph& g, const Path& p, const Path& q);
/// Throws NotComparable when p is not below-or-equal q.
Glob glob_between(const PlaneGraph& g, const Path& p, const Path& q);

/// (G_{s,x} join G_{x,t}) intersected with (G_{s,y} join G_{y,t}).
EdgeSet intersect_xy_joins(const PlaneGraph& g, int x, int y);

/// Interior vertices of the globular subgraph h through which every path of
/// h passes, in path order.
std::vector<int> cut_vertices(const PlaneGraph& g, EdgeSet h);
/// Splits h at its cut vertices.
std::vector<EdgeSet> join_factors(const PlaneGraph& g, EdgeSet h);
bool is_two_connected(const PlaneGraph& g, EdgeSet h);

/// True iff the edge set forms a single directed path.
bool is_path(const PlaneGraph& g, EdgeSet h);
/// Orders the edges of a path edge set.
Path path_of_set(const PlaneGraph& g, EdgeSet h);

} // namespace pastel
