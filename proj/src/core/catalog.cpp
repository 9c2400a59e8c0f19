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

#include "catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace pastel {

namespace {

std::string bouquet_text(int n, const std::string& ep, const std::string& fp) {
    std::string out = "pastel-format 1\ngraph B" + std::to_string(n) + "\nvertex s:";
    for (int i = 0; i <= n; ++i) {
        out += (i ? ", " : " ") + ep + std::to_string(i) + "+";
    }
    out += "\nvertex t:";
    for (int i = n; i >= 0; --i) {
        out += (i != n ? ", " : " ") + ep + std::to_string(i) + "-";
    }
    out += "\n";
    for (int i = 0; i <= n; ++i) {
        out += "edge " + ep + std::to_string(i) + ": s -> t\n";
    }
    out += "exterior: " + ep + std::to_string(n) + "+\n";
    for (int i = 1; i <= n; ++i) {
        out += "face " + fp + std::to_string(i) + ": " + ep + std::to_string(i - 1) + "+\n";
    }
    return out;
}

const char* kJ = R"(pastel-format 1
graph J
# two lenses glued at m
vertex s: e0+, e1+
vertex m: d0+, d1+, e1-, e0-
vertex t: d1-, d0-
edge e0: s -> m
edge e1: s -> m
edge d0: m -> t
edge d1: m -> t
exterior: e1+
face phi: e0+
face psi: d0+
)";

const char* kF = R"(pastel-format 1
graph F
vertex s: e1+
vertex 2: e2+, e7+, e1-
vertex 5: e3+, e5+, e2-
vertex 3: e6+, e8+, e7-, e5-
vertex 6: e4+, e6-, e3-
vertex t: e8-, e4-
edge e1: s -> 2
edge e2: 2 -> 5
edge e3: 5 -> 6
edge e4: 6 -> t
edge e5: 5 -> 3
edge e6: 3 -> 6
edge e7: 2 -> 3
edge e8: 3 -> t
exterior: e8+
face phi1: e2+
face phi2: e3+
face phi3: e4+
dom: e1, e2, e3, e4
)";

const char* kH = R"(pastel-format 1
graph H
# b is the top arc; c0, c1, c2 run from 1 to 2, top to bottom
vertex 0: b+, a+
vertex 1: c0+, c1+, c2+, a-
vertex 2: c2-, c1-, c0-, b-
edge a: 0 -> 1
edge b: 0 -> 2
edge c0: 1 -> 2
edge c1: 1 -> 2
edge c2: 1 -> 2
exterior: a+
face top: b+
face low0: c0+
face low1: c1+
dom: b
)";

const char* kW = R"(pastel-format 1
graph W
# a is the top arc; u0, u1 run from s to m and v0, v1 from m to t
vertex s: a+, u0+, u1+
vertex m: v0+, v1+, u1-, u0-
vertex t: v1-, v0-, a-
edge a: s -> t
edge u0: s -> m
edge u1: s -> m
edge v0: m -> t
edge v1: m -> t
exterior: u1+
face top: a+
face left: u0+
face right: v0+
dom: a
)";

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> c;
    c.push_back({"B1", "bouquet with two parallel edges", bouquet_text(1, "e", "phi")});
    c.push_back({"B2", "bouquet with three parallel edges", bouquet_text(2, "e", "phi")});
    c.push_back({"B3", "bouquet with four parallel edges", bouquet_text(3, "e", "phi")});
    c.push_back({"J", "join of B1 with B1", kJ});
    c.push_back({"F", "six vertices, eight edges, three faces", kF});
    c.push_back({"H", "arc over a triple lens (hc example)", kH});
    c.push_back({"W", "arc over two lenses (face computation example)", kW});
    return c;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& e : catalog()) {
        names.push_back(e.name);
    }
    return names;
}

bool in_catalog(std::string_view name) {
    const auto& c = catalog();
    return std::any_of(c.begin(), c.end(), [&](const CatalogEntry& e) { return e.name == name; });
}

PlaneGraph catalog_graph(std::string_view name) {
    static std::mutex mutex;
    static std::map<std::string, PlaneGraph, std::less<>> parsed;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = parsed.find(name);
    if (it != parsed.end()) {
        return it->second;
    }
    for (const auto& e : catalog()) {
        if (e.name == name) {
            PlaneGraph g = PlaneGraph::parse(e.text);
            g.globular();
            parsed.emplace(e.name, g);
            return g;
        }
    }
    fail(ErrorCode::InvalidArgument, "unknown catalog graph '" + std::string(name) + "'");
}

PlaneGraph make_bouquet(int n, const std::string& edge_prefix, const std::string& face_prefix) {
    if (n < 0) {
        fail(ErrorCode::InvalidArgument, "bouquet size must be nonnegative");
    }
    return PlaneGraph::parse(bouquet_text(n, edge_prefix, face_prefix));
}

PlaneGraph make_path_graph(int length, const std::string& edge_prefix) {
    if (length < 1) {
        fail(ErrorCode::InvalidArgument, "path length must be positive");
    }
    GraphData d;
    d.name = "P" + std::to_string(length);
    for (int i = 0; i <= length; ++i) {
        d.vertices.push_back("v" + std::to_string(i));
    }
    d.rotation.resize(length + 1);
    for (int i = 0; i < length; ++i) {
        d.edges.push_back({edge_prefix + std::to_string(i), i, i + 1});
        d.rotation[i].push_back(dart_of(i, true));
        d.rotation[i + 1].push_back(dart_of(i, false));
    }
    // Out-dart before in-dart at interior vertices.
    d.exterior_dart = dart_of(0, true);
    return PlaneGraph::from_data(std::move(d));
}

} // namespace pastel
