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

#include <string>
#include <string_view>
#include <vector>

#include "paths.hpp"
#include "plane_graph.hpp"

namespace pastel {

/// Vertices in columns by longest path from the source; each edge runs at
/// the height of the face above it, so dom is drawn on top.
struct Layout {
    std::vector<double> vertex_x;
    std::vector<double> vertex_y;
    std::vector<double> edge_y;
    std::vector<double> face_x; // interior faces only
    std::vector<double> face_y;
};

Layout layout_graph(const PlaneGraph& g);

std::string graph_to_dot(const PlaneGraph& g);
std::string graph_to_tikz(const PlaneGraph& g);
std::string graph_to_svg(const PlaneGraph& g);
/// "dot", "tikz" or "svg"; InvalidArgument otherwise.
std::string render_graph(const PlaneGraph& g, std::string_view format);

/// Hasse diagram of the path order, an arrow p -> q for each cover p < q.
std::string hasse_to_dot(const PlaneGraph& g, const PathPoset& poset);

} // namespace pastel
