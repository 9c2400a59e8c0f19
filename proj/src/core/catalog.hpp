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

#include "plane_graph.hpp"

namespace pastel {

struct CatalogEntry {
    std::string name;
    std::string note;
    std::string text;
};

const std::vector<CatalogEntry>& catalog();
std::vector<std::string> catalog_names();
bool in_catalog(std::string_view name);
/// Throws InvalidArgument for unknown names.
PlaneGraph catalog_graph(std::string_view name);

/// The bouquet B_n: two vertices s, t and parallel edges e0..en (top to
/// bottom), with interior faces phi1..phin.
PlaneGraph make_bouquet(int n, const std::string& edge_prefix = "e",
                        const std::string& face_prefix = "phi");

/// A directed path with `length` edges.
PlaneGraph make_path_graph(int length, const std::string& edge_prefix = "p");

} // namespace pastel
