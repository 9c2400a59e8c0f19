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
#include <string>
#include <string_view>
#include <vector>

#include "paths.hpp"
#include "plane_graph.hpp"
#include "sset.hpp"

namespace pastel {

/// Nerve of the path poset of the globular subgraph h. Vertex i is path i of
/// poset_of(g, h); an n-simplex is keyed by its strict chain of indices.
std::shared_ptr<const FiniteSSet> nerve(const PlaneGraph& g, EdgeSet h);
std::shared_ptr<const FiniteSSet> nerve(const PlaneGraph& g);

/// The chain p_0 <= ... <= p_n of path indices of a nerve simplex.
std::vector<int> chain_of(const FiniteSSet& nerve, const Simplex& x);
/// Inverse of chain_of. Throws NotComparable if the chain is not monotone.
Simplex simplex_of_chain(const FiniteSSet& nerve, const std::vector<int>& chain);

/// An n-marked subgraph. Labels are stored per face of the ambient graph:
/// every ambient face inside an interior face of P carries that face's
/// label, all others carry 0.
struct MarkedSubgraph {
    EdgeSet p;
    int n = 0;
    std::vector<int> label;

    friend bool operator==(const MarkedSubgraph&, const MarkedSubgraph&) = default;
    friend auto operator<=>(const MarkedSubgraph&, const MarkedSubgraph&) = default;
};

/// Label of each interior face of P, indexed like sub(p).interior_faces().
std::vector<int> face_labels(const PlaneGraph& g, const MarkedSubgraph& m);

/// P is wide in h, every interior face of P has a label in 1..n, and
/// lambda(phi) < lambda(psi) whenever cod phi and dom psi share an edge.
bool is_admissible(const PlaneGraph& g, EdgeSet h, const MarkedSubgraph& m,
                   std::string* why = nullptr);

/// Chain of path indices of poset_of(g, h) to its marked subgraph.
MarkedSubgraph chain_to_marked(const PlaneGraph& g, EdgeSet h, const std::vector<int>& chain);
/// Rewrites dom P face by face. Throws NotAdmissible.
std::vector<int> marked_to_chain(const PlaneGraph& g, EdgeSet h, const MarkedSubgraph& m);

MarkedSubgraph simplex_to_marked(const PlaneGraph& g, EdgeSet h, const Simplex& x);
Simplex marked_to_simplex(const PlaneGraph& g, EdgeSet h, const MarkedSubgraph& m);

/// Action of alpha: [k] -> [n] computed on the picture: drop domains of
/// faces labelled <= alpha(0), codomains of faces labelled > alpha(k),
/// relabel, and merge neighbouring faces that receive the same label.
MarkedSubgraph act_operator(const PlaneGraph& g, const MarkedSubgraph& m, const Op& alpha);

/// All admissible n-marked wide subgraphs of h, in a fixed order.
std::vector<MarkedSubgraph> enumerate_marked(const PlaneGraph& g, EdgeSet h, int n);

/// Join of marked subgraphs of h1 and h2 where t(h1) = s(h2) in one graph.
MarkedSubgraph join_marked(const MarkedSubgraph& a, const MarkedSubgraph& b);

/// The join isomorphism N(G1) x N(G2) -> N(G1 . G2) on marked subgraphs;
/// `joined` must be join(g1, g2).
MarkedSubgraph join_iso(const PlaneGraph& g1, const MarkedSubgraph& a, const PlaneGraph& g2,
                        const MarkedSubgraph& b, const PlaneGraph& joined);
/// Inverse of join_iso.
std::pair<MarkedSubgraph, MarkedSubgraph> split_iso(const PlaneGraph& g1, const PlaneGraph& g2,
                                                    const PlaneGraph& joined,
                                                    const MarkedSubgraph& m);

/// Stable text key, e.g. "{e0,e1,e2}|phi1=1,phi2=2|2".
std::string marked_key(const PlaneGraph& g, const MarkedSubgraph& m);
MarkedSubgraph parse_marked_key(const PlaneGraph& g, std::string_view key);

} // namespace pastel
