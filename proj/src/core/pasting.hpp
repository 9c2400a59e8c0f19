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

#include <set>
#include <string>
#include <vector>

#include "marked.hpp"
#include "plane_graph.hpp"
#include "sset.hpp"

namespace pastel {

/// A pasting diagram on the globular subgraph `carrier` of a plane graph.
/// Paths of the carrier always belong to the diagram and are not stored;
/// `members` lists the remaining globular subgraphs, sorted.
class PastingDiagram {
public:
    PastingDiagram() = default;
    /// `members` must already be closed under globular subgraphs.
    PastingDiagram(PlaneGraph g, EdgeSet carrier, std::set<EdgeSet> members);

    const PlaneGraph& graph() const {
        return g_;
    }
    EdgeSet carrier() const {
        return carrier_;
    }
    int source() const;
    int target() const;
    const std::set<EdgeSet>& members() const {
        return members_;
    }
    /// True for paths of the carrier and stored members.
    bool contains(EdgeSet a) const;
    /// Some element of the diagram contains `a`.
    bool covers(EdgeSet a) const;
    /// Members and st-paths of the carrier that are wide in the carrier.
    std::vector<EdgeSet> wide_elements() const;

    bool is_complete() const;
    bool is_subdivision_closed() const;
    bool is_wide_generated() const;

    friend bool operator==(const PastingDiagram& a, const PastingDiagram& b) {
        return a.carrier_ == b.carrier_ && a.members_ == b.members_;
    }

private:
    PlaneGraph g_;
    EdgeSet carrier_;
    std::set<EdgeSet> members_;
};

/// Every directed path (with at least one edge) inside h.
std::vector<EdgeSet> all_paths_in(const PlaneGraph& g, EdgeSet h);
/// Subgraph closure plus paths. Throws NotGlobularSubgraph.
PastingDiagram generate(const PlaneGraph& g, EdgeSet carrier, const std::vector<EdgeSet>& gens);
PastingDiagram generate(const PlaneGraph& g, const std::vector<EdgeSet>& gens);
/// Faces (interior faces of the carrier) and paths.
PastingDiagram sigma_min(const PlaneGraph& g, EdgeSet carrier);
PastingDiagram sigma_min(const PlaneGraph& g);
PastingDiagram pi_max(const PlaneGraph& g, EdgeSet carrier);
PastingDiagram pi_max(const PlaneGraph& g);

PastingDiagram complete(const PastingDiagram& d);
PastingDiagram restrict(const PastingDiagram& d, EdgeSet h);
/// Restriction to G_{x,y}; requires a directed x->y path with x != y.
PastingDiagram restrict_xy(const PastingDiagram& d, int x, int y);
/// Union of diagrams on the same carrier.
PastingDiagram union_pd(const PastingDiagram& a, const PastingDiagram& b);

/// Subdivisions K of h inside `within`: h <= K, same domain and codomain.
std::vector<EdgeSet> subdivisions(const PlaneGraph& g, EdgeSet h, EdgeSet within);

/// Join of diagrams on consecutive carriers of one graph, generated by
/// joins of wide elements. Throws NotWideGenerated.
PastingDiagram join_pd(const PastingDiagram& a, const PastingDiagram& b);
/// Same, with explicit wide generating sets.
PastingDiagram join_pd(const PastingDiagram& a, const std::vector<EdgeSet>& gens_a,
                       const PastingDiagram& b, const std::vector<EdgeSet>& gens_b);
/// Join of diagrams on whole graphs, living on join(g1, g2).
PastingDiagram join_pd_graphs(const PastingDiagram& a, const PastingDiagram& b);

/// S together with the joins of wide elements of T_{s,x} and T_{x,t} for
/// interior vertices x. Throws NotIncluded unless S <= T.
PastingDiagram hc(const PastingDiagram& sigma, const PastingDiagram& pi);
/// Members of hc(sigma, pi) that are not in sigma.
std::vector<EdgeSet> hc_new_members(const PastingDiagram& sigma, const PastingDiagram& pi);

/// Nerve as a subcomplex of nerve(g, carrier): simplices whose minimal
/// witnesses all lie in one element of the diagram.
Subcomplex nerve_pd(const PastingDiagram& d);
/// Same for complete diagrams, via P_sigma membership. Throws NotComplete.
Subcomplex nerve_pd_complete(const PastingDiagram& d);
/// Nerve of the diagram as a simplicial set of its own.
FiniteSSet nerve_pd_sset(const PastingDiagram& d);

/// Transports a subcomplex of nerve(g, small) into nerve(g, big); the
/// carriers must share source and target.
Subcomplex embed_subcomplex(const PlaneGraph& g, EdgeSet small, const Subcomplex& sub,
                            EdgeSet big);
/// nerve(g, small) inside nerve(g, big).
Subcomplex carrier_subcomplex(const PlaneGraph& g, EdgeSet small, EdgeSet big);

} // namespace pastel
