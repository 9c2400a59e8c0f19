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
#include <optional>
#include <string>
#include <vector>

#include "pasting.hpp"
#include "sset.hpp"

namespace pastel {

/// A face phi of a 2-connected globular subgraph with dom phi on dom G, and
/// the three globular subgraphs it cuts out: G1 (paths through dom phi or
/// cod phi), G2 (paths avoiding dom phi) and G0 = G1 and G2.
struct Split {
    EdgeSet carrier;
    int phi = -1; // index into g.sub(carrier).faces
    EdgeSet phi_dom;
    EdgeSet phi_cod;
    EdgeSet g0;
    EdgeSet g1;
    EdgeSet g2;
    EdgeSet boundary1; // dom G1 and cod G1
    std::vector<char> inside1; // per ambient face: lies inside G1
};

/// The glob gamma meets G1 only in its boundary: shared edges lie on dom G1
/// or cod G1 and no face lies inside both.
bool meets_only_boundary(const PlaneGraph& g, const Split& split, EdgeSet gamma);

/// phi is the first interior face of h with dom phi inside dom h. Throws
/// NotTwoConnected or TooFewFaces.
Split split_graph(const PlaneGraph& g, EdgeSet h);
Split split_graph(const PlaneGraph& g);

struct FillableInfo {
    Simplex simplex;
    std::vector<int> chain;           // path indices of poset_of(g, carrier)
    std::vector<EdgeSet> witnesses;   // gamma_1 .. gamma_n, empty for equal paths
    int c = 0;
    bool fillable = false;
    bool in_colim = false; // every path in G1, or every path in G2
};

/// s is a simplex of nerve(g, split.carrier).
FillableInfo classify_fillable(const PlaneGraph& g, const Split& split, const Simplex& s);

/// The path q with p < q < r whose witness from p lies in G1 and whose
/// witness to r meets G1 only in its boundary. Indices are into
/// poset_of(g, split.carrier).
std::optional<int> cut_path(const PlaneGraph& g, const Split& split, int p, int r);

struct CertificateStep {
    int dim = 0;
    int horn = 0;
    int filler = 0; // nondegenerate dim-simplex of the ambient set

    friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

/// Inner horn pushouts taking `base` to `top`, both subcomplexes of
/// `ambient`. For diagrams the ambient set is nerve(graph, carrier).
struct AnodyneCertificate {
    PlaneGraph graph;
    EdgeSet carrier;
    std::shared_ptr<const FiniteSSet> ambient;
    Subcomplex base;
    Subcomplex top;
    std::vector<CertificateStep> steps;
    int searched = 0; // steps that came from the fallback search
};

/// Empty string when sigma -> pi is an inclusion of complete,
/// subdivision-closed diagrams on one carrier containing every interior
/// face of it.
std::string check_local_hypotheses(const PastingDiagram& sigma, const PastingDiagram& pi);

struct BuildOptions {
    /// Reverses the key order among fillers of equal (n, c).
    bool reverse_ties = false;
    /// Search nodes before SearchExhausted.
    long long search_budget = 2000000;
};

/// Throws HypothesisViolated or SearchExhausted.
AnodyneCertificate build_certificate(const PastingDiagram& sigma, const PastingDiagram& pi,
                                     const BuildOptions& options = {});

/// Depth-first search for inner horn steps from base to top. Candidates
/// are tried by dimension, then by id. Throws SearchExhausted.
std::vector<CertificateStep> search_certificate(const FiniteSSet& ambient, const Subcomplex& base,
                                                const Subcomplex& top,
                                                long long budget = 2000000);

enum class Violation {
    None,
    Shape,      // base not closed, top not closed, or base not inside top
    BadFiller,  // not a nondegenerate simplex of the ambient set
    InnerIndex,
    Horn,       // a face d_j, j != i, is missing
    Novelty,    // filler or d_i already present, or d_i degenerate
    OutsideTop,
    Coverage,
};
std::string_view violation_name(Violation v);

struct ValidationReport {
    bool ok = true;
    Violation kind = Violation::None;
    int step = -1; // first failing step, -1 for shape and coverage
    std::string reason;
};

ValidationReport validate_certificate(const FiniteSSet& ambient, const Subcomplex& base,
                                      const Subcomplex& top,
                                      const std::vector<CertificateStep>& steps);
ValidationReport validate_certificate(const AnodyneCertificate& c);

} // namespace pastel
