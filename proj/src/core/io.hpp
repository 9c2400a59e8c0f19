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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "anodyne.hpp"
#include "pasting.hpp"
#include "scat.hpp"
#include "twocat.hpp"

// Text formats. Every file starts with the line "pastel-format 1"; '#'
// starts a comment.
namespace pastel {

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string text_hash(std::string_view text);

/// "{a, b}" or "a, b"; an empty brace pair is the empty set.
EdgeSet parse_edge_set(const PlaneGraph& g, std::string_view s);

/// A graph followed by
///   diagram <name>: generators = {a, b; c} [complete] [subdivision-closed]
/// on the whole graph. The flags close the generated diagram at load time.
PastingDiagram parse_diagram(std::string_view text, std::string* name = nullptr);
/// Graph text plus one diagram line listing the stored members.
std::string diagram_to_text(const PastingDiagram& d, const std::string& name);
/// "min", "min-complete" and "max" on the whole graph.
std::optional<PastingDiagram> named_diagram(const PlaneGraph& g, std::string_view name);
/// Hash of the graph text, carrier and members.
std::string diagram_hash(const PastingDiagram& d);

/// Statements "obj v = a", "edge e = <id>" and "face f = <id>" or
/// "face f = s0(<id>)", with ids of simplices of the target mapping spaces.
/// Simplex labels may stand in for ids.
Labeling parse_labeling(const PlaneGraph& g, const SCat& target, std::string_view text);
std::string labeling_to_text(const PlaneGraph& g, const SCat& target, const Labeling& l);

/// Same statements with cell names of a 2-category.
TwoLabeling parse_two_labeling(const PlaneGraph& g, const FiniteTwoCategory& c,
                               std::string_view text);
/// Cell names are generator names.
TwoLabeling parse_two_labeling(const PlaneGraph& g, const FreeTwoCategory& c,
                               std::string_view text);
std::string two_labeling_to_text(const PlaneGraph& g, const TwoCategory& c, const TwoLabeling& l);

/// A 2-category file holds either generators only
///   computad <name> / object x / gen1 f x -> y / gen2 a f g => h
/// or a tabulated 2-category
///   twocat <name> / object x / cell1 f x -> y / cell2 a f => g /
///   id1 x = f / id2 f = a / comp1 f g = h / vcomp a b = c / hcomp a b = c
/// Names are single tokens.
bool is_computad_text(std::string_view text);
Computad parse_computad(std::string_view text);
std::string computad_to_text(const Computad& c);
FiniteTwoCategory parse_twocat(std::string_view text);
std::string twocat_to_text(const FiniteTwoCategory& c);

/// Header with hashes of the graph and both diagrams, then one line per step
///   step <k>: dim=<n> horn=<i> filler=<marked key>
std::string certificate_to_text(const AnodyneCertificate& cert, const PastingDiagram& sigma,
                                const PastingDiagram& pi);
/// Throws InvalidCertificate when a hash does not match.
std::vector<CertificateStep> parse_certificate(std::string_view text, const PastingDiagram& sigma,
                                               const PastingDiagram& pi);

/// A certificate for sigma -> pi with the given steps, ready to validate.
AnodyneCertificate load_certificate(std::string_view text, const PastingDiagram& sigma,
                                    const PastingDiagram& pi);

/// {"format", "dims": [{"dim", "simplices": [{"id", "key", "label",
/// "faces"}]}]}; faces are [nd_dim, id, [surjection]].
nlohmann::ordered_json sset_to_json(const FiniteSSet& s);
FiniteSSet sset_from_json(const nlohmann::ordered_json& j);

/// One line per nondegenerate simplex: "<n> <id> <label> faces ...".
std::string sset_table(const FiniteSSet& s);
/// One line per nondegenerate simplex of each mapping space of dom.
std::string functor_table(const SCat& dom, const SCat& target, const SFunctor& f);

} // namespace pastel
