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

namespace pastel::examples {

// Three 2-cells xi: c => g w, phi: b g => f v, psi: a f => u between the
// paths a b c and u v w from A to Z.
inline const char* kOverview = R"(pastel-format 1
graph overview
vertex A: a+, u+
vertex B: b+, f+, a-
vertex C: c+, g+, b-
vertex X: u-, f-, v+
vertex Y: v-, g-, w+
vertex Z: w-, c-
edge a: A -> B
edge b: B -> C
edge c: C -> Z
edge u: A -> X
edge f: B -> X
edge v: X -> Y
edge g: C -> Y
edge w: Y -> Z
exterior: u+
face psi: a+
face phi: b+
face xi: c+
dom: a, b, c
)";

} // namespace pastel::examples
