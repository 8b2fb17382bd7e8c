// Copyright 2026 The pivcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "pivcat/intertwiner.hpp"

namespace pivcat {

struct DiagramArrow {
  std::size_t source = 0;
  std::size_t target = 0;
  Matrix f;  // P_source -> P_target
};

/** Family of pivotal pairs linked by pivotal morphisms. */
struct PivotalDiagram {
  std::vector<PivotalPair> pairs;
  std::vector<DiagramArrow> arrows;
};

/** One carrier X with an intertwining for every pair of a diagram. */
struct DiagramIntertwiner {
  std::size_t dimX = 1;
  std::vector<Matrix> sigmas;
};

/**
 * Arrow pivotality, each component object, and each compatibility square
 * (f⊗X)σ_s = σ_t(X⊗f). Throws IndexMismatch.
 */
Report diagram_check(const PivotalDiagram& d, const DiagramIntertwiner& obj);

/** Componentwise tensor product. */
DiagramIntertwiner tensor_diagram_objects(const PivotalDiagram& d,
                                          const DiagramIntertwiner& a,
                                          const DiagramIntertwiner& b);

nlohmann::json diagram_to_json(const PivotalDiagram& d);
PivotalDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json diagram_object_to_json(const DiagramIntertwiner& o);
DiagramIntertwiner diagram_object_from_json(const nlohmann::json& j);

}  // namespace pivcat
