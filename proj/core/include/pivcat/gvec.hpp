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
#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "pivcat/finite_group.hpp"
#include "pivcat/graded.hpp"
#include "pivcat/pivotal_pair.hpp"
#include "pivcat/report.hpp"

namespace pivcat {

/** P = V_g, Q = V_{g⁻¹}; all four duality maps are the scalar 1. */
struct GradedPair {
  Element g = 0;
  Element g_inv = 0;
  GradedSpace p, q;
  GradedMatrix cvl, evl, cvr, evr;
  /** The same data with grades forgotten. */
  PivotalPair pair;
};

/** Throws ElementNotInGroup. */
GradedPair graded_pair(const FiniteGroup& G, Element g);

/** check_pair on the ungraded data plus the snakes evaluated in vec_G. */
Report check_graded_pair(const FiniteGroup& G, const GradedPair& gp);

/** ⊕ V_{h}^{m_h}, basis ordered by grade index. */
struct GradedObject {
  std::map<Element, std::size_t> multiplicity;

  std::size_t dim() const;
  GradedSpace space() const;
  nlohmann::json to_json(const FiniteGroup& G) const;
};

/** Grades h·g of X⊗P and g·h of P⊗X, basis for basis. */
GradedSpace intertwining_source(const FiniteGroup& G, Element g,
                                const GradedObject& obj);
GradedSpace intertwining_target(const FiniteGroup& G, Element g,
                                const GradedObject& obj);

/** Splits a dense σ; throws GradeMismatch on an off-grade entry. */
GradedMatrix graded_sigma(const FiniteGroup& G, Element g,
                          const GradedObject& obj, const Matrix& sigma);

/**
 * Valid iff every grade block of σ is square and invertible; the induced
 * Q-intertwinings are then checked through check_object. Throws
 * GradeMismatch when σ is graded over different spaces.
 */
Report validate_graded_intertwiner(const FiniteGroup& G, Element g,
                                   const GradedObject& obj,
                                   const GradedMatrix& sigma);

/** Support closed under h ↦ g h g⁻¹ with constant multiplicity on orbits. */
bool orbit_support_check(const FiniteGroup& G, Element g,
                         const GradedObject& obj);

/** Whether some graded isomorphism X⊗P → P⊗X exists at all. */
bool admits_graded_iso(const FiniteGroup& G, Element g,
                       const GradedObject& obj);

/** σ sending the basis vector of grade h to the one of grade g⁻¹hg. */
GradedMatrix orbit_permutation(const FiniteGroup& G, Element g,
                               const GradedObject& obj);

struct EnumeratedSupport {
  GradedObject object;
  GradedMatrix sigma;
  bool valid = false;
  bool orbit_closed = false;
};

/**
 * Every nonzero combination of conjugation orbits with total dimension at
 * most max_dim, each with its orbit permutation σ validated. Ordered
 * lexicographically by the sorted list of basis grades.
 */
std::vector<EnumeratedSupport> enumerate_supports(const FiniteGroup& G,
                                                  Element g,
                                                  std::size_t max_dim);

}  // namespace pivcat
