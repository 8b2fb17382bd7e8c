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
#include <utility>

#include <nlohmann/json.hpp>

#include "pivcat/matrix.hpp"
#include "pivcat/pivotal_pair.hpp"
#include "pivcat/report.hpp"

namespace pivcat {

/** Object (X, σ) of C(P,Q) with σ : X⊗P -> P⊗X. */
struct Intertwiner {
  std::size_t dimX = 1;
  Matrix sigma = Matrix::identity(1);
  PivotalPair pair;

  std::size_t dimP() const { return pair.dimP; }
  std::size_t dimQ() const { return pair.dimQ; }
};

/** The monoidal unit (1, id_P). */
Intertwiner unit_object(const PivotalPair& pair);

/** Throws ShapeMismatch unless σ is (dimX·dimP) square. */
void require_sigma_shape(std::size_t dimX, const Matrix& sigma,
                         const PivotalPair& pair);

/**
 * Induced Q-intertwinings:
 *   ovσ    = (evl⊗X⊗Q)(Q⊗σ⊗Q)(Q⊗X⊗cvl)        : Q⊗X -> X⊗Q
 *   ovσ^-1 = (Q⊗X⊗evr)(Q⊗σ^-1⊗Q)(cvr⊗X⊗Q)     : X⊗Q -> Q⊗X
 * Throws SingularSigma.
 */
std::pair<Matrix, Matrix> induced_q(const Intertwiner& obj);

Report check_object(std::size_t dimX, const Matrix& sigma,
                    const PivotalPair& pair);
inline Report check_object(const Intertwiner& obj) {
  return check_object(obj.dimX, obj.sigma, obj.pair);
}

/** σ_b (f⊗P) == (P⊗f) σ_a for f : X_a -> X_b. */
bool is_morphism(const Matrix& f, const Intertwiner& a, const Intertwiner& b);

/** Basis (one matrix per element) of the morphism space a -> b. */
std::vector<Matrix> morphism_basis(const Intertwiner& a, const Intertwiner& b);

/** (X⊗Y, (σ_a⊗Y)(X⊗σ_b)); throws PairMismatch. */
Intertwiner tensor_objects(const Intertwiner& a, const Intertwiner& b);

/** Direct sum with the block intertwining; throws PairMismatch. */
Intertwiner direct_sum_objects(const Intertwiner& a, const Intertwiner& b);

/** Transports σ along an invertible t : X -> X': (P⊗t)σ(t^-1⊗P). */
Intertwiner conjugate_object(const Intertwiner& a, const Matrix& t);

/**
 * Left and right duals in C(P,Q) for the standard duality of Mat(k):
 * evl_X = Σ x_i*⊗x_i, cvl_X = Σ x_i⊗x_i*, and likewise on the right.
 */
struct DualObjects {
  Intertwiner left;              // (ᵛX, σ_ᵛX)
  Matrix left_inverse_display;   // σ_ᵛX^-1 as displayed
  Intertwiner right;             // (Xᵛ, σ_Xᵛ)
  Matrix right_inverse_display;  // σ_Xᵛ^-1 as displayed
};

DualObjects dual_objects(const Intertwiner& a);

/** Full verification of the dual objects and their duality maps. */
Report check_duals(const Intertwiner& a);

/** ϱ_P computed from the pair as (evl⊗P)(Ψ_{P,Q}⊗P)(P⊗cvr). */
Matrix pivot_map(const PivotalPair& pp);

/**
 * Checks that ϱ_X = id is a morphism from a to its left and right double
 * duals. Throws HypothesisFailed unless ϱ_P is the identity.
 */
Report lift_pivotal(const Intertwiner& a);

nlohmann::json object_to_json(const Intertwiner& obj);
Intertwiner object_from_json(const nlohmann::json& j);

}  // namespace pivcat
