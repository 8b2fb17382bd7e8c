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

#include "pivcat/intertwiner.hpp"

namespace pivcat {

// Carriers: [A,B] = Hom(A,B) with matrix units E_ij (i indexes B, j
// indexes A) at position i*dimA + j, for both the left and right hom.

/** ε : [A,B]⊗A -> B, E_ij⊗a_k ↦ δ_jk b_i. */
Matrix hom_counit(std::size_t dimA, std::size_t dimB);
/** η_Y : Y -> [A, Y⊗A], y ↦ (a ↦ y⊗a). */
Matrix hom_unit(std::size_t dimA, std::size_t dimY);
/** Θ : A⊗[A,B] -> B, a_k⊗E_ij ↦ δ_jk b_i. */
Matrix rhom_counit(std::size_t dimA, std::size_t dimB);
/** Γ_Y : Y -> [A, A⊗Y], y ↦ (a ↦ a⊗y). */
Matrix rhom_unit(std::size_t dimA, std::size_t dimY);
/** [A,g] for g : B -> B' acting on Hom(A,B). */
Matrix hom_map(std::size_t dimA, const Matrix& g);

/** ([A,B]^l, ⟨σ_A,σ_B⟩_l); throws PairMismatch. */
Intertwiner left_hom(const Intertwiner& a, const Intertwiner& b);
/** The displayed formula for ⟨σ_A,σ_B⟩_l^-1. */
Matrix left_hom_inverse(const Intertwiner& a, const Intertwiner& b);

/** ([A,B]^r, ⟨σ_A,σ_B⟩_r); throws PairMismatch. */
Intertwiner right_hom(const Intertwiner& a, const Intertwiner& b);
/** The displayed formula for ⟨σ_A,σ_B⟩_r^-1. */
Matrix right_hom_inverse(const Intertwiner& a, const Intertwiner& b);

/**
 * Second route to the right hom: the left-hom formulas evaluated in
 * (Mat(k), ⊗^op) with the pair read as (cvr, evr, cvl, evl), σ replaced
 * by σ^-1. Returns (intertwining, inverse) in the original orientation.
 */
std::pair<Matrix, Matrix> right_hom_via_opposite(const Intertwiner& a,
                                                 const Intertwiner& b);

/**
 * Validity of the inner hom objects, the displayed inverses in both
 * orders, and agreement of the two right-hom routes.
 */
Report check_homs(const Intertwiner& a, const Intertwiner& b);

/** Unit and counit of both closed structures are C(P,Q)-morphisms. */
Report check_closure_units(const Intertwiner& a, const Intertwiner& b);

}  // namespace pivcat
