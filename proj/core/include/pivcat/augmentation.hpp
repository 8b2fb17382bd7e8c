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

#include "pivcat/matrix.hpp"
#include "pivcat/report.hpp"
#include "pivcat/truncated_monad.hpp"

namespace pivcat {

/**
 * Candidate half-braidings λ_Y = flip_{P,Y}(L⊗Y) and χ_Y = flip_{Q,Y}(M⊗Y).
 * The plain flip of Mat(𝕜) is L = M = I.
 */
struct CentralCandidate {
  Matrix twist_p;  // L on P
  Matrix twist_q;  // M on Q
  static CentralCandidate flip(const PivotalPair& pair);
};

Matrix half_braiding_p(const CentralCandidate& c, std::size_t dimY);
Matrix half_braiding_q(const CentralCandidate& c, std::size_t dimY);

/**
 * Checks that λ and χ are half-braidings on probe objects of dimension 1
 * and 2 and that cvl, evl, cvr, evr commute with them.
 */
Report centrality_check(const PivotalPair& pair, const CentralCandidate& c);

/** ξ_{≤d} at X from ξ_+ = (X⊗evl)(χ⊗P), ξ_- = (X⊗evr)(λ⊗Q). */
LiftedMap augmentation_map(const TruncatedT& t, const CentralCandidate& c);

/**
 * Runs the bimonad-morphism identities for ξ: ξν = id, ξμ = ξT(ξ) on
 * every slot a + b ≤ d, (ξ⊗ξ)T₂ = ξ and ξ at 𝟙 equal to T₀. Throws
 * NotCentral when the candidate fails centrality_check.
 */
Report augmentation_check(const TruncatedT& t, const CentralCandidate& c);
Report augmentation_check(const TruncatedT& t);

}  // namespace pivcat
