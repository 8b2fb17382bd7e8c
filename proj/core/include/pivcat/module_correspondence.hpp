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

#include "pivcat/intertwiner.hpp"
#include "pivcat/presentation.hpp"
#include "pivcat/report.hpp"

namespace pivcat {

/** Matrices for each generator of H(𝔔), indexed by letter id. */
struct ModuleAction {
  std::size_t dimX = 1;
  std::vector<Matrix> act;
};

/** Word a1…ak acts as act(a1)···act(ak): the rightmost letter acts first. */
Matrix act_word(const ModuleAction& m, const Word& w);
Matrix act_poly(const ModuleAction& m, const NCPoly& p);

/** One check per relation: it must act as zero. */
Report check_relations(const ModuleAction& m, const Presentation& pres);

/**
 * act(e[i][j]) x = α(w_i⊗x⊗v_j), α = (evl⊗X)(Q⊗σ);
 * act(f[i][j]) x = β(v_i⊗x⊗w_j), β = (X⊗evr)(σ^-1⊗Q).
 * Throws InvalidObject unless obj is valid over from_matrix(n, 𝔔).
 */
ModuleAction action_from_intertwiner(const Intertwiner& obj,
                                     const Presentation& pres);

/** σ = (P⊗α)(cvl⊗X⊗P) from the e-actions; throws RelationViolated. */
Intertwiner intertwiner_from_action(const ModuleAction& m,
                                    const Presentation& pres);

/** f commutes with every generator action. */
bool is_module_map(const Matrix& f, const ModuleAction& a,
                   const ModuleAction& b);

}  // namespace pivcat
