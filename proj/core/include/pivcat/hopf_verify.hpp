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

#include "pivcat/presentation.hpp"
#include "pivcat/report.hpp"
#include "pivcat/rewriting.hpp"

namespace pivcat {

/** Completion degree used by verify_hopf for a word bound d. */
std::size_t hopf_completion_degree(std::size_t d);

/**
 * Checks on all normal-form words of degree <= d-1 and on all relations:
 * (a) Δ, ε, S kill the relations; (b) coassociativity and counit laws;
 * (c) Δ(xy) = Δ(x)Δ(y) in H⊗H; (d) both antipode laws; (e) S² = id when
 * 𝔔 is the identity. Products that leave degree d are reduced with a
 * system completed to hopf_completion_degree(d).
 */
Report verify_hopf(const Presentation& pres, std::size_t d);

/** Same, reusing a system completed to at least hopf_completion_degree(d). */
Report verify_hopf(const Presentation& pres, const RewriteSystem& rs,
                   std::size_t d);

}  // namespace pivcat
