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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pivcat/matrix.hpp"
#include "pivcat/ncpoly.hpp"

namespace pivcat {

/**
 * Presentation of the matrix Hopf algebra H(𝔔) on 2n² generators.
 * Letter ids: f[i][j] -> i*n+j, e[i][j] -> n²+i*n+j (0-based indices);
 * display names are 1-based, e.g. "f[1][2]". In a word the leftmost letter
 * acts last on a module.
 */
struct Presentation {
  std::size_t n = 1;
  Matrix q;      // 𝔔
  Matrix p;      // 𝔔^-1
  std::vector<std::string> names;
  /** 4n² relations, families in the order listed in build_presentation. */
  std::vector<NCPoly> relations;
  std::vector<TensorPoly> delta;  // per letter
  std::vector<Scalar> counit;     // per letter
  std::vector<NCPoly> antipode;   // per letter

  std::size_t alphabet_size() const { return 2 * n * n; }
  int f(std::size_t i, std::size_t j) const {
    return static_cast<int>(i * n + j);
  }
  int e(std::size_t i, std::size_t j) const {
    return static_cast<int>(n * n + i * n + j);
  }
  bool twist_is_identity() const { return q.is_identity(); }

  /** Multiplicative extension of Δ to a word. */
  TensorPoly delta_of(const Word& w) const;
  TensorPoly delta_of(const NCPoly& p) const;
  /** Multiplicative extension of ε. */
  Scalar counit_of(const Word& w) const;
  Scalar counit_of(const NCPoly& p) const;
  /** Anti-multiplicative extension of S. */
  NCPoly antipode_of(const Word& w) const;
  NCPoly antipode_of(const NCPoly& p) const;
};

/**
 * Relations, for 1 <= i,k <= n, with p = 𝔔^-1:
 *   Σ_j f[j][k] e[j][i] = p_ik          Σ_j f[i][j] e[k][j] = p_ik
 *   Σ_{j,l} q_jl e[j][i] f[l][k] = δ_ik  Σ_{j,l} q_lj e[i][j] f[k][l] = δ_ik
 * Coalgebra: Δe_ik = Σ_j e_ij⊗e_jk, Δf_ik = Σ_{j,l} q_jl f_ij⊗f_lk,
 * εe_ik = δ_ik, εf_ik = p_ik. Antipode: S e_ik = Σ_l q_li f_kl,
 * S f_ik = Σ_l p_il e_kl. Throws SingularMatrix.
 */
Presentation build_presentation(std::size_t n, const Matrix& q);

nlohmann::json presentation_to_json(const Presentation& pres);

}  // namespace pivcat
