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

#include <nlohmann/json.hpp>

#include "pivcat/matrix.hpp"
#include "pivcat/report.hpp"

namespace pivcat {

/**
 * An object P of Mat(k) together with Q serving as both its left and right
 * dual. Tensor factors are indexed a*dimB + b.
 *
 *   cvl : 1 -> P⊗Q   evl : Q⊗P -> 1
 *   cvr : 1 -> Q⊗P   evr : P⊗Q -> 1
 */
struct PivotalPair {
  std::size_t dimP = 1;
  std::size_t dimQ = 1;
  Matrix cvl = Matrix::identity(1);
  Matrix evl = Matrix::identity(1);
  Matrix cvr = Matrix::identity(1);
  Matrix evr = Matrix::identity(1);

  /** P = Q = 1 with every structure map equal to [[1]]. */
  static PivotalPair unit() { return PivotalPair{}; }

  friend bool operator==(const PivotalPair& a, const PivotalPair& b) {
    return a.dimP == b.dimP && a.dimQ == b.dimQ && a.cvl == b.cvl &&
           a.evl == b.evl && a.cvr == b.cvr && a.evr == b.evr;
  }
  friend bool operator!=(const PivotalPair& a, const PivotalPair& b) {
    return !(a == b);
  }
};

/**
 * Standard left duality on k^n with the right duality twisted by Q:
 * cvr(1) = sum q_ij w_i⊗v_j and evr(v_i⊗w_j) = p_ij where p = Q^{-1}.
 */
PivotalPair from_matrix(std::size_t n, const Matrix& q);

/** Completes a left duality to a pivotal pair using the symmetric flip. */
PivotalPair from_braided(const Matrix& cvl, const Matrix& evl);

/** The four snake identities, each with its residual on failure. */
Report check_pair(const PivotalPair& pp);

/** Q-matrix of a pair in standard left form, read off from cvr. */
Matrix twist_matrix(const PivotalPair& pp);

/** (evl2⊗Q1)(Q2⊗f⊗Q1)(Q2⊗cvl1) : Q2 -> Q1 for f : P1 -> P2. */
Matrix left_transpose(const Matrix& f, const PivotalPair& pp1,
                      const PivotalPair& pp2);
/** (Q1⊗evr2)(Q1⊗f⊗Q2)(cvr1⊗Q2) : Q2 -> Q1 for f : P1 -> P2. */
Matrix right_transpose(const Matrix& f, const PivotalPair& pp1,
                       const PivotalPair& pp2);
bool is_pivotal_morphism(const Matrix& f, const PivotalPair& pp1,
                         const PivotalPair& pp2);

/** (P1⊗P2, Q2⊗Q1) with nested duality maps. */
PivotalPair tensor_pairs(const PivotalPair& a, const PivotalPair& b);
/** (Q, P) with the left and right structure maps exchanged. */
PivotalPair dual_pair(const PivotalPair& pp);

/**
 * Antisymmetrizer k^n⊗k^n -> Λ²k^n onto the basis e_i∧e_j, i<j, ordered
 * lexicographically.
 */
Matrix antisymmetrizer(std::size_t n);

nlohmann::json pair_to_json(const PivotalPair& pp);
/** Reads a pair; checks shapes but not the snake identities. */
PivotalPair pair_from_json(const nlohmann::json& j);

}  // namespace pivcat
