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

#include "pivcat/intertwiner.hpp"
#include "pivcat/matrix.hpp"
#include "pivcat/pivotal_pair.hpp"
#include "pivcat/presentation.hpp"
#include "pivcat/report.hpp"

namespace pivcat {

enum class Sign : char { kPlus = '+', kMinus = '-' };

/**
 * A word i1…ik over {+,-}. F_w(Y) nests as A_{i1}⊗…⊗A_{ik}⊗Y⊗B_{ik}⊗…⊗B_{i1}
 * with (A,B) = (Q,P) for + and (P,Q) for -.
 */
using SignWord = std::vector<Sign>;

std::string sign_word_string(const SignWord& w);
/** Accepts strings over "+-"; "0" and "" denote the empty word. */
SignWord parse_sign_word(const std::string& s);
/** All words of length at most max_len, by length then with + before -. */
std::vector<SignWord> sign_words(std::size_t max_len);
SignWord concat(const SignWord& a, const SignWord& b);

/** dim A_w, the left leg of F_w. */
std::size_t left_dim(const PivotalPair& pair, const SignWord& w);
/** dim B_w, the right leg of F_w. */
std::size_t right_dim(const PivotalPair& pair, const SignWord& w);
inline std::size_t functor_dim(const PivotalPair& pair, const SignWord& w,
                               std::size_t dimY) {
  return left_dim(pair, w) * dimY * right_dim(pair, w);
}
/** F_w(g) = A_w ⊗ g ⊗ B_w. */
Matrix functor_map(const PivotalPair& pair, const SignWord& w,
                   const Matrix& g);

/**
 * The length-d truncation of the free monad at an object X of dimension
 * dimX: the direct sum of F_w(X) for |w| ≤ d modulo the parallel-pair
 * relations, realised as a complement of the relation span.
 */
struct TruncatedT {
  PivotalPair pair;
  std::size_t dimX = 1;
  std::size_t bound = 0;
  std::vector<SignWord> words;
  std::vector<std::size_t> offsets;  // start of each block
  std::vector<std::size_t> dims;     // dim F_w(X) per block
  std::size_t total_dim = 0;
  std::size_t relation_instances = 0;
  std::size_t relation_vectors = 0;
  /** Columns span the relation subspace; one column per pivot. */
  Matrix relation_basis;
  /** Coordinates of the direct sum kept as the basis of the quotient. */
  std::vector<std::size_t> kept;
  Matrix projection;  // dim() × total_dim
  Matrix section;     // total_dim × dim(), inclusion of the kept coordinates

  std::size_t dim() const { return kept.size(); }
  std::size_t relation_rank() const { return relation_basis.cols(); }
  /** Throws DegreeExceeded when w is longer than the bound. */
  std::size_t block_of(const SignWord& w) const;
  /** F_w(X) → ⊕ F_v(X). */
  Matrix inclusion(const SignWord& w) const;
  /** ψ_w: F_w(X) → T_{≤d}(X). */
  Matrix psi(const SignWord& w) const;
  nlohmann::json to_json() const;
};

TruncatedT truncate(const PivotalPair& pair, std::size_t dimX, std::size_t d);

/**
 * A map out of T_{≤d}(X) given on the direct sum of all F_w(X). It is
 * well defined on the quotient exactly when on_words kills the relation
 * span; map is its restriction along the section.
 */
struct LiftedMap {
  Matrix on_words;
  Matrix map;
};

bool kills_relations(const LiftedMap& m, const TruncatedT& t);

/** ν = ψ_∅: X → T_{≤d}(X). */
Matrix unit_map(const TruncatedT& t);

/** T(g): T_{≤d}(Y) → T_{≤d}(Z) for g: Y → Z. */
LiftedMap functor_on(const TruncatedT& src, const TruncatedT& dst,
                     const Matrix& g);

/**
 * μ: T_{≤a}(T_{≤b}(X)) → T_{≤d}(X), where outer has dimX = inner.dim(),
 * a = outer.bound, b = inner.bound and d = target.bound ≥ a + b. Each
 * slot F_v(F_w(X)) is sent to the class of F_{vw}(X).
 */
LiftedMap multiplication(const TruncatedT& outer, const TruncatedT& inner,
                         const TruncatedT& target);

/**
 * T₂: T_{≤d}(X⊗Y) → T_{≤d}(X)⊗T_{≤d}(Y), inserting cvl_w between the
 * factors of each slot.
 */
LiftedMap comultiplication(const TruncatedT& txy, const TruncatedT& tx,
                           const TruncatedT& ty);

/** T₀: T_{≤d}(𝟙) → 𝟙 from the iterated evaluations; needs dimX = 1. */
LiftedMap counit_map(const TruncatedT& t1);

/** cvl_w: 𝟙 → B_w ⊗ A_w, the coevaluation inserted by T₂. */
Matrix word_coevaluation(const PivotalPair& pair, const SignWord& w);

/**
 * Maps that act on a single object X at bound d, plus a report of
 * which of them kill the relation span.
 */
struct MonadMaps {
  Matrix nu;
  Matrix counit;    // T₀ on T_{≤d}(𝟙)
  Matrix comult;    // T₂ on T_{≤d}(X⊗X)
  struct Slot {
    std::size_t outer;
    std::size_t inner;
    Matrix mu;
  };
  std::vector<Slot> mu;  // every a + b ≤ d with a, b ≥ 1
  Report well_defined{"structure maps on the quotient"};
};

MonadMaps structure_maps(const TruncatedT& t);

/** θ: T_{≤d}(X) → X from iterated α_σ and β_σ; throws InvalidObject. */
LiftedMap counit_action(const TruncatedT& t, const Intertwiner& obj);

/** dim of the words of length ≤ d in H(𝔔), by normal forms. */
std::size_t normal_form_count(const Presentation& pres, std::size_t d);
/** Same quantity by plain linear algebra over the free algebra. */
std::size_t filtration_dim_oracle(const Presentation& pres, std::size_t d);

Report compare_with_hopf(const TruncatedT& t, const Presentation& pres);

}  // namespace pivcat
