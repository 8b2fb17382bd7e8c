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


#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pivcat/augmentation.hpp"
#include "pivcat/errors.hpp"
#include "pivcat/linalg.hpp"
#include "pivcat/presentation.hpp"
#include "pivcat/random.hpp"
#include "pivcat/truncated_monad.hpp"

namespace pivcat {
namespace {

PivotalPair identity_pair(std::size_t n) {
  return from_matrix(n, Matrix::identity(n));
}

TEST(SignWord, ParseAndPrint) {
  EXPECT_EQ(sign_word_string(parse_sign_word("+-+")), "+-+");
  EXPECT_EQ(sign_word_string(parse_sign_word("0")), "0");
  EXPECT_TRUE(parse_sign_word("").empty());
  EXPECT_THROW(parse_sign_word("+x"), InputError);
}

TEST(SignWord, EnumerationOrder) {
  std::vector<std::string> got;
  for (const SignWord& w : sign_words(2)) got.push_back(sign_word_string(w));
  EXPECT_EQ(got, (std::vector<std::string>{"0", "+", "-", "++", "+-", "-+", "--"}));
}

TEST(FunctorDims, NestedLegs) {
  PivotalPair pp = identity_pair(2);
  SignWord w = parse_sign_word("+-+");
  EXPECT_EQ(left_dim(pp, w), 8u);
  EXPECT_EQ(right_dim(pp, w), 8u);
  EXPECT_EQ(functor_dim(pp, w, 3), 192u);
  Matrix g = Matrix::from_rows({{1, 2}});
  Matrix fg = functor_map(pp, parse_sign_word("+"), g);
  EXPECT_EQ(fg, kron_all({Matrix::identity(2), g, Matrix::identity(2)}));
}

TEST(Truncate, DegreeZeroIsTheObject) {
  for (std::size_t x : {1, 2, 3}) {
    TruncatedT t = truncate(identity_pair(2), x, 0);
    EXPECT_EQ(t.dim(), x);
    EXPECT_TRUE(unit_map(t).is_identity());
  }
}

TEST(Truncate, OneGeneratorDimensions) {
  EXPECT_EQ(truncate(identity_pair(1), 1, 2).dim(), 5u);
  EXPECT_EQ(truncate(identity_pair(1), 1, 3).dim(), 7u);
}

TEST(Truncate, RankPlusQuotientIsTotal) {
  TruncatedT t = truncate(from_matrix(1, Matrix::scalar(Scalar(3))), 2, 3);
  EXPECT_EQ(t.dim() + t.relation_rank(), t.total_dim);
  EXPECT_EQ(t.relation_rank(), rank(t.relation_basis));
  EXPECT_TRUE((t.projection * t.section).is_identity());
  EXPECT_TRUE((t.projection * t.relation_basis).is_zero());
}

TEST(Truncate, BlockOfBeyondBoundThrows) {
  TruncatedT t = truncate(identity_pair(1), 1, 2);
  EXPECT_EQ(t.block_of(parse_sign_word("0")), 0u);
  EXPECT_EQ(t.block_of(parse_sign_word("-")), 2u);
  EXPECT_EQ(t.block_of(parse_sign_word("+-")), 4u);
  EXPECT_THROW(t.block_of(parse_sign_word("+++")), DegreeExceeded);
}

TEST(Truncate, MatchesIndependentFiltration) {
  for (std::size_t d = 0; d <= 4; ++d) {
    for (long q : {1, 3}) {
      Matrix qm = Matrix::scalar(Scalar(q));
      std::size_t want = oracle::filtration_dim(oracle::to_q(qm), d);
      EXPECT_EQ(want, 2 * d + 1);
      for (std::size_t x : {1, 2}) {
        EXPECT_EQ(truncate(from_matrix(1, qm), x, d).dim(), x * want);
      }
    }
  }
  for (std::size_t d = 0; d <= 2; ++d) {
    std::size_t want = oracle::filtration_dim(oracle::identity(2), d);
    EXPECT_EQ(truncate(identity_pair(2), 1, d).dim(), want);
  }
}

TEST(Truncate, JsonSummary) {
  auto j = truncate(identity_pair(1), 1, 2).to_json();
  EXPECT_EQ(j["quotient_dim"], 5);
  EXPECT_EQ(j["blocks"].size(), 7u);
  EXPECT_EQ(j["degree"], 2);
}

TEST(HopfComparison, CountsAgree) {
  for (std::size_t d = 0; d <= 3; ++d) {
    Presentation pres = build_presentation(1, Matrix::scalar(Scalar(2)));
    EXPECT_EQ(normal_form_count(pres, d), 2 * d + 1);
    EXPECT_EQ(filtration_dim_oracle(pres, d), 2 * d + 1);
  }
  Presentation p2 = build_presentation(2, Matrix::identity(2));
  for (std::size_t d = 0; d <= 2; ++d) {
    std::size_t want = oracle::filtration_dim(oracle::identity(2), d);
    EXPECT_EQ(filtration_dim_oracle(p2, d), want);
    EXPECT_EQ(normal_form_count(p2, d), want);
    EXPECT_TRUE(compare_with_hopf(truncate(identity_pair(2), 1, d), p2).passed());
  }
}

TEST(HopfComparison, PairMustMatch) {
  Presentation pres = build_presentation(1, Matrix::scalar(Scalar(2)));
  EXPECT_FALSE(compare_with_hopf(truncate(identity_pair(1), 1, 1), pres).passed());
}

TEST(StructureMaps, UnitThenCounitIsIdentity) {
  for (std::size_t n : {1, 2}) {
    TruncatedT t = truncate(identity_pair(n), 1, 2);
    MonadMaps m = structure_maps(t);
    EXPECT_TRUE(m.well_defined.passed()) << m.well_defined.to_json().dump(2);
    EXPECT_TRUE((m.counit * m.nu).is_identity());
  }
}

TEST(StructureMaps, MultiplicationConcatenates) {
  PivotalPair pp = from_matrix(1, Matrix::scalar(Scalar(2)));
  TruncatedT inner = truncate(pp, 1, 1);
  TruncatedT outer = truncate(pp, inner.dim(), 1);
  TruncatedT target = truncate(pp, 1, 2);
  LiftedMap mu = multiplication(outer, inner, target);
  EXPECT_TRUE(kills_relations(mu, outer));
  SignWord plus = parse_sign_word("+");
  Matrix slot = outer.psi(plus) * functor_map(pp, plus, inner.psi(plus));
  EXPECT_EQ(mu.map * slot, target.psi(parse_sign_word("++")));
}

TEST(StructureMaps, MultiplicationDegreeGuard) {
  PivotalPair pp = identity_pair(1);
  TruncatedT inner = truncate(pp, 1, 2);
  TruncatedT outer = truncate(pp, inner.dim(), 1);
  EXPECT_THROW(multiplication(outer, inner, truncate(pp, 1, 2)), DegreeExceeded);
}

TEST(StructureMaps, ComultiplicationCounitLaw) {
  for (std::size_t n : {1, 2}) {
    TruncatedT t = truncate(identity_pair(n), 1, 2);
    LiftedMap t2 = comultiplication(t, t, t);
    LiftedMap t0 = counit_map(t);
    EXPECT_TRUE(kills_relations(t2, t));
    Matrix id = Matrix::identity(t.dim());
    EXPECT_TRUE((kron(t0.map, id) * t2.map).is_identity());
    EXPECT_TRUE((kron(id, t0.map) * t2.map).is_identity());
  }
}

TEST(StructureMaps, CounitNeedsUnitObject) {
  EXPECT_THROW(counit_map(truncate(identity_pair(1), 2, 1)), Error);
}

TEST(WordCoevaluation, SingleLetters) {
  PivotalPair pp = from_matrix(2, Matrix::from_rows({{1, 1}, {0, 1}}));
  EXPECT_EQ(word_coevaluation(pp, parse_sign_word("+")), pp.cvl);
  EXPECT_EQ(word_coevaluation(pp, parse_sign_word("-")), pp.cvr);
  EXPECT_EQ(word_coevaluation(pp, {}), Matrix::identity(1));
}

TEST(CounitAction, ScalarWords) {
  Scalar s(3);
  PivotalPair pp = identity_pair(1);
  Intertwiner obj{1, Matrix::scalar(s), pp};
  TruncatedT t = truncate(pp, 1, 2);
  LiftedMap theta = counit_action(t, obj);
  EXPECT_TRUE(kills_relations(theta, t));
  EXPECT_TRUE((theta.map * unit_map(t)).is_identity());
  auto on = [&](const char* w) {
    return theta.on_words * t.inclusion(parse_sign_word(w));
  };
  EXPECT_EQ(on("+"), Matrix::scalar(s));
  EXPECT_EQ(on("-"), Matrix::scalar(s.inverse()));
  EXPECT_EQ(on("++"), Matrix::scalar(s * s));
  EXPECT_EQ(on("--"), Matrix::scalar((s * s).inverse()));
  EXPECT_EQ(on("+-"), Matrix::identity(1));
}

TEST(CounitAction, RandomObjects) {
  Rng rng(61);
  for (int i = 0; i < 10; ++i) {
    std::size_t n = 1 + i % 2;
    PivotalPair pp = from_matrix(n, random_invertible(rng, n, 3, true));
    Intertwiner obj = random_object(rng, pp, 1 + i % 2);
    TruncatedT t = truncate(pp, obj.dimX, 2);
    LiftedMap theta = counit_action(t, obj);
    EXPECT_TRUE(kills_relations(theta, t));
    EXPECT_TRUE((theta.map * unit_map(t)).is_identity());
  }
}

TEST(CounitAction, RejectsForeignObject) {
  TruncatedT t = truncate(identity_pair(1), 2, 1);
  Intertwiner obj{1, Matrix::scalar(Scalar(2)), identity_pair(1)};
  EXPECT_THROW(counit_action(t, obj), InvalidObject);
}

TEST(Augmentation, FlipIsCentral) {
  for (std::size_t n : {1, 2, 3}) {
    PivotalPair pp = from_matrix(n, Matrix::identity(n));
    EXPECT_TRUE(centrality_check(pp, CentralCandidate::flip(pp)).passed());
  }
}

TEST(Augmentation, PassesAtDegreeTwo) {
  for (std::size_t n : {1, 2}) {
    TruncatedT t = truncate(identity_pair(n), 1, 2);
    Report r = augmentation_check(t);
    EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
  }
  TruncatedT t = truncate(identity_pair(1), 2, 2);
  EXPECT_TRUE(augmentation_check(t).passed());
}

TEST(Augmentation, ScaledCandidateIsNotCentral) {
  PivotalPair pp = identity_pair(1);
  CentralCandidate c = CentralCandidate::flip(pp);
  c.twist_p = c.twist_p * Scalar(2);
  EXPECT_FALSE(centrality_check(pp, c).passed());
  EXPECT_THROW(augmentation_check(truncate(pp, 1, 1), c), NotCentral);
}

}  // namespace
}  // namespace pivcat
