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
#include "pivcat/errors.hpp"
#include "pivcat/linalg.hpp"
#include "pivcat/pivotal_pair.hpp"
#include "pivcat/random.hpp"

namespace pivcat {
namespace {

PivotalPair scalar_pair(const Scalar& q) {
  return from_matrix(1, Matrix::scalar(q));
}

oracle::Tables tables(const PivotalPair& pp) {
  return oracle::tables_of(pp.dimP, pp.cvl, pp.evl, pp.cvr, pp.evr);
}

TEST(FromMatrix, ScalarTwist) {
  PivotalPair pp = scalar_pair(Scalar(5));
  EXPECT_EQ(pp.cvr, Matrix::scalar(Scalar(5)));
  EXPECT_EQ(pp.evr, Matrix::scalar(Scalar(1, 5)));
  EXPECT_TRUE(check_pair(pp).passed());
}

TEST(FromMatrix, SingularTwistThrows) {
  EXPECT_THROW(from_matrix(2, Matrix::from_rows({{1, 2}, {2, 4}})),
               SingularMatrix);
}

TEST(FromMatrix, EntriesMatchDefinition) {
  Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    std::size_t n = 1 + i % 4;
    Matrix q = random_invertible(rng, n, 3, true);
    PivotalPair pp = from_matrix(n, q);
    oracle::Tables got = tables(pp);
    oracle::Tables want = oracle::twisted_tables(oracle::to_q(q));
    EXPECT_EQ(got.cvl, want.cvl);
    EXPECT_EQ(got.evl, want.evl);
    EXPECT_EQ(got.cvr, want.cvr);
    EXPECT_EQ(got.evr, want.evr);
    EXPECT_EQ(twist_matrix(pp), q);
  }
}

TEST(FromMatrix, SnakesAgreeWithIndexSums) {
  Rng rng(22);
  for (int i = 0; i < 30; ++i) {
    std::size_t n = 1 + i % 4;
    PivotalPair pp = from_matrix(n, random_invertible(rng, n, 3, true));
    EXPECT_TRUE(check_pair(pp).passed());
    for (const oracle::QMat& s : oracle::snake_composites(tables(pp))) {
      EXPECT_TRUE(oracle::is_identity(s));
    }
  }
}

TEST(CheckPair, DoubledEvaluationBreaksRightSnakes) {
  PivotalPair pp = from_matrix(2, Matrix::from_rows({{1, 1}, {0, 2}}));
  pp.evr = pp.evr * Scalar(2);
  Report r = check_pair(pp);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failure_count(), 2u);
  for (const Check& c : r.checks()) {
    if (!c.passed) {
      EXPECT_TRUE(c.has_residual);
    }
  }
}

TEST(Transpose, ScalarFormulas) {
  Scalar q1(3), q2(1, 2), s(7);
  Matrix f = Matrix::scalar(s);
  EXPECT_EQ(right_transpose(f, scalar_pair(q1), scalar_pair(q2)),
            Matrix::scalar(q1 * s / q2));
  EXPECT_EQ(left_transpose(f, scalar_pair(q1), scalar_pair(q2)), f);
}

TEST(Transpose, AgreesWithIndexSums) {
  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    std::size_t n1 = 1 + i % 3, n2 = 1 + (i / 3) % 3;
    PivotalPair a = from_matrix(n1, random_invertible(rng, n1, 3, true));
    PivotalPair b = from_matrix(n2, random_invertible(rng, n2, 3, true));
    Matrix f = random_matrix(rng, n2, n1, 4, true);
    oracle::QMat fq = oracle::to_q(f);
    EXPECT_EQ(oracle::to_q(left_transpose(f, a, b)),
              oracle::left_transpose(fq, tables(a), tables(b)));
    EXPECT_EQ(oracle::to_q(right_transpose(f, a, b)),
              oracle::right_transpose(fq, tables(a), tables(b)));
  }
}

TEST(Transpose, LeftIsContravariant) {
  Rng rng(24);
  for (int i = 0; i < 10; ++i) {
    PivotalPair a = from_matrix(2, random_invertible(rng, 2, 3, true));
    PivotalPair b = from_matrix(3, random_invertible(rng, 3, 3, true));
    PivotalPair c = from_matrix(2, random_invertible(rng, 2, 3, true));
    Matrix f = random_matrix(rng, 3, 2, 3, true);
    Matrix g = random_matrix(rng, 2, 3, 3, true);
    EXPECT_EQ(left_transpose(g * f, a, c),
              left_transpose(f, a, b) * left_transpose(g, b, c));
    EXPECT_EQ(right_transpose(g * f, a, c),
              right_transpose(f, a, b) * right_transpose(g, b, c));
  }
}

TEST(Pivotal, IdentityIffTwistsAgree) {
  EXPECT_TRUE(is_pivotal_morphism(Matrix::identity(1), scalar_pair(3),
                                  scalar_pair(3)));
  EXPECT_FALSE(is_pivotal_morphism(Matrix::identity(1), scalar_pair(3),
                                   scalar_pair(2)));
}

TEST(Pivotal, ClosedUnderCompositionAndTensor) {
  // Maps commuting with a diagonal twist: q fᵀ q⁻¹ = fᵀ.
  Matrix q = Matrix::from_rows({{1, 0}, {0, 2}});
  PivotalPair pp = from_matrix(2, q);
  Matrix f = Matrix::from_rows({{3, 0}, {0, -1}});
  Matrix g = Matrix::from_rows({{Scalar(1, 2), 0}, {0, 5}});
  ASSERT_TRUE(is_pivotal_morphism(f, pp, pp));
  ASSERT_TRUE(is_pivotal_morphism(g, pp, pp));
  EXPECT_TRUE(is_pivotal_morphism(g * f, pp, pp));
  EXPECT_TRUE(is_pivotal_morphism(kron(f, g), tensor_pairs(pp, pp),
                                  tensor_pairs(pp, pp)));
  EXPECT_FALSE(is_pivotal_morphism(Matrix::from_rows({{0, 1}, {1, 0}}), pp, pp));
}

TEST(Pivotal, StandardTransposeIsMatrixTranspose) {
  PivotalPair std3 = from_matrix(3, Matrix::identity(3));
  Rng rng(25);
  for (int i = 0; i < 10; ++i) {
    Matrix f = random_matrix(rng, 3, 3, 5, true);
    EXPECT_EQ(left_transpose(f, std3, std3), f.transpose());
    EXPECT_EQ(right_transpose(f, std3, std3), f.transpose());
    EXPECT_TRUE(is_pivotal_morphism(f, std3, std3));
  }
}

TEST(Pivotal, Antisymmetrizer) {
  for (std::size_t n : {2, 3, 4}) {
    PivotalPair s = from_matrix(n, Matrix::identity(n));
    std::size_t m = n * (n - 1) / 2;
    Matrix pi = antisymmetrizer(n);
    EXPECT_EQ(pi.rows(), m);
    EXPECT_EQ(pi.cols(), n * n);
    EXPECT_TRUE(is_pivotal_morphism(pi, tensor_pairs(s, s),
                                    from_matrix(m, Matrix::identity(m))));
  }
  // e_1⊗e_2 ↦ e_1∧e_2 and e_2⊗e_1 ↦ -e_1∧e_2.
  Matrix pi = antisymmetrizer(2);
  EXPECT_EQ(pi, Matrix::from_rows({{0, 1, -1, 0}}));
}

TEST(TensorPairs, ScalarTwistsMultiply) {
  PivotalPair t = tensor_pairs(scalar_pair(2), scalar_pair(Scalar(1, 3)));
  EXPECT_EQ(t.cvr, Matrix::scalar(Scalar(2, 3)));
  EXPECT_TRUE(check_pair(t).passed());
}

TEST(TensorPairs, PassesSnakes) {
  Rng rng(26);
  for (int i = 0; i < 10; ++i) {
    PivotalPair a = from_matrix(2, random_invertible(rng, 2, 3, true));
    PivotalPair b = from_matrix(1 + i % 3, random_invertible(rng, 1 + i % 3, 3, true));
    EXPECT_TRUE(check_pair(tensor_pairs(a, b)).passed());
  }
}

TEST(DualPair, IsAnInvolutionAndValid) {
  Rng rng(27);
  for (int i = 0; i < 10; ++i) {
    PivotalPair pp = from_matrix(1 + i % 3, random_invertible(rng, 1 + i % 3, 3, true));
    EXPECT_TRUE(check_pair(dual_pair(pp)).passed());
    EXPECT_EQ(dual_pair(dual_pair(pp)), pp);
  }
}

TEST(FromBraided, StandardDualityGivesIdentityTwist) {
  for (std::size_t n : {1, 2, 3}) {
    PivotalPair s = from_matrix(n, Matrix::identity(n));
    EXPECT_EQ(from_braided(s.cvl, s.evl), s);
  }
}

TEST(FromBraided, RejectsNonDuality) {
  PivotalPair s = from_matrix(2, Matrix::identity(2));
  EXPECT_THROW(from_braided(s.cvl * Scalar(2), s.evl), NotADuality);
}

TEST(PairJson, RoundTrip) {
  PivotalPair pp = from_matrix(2, Matrix::from_rows({{1, 1}, {0, 1}}));
  EXPECT_EQ(pair_from_json(pair_to_json(pp)), pp);
}

}  // namespace
}  // namespace pivcat
