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
#include "pivcat/json_io.hpp"
#include "pivcat/linalg.hpp"
#include "pivcat/matrix.hpp"
#include "pivcat/random.hpp"

namespace pivcat {
namespace {

TEST(Scalar, ArithmeticStaysExact) {
  Scalar a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Scalar(1, 2));
  EXPECT_EQ(a * b, Scalar(1, 18));
  EXPECT_EQ(a / b, Scalar(2));
  EXPECT_EQ(Scalar(4, -6), Scalar(-2, 3));
  EXPECT_EQ(Scalar(2, 3).inverse(), Scalar(3, 2));
}

TEST(Scalar, ParseAcceptsFractions) {
  EXPECT_EQ(Scalar::parse("-7/21"), Scalar(-1, 3));
  EXPECT_EQ(Scalar::parse("5"), Scalar(5));
  EXPECT_THROW(Scalar::parse("abc"), Error);
}

TEST(Scalar, InverseOfZeroThrows) {
  EXPECT_THROW(Scalar(0).inverse(), Error);
}

TEST(Scalar, PrimeFieldReduces) {
  FieldScope scope(Field::prime(7));
  EXPECT_EQ(Scalar(9), Scalar(2));
  EXPECT_EQ(Scalar(3) * Scalar(5), Scalar(1));
  EXPECT_EQ(Scalar(3).inverse(), Scalar(5));
  EXPECT_EQ(Scalar(1, 2), Scalar(4));
}

TEST(Field, ParseRoundTrip) {
  EXPECT_TRUE(Field::parse("q").is_rational());
  EXPECT_EQ(Field::parse("fp:11").modulus, 11u);
  EXPECT_THROW(Field::parse("fp:12"), Error);
  EXPECT_EQ(Field::prime(5).describe(), "fp:5");
}

TEST(Invert, OneByOne) {
  EXPECT_EQ(invert(Matrix::scalar(Scalar(2))), Matrix::scalar(Scalar(1, 2)));
}

TEST(Invert, SingularThrows) {
  EXPECT_THROW(invert(Matrix::from_rows({{1, 2}, {2, 4}})), SingularMatrix);
  EXPECT_THROW(invert(Matrix(2, 3)), ShapeMismatch);
}

TEST(Invert, IsAnInvolution) {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    Matrix m = random_invertible(rng, 1 + i % 4, 4, true);
    EXPECT_EQ(invert(invert(m)), m);
    EXPECT_TRUE((m * invert(m)).is_identity());
  }
}

TEST(Invert, AgreesWithReferenceElimination) {
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    Matrix m = random_invertible(rng, 1 + i % 5, 5, true);
    EXPECT_EQ(oracle::to_q(invert(m)), oracle::inverse(oracle::to_q(m)));
  }
}

TEST(Rank, OuterProductIsOne) {
  Matrix u = Matrix::column({1, 2, 3});
  Matrix v = Matrix::column({4, Scalar(1, 2)});
  EXPECT_EQ(rank(u * v.transpose()), 1u);
}

TEST(Rank, PlusKernelDimensionIsColumnCount) {
  Rng rng(13);
  for (int i = 0; i < 30; ++i) {
    std::size_t r = 1 + i % 4, c = 1 + (i / 4) % 5;
    Matrix a = random_matrix(rng, r, c, 2, false);
    if (i % 3 == 0) a = a * random_matrix(rng, c, c, 1, false);
    Matrix k = kernel(a);
    EXPECT_EQ(rank(a) + k.cols(), c);
    EXPECT_TRUE((a * k).is_zero());
    EXPECT_EQ(rank(a), oracle::rank(oracle::to_q(a)));
  }
}

TEST(Determinant, MatchesProductOfPivots) {
  EXPECT_EQ(determinant(Matrix::from_rows({{1, 2}, {3, 4}})), Scalar(-2));
  EXPECT_EQ(determinant(Matrix::from_rows({{Scalar(1, 2), 0}, {0, 6}})),
            Scalar(3));
  EXPECT_EQ(determinant(Matrix::from_rows({{1, 1}, {1, 1}})), Scalar(0));
}

TEST(Kron, IndexConvention) {
  Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
  Matrix b = Matrix::from_rows({{0, 5}, {6, 7}});
  Matrix k = kron(a, b);
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t j1 = 0; j1 < 2; ++j1)
      for (std::size_t i2 = 0; i2 < 2; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          EXPECT_EQ(k(i1 * 2 + i2, j1 * 2 + j2), a(i1, j1) * b(i2, j2));
}

TEST(Kron, InterchangeLaw) {
  Rng rng(14);
  for (int i = 0; i < 10; ++i) {
    Matrix a = random_matrix(rng, 2, 3, 3, true);
    Matrix c = random_matrix(rng, 3, 2, 3, true);
    Matrix b = random_matrix(rng, 1, 2, 3, true);
    Matrix d = random_matrix(rng, 2, 2, 3, true);
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  }
}

TEST(Kron, EmptyListIsUnit) {
  EXPECT_EQ(kron_all(std::vector<Matrix>{}), Matrix::identity(1));
}

TEST(Flip, SwapsFactors) {
  Matrix v = Matrix::column({1, 2});
  Matrix w = Matrix::column({3, 4, 5});
  EXPECT_EQ(flip(2, 3) * kron(v, w), kron(w, v));
  EXPECT_TRUE((flip(3, 2) * flip(2, 3)).is_identity());
}

TEST(Matrix, ShapeErrors) {
  EXPECT_THROW(Matrix(2, 3) * Matrix(2, 3), ShapeMismatch);
  EXPECT_THROW(Matrix(2, 3) + Matrix(3, 2), ShapeMismatch);
}

TEST(Solve, FindsAndRejects) {
  Matrix a = Matrix::from_rows({{1, 1}, {0, 1}});
  Matrix x;
  ASSERT_TRUE(solve(a, Matrix::column({3, 1}), x));
  EXPECT_EQ(x, Matrix::column({2, 1}));
  EXPECT_FALSE(solve(Matrix::from_rows({{1, 1}, {1, 1}}),
                     Matrix::column({1, 2}), x));
}

TEST(Json, MatrixRoundTrip) {
  Matrix m = Matrix::from_rows({{Scalar(1, 2), -3}, {0, Scalar(7, 5)}});
  EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
  EXPECT_EQ(matrix_from_json(nlohmann::json::parse(R"([["1/2",-3],[0,"7/5"]])")),
            m);
  EXPECT_THROW(matrix_from_json(nlohmann::json::parse(R"([[1],[2,3]])")),
               Error);
}

}  // namespace
}  // namespace pivcat
