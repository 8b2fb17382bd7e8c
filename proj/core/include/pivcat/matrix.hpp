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
#include <initializer_list>
#include <string>
#include <vector>

#include "pivcat/scalar.hpp"

namespace pivcat {

/**
 * Dense row-major matrix over the session field. Matrices act on column
 * vectors, so the composite g after f is the product g * f.
 */
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }
  static Matrix from_rows(
      std::initializer_list<std::initializer_list<Scalar>> rows);
  static Matrix column(const std::vector<Scalar>& v);
  static Matrix scalar(const Scalar& s) { return Matrix(1, 1, {s}); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }

  Scalar& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Scalar& at(std::size_t i, std::size_t j);
  const Scalar& at(std::size_t i, std::size_t j) const;
  const std::vector<Scalar>& entries() const { return entries_; }

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix col(std::size_t j) const { return block(0, j, rows_, 1); }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) {
    return !(a == b);
  }

  std::string shape_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/** Kronecker product with (A⊗B)[i1*rB+i2, j1*cB+j2] = A[i1,j1] B[i2,j2]. */
Matrix kron(const Matrix& a, const Matrix& b);
/** Left-to-right Kronecker product of a list; empty list gives [[1]]. */
Matrix kron_all(std::initializer_list<Matrix> factors);
Matrix kron_all(const std::vector<Matrix>& factors);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);
Matrix direct_sum(const Matrix& a, const Matrix& b);
/** Swap map V⊗W -> W⊗V for dim V = a, dim W = b. */
Matrix flip(std::size_t a, std::size_t b);

}  // namespace pivcat
