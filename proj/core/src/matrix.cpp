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

#include "pivcat/matrix.hpp"

#include <utility>

#include "pivcat/errors.hpp"

namespace pivcat {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw ShapeMismatch("entry count " + std::to_string(entries_.size()) +
                        " does not match shape " + shape_string());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(
    std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Scalar> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeMismatch("ragged row list");
    e.insert(e.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(e));
}

Matrix Matrix::column(const std::vector<Scalar>& v) {
  return Matrix(v.size(), 1, v);
}

Scalar& Matrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw ShapeMismatch("index out of range");
  return (*this)(i, j);
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw ShapeMismatch("index out of range");
  return (*this)(i, j);
}

bool Matrix::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw ShapeMismatch("block outside of " + shape_string());
  }
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) {
    throw ShapeMismatch("block " + m.shape_string() + " outside of " +
                        shape_string());
  }
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
  }
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw ShapeMismatch("cannot add " + shape_string() + " and " +
                        o.shape_string());
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!o.entries_[k].is_zero()) entries_[k] += o.entries_[k];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw ShapeMismatch("cannot subtract " + o.shape_string() + " from " +
                        shape_string());
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!o.entries_[k].is_zero()) entries_[k] -= o.entries_[k];
  }
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : entries_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw ShapeMismatch("cannot multiply " + a.shape_string() + " by " +
                        b.shape_string());
  }
  // Most operands are whiskered identities, so skip zero entries of both.
  std::vector<std::vector<std::size_t>> b_nonzero(b.rows_);
  for (std::size_t k = 0; k < b.rows_; ++k) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      if (!b(k, j).is_zero()) b_nonzero[k].push_back(j);
    }
  }
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j : b_nonzero[k]) c(i, j).add_product(x, b(k, j));
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string Matrix::shape_string() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Scalar& x = a(i1, j1);
      if (x.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          const Scalar& y = b(i2, j2);
          if (y.is_zero()) continue;
          k(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * y;
        }
      }
    }
  }
  return k;
}

Matrix kron_all(std::initializer_list<Matrix> factors) {
  Matrix acc = Matrix::identity(1);
  for (const auto& f : factors) acc = kron(acc, f);
  return acc;
}

Matrix kron_all(const std::vector<Matrix>& factors) {
  Matrix acc = Matrix::identity(1);
  for (const auto& f : factors) acc = kron(acc, f);
  return acc;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  std::size_t r = blocks.front().rows(), c = 0;
  for (const auto& b : blocks) {
    if (b.rows() != r) throw ShapeMismatch("hstack row mismatch");
    c += b.cols();
  }
  Matrix m(r, c);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    m.set_block(0, off, b);
    off += b.cols();
  }
  return m;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  std::size_t c = blocks.front().cols(), r = 0;
  for (const auto& b : blocks) {
    if (b.cols() != c) throw ShapeMismatch("vstack column mismatch");
    r += b.rows();
  }
  Matrix m(r, c);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    m.set_block(off, 0, b);
    off += b.rows();
  }
  return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Matrix flip(std::size_t a, std::size_t b) {
  Matrix m(a * b, a * b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) m(j * a + i, i * b + j) = Scalar(1);
  }
  return m;
}

}  // namespace pivcat
