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

#include "pivcat/linalg.hpp"

#include <utility>

#include "pivcat/errors.hpp"

namespace pivcat {
namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

// Clears denominators row by row; the row space is unchanged.
IntRows integer_rows(const Matrix& m, mpz_class* scale = nullptr) {
  IntRows out(m.rows(), std::vector<mpz_class>(m.cols()));
  if (scale) *scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              m(i, j).value().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& x = m(i, j).value();
      out[i][j] = x.get_num() * (l / x.get_den());
    }
    if (scale) *scale *= l;
  }
  return out;
}

// Fraction-free elimination in place. Returns the rank; *sign tracks row
// swaps and *last receives the final pivot (the determinant when square
// and of full rank).
std::size_t bareiss(IntRows& a, std::size_t cols, int* sign,
                    mpz_class* last) {
  std::size_t rows = a.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  if (sign) *sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      if (sign) *sign = -*sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (last) *last = prev;
  return r;
}

// Plain Gaussian elimination over the prime field.
std::size_t gauss_rank(Matrix a, Scalar* det) {
  std::size_t r = 0;
  Scalar d(1);
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) {
      d = Scalar(0);
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      d = -d;
    }
    d *= a(r, c);
    Scalar inv = a(r, c).inverse();
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    ++r;
  }
  if (det) *det = r == a.rows() ? d : Scalar(0);
  return r;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (!current_field().is_rational()) return gauss_rank(m, nullptr);
  IntRows a = integer_rows(m);
  return bareiss(a, m.cols(), nullptr, nullptr);
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) {
    throw ShapeMismatch("determinant of non-square " + m.shape_string());
  }
  if (m.rows() == 0) return Scalar(1);
  if (!current_field().is_rational()) {
    Scalar d;
    gauss_rank(m, &d);
    return d;
  }
  mpz_class scale;
  IntRows a = integer_rows(m, &scale);
  int sign = 1;
  mpz_class last;
  std::size_t r = bareiss(a, m.cols(), &sign, &last);
  if (r < m.rows()) return Scalar(0);
  return Scalar(mpq_class(sign * last, scale));
}

RowEchelon rref(const Matrix& m) {
  RowEchelon out{m, {}};
  Matrix& a = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) {
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

Matrix kernel(const Matrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  Matrix k(m.cols(), free.size());
  for (std::size_t t = 0; t < free.size(); ++t) {
    std::size_t fc = free[t];
    k(fc, t) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      k(e.pivots[r], t) = -e.reduced(r, fc);
    }
  }
  return k;
}

Matrix invert(const Matrix& m) {
  if (!m.is_square()) {
    throw ShapeMismatch("cannot invert non-square " + m.shape_string());
  }
  std::size_t n = m.rows();
  if (n == 0) return Matrix();
  RowEchelon e = rref(hstack({m, Matrix::identity(n)}));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw SingularMatrix("matrix of shape " + m.shape_string() +
                         " is singular");
  }
  return e.reduced.block(0, n, n, n);
}

bool solve(const Matrix& a, const Matrix& b, Matrix& x) {
  if (a.rows() != b.rows()) throw ShapeMismatch("solve: row mismatch");
  RowEchelon e = rref(hstack({a, b}));
  x = Matrix(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) return false;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
    }
  }
  return true;
}

}  // namespace pivcat
