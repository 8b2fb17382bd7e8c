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

#include "pivcat/random.hpp"

#include "pivcat/errors.hpp"
#include "pivcat/linalg.hpp"

namespace pivcat {

long Rng::uniform(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Scalar Rng::scalar(long bound, bool fractions) {
  long num = uniform(-bound, bound);
  long den = fractions ? uniform(1, bound) : 1;
  return Scalar(num, den);
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound,
                     bool fractions) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.scalar(bound, fractions);
  }
  return m;
}

Matrix random_invertible(Rng& rng, std::size_t n, long bound, bool fractions) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, bound, fractions);
    if (rank(m) == n) return m;
  }
}

namespace {

Intertwiner random_line(Rng& rng, const PivotalPair& pair,
                        const Matrix& commutant) {
  std::size_t n = pair.dimP;
  for (;;) {
    Matrix e(n, n);
    for (std::size_t c = 0; c < commutant.cols(); ++c) {
      Scalar w = rng.scalar(2, false);
      if (w.is_zero()) continue;
      for (std::size_t k = 0; k < n * n; ++k) {
        if (!commutant(k, c).is_zero()) {
          e(k / n, k % n) += w * commutant(k, c);
        }
      }
    }
    if (rank(e) == n) return Intertwiner{1, e, pair};
  }
}

// Column basis (vec'd row-major) of {E : E·Mᵀ = Mᵀ·E}.
Matrix commutant_of_transpose(const Matrix& m) {
  std::size_t n = m.rows();
  Matrix mt = m.transpose();
  Matrix lin(n * n, n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    Matrix e(n, n);
    e(k / n, k % n) = Scalar(1);
    Matrix c = e * mt - mt * e;
    for (std::size_t r = 0; r < n * n; ++r) lin(r, k) = c.entries()[r];
  }
  return kernel(lin);
}

Intertwiner random_block(Rng& rng, const PivotalPair& pair,
                         const Matrix& commutant, std::size_t dim) {
  if (dim == 1) return random_line(rng, pair, commutant);
  // Composite dimensions sometimes split multiplicatively.
  for (std::size_t f = 2; f * f <= dim; ++f) {
    if (dim % f == 0 && rng.uniform(0, 2) == 0) {
      return tensor_objects(random_block(rng, pair, commutant, f),
                            random_block(rng, pair, commutant, dim / f));
    }
  }
  std::size_t left = static_cast<std::size_t>(
      rng.uniform(1, static_cast<long>(dim) - 1));
  return direct_sum_objects(random_block(rng, pair, commutant, left),
                            random_block(rng, pair, commutant, dim - left));
}

}  // namespace

Intertwiner random_object(Rng& rng, const PivotalPair& pair,
                          std::size_t dimX) {
  if (dimX == 0) throw ShapeMismatch("object dimension must be positive");
  Matrix commutant = commutant_of_transpose(twist_matrix(pair));
  Intertwiner obj = random_block(rng, pair, commutant, dimX);
  return conjugate_object(obj, random_invertible(rng, dimX, 2));
}

}  // namespace pivcat
