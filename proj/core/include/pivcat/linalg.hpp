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
#include <vector>

#include "pivcat/matrix.hpp"

namespace pivcat {

/** Gauss-Jordan inverse; throws SingularMatrix. */
Matrix invert(const Matrix& m);

/** Rank by fraction-free (Bareiss) elimination. */
std::size_t rank(const Matrix& m);

/** Determinant via Bareiss elimination; m must be square. */
Scalar determinant(const Matrix& m);

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(const Matrix& m);

/** Basis of the right kernel, one column per basis vector. */
Matrix kernel(const Matrix& m);

/** Solves a * x = b; returns false when inconsistent. */
bool solve(const Matrix& a, const Matrix& b, Matrix& x);

}  // namespace pivcat
