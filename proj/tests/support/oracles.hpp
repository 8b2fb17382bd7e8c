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


// Reference computations for the tests. Everything here works on plain
// mpq_class tables and its own elimination routine, so a bug in the
// library's linear algebra cannot hide behind a matching bug here.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

#include "pivcat/matrix.hpp"

namespace oracle {

using Q = mpq_class;
using QMat = std::vector<std::vector<Q>>;

QMat to_q(const pivcat::Matrix& m);
pivcat::Matrix from_q(const QMat& m);

QMat identity(std::size_t n);
QMat zeros(std::size_t r, std::size_t c);
QMat mul(const QMat& a, const QMat& b);
QMat transpose(const QMat& a);
bool is_identity(const QMat& a);

std::size_t rank(QMat a);
/** Gauss-Jordan with partial search for a nonzero pivot; empty on failure. */
QMat inverse(const QMat& a);

/**
 * Duality data indexed by basis labels rather than Kronecker rows:
 * cvl[a][b] is the coefficient of v_a⊗w_b, evl[b][a] the value on w_b⊗v_a,
 * cvr[b][a] the coefficient of w_b⊗v_a, evr[a][b] the value on v_a⊗w_b.
 */
struct Tables {
  std::size_t n = 0;
  QMat cvl, evl, cvr, evr;
};

/** Read the four maps of a pair on k^n into label-indexed tables. */
Tables tables_of(std::size_t n, const pivcat::Matrix& cvl,
                 const pivcat::Matrix& evl, const pivcat::Matrix& cvr,
                 const pivcat::Matrix& evr);

/** Tables written straight from the definition for the twist q. */
Tables twisted_tables(const QMat& q);

/** The four zig-zag composites, each by explicit index sums. */
std::vector<QMat> snake_composites(const Tables& t);

/** Left and right transposes of f : k^n1 -> k^n2 by index sums. */
QMat left_transpose(const QMat& f, const Tables& src, const Tables& dst);
QMat right_transpose(const QMat& f, const Tables& src, const Tables& dst);

/**
 * Words of length <= d in the 2n² generators modulo the two-sided ideal
 * truncated at d, computed as (#words) - rank{u·r·v}. Letters follow the
 * layout f[i][j] = i*n + j, e[i][j] = n² + i*n + j.
 */
std::size_t filtration_dim(const QMat& q, std::size_t d);

/** Multiplication table of S3 built from permutations of {1,2,3}. */
struct GroupTable {
  std::vector<std::vector<std::size_t>> mul;
  std::size_t identity = 0;
};
GroupTable s3_table();
GroupTable cyclic_table(std::size_t n);

/**
 * Whether a grade-preserving isomorphism X⊗V_g -> V_g⊗X can exist:
 * compares the multisets of grades h·g and g·h over the basis of X.
 */
bool graded_iso_exists(const GroupTable& g, std::size_t elem,
                       const std::map<std::size_t, std::size_t>& mult);

}  // namespace oracle
