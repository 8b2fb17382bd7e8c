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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pivcat/finite_group.hpp"
#include "pivcat/matrix.hpp"
#include "pivcat/term.hpp"

namespace pivcat {

/** A G-graded space presented by the grade of each basis vector. */
struct GradedSpace {
  std::vector<Element> grades;

  std::size_t dim() const { return grades.size(); }
  /** Basis positions carrying grade h, in order. */
  std::vector<std::size_t> positions(Element h) const;
  /** Multiplicity of each grade that occurs. */
  std::map<Element, std::size_t> multiplicities() const;
  friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
    return a.grades == b.grades;
  }
  friend bool operator!=(const GradedSpace& a, const GradedSpace& b) {
    return !(a == b);
  }
};

/** Basis i*dim(b)+j has grade grade_i(a) · grade_j(b), matching kron. */
GradedSpace tensor_spaces(const FiniteGroup& g, const GradedSpace& a,
                          const GradedSpace& b);

/**
 * A grade-preserving linear map. Blocks are keyed by (source grade,
 * target grade); only blocks with equal grades can be present and blocks
 * that would be zero are left out.
 */
class GradedMatrix {
 public:
  GradedMatrix() = default;
  /** Splits a dense matrix; throws GradeMismatch on an off-grade entry. */
  GradedMatrix(GradedSpace source, GradedSpace target, const Matrix& dense);

  const GradedSpace& source() const { return source_; }
  const GradedSpace& target() const { return target_; }
  const std::map<std::pair<Element, Element>, Matrix>& blocks() const {
    return blocks_;
  }
  /** Block (h, h); the zero matrix of the right shape when absent. */
  Matrix block(Element h) const;
  Matrix dense() const;

 private:
  GradedSpace source_, target_;
  std::map<std::pair<Element, Element>, Matrix> blocks_;
};

/** Strict monoidal functor from terms into vec_G. */
struct GradedAssignment {
  const FiniteGroup* group = nullptr;
  std::map<std::string, GradedSpace> objects;
  std::map<std::string, GradedMatrix> morphisms;
};

/**
 * Model for evaluate_with. Composition checks that the middle spaces
 * agree as graded spaces; throws GradeMismatch or UnassignedGenerator.
 */
class GradedModel {
 public:
  explicit GradedModel(const GradedAssignment& a) : a_(a) {}
  GradedMatrix identity(const ObjectWord& w) const;
  GradedMatrix gen(const Term& t) const;
  GradedMatrix compose(const GradedMatrix& g, const GradedMatrix& f) const;
  GradedMatrix tensor(const GradedMatrix& f, const GradedMatrix& g) const;
  GradedSpace space(const ObjectWord& w) const;

 private:
  const GradedAssignment& a_;
};

GradedMatrix evaluate_graded(const Term& t, const GradedAssignment& a);

}  // namespace pivcat
