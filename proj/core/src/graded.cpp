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


#include "pivcat/graded.hpp"

#include "pivcat/errors.hpp"

namespace pivcat {

std::vector<std::size_t> GradedSpace::positions(Element h) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < grades.size(); ++i) {
    if (grades[i] == h) out.push_back(i);
  }
  return out;
}

std::map<Element, std::size_t> GradedSpace::multiplicities() const {
  std::map<Element, std::size_t> m;
  for (Element h : grades) ++m[h];
  return m;
}

GradedSpace tensor_spaces(const FiniteGroup& g, const GradedSpace& a,
                          const GradedSpace& b) {
  GradedSpace out;
  for (Element x : a.grades) {
    for (Element y : b.grades) out.grades.push_back(g.mul(x, y));
  }
  return out;
}

GradedMatrix::GradedMatrix(GradedSpace source, GradedSpace target,
                           const Matrix& dense)
    : source_(std::move(source)), target_(std::move(target)) {
  if (dense.rows() != target_.dim() || dense.cols() != source_.dim()) {
    throw ShapeMismatch("graded map of shape " + dense.shape_string() +
                        " between spaces of dimensions " +
                        std::to_string(source_.dim()) + " and " +
                        std::to_string(target_.dim()));
  }
  for (std::size_t r = 0; r < dense.rows(); ++r) {
    for (std::size_t c = 0; c < dense.cols(); ++c) {
      if (!dense(r, c).is_zero() && target_.grades[r] != source_.grades[c]) {
        throw GradeMismatch("entry (" + std::to_string(r) + ", " +
                            std::to_string(c) + ") joins grades " +
                            std::to_string(source_.grades[c]) + " and " +
                            std::to_string(target_.grades[r]));
      }
    }
  }
  for (const auto& [h, count] : source_.multiplicities()) {
    (void)count;
    std::vector<std::size_t> cols = source_.positions(h);
    std::vector<std::size_t> rows = target_.positions(h);
    if (rows.empty()) continue;
    Matrix b(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        b(i, j) = dense(rows[i], cols[j]);
      }
    }
    if (!b.is_zero()) blocks_.emplace(std::make_pair(h, h), std::move(b));
  }
}

Matrix GradedMatrix::block(Element h) const {
  auto it = blocks_.find({h, h});
  if (it != blocks_.end()) return it->second;
  return Matrix(target_.positions(h).size(), source_.positions(h).size());
}

Matrix GradedMatrix::dense() const {
  Matrix m(target_.dim(), source_.dim());
  for (const auto& [key, b] : blocks_) {
    std::vector<std::size_t> rows = target_.positions(key.second);
    std::vector<std::size_t> cols = source_.positions(key.first);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        m(rows[i], cols[j]) = b(i, j);
      }
    }
  }
  return m;
}

GradedSpace GradedModel::space(const ObjectWord& w) const {
  GradedSpace s{{a_.group->identity()}};
  for (const std::string& name : w) {
    auto it = a_.objects.find(name);
    if (it == a_.objects.end()) {
      throw UnassignedGenerator("object '" + name + "' has no graded space");
    }
    s = tensor_spaces(*a_.group, s, it->second);
  }
  return s;
}

GradedMatrix GradedModel::identity(const ObjectWord& w) const {
  GradedSpace s = space(w);
  return GradedMatrix(s, s, Matrix::identity(s.dim()));
}

GradedMatrix GradedModel::gen(const Term& t) const {
  auto it = a_.morphisms.find(t.name());
  if (it == a_.morphisms.end()) {
    throw UnassignedGenerator("generator '" + t.name() + "' has no value");
  }
  if (it->second.source() != space(t.source()) ||
      it->second.target() != space(t.target())) {
    throw GradeMismatch("value of '" + t.name() +
                        "' does not match its boundary grades");
  }
  return it->second;
}

GradedMatrix GradedModel::compose(const GradedMatrix& g,
                                  const GradedMatrix& f) const {
  if (f.target() != g.source()) {
    throw GradeMismatch("composite of graded maps through different spaces");
  }
  return GradedMatrix(f.source(), g.target(), g.dense() * f.dense());
}

GradedMatrix GradedModel::tensor(const GradedMatrix& f,
                                 const GradedMatrix& g) const {
  return GradedMatrix(tensor_spaces(*a_.group, f.source(), g.source()),
                      tensor_spaces(*a_.group, f.target(), g.target()),
                      kron(f.dense(), g.dense()));
}

GradedMatrix evaluate_graded(const Term& t, const GradedAssignment& a) {
  if (a.group == nullptr) throw InputError("graded assignment without group");
  return evaluate_with(t, GradedModel(a));
}

}  // namespace pivcat
