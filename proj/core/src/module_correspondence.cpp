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

#include "pivcat/module_correspondence.hpp"

#include "pivcat/errors.hpp"
#include "pivcat/linalg.hpp"

namespace pivcat {

Matrix act_word(const ModuleAction& m, const Word& w) {
  Matrix acc = Matrix::identity(m.dimX);
  for (char c : w) acc = acc * m.act.at(static_cast<unsigned char>(c));
  return acc;
}

Matrix act_poly(const ModuleAction& m, const NCPoly& p) {
  Matrix acc(m.dimX, m.dimX);
  for (const auto& [w, c] : p.terms()) acc += act_word(m, w) * c;
  return acc;
}

Report check_relations(const ModuleAction& m, const Presentation& pres) {
  Report r("relations on the module");
  if (m.act.size() != pres.alphabet_size()) {
    r.add("generator count", false,
          std::to_string(m.act.size()) + " actions for " +
              std::to_string(pres.alphabet_size()) + " generators");
    return r;
  }
  for (std::size_t k = 0; k < pres.relations.size(); ++k) {
    r.expect_zero("relation " + std::to_string(k) + ": " +
                      pres.relations[k].to_string(pres.names),
                  act_poly(m, pres.relations[k]));
  }
  return r;
}

ModuleAction action_from_intertwiner(const Intertwiner& obj,
                                     const Presentation& pres) {
  std::size_t n = pres.n;
  if (obj.pair != from_matrix(n, pres.q)) {
    throw InvalidObject("object is not over the pair built from this twist");
  }
  Report valid = check_object(obj);
  if (!valid.passed()) throw InvalidObject("sigma is not a valid intertwining");
  std::size_t d = obj.dimX;
  auto ix = Matrix::identity(d), iq = Matrix::identity(n);
  Matrix alpha = kron(obj.pair.evl, ix) * kron(iq, obj.sigma);
  Matrix beta = kron(ix, obj.pair.evr) * kron(invert(obj.sigma), iq);

  ModuleAction m;
  m.dimX = d;
  m.act.assign(pres.alphabet_size(), Matrix(d, d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix& e = m.act[pres.e(i, j)];
      Matrix& f = m.act[pres.f(i, j)];
      for (std::size_t x = 0; x < d; ++x) {
        std::size_t col = (i * d + x) * n + j;
        for (std::size_t y = 0; y < d; ++y) {
          e(y, x) = alpha(y, col);
          f(y, x) = beta(y, col);
        }
      }
    }
  }
  return m;
}

Intertwiner intertwiner_from_action(const ModuleAction& m,
                                    const Presentation& pres) {
  Report rel = check_relations(m, pres);
  if (!rel.passed()) {
    throw RelationViolated("the action does not satisfy every relation");
  }
  std::size_t n = pres.n, d = m.dimX;
  PivotalPair pp = from_matrix(n, pres.q);
  Matrix alpha(d, n * d * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix& e = m.act[pres.e(i, j)];
      for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y = 0; y < d; ++y) {
          alpha(y, (i * d + x) * n + j) = e(y, x);
        }
      }
    }
  }
  auto ip = Matrix::identity(n), ix = Matrix::identity(d);
  Matrix sigma = kron(ip, alpha) * kron_all({pp.cvl, ix, ip});
  return Intertwiner{d, std::move(sigma), pp};
}

bool is_module_map(const Matrix& f, const ModuleAction& a,
                   const ModuleAction& b) {
  if (f.rows() != b.dimX || f.cols() != a.dimX) {
    throw ShapeMismatch("module map has shape " + f.shape_string());
  }
  for (std::size_t g = 0; g < a.act.size(); ++g) {
    if (f * a.act[g] != b.act[g] * f) return false;
  }
  return true;
}

}  // namespace pivcat
