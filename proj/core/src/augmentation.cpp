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


#include "pivcat/augmentation.hpp"

#include <string>

#include "pivcat/errors.hpp"
#include "pivcat/linalg.hpp"

namespace pivcat {

CentralCandidate CentralCandidate::flip(const PivotalPair& pair) {
  return {Matrix::identity(pair.dimP), Matrix::identity(pair.dimQ)};
}

Matrix half_braiding_p(const CentralCandidate& c, std::size_t dimY) {
  std::size_t p = c.twist_p.rows();
  return flip(p, dimY) * kron(c.twist_p, Matrix::identity(dimY));
}

Matrix half_braiding_q(const CentralCandidate& c, std::size_t dimY) {
  std::size_t q = c.twist_q.rows();
  return flip(q, dimY) * kron(c.twist_q, Matrix::identity(dimY));
}

Report centrality_check(const PivotalPair& pp, const CentralCandidate& c) {
  Report r("central structure on (P, Q)");
  if (c.twist_p.rows() != pp.dimP || !c.twist_p.is_square() ||
      c.twist_q.rows() != pp.dimQ || !c.twist_q.is_square()) {
    throw ShapeMismatch("candidate twists do not match the pair");
  }
  std::size_t p = pp.dimP, q = pp.dimQ;
  auto id = [](std::size_t k) { return Matrix::identity(k); };
  r.expect_identity("λ_𝟙 = id_P", half_braiding_p(c, 1));
  r.expect_identity("χ_𝟙 = id_Q", half_braiding_q(c, 1));
  for (std::size_t y : {1, 2}) {
    for (std::size_t z : {1, 2}) {
      std::string at = " at dims " + std::to_string(y) + "," + std::to_string(z);
      r.expect_equal("λ is monoidal" + at, half_braiding_p(c, y * z),
                     kron(id(y), half_braiding_p(c, z)) *
                         kron(half_braiding_p(c, y), id(z)));
      r.expect_equal("χ is monoidal" + at, half_braiding_q(c, y * z),
                     kron(id(y), half_braiding_q(c, z)) *
                         kron(half_braiding_q(c, y), id(z)));
    }
  }
  for (std::size_t y : {1, 2}) {
    std::string at = " at dim " + std::to_string(y);
    Matrix lam = half_braiding_p(c, y), chi = half_braiding_q(c, y);
    r.expect_equal("evl is central" + at, kron(pp.evl, id(y)),
                   kron(id(y), pp.evl) * kron(chi, id(p)) * kron(id(q), lam));
    r.expect_equal("evr is central" + at, kron(pp.evr, id(y)),
                   kron(id(y), pp.evr) * kron(lam, id(q)) * kron(id(p), chi));
    r.expect_equal("cvl is central" + at,
                   kron(lam, id(q)) * kron(id(p), chi) * kron(pp.cvl, id(y)),
                   kron(id(y), pp.cvl));
    r.expect_equal("cvr is central" + at,
                   kron(chi, id(p)) * kron(id(q), lam) * kron(pp.cvr, id(y)),
                   kron(id(y), pp.cvr));
  }
  return r;
}

LiftedMap augmentation_map(const TruncatedT& t, const CentralCandidate& c) {
  const PivotalPair& pp = t.pair;
  std::size_t x = t.dimX;
  Matrix ix = Matrix::identity(x);
  Matrix xi_plus = kron(ix, pp.evl) *
                   kron(half_braiding_q(c, x), Matrix::identity(pp.dimP));
  Matrix xi_minus = kron(ix, pp.evr) *
                    kron(half_braiding_p(c, x), Matrix::identity(pp.dimQ));
  // Same recursion as θ, with ξ_± in place of α and β.
  std::vector<Matrix> per(t.words.size());
  Matrix on(x, t.total_dim);
  for (std::size_t b = 0; b < t.words.size(); ++b) {
    const SignWord& w = t.words[b];
    if (w.empty()) {
      per[b] = ix;
    } else {
      SignWord rest(w.begin() + 1, w.end());
      bool plus = w.front() == Sign::kPlus;
      per[b] = (plus ? xi_plus : xi_minus) *
               functor_map(pp, SignWord{w.front()}, per[t.block_of(rest)]);
    }
    on.set_block(0, t.offsets[b], per[b]);
  }
  Matrix map = on * t.section;
  return {std::move(on), std::move(map)};
}

Report augmentation_check(const TruncatedT& t, const CentralCandidate& c) {
  Report central = centrality_check(t.pair, c);
  if (!central.passed()) {
    std::string failed;
    for (const Check& ch : central.checks()) {
      if (!ch.passed) {
        failed = ch.name;
        break;
      }
    }
    throw NotCentral("candidate braiding fails: " + failed);
  }
  Report r("augmentation");
  r.info()["degree"] = t.bound;
  r.info()["dimX"] = t.dimX;
  r.add_section(std::move(central));

  LiftedMap xi = augmentation_map(t, c);
  r.add("ξ kills the relations", kills_relations(xi, t));
  r.expect_identity("ξν = id", xi.map * unit_map(t));

  for (std::size_t a = 1; a < t.bound; ++a) {
    for (std::size_t b = 1; a + b <= t.bound; ++b) {
      TruncatedT inner = truncate(t.pair, t.dimX, b);
      TruncatedT outer = truncate(t.pair, inner.dim(), a);
      TruncatedT ta = truncate(t.pair, t.dimX, a);
      Matrix mu = multiplication(outer, inner, t).map;
      Matrix xi_inner = augmentation_map(inner, c).map;
      Matrix t_xi = functor_on(outer, ta, xi_inner).map;
      Matrix xi_a = augmentation_map(ta, c).map;
      r.expect_equal("ξμ = ξT(ξ) at slot " + std::to_string(a) + "+" +
                         std::to_string(b),
                     xi.map * mu, xi_a * t_xi);
    }
  }

  TruncatedT txx = truncate(t.pair, t.dimX * t.dimX, t.bound);
  Matrix t2 = comultiplication(txx, t, t).map;
  r.expect_equal("(ξ⊗ξ)T₂ = ξ", kron(xi.map, xi.map) * t2,
                 augmentation_map(txx, c).map);

  TruncatedT t1 = truncate(t.pair, 1, t.bound);
  r.expect_equal("ξ at 𝟙 = T₀", augmentation_map(t1, c).map,
                 counit_map(t1).map);
  return r;
}

Report augmentation_check(const TruncatedT& t) {
  return augmentation_check(t, CentralCandidate::flip(t.pair));
}

}  // namespace pivcat
