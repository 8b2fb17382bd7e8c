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

#include "pivcat/inner_hom.hpp"

#include <functional>

#include "pivcat/errors.hpp"
#include "pivcat/linalg.hpp"

namespace pivcat {
namespace {

Matrix id(std::size_t n) { return Matrix::identity(n); }

// A monoidal structure on Mat(k) (plain or reversed tensor) together with
// a pivotal pair and a left closed structure for it. Running the left-hom
// formulas in the reversed context yields the right hom of the original.
struct ClosedContext {
  bool reversed = false;
  std::size_t dimP = 1, dimQ = 1;
  Matrix cvl, evl, cvr, evr;
  std::function<Matrix(std::size_t, std::size_t)> counit;
  std::function<Matrix(std::size_t, std::size_t)> unit;

  Matrix t(std::vector<Matrix> fs) const {
    if (reversed) return kron_all(std::vector<Matrix>(fs.rbegin(), fs.rend()));
    return kron_all(fs);
  }

  Matrix ov(std::size_t dX, const Matrix& sigma) const {
    auto iq = id(dimQ), ix = id(dX);
    return t({evl, ix, iq}) * t({iq, sigma, iq}) * t({iq, ix, cvl});
  }
};

ClosedContext plain_context(const PivotalPair& pp) {
  ClosedContext c;
  c.dimP = pp.dimP;
  c.dimQ = pp.dimQ;
  c.cvl = pp.cvl;
  c.evl = pp.evl;
  c.cvr = pp.cvr;
  c.evr = pp.evr;
  c.counit = hom_counit;
  c.unit = hom_unit;
  return c;
}

// Under ⊗^op, evr/cvr exhibit Q as a left dual of P and −⊗^op A ⊣ [A,−]
// is A⊗− ⊣ [A,−]^r.
ClosedContext opposite_context(const PivotalPair& pp) {
  ClosedContext c;
  c.reversed = true;
  c.dimP = pp.dimP;
  c.dimQ = pp.dimQ;
  c.cvl = pp.cvr;
  c.evl = pp.evr;
  c.cvr = pp.cvl;
  c.evr = pp.evl;
  c.counit = rhom_counit;
  c.unit = rhom_unit;
  return c;
}

// (P[A,(evl B)(Qσ_B)(Qε P)(Q[A,B]σ_A^-1)])(Pη_{Q[A,B]P})(cvl[A,B]P)
Matrix hom_forward(const ClosedContext& c, std::size_t dA, std::size_t dB,
                   const Matrix& sigma_a_inv, const Matrix& sigma_b) {
  std::size_t h = dB * dA;
  auto ip = id(c.dimP), iq = id(c.dimQ), ih = id(h), ib = id(dB);
  Matrix phi = c.t({c.evl, ib}) * c.t({iq, sigma_b}) *
               c.t({iq, c.counit(dA, dB), ip}) * c.t({iq, ih, sigma_a_inv});
  std::size_t y = c.dimQ * h * c.dimP;
  return c.t({ip, hom_map(dA, phi)}) * c.t({ip, c.unit(dA, y)}) *
         c.t({c.cvl, ih, ip});
}

// ([A,(B evr)(σ_B^-1 Q)(Pε Q)(P[A,B]ovσ_A)]P)(η_{P[A,B]Q}P)(P[A,B]cvr)
Matrix hom_backward(const ClosedContext& c, std::size_t dA, std::size_t dB,
                    const Matrix& ov_sigma_a, const Matrix& sigma_b_inv) {
  std::size_t h = dB * dA;
  auto ip = id(c.dimP), iq = id(c.dimQ), ih = id(h), ib = id(dB);
  Matrix psi = c.t({ib, c.evr}) * c.t({sigma_b_inv, iq}) *
               c.t({ip, c.counit(dA, dB), iq}) * c.t({ip, ih, ov_sigma_a});
  std::size_t y = c.dimP * h * c.dimQ;
  return c.t({hom_map(dA, psi), ip}) * c.t({c.unit(dA, y), ip}) *
         c.t({ip, ih, c.cvr});
}

void require_same_pair(const Intertwiner& a, const Intertwiner& b) {
  if (a.pair != b.pair) {
    throw PairMismatch("objects live over different pivotal pairs");
  }
}

}  // namespace

Matrix hom_counit(std::size_t dimA, std::size_t dimB) {
  Matrix m(dimB, dimB * dimA * dimA);
  for (std::size_t i = 0; i < dimB; ++i) {
    for (std::size_t j = 0; j < dimA; ++j) {
      m(i, (i * dimA + j) * dimA + j) = Scalar(1);
    }
  }
  return m;
}

Matrix hom_unit(std::size_t dimA, std::size_t dimY) {
  Matrix m(dimY * dimA * dimA, dimY);
  for (std::size_t y = 0; y < dimY; ++y) {
    for (std::size_t k = 0; k < dimA; ++k) {
      m((y * dimA + k) * dimA + k, y) = Scalar(1);
    }
  }
  return m;
}

Matrix rhom_counit(std::size_t dimA, std::size_t dimB) {
  Matrix m(dimB, dimA * dimB * dimA);
  for (std::size_t k = 0; k < dimA; ++k) {
    for (std::size_t i = 0; i < dimB; ++i) {
      m(i, k * (dimB * dimA) + i * dimA + k) = Scalar(1);
    }
  }
  return m;
}

Matrix rhom_unit(std::size_t dimA, std::size_t dimY) {
  Matrix m(dimA * dimY * dimA, dimY);
  for (std::size_t y = 0; y < dimY; ++y) {
    for (std::size_t k = 0; k < dimA; ++k) {
      m((k * dimY + y) * dimA + k, y) = Scalar(1);
    }
  }
  return m;
}

Matrix hom_map(std::size_t dimA, const Matrix& g) {
  return kron(g, id(dimA));
}

Intertwiner left_hom(const Intertwiner& a, const Intertwiner& b) {
  require_same_pair(a, b);
  Matrix s = hom_forward(plain_context(a.pair), a.dimX, b.dimX,
                         invert(a.sigma), b.sigma);
  return Intertwiner{b.dimX * a.dimX, std::move(s), a.pair};
}

Matrix left_hom_inverse(const Intertwiner& a, const Intertwiner& b) {
  require_same_pair(a, b);
  return hom_backward(plain_context(a.pair), a.dimX, b.dimX,
                      induced_q(a).first, invert(b.sigma));
}

Intertwiner right_hom(const Intertwiner& a, const Intertwiner& b) {
  require_same_pair(a, b);
  const auto& pp = a.pair;
  std::size_t dA = a.dimX, dB = b.dimX, h = dB * dA;
  auto ip = id(pp.dimP), iq = id(pp.dimQ), ih = id(h), ib = id(dB);
  Matrix ov_inv = induced_q(a).second;
  Matrix phi = kron(pp.evl, ib) * kron(iq, b.sigma) *
               kron_all({iq, rhom_counit(dA, dB), ip}) *
               kron_all({ov_inv, ih, ip});
  std::size_t y = pp.dimQ * h * pp.dimP;
  Matrix s = kron(ip, hom_map(dA, phi)) * kron(ip, rhom_unit(dA, y)) *
             kron_all({pp.cvl, ih, ip});
  return Intertwiner{h, std::move(s), pp};
}

Matrix right_hom_inverse(const Intertwiner& a, const Intertwiner& b) {
  require_same_pair(a, b);
  const auto& pp = a.pair;
  std::size_t dA = a.dimX, dB = b.dimX, h = dB * dA;
  auto ip = id(pp.dimP), iq = id(pp.dimQ), ih = id(h), ib = id(dB);
  Matrix psi = kron(ib, pp.evr) * kron(invert(b.sigma), iq) *
               kron_all({ip, rhom_counit(dA, dB), iq}) *
               kron_all({a.sigma, ih, iq});
  std::size_t y = pp.dimP * h * pp.dimQ;
  return kron(hom_map(dA, psi), ip) * kron(rhom_unit(dA, y), ip) *
         kron_all({ip, ih, pp.cvr});
}

std::pair<Matrix, Matrix> right_hom_via_opposite(const Intertwiner& a,
                                                 const Intertwiner& b) {
  require_same_pair(a, b);
  ClosedContext c = opposite_context(a.pair);
  Matrix a_op = invert(a.sigma);  // σ_A read in the reversed category
  Matrix b_op_inv = b.sigma;
  Matrix b_op = invert(b.sigma);
  // Left hom of (A, σ_A^-1), (B, σ_B^-1) in the reversed category, then
  // inverted back: its forward map is our inverse and vice versa.
  Matrix op_forward = hom_forward(c, a.dimX, b.dimX, a.sigma, b_op);
  Matrix op_backward =
      hom_backward(c, a.dimX, b.dimX, c.ov(a.dimX, a_op), b_op_inv);
  return {op_backward, op_forward};
}

Report check_homs(const Intertwiner& a, const Intertwiner& b) {
  Report r("inner homs");
  Intertwiner l = left_hom(a, b);
  Matrix li = left_hom_inverse(a, b);
  r.add("left hom is an object", check_object(l).passed());
  r.expect_identity("⟨σ_A,σ_B⟩_l · displayed inverse", l.sigma * li);
  r.expect_identity("displayed inverse · ⟨σ_A,σ_B⟩_l", li * l.sigma);

  Intertwiner rh = right_hom(a, b);
  Matrix ri = right_hom_inverse(a, b);
  r.add("right hom is an object", check_object(rh).passed());
  r.expect_identity("⟨σ_A,σ_B⟩_r · displayed inverse", rh.sigma * ri);
  r.expect_identity("displayed inverse · ⟨σ_A,σ_B⟩_r", ri * rh.sigma);

  auto [op_s, op_inv] = right_hom_via_opposite(a, b);
  r.expect_equal("right hom agrees with the reversed-tensor route", rh.sigma,
                 op_s);
  r.expect_equal("right inverse agrees with the reversed-tensor route", ri,
                 op_inv);
  return r;
}

Report check_closure_units(const Intertwiner& a, const Intertwiner& b) {
  Report r("closure units");
  std::size_t dA = a.dimX, dB = b.dimX;
  auto ip = id(a.dimP());

  // Left: η_B : B -> [A, B⊗A] and ε_B : [A,B]⊗A -> B.
  Intertwiner hl_ba = left_hom(a, tensor_objects(b, a));
  Matrix eta = hom_unit(dA, dB);
  r.expect_equal("(Pη_B)σ_B = ⟨σ_A,σ_B⊗σ_A⟩_l(η_B P)", kron(ip, eta) * b.sigma,
                 hl_ba.sigma * kron(eta, ip));
  Intertwiner hl = left_hom(a, b);
  Matrix eps = hom_counit(dA, dB);
  Matrix hl_a = tensor_objects(hl, a).sigma;
  r.expect_equal("σ_B(ε_B P) = (Pε_B)(⟨σ_A,σ_B⟩_l⊗σ_A)", b.sigma * kron(eps, ip),
                 kron(ip, eps) * hl_a);

  // Right: Γ_B : B -> [A, A⊗B] and Θ_B : A⊗[A,B] -> B.
  Intertwiner hr_ab = right_hom(a, tensor_objects(a, b));
  Matrix gamma = rhom_unit(dA, dB);
  r.expect_equal("(PΓ_B)σ_B = ⟨σ_A,σ_A⊗σ_B⟩_r(Γ_B P)",
                 kron(ip, gamma) * b.sigma, hr_ab.sigma * kron(gamma, ip));
  Intertwiner hr = right_hom(a, b);
  Matrix theta = rhom_counit(dA, dB);
  Matrix a_hr = tensor_objects(a, hr).sigma;
  r.expect_equal("σ_B(Θ_B P) = (PΘ_B)(σ_A⊗⟨σ_A,σ_B⟩_r)",
                 b.sigma * kron(theta, ip), kron(ip, theta) * a_hr);
  return r;
}

}  // namespace pivcat
