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

#include "pivcat/intertwiner.hpp"

#include "pivcat/errors.hpp"
#include "pivcat/json_io.hpp"
#include "pivcat/linalg.hpp"

namespace pivcat {
namespace {

Matrix id(std::size_t n) { return Matrix::identity(n); }

// Standard pairing Σ x_i⊗x_i as a row (1 x d²).
Matrix std_pairing(std::size_t d) {
  Matrix m(1, d * d);
  for (std::size_t i = 0; i < d; ++i) m(0, i * d + i) = Scalar(1);
  return m;
}

Matrix std_copairing(std::size_t d) { return std_pairing(d).transpose(); }

void require_same_pair(const Intertwiner& a, const Intertwiner& b) {
  if (a.pair != b.pair) {
    throw PairMismatch("objects live over different pivotal pairs");
  }
}

Matrix embed(std::size_t total, std::size_t offset, std::size_t d) {
  Matrix m(total, d);
  for (std::size_t i = 0; i < d; ++i) m(offset + i, i) = Scalar(1);
  return m;
}

}  // namespace

Intertwiner unit_object(const PivotalPair& pair) {
  return Intertwiner{1, id(pair.dimP), pair};
}

void require_sigma_shape(std::size_t dimX, const Matrix& sigma,
                         const PivotalPair& pair) {
  std::size_t n = dimX * pair.dimP;
  if (sigma.rows() != n || sigma.cols() != n) {
    throw ShapeMismatch("sigma has shape " + sigma.shape_string() +
                        ", expected " + std::to_string(n) + "x" +
                        std::to_string(n));
  }
}

std::pair<Matrix, Matrix> induced_q(const Intertwiner& obj) {
  require_sigma_shape(obj.dimX, obj.sigma, obj.pair);
  Matrix inv;
  try {
    inv = invert(obj.sigma);
  } catch (const SingularMatrix&) {
    throw SingularSigma("sigma is not invertible");
  }
  const auto& pp = obj.pair;
  auto iq = id(pp.dimQ), ix = id(obj.dimX);
  Matrix ov = kron_all({pp.evl, ix, iq}) * kron_all({iq, obj.sigma, iq}) *
              kron_all({iq, ix, pp.cvl});
  Matrix ov_inv = kron_all({iq, ix, pp.evr}) * kron_all({iq, inv, iq}) *
                  kron_all({pp.cvr, ix, iq});
  return {ov, ov_inv};
}

Report check_object(std::size_t dimX, const Matrix& sigma,
                    const PivotalPair& pair) {
  require_sigma_shape(dimX, sigma, pair);
  Report r("object of C(P,Q)");
  if (rank(sigma) != sigma.rows()) {
    r.add("sigma invertible", false);
    return r;
  }
  r.add("sigma invertible", true);
  auto [ov, ov_inv] = induced_q(Intertwiner{dimX, sigma, pair});
  r.expect_identity("ovσ·ovσ^-1 = id_{X⊗Q}", ov * ov_inv);
  r.expect_identity("ovσ^-1·ovσ = id_{Q⊗X}", ov_inv * ov);
  return r;
}

bool is_morphism(const Matrix& f, const Intertwiner& a, const Intertwiner& b) {
  require_same_pair(a, b);
  if (f.rows() != b.dimX || f.cols() != a.dimX) {
    throw ShapeMismatch("morphism has shape " + f.shape_string() +
                        ", expected " + std::to_string(b.dimX) + "x" +
                        std::to_string(a.dimX));
  }
  auto ip = id(a.dimP());
  return b.sigma * kron(f, ip) == kron(ip, f) * a.sigma;
}

std::vector<Matrix> morphism_basis(const Intertwiner& a,
                                   const Intertwiner& b) {
  require_same_pair(a, b);
  std::size_t ra = a.dimX, rb = b.dimX, p = a.dimP();
  auto ip = id(p);
  std::size_t out = rb * p * ra * p;
  Matrix lin(out, rb * ra);
  for (std::size_t u = 0; u < rb; ++u) {
    for (std::size_t v = 0; v < ra; ++v) {
      Matrix e(rb, ra);
      e(u, v) = Scalar(1);
      Matrix l = b.sigma * kron(e, ip) - kron(ip, e) * a.sigma;
      for (std::size_t k = 0; k < out; ++k) {
        lin(k, u * ra + v) = l.entries()[k];
      }
    }
  }
  Matrix ker = kernel(lin);
  std::vector<Matrix> basis;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Matrix f(rb, ra);
    for (std::size_t k = 0; k < rb * ra; ++k) f(k / ra, k % ra) = ker(k, c);
    basis.push_back(std::move(f));
  }
  return basis;
}

Intertwiner tensor_objects(const Intertwiner& a, const Intertwiner& b) {
  require_same_pair(a, b);
  Matrix s = kron(a.sigma, id(b.dimX)) * kron(id(a.dimX), b.sigma);
  return Intertwiner{a.dimX * b.dimX, std::move(s), a.pair};
}

Intertwiner direct_sum_objects(const Intertwiner& a, const Intertwiner& b) {
  require_same_pair(a, b);
  std::size_t t = a.dimX + b.dimX;
  auto ip = id(a.dimP());
  Matrix ia = embed(t, 0, a.dimX), ib = embed(t, a.dimX, b.dimX);
  Matrix s = kron(ip, ia) * a.sigma * kron(ia.transpose(), ip) +
             kron(ip, ib) * b.sigma * kron(ib.transpose(), ip);
  return Intertwiner{t, std::move(s), a.pair};
}

Intertwiner conjugate_object(const Intertwiner& a, const Matrix& t) {
  if (t.rows() != a.dimX || t.cols() != a.dimX) {
    throw ShapeMismatch("conjugating matrix has shape " + t.shape_string());
  }
  auto ip = id(a.dimP());
  Matrix s = kron(ip, t) * a.sigma * kron(invert(t), ip);
  return Intertwiner{a.dimX, std::move(s), a.pair};
}

DualObjects dual_objects(const Intertwiner& a) {
  const auto& pp = a.pair;
  std::size_t d = a.dimX;
  auto ip = id(pp.dimP), iq = id(pp.dimQ), ix = id(d);
  Matrix ev = std_pairing(d), cv = std_copairing(d);
  Matrix inv = invert(a.sigma);
  auto [ov, ov_inv] = induced_q(a);

  DualObjects out;
  out.left.dimX = d;
  out.left.pair = pp;
  out.left.sigma = kron_all({ev, ip, ix}) * kron_all({ix, inv, ix}) *
                   kron_all({ix, ip, cv});
  out.left_inverse_display =
      kron_all({pp.evr, ix, ip}) * kron_all({ip, ev, iq, ix, ip}) *
      kron_all({ip, ix, ov, ix, ip}) * kron_all({ip, ix, iq, cv, ip}) *
      kron_all({ip, ix, pp.cvr});

  out.right.dimX = d;
  out.right.pair = pp;
  out.right.sigma = kron_all({ip, ix, pp.evl}) *
                    kron_all({ip, ix, iq, ev, ip}) *
                    kron_all({ip, ix, ov_inv, ix, ip}) *
                    kron_all({ip, cv, iq, ix, ip}) * kron_all({pp.cvl, ix, ip});
  out.right_inverse_display = kron_all({ix, ip, ev}) *
                              kron_all({ix, a.sigma, ix}) *
                              kron_all({cv, ip, ix});
  return out;
}

Report check_duals(const Intertwiner& a) {
  Report r("duals");
  DualObjects du = dual_objects(a);
  std::size_t d = a.dimX;
  auto ix = id(d);
  Matrix ev = std_pairing(d), cv = std_copairing(d);
  Intertwiner one = unit_object(a.pair);

  Report lo = check_object(du.left);
  r.add("left dual is an object", lo.passed());
  r.expect_identity("σ_ᵛX · displayed inverse",
                    du.left.sigma * du.left_inverse_display);
  r.expect_identity("displayed inverse · σ_ᵛX",
                    du.left_inverse_display * du.left.sigma);
  r.add("evl_X : ᵛX⊗X -> 1 is a morphism",
        is_morphism(ev, tensor_objects(du.left, a), one));
  r.add("cvl_X : 1 -> X⊗ᵛX is a morphism",
        is_morphism(cv, one, tensor_objects(a, du.left)));
  r.expect_identity("left snake on X", kron(ix, ev) * kron(cv, ix));
  r.expect_identity("left snake on ᵛX", kron(ev, ix) * kron(ix, cv));

  Report ro = check_object(du.right);
  r.add("right dual is an object", ro.passed());
  r.expect_identity("σ_Xᵛ · displayed inverse",
                    du.right.sigma * du.right_inverse_display);
  r.expect_identity("displayed inverse · σ_Xᵛ",
                    du.right_inverse_display * du.right.sigma);
  r.add("evr_X : X⊗Xᵛ -> 1 is a morphism",
        is_morphism(ev, tensor_objects(a, du.right), one));
  r.add("cvr_X : 1 -> Xᵛ⊗X is a morphism",
        is_morphism(cv, one, tensor_objects(du.right, a)));
  return r;
}

Matrix pivot_map(const PivotalPair& pp) {
  auto ip = id(pp.dimP);
  return kron(pp.evl, ip) * kron(flip(pp.dimP, pp.dimQ), ip) *
         kron(ip, pp.cvr);
}

Report lift_pivotal(const Intertwiner& a) {
  if (!pivot_map(a.pair).is_identity()) {
    throw HypothesisFailed(
        "the pivotal structure of Mat(k) is not the identity on P for this "
        "pair");
  }
  Report r("pivotal lift");
  Intertwiner ll = dual_objects(dual_objects(a).left).left;
  Intertwiner rr = dual_objects(dual_objects(a).right).right;
  auto ix = id(a.dimX);
  r.add("ϱ_X : X -> ᵛᵛX is a morphism", is_morphism(ix, a, ll));
  r.add("ϱ_X : X -> Xᵛᵛ is a morphism", is_morphism(ix, a, rr));
  return r;
}

nlohmann::json object_to_json(const Intertwiner& obj) {
  return {{"dimX", obj.dimX},
          {"sigma", matrix_to_json(obj.sigma)},
          {"pair", pair_to_json(obj.pair)}};
}

Intertwiner object_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("object must be a JSON object");
  Intertwiner o;
  try {
    o.dimX = j.at("dimX").get<std::size_t>();
    o.sigma = matrix_from_json(j.at("sigma"));
    o.pair = pair_from_json(j.at("pair"));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("object: ") + e.what());
  }
  try {
    require_sigma_shape(o.dimX, o.sigma, o.pair);
  } catch (const ShapeMismatch& e) {
    throw InputError(std::string("object: ") + e.what());
  }
  return o;
}

}  // namespace pivcat
