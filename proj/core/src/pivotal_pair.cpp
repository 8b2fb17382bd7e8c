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

#include "pivcat/pivotal_pair.hpp"

#include "pivcat/errors.hpp"
#include "pivcat/json_io.hpp"
#include "pivcat/linalg.hpp"

namespace pivcat {
namespace {

Matrix left_snake_q(const PivotalPair& pp) {
  const auto iq = Matrix::identity(pp.dimQ);
  return kron(pp.evl, iq) * kron(iq, pp.cvl);
}

Matrix left_snake_p(const PivotalPair& pp) {
  const auto ip = Matrix::identity(pp.dimP);
  return kron(ip, pp.evl) * kron(pp.cvl, ip);
}

Matrix right_snake_p(const PivotalPair& pp) {
  const auto ip = Matrix::identity(pp.dimP);
  return kron(pp.evr, ip) * kron(ip, pp.cvr);
}

Matrix right_snake_q(const PivotalPair& pp) {
  const auto iq = Matrix::identity(pp.dimQ);
  return kron(iq, pp.evr) * kron(pp.cvr, iq);
}

void require_shape(const Matrix& m, std::size_t r, std::size_t c,
                   const char* what) {
  if (m.rows() != r || m.cols() != c) {
    throw ShapeMismatch(std::string(what) + " has shape " + m.shape_string() +
                        ", expected " + std::to_string(r) + "x" +
                        std::to_string(c));
  }
}

void require_pair_shapes(const PivotalPair& pp) {
  std::size_t pq = pp.dimP * pp.dimQ;
  require_shape(pp.cvl, pq, 1, "cvl");
  require_shape(pp.evl, 1, pq, "evl");
  require_shape(pp.cvr, pq, 1, "cvr");
  require_shape(pp.evr, 1, pq, "evr");
}

}  // namespace

PivotalPair from_matrix(std::size_t n, const Matrix& q) {
  if (q.rows() != n || q.cols() != n) {
    throw ShapeMismatch("twist matrix has shape " + q.shape_string() +
                        ", expected " + std::to_string(n) + "x" +
                        std::to_string(n));
  }
  Matrix p = invert(q);
  PivotalPair pp;
  pp.dimP = pp.dimQ = n;
  pp.cvl = Matrix(n * n, 1);
  pp.evl = Matrix(1, n * n);
  pp.cvr = Matrix(n * n, 1);
  pp.evr = Matrix(1, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    pp.cvl(i * n + i, 0) = Scalar(1);
    pp.evl(0, i * n + i) = Scalar(1);
    for (std::size_t j = 0; j < n; ++j) {
      pp.cvr(i * n + j, 0) = q(i, j);
      pp.evr(0, i * n + j) = p(i, j);
    }
  }
  return pp;
}

PivotalPair from_braided(const Matrix& cvl, const Matrix& evl) {
  if (cvl.cols() != 1 || evl.rows() != 1 || cvl.rows() != evl.cols()) {
    throw ShapeMismatch("cvl must be a column and evl a row of equal length");
  }
  // In Mat(k) a duality forces dim P = dim Q, so both are sqrt(len).
  std::size_t len = cvl.rows(), n = 0;
  while (n * n < len) ++n;
  if (n * n != len) {
    throw NotADuality("length " + std::to_string(len) +
                      " is not a product dimP*dimQ with dimP = dimQ");
  }
  PivotalPair pp;
  pp.dimP = pp.dimQ = n;
  pp.cvl = cvl;
  pp.evl = evl;
  if (!left_snake_q(pp).is_identity() || !left_snake_p(pp).is_identity()) {
    throw NotADuality("cvl and evl violate a left snake identity");
  }
  // Ψ_{P,Q} carries cvl to a coevaluation into Q⊗P; Ψ_{P,Q} again turns
  // evl into a pairing on P⊗Q.
  pp.cvr = flip(n, n) * cvl;
  pp.evr = evl * flip(n, n);
  return pp;
}

Report check_pair(const PivotalPair& pp) {
  Report r("pivotal pair");
  try {
    require_pair_shapes(pp);
  } catch (const ShapeMismatch& e) {
    r.add("shapes", false, e.what());
    return r;
  }
  r.add("dimP = dimQ", pp.dimP == pp.dimQ);
  r.expect_identity("left snake on Q", left_snake_q(pp));
  r.expect_identity("left snake on P", left_snake_p(pp));
  r.expect_identity("right snake on P", right_snake_p(pp));
  r.expect_identity("right snake on Q", right_snake_q(pp));
  return r;
}

Matrix twist_matrix(const PivotalPair& pp) {
  std::size_t n = pp.dimP;
  Matrix q(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q(i, j) = pp.cvr(i * n + j, 0);
  }
  return q;
}

Matrix left_transpose(const Matrix& f, const PivotalPair& pp1,
                      const PivotalPair& pp2) {
  require_shape(f, pp2.dimP, pp1.dimP, "morphism");
  const auto iq1 = Matrix::identity(pp1.dimQ);
  const auto iq2 = Matrix::identity(pp2.dimQ);
  return kron(pp2.evl, iq1) * kron_all({iq2, f, iq1}) * kron(iq2, pp1.cvl);
}

Matrix right_transpose(const Matrix& f, const PivotalPair& pp1,
                       const PivotalPair& pp2) {
  require_shape(f, pp2.dimP, pp1.dimP, "morphism");
  const auto iq1 = Matrix::identity(pp1.dimQ);
  const auto iq2 = Matrix::identity(pp2.dimQ);
  return kron(iq1, pp2.evr) * kron_all({iq1, f, iq2}) * kron(pp1.cvr, iq2);
}

bool is_pivotal_morphism(const Matrix& f, const PivotalPair& pp1,
                         const PivotalPair& pp2) {
  return left_transpose(f, pp1, pp2) == right_transpose(f, pp1, pp2);
}

PivotalPair tensor_pairs(const PivotalPair& a, const PivotalPair& b) {
  const auto ip1 = Matrix::identity(a.dimP);
  const auto ip2 = Matrix::identity(b.dimP);
  const auto iq1 = Matrix::identity(a.dimQ);
  const auto iq2 = Matrix::identity(b.dimQ);
  PivotalPair t;
  t.dimP = a.dimP * b.dimP;
  t.dimQ = b.dimQ * a.dimQ;
  t.cvl = kron_all({ip1, b.cvl, iq1}) * a.cvl;
  t.evl = b.evl * kron_all({iq2, a.evl, ip2});
  t.cvr = kron_all({iq2, a.cvr, ip2}) * b.cvr;
  t.evr = a.evr * kron_all({ip1, b.evr, iq1});
  return t;
}

PivotalPair dual_pair(const PivotalPair& pp) {
  PivotalPair d;
  d.dimP = pp.dimQ;
  d.dimQ = pp.dimP;
  d.cvl = pp.cvr;
  d.evl = pp.evr;
  d.cvr = pp.cvl;
  d.evr = pp.evl;
  return d;
}

Matrix antisymmetrizer(std::size_t n) {
  std::size_t m = n * (n - 1) / 2;
  Matrix pi(m, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++row) {
      pi(row, i * n + j) = Scalar(1);
      pi(row, j * n + i) = Scalar(-1);
    }
  }
  return pi;
}

nlohmann::json pair_to_json(const PivotalPair& pp) {
  return {{"dimP", pp.dimP},
          {"dimQ", pp.dimQ},
          {"cvl", matrix_to_json(pp.cvl)},
          {"evl", matrix_to_json(pp.evl)},
          {"cvr", matrix_to_json(pp.cvr)},
          {"evr", matrix_to_json(pp.evr)}};
}

PivotalPair pair_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("pair must be a JSON object");
  PivotalPair pp;
  try {
    pp.dimP = j.at("dimP").get<std::size_t>();
    pp.dimQ = j.value("dimQ", pp.dimP);
    pp.cvl = matrix_from_json(j.at("cvl"));
    pp.evl = matrix_from_json(j.at("evl"));
    pp.cvr = matrix_from_json(j.at("cvr"));
    pp.evr = matrix_from_json(j.at("evr"));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("pair: ") + e.what());
  }
  try {
    require_pair_shapes(pp);
  } catch (const ShapeMismatch& e) {
    throw InputError(std::string("pair: ") + e.what());
  }
  return pp;
}

}  // namespace pivcat
