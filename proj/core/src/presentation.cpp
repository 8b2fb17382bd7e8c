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

#include "pivcat/presentation.hpp"

#include "pivcat/errors.hpp"
#include "pivcat/json_io.hpp"
#include "pivcat/linalg.hpp"

namespace pivcat {

Presentation build_presentation(std::size_t n, const Matrix& q) {
  if (n == 0) throw ShapeMismatch("n must be positive");
  if (q.rows() != n || q.cols() != n) {
    throw ShapeMismatch("twist matrix has shape " + q.shape_string() +
                        ", expected " + std::to_string(n) + "x" +
                        std::to_string(n));
  }
  Presentation pr;
  pr.n = n;
  pr.q = q;
  pr.p = invert(q);
  const Matrix& p = pr.p;

  pr.names.resize(2 * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::string idx =
          "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
      pr.names[pr.f(i, j)] = "f" + idx;
      pr.names[pr.e(i, j)] = "e" + idx;
    }
  }
  auto L = [](int id) { return Word(1, static_cast<char>(id)); };
  auto delta_ik = [](std::size_t i, std::size_t k) {
    return Scalar(i == k ? 1 : 0);
  };

  for (int family = 0; family < 4; ++family) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        NCPoly r;
        switch (family) {
          case 0:
            for (std::size_t j = 0; j < n; ++j) {
              r.add_term(L(pr.f(j, k)) + L(pr.e(j, i)), Scalar(1));
            }
            r.add_term(Word(), -p(i, k));
            break;
          case 1:
            for (std::size_t j = 0; j < n; ++j) {
              r.add_term(L(pr.f(i, j)) + L(pr.e(k, j)), Scalar(1));
            }
            r.add_term(Word(), -p(i, k));
            break;
          case 2:
            for (std::size_t j = 0; j < n; ++j) {
              for (std::size_t l = 0; l < n; ++l) {
                r.add_term(L(pr.e(j, i)) + L(pr.f(l, k)), q(j, l));
              }
            }
            r.add_term(Word(), -delta_ik(i, k));
            break;
          default:
            for (std::size_t j = 0; j < n; ++j) {
              for (std::size_t l = 0; l < n; ++l) {
                r.add_term(L(pr.e(i, j)) + L(pr.f(k, l)), q(l, j));
              }
            }
            r.add_term(Word(), -delta_ik(i, k));
            break;
        }
        pr.relations.push_back(std::move(r));
      }
    }
  }

  std::size_t a = 2 * n * n;
  pr.delta.resize(a);
  pr.counit.resize(a);
  pr.antipode.resize(a);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      TensorPoly de, df;
      NCPoly se, sf;
      for (std::size_t j = 0; j < n; ++j) {
        de.add_term(L(pr.e(i, j)), L(pr.e(j, k)), Scalar(1));
        for (std::size_t l = 0; l < n; ++l) {
          df.add_term(L(pr.f(i, j)), L(pr.f(l, k)), q(j, l));
        }
        se.add_term(L(pr.f(k, j)), q(j, i));
        sf.add_term(L(pr.e(k, j)), p(i, j));
      }
      pr.delta[pr.e(i, k)] = de;
      pr.delta[pr.f(i, k)] = df;
      pr.counit[pr.e(i, k)] = delta_ik(i, k);
      pr.counit[pr.f(i, k)] = p(i, k);
      pr.antipode[pr.e(i, k)] = se;
      pr.antipode[pr.f(i, k)] = sf;
    }
  }
  return pr;
}

TensorPoly Presentation::delta_of(const Word& w) const {
  TensorPoly acc;
  acc.add_term(Word(), Word(), Scalar(1));
  for (char c : w) acc = acc * delta.at(static_cast<unsigned char>(c));
  return acc;
}

TensorPoly Presentation::delta_of(const NCPoly& poly) const {
  TensorPoly acc;
  for (const auto& [w, c] : poly.terms()) {
    TensorPoly t = delta_of(w);
    for (const auto& [k, tc] : t.terms()) acc.add_term(k.first, k.second, c * tc);
  }
  return acc;
}

Scalar Presentation::counit_of(const Word& w) const {
  Scalar acc(1);
  for (char c : w) {
    acc *= counit.at(static_cast<unsigned char>(c));
    if (acc.is_zero()) break;
  }
  return acc;
}

Scalar Presentation::counit_of(const NCPoly& poly) const {
  Scalar acc(0);
  for (const auto& [w, c] : poly.terms()) acc += c * counit_of(w);
  return acc;
}

NCPoly Presentation::antipode_of(const Word& w) const {
  NCPoly acc = NCPoly::constant(Scalar(1));
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    acc = acc * antipode.at(static_cast<unsigned char>(*it));
  }
  return acc;
}

NCPoly Presentation::antipode_of(const NCPoly& poly) const {
  NCPoly acc;
  for (const auto& [w, c] : poly.terms()) acc += antipode_of(w) * c;
  return acc;
}

namespace {

nlohmann::json word_json(const Word& w, const std::vector<std::string>& names) {
  nlohmann::json a = nlohmann::json::array();
  for (char c : w) a.push_back(names.at(static_cast<unsigned char>(c)));
  return a;
}

nlohmann::json poly_json(const NCPoly& p,
                         const std::vector<std::string>& names) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [w, c] : p.terms()) {
    a.push_back({c.to_string(), word_json(w, names)});
  }
  return a;
}

}  // namespace

nlohmann::json presentation_to_json(const Presentation& pres) {
  nlohmann::json j;
  j["n"] = pres.n;
  j["Q"] = matrix_to_json(pres.q);
  j["generators"] = pres.names;
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& r : pres.relations) rel.push_back(poly_json(r, pres.names));
  j["relations"] = rel;
  nlohmann::json delta = nlohmann::json::object();
  nlohmann::json counit = nlohmann::json::object();
  nlohmann::json antipode = nlohmann::json::object();
  for (std::size_t g = 0; g < pres.alphabet_size(); ++g) {
    nlohmann::json d = nlohmann::json::array();
    for (const auto& [k, c] : pres.delta[g].terms()) {
      d.push_back({c.to_string(), word_json(k.first, pres.names),
                   word_json(k.second, pres.names)});
    }
    delta[pres.names[g]] = d;
    counit[pres.names[g]] = pres.counit[g].to_string();
    antipode[pres.names[g]] = poly_json(pres.antipode[g], pres.names);
  }
  j["delta"] = delta;
  j["counit"] = counit;
  j["antipode"] = antipode;
  return j;
}

}  // namespace pivcat
