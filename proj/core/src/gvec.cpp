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


#include "pivcat/gvec.hpp"

#include <algorithm>
#include <functional>

#include "pivcat/errors.hpp"
#include "pivcat/intertwiner.hpp"
#include "pivcat/linalg.hpp"
#include "pivcat/term.hpp"
#include "parallel.hpp"

namespace pivcat {

GradedPair graded_pair(const FiniteGroup& G, Element g) {
  G.require(g);
  GradedPair gp;
  gp.g = g;
  gp.g_inv = G.inverse(g);
  gp.p = GradedSpace{{g}};
  gp.q = GradedSpace{{gp.g_inv}};
  GradedSpace unit{{G.identity()}};
  Matrix one = Matrix::identity(1);
  gp.cvl = GradedMatrix(unit, tensor_spaces(G, gp.p, gp.q), one);
  gp.evl = GradedMatrix(tensor_spaces(G, gp.q, gp.p), unit, one);
  gp.cvr = GradedMatrix(unit, tensor_spaces(G, gp.q, gp.p), one);
  gp.evr = GradedMatrix(tensor_spaces(G, gp.p, gp.q), unit, one);
  gp.pair = from_matrix(1, one);
  return gp;
}

Report check_graded_pair(const FiniteGroup& G, const GradedPair& gp) {
  Report r("graded pivotal pair");
  r.info()["P"] = G.name(gp.g);
  r.info()["Q"] = G.name(gp.g_inv);
  r.add_section(check_pair(gp.pair));

  GradedAssignment a;
  a.group = &G;
  a.objects = {{"P", gp.p}, {"Q", gp.q}};
  a.morphisms = {{"cvl", gp.cvl}, {"evl", gp.evl},
                 {"cvr", gp.cvr}, {"evr", gp.evr}};
  ObjectWord P{"P"}, Q{"Q"};
  Term cvl = Term::gen("cvl", {}, {"P", "Q"});
  Term evl = Term::gen("evl", {"Q", "P"}, {});
  Term cvr = Term::gen("cvr", {}, {"Q", "P"});
  Term evr = Term::gen("evr", {"P", "Q"}, {});
  auto id = [](const ObjectWord& w) { return Term::id(w); };
  const std::vector<std::pair<std::string, Term>> snakes = {
      {"left snake on Q in vec_G",
       compose(tensor(evl, id(Q)), tensor(id(Q), cvl))},
      {"left snake on P in vec_G",
       compose(tensor(id(P), evl), tensor(cvl, id(P)))},
      {"right snake on P in vec_G",
       compose(tensor(evr, id(P)), tensor(id(P), cvr))},
      {"right snake on Q in vec_G",
       compose(tensor(id(Q), evr), tensor(cvr, id(Q)))}};
  for (const auto& [name, t] : snakes) {
    try {
      GradedMatrix v = evaluate_graded(t, a);
      r.expect_identity(name, v.dense());
    } catch (const GradeMismatch& e) {
      r.add(name, false, e.what());
    }
  }
  return r;
}

std::size_t GradedObject::dim() const {
  std::size_t d = 0;
  for (const auto& [h, m] : multiplicity) d += m;
  return d;
}

GradedSpace GradedObject::space() const {
  GradedSpace s;
  for (const auto& [h, m] : multiplicity) s.grades.insert(s.grades.end(), m, h);
  return s;
}

nlohmann::json GradedObject::to_json(const FiniteGroup& G) const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [h, m] : multiplicity) {
    if (m > 0) j[G.name(h)] = m;
  }
  return j;
}

GradedSpace intertwining_source(const FiniteGroup& G, Element g,
                                const GradedObject& obj) {
  GradedSpace s = obj.space();
  for (Element& h : s.grades) h = G.mul(h, g);
  return s;
}

GradedSpace intertwining_target(const FiniteGroup& G, Element g,
                                const GradedObject& obj) {
  GradedSpace s = obj.space();
  for (Element& h : s.grades) h = G.mul(g, h);
  return s;
}

GradedMatrix graded_sigma(const FiniteGroup& G, Element g,
                          const GradedObject& obj, const Matrix& sigma) {
  G.require(g);
  return GradedMatrix(intertwining_source(G, g, obj),
                      intertwining_target(G, g, obj), sigma);
}

Report validate_graded_intertwiner(const FiniteGroup& G, Element g,
                                   const GradedObject& obj,
                                   const GradedMatrix& sigma) {
  G.require(g);
  for (const auto& [h, m] : obj.multiplicity) {
    (void)m;
    G.require(h);
  }
  GradedSpace src = intertwining_source(G, g, obj);
  GradedSpace tgt = intertwining_target(G, g, obj);
  if (sigma.source() != src || sigma.target() != tgt) {
    throw GradeMismatch("sigma is not graded over X⊗P → P⊗X");
  }
  Report r("graded intertwiner");
  r.info()["g"] = G.name(g);
  r.info()["support"] = obj.to_json(G);
  std::vector<Element> grades = src.grades;
  grades.insert(grades.end(), tgt.grades.begin(), tgt.grades.end());
  std::sort(grades.begin(), grades.end());
  grades.erase(std::unique(grades.begin(), grades.end()), grades.end());
  bool iso = true;
  for (Element k : grades) {
    Matrix b = sigma.block(k);
    bool ok = b.is_square() && rank(b) == b.rows();
    r.add("grade " + G.name(k) + " block invertible", ok,
          std::to_string(b.cols()) + " → " + std::to_string(b.rows()));
    iso = iso && ok;
  }
  if (iso) {
    Report base = check_object(obj.dim(), sigma.dense(), from_matrix(1, Matrix::identity(1)));
    r.add("induced Q-intertwinings are inverse", base.passed());
  }
  return r;
}

bool orbit_support_check(const FiniteGroup& G, Element g,
                         const GradedObject& obj) {
  G.require(g);
  auto mult = [&](Element h) {
    auto it = obj.multiplicity.find(h);
    return it == obj.multiplicity.end() ? std::size_t{0} : it->second;
  };
  for (const auto& [h, m] : obj.multiplicity) {
    G.require(h);
    if (m > 0 && mult(G.conjugate(g, h)) != m) return false;
  }
  return true;
}

bool admits_graded_iso(const FiniteGroup& G, Element g,
                       const GradedObject& obj) {
  return intertwining_source(G, g, obj).multiplicities() ==
         intertwining_target(G, g, obj).multiplicities();
}

GradedMatrix orbit_permutation(const FiniteGroup& G, Element g,
                               const GradedObject& obj) {
  GradedSpace x = obj.space();
  std::size_t d = x.dim();
  Matrix sigma(d, d);
  // Copy k of grade h goes to copy k of grade g⁻¹hg.
  std::map<Element, std::vector<std::size_t>> at;
  for (std::size_t i = 0; i < d; ++i) at[x.grades[i]].push_back(i);
  std::map<Element, std::size_t> used;
  for (std::size_t i = 0; i < d; ++i) {
    Element h = x.grades[i];
    Element target = G.conjugate(G.inverse(g), h);
    auto it = at.find(target);
    std::size_t k = used[h]++;
    if (it == at.end() || k >= it->second.size()) {
      throw GradeMismatch("support is not closed under conjugation by " +
                          G.name(g));
    }
    sigma(it->second[k], i) = Scalar(1);
  }
  return graded_sigma(G, g, obj, sigma);
}

std::vector<EnumeratedSupport> enumerate_supports(const FiniteGroup& G,
                                                  Element g,
                                                  std::size_t max_dim) {
  if (max_dim == 0) throw InputError("max dimension must be at least 1");
  std::vector<std::vector<Element>> orbits = G.conjugation_orbits(g);
  std::vector<GradedObject> objects;
  std::vector<std::size_t> mult(orbits.size(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t used) {
    if (i == orbits.size()) {
      if (used == 0) return;
      GradedObject o;
      for (std::size_t k = 0; k < orbits.size(); ++k) {
        if (mult[k] == 0) continue;
        for (Element h : orbits[k]) o.multiplicity[h] = mult[k];
      }
      objects.push_back(std::move(o));
      return;
    }
    for (std::size_t m = 0; used + m * orbits[i].size() <= max_dim; ++m) {
      mult[i] = m;
      rec(i + 1, used + m * orbits[i].size());
    }
    mult[i] = 0;
  };
  rec(0, 0);
  std::sort(objects.begin(), objects.end(),
            [](const GradedObject& a, const GradedObject& b) {
              return a.space().grades < b.space().grades;
            });

  std::vector<EnumeratedSupport> out(objects.size());
  detail::parallel_for(objects.size(), [&](std::size_t i) {
    EnumeratedSupport& e = out[i];
    e.object = objects[i];
    e.sigma = orbit_permutation(G, g, e.object);
    e.valid = validate_graded_intertwiner(G, g, e.object, e.sigma).passed();
    e.orbit_closed = orbit_support_check(G, g, e.object);
  });
  return out;
}

}  // namespace pivcat
