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

#include "pivcat/diagram.hpp"

#include "pivcat/errors.hpp"
#include "pivcat/json_io.hpp"

namespace pivcat {
namespace {

void require_indices(const PivotalDiagram& d, const DiagramIntertwiner& o) {
  if (o.sigmas.size() != d.pairs.size()) {
    throw IndexMismatch("diagram has " + std::to_string(d.pairs.size()) +
                        " pairs but the object has " +
                        std::to_string(o.sigmas.size()) + " intertwinings");
  }
  for (std::size_t j = 0; j < d.arrows.size(); ++j) {
    const auto& a = d.arrows[j];
    if (a.source >= d.pairs.size() || a.target >= d.pairs.size()) {
      throw IndexMismatch("arrow " + std::to_string(j) +
                          " points outside the pair family");
    }
  }
}

}  // namespace

Report diagram_check(const PivotalDiagram& d, const DiagramIntertwiner& obj) {
  require_indices(d, obj);
  Report r("pivotal diagram object");
  for (std::size_t j = 0; j < d.arrows.size(); ++j) {
    const auto& a = d.arrows[j];
    r.add("arrow " + std::to_string(j) + " is pivotal",
          is_pivotal_morphism(a.f, d.pairs[a.source], d.pairs[a.target]));
  }
  for (std::size_t i = 0; i < d.pairs.size(); ++i) {
    Report c = check_object(obj.dimX, obj.sigmas[i], d.pairs[i]);
    r.add("component " + std::to_string(i) + " is an object", c.passed());
  }
  auto ix = Matrix::identity(obj.dimX);
  for (std::size_t j = 0; j < d.arrows.size(); ++j) {
    const auto& a = d.arrows[j];
    r.expect_equal("square for arrow " + std::to_string(j),
                   kron(a.f, ix) * obj.sigmas[a.source],
                   obj.sigmas[a.target] * kron(ix, a.f));
  }
  return r;
}

DiagramIntertwiner tensor_diagram_objects(const PivotalDiagram& d,
                                          const DiagramIntertwiner& a,
                                          const DiagramIntertwiner& b) {
  require_indices(d, a);
  require_indices(d, b);
  DiagramIntertwiner t;
  t.dimX = a.dimX * b.dimX;
  for (std::size_t i = 0; i < d.pairs.size(); ++i) {
    Intertwiner x{a.dimX, a.sigmas[i], d.pairs[i]};
    Intertwiner y{b.dimX, b.sigmas[i], d.pairs[i]};
    t.sigmas.push_back(tensor_objects(x, y).sigma);
  }
  return t;
}

nlohmann::json diagram_to_json(const PivotalDiagram& d) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : d.pairs) pairs.push_back(pair_to_json(p));
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& a : d.arrows) {
    arrows.push_back(
        {{"source", a.source}, {"target", a.target}, {"f", matrix_to_json(a.f)}});
  }
  return {{"pairs", pairs}, {"arrows", arrows}};
}

PivotalDiagram diagram_from_json(const nlohmann::json& j) {
  PivotalDiagram d;
  try {
    for (const auto& p : j.at("pairs")) d.pairs.push_back(pair_from_json(p));
    if (j.contains("arrows")) {
      for (const auto& a : j.at("arrows")) {
        d.arrows.push_back({a.at("source").get<std::size_t>(),
                            a.at("target").get<std::size_t>(),
                            matrix_from_json(a.at("f"))});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("diagram: ") + e.what());
  }
  return d;
}

nlohmann::json diagram_object_to_json(const DiagramIntertwiner& o) {
  nlohmann::json s = nlohmann::json::array();
  for (const auto& m : o.sigmas) s.push_back(matrix_to_json(m));
  return {{"dimX", o.dimX}, {"sigmas", s}};
}

DiagramIntertwiner diagram_object_from_json(const nlohmann::json& j) {
  DiagramIntertwiner o;
  try {
    o.dimX = j.at("dimX").get<std::size_t>();
    for (const auto& m : j.at("sigmas")) o.sigmas.push_back(matrix_from_json(m));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("diagram object: ") + e.what());
  }
  return o;
}

}  // namespace pivcat
