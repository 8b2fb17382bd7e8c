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

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pivcat {

/** Elements are indices 0..order-1 into the multiplication table. */
using Element = std::size_t;

/**
 * A finite group given by its table. The constructor checks closure,
 * associativity, a two-sided identity and inverses, and throws InputError
 * otherwise.
 */
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> names,
              std::vector<std::vector<Element>> mul);

  static FiniteGroup cyclic(std::size_t n);
  /** S₃ with permutations composed left to right, so (13)(12) = (132). */
  static FiniteGroup symmetric3();

  std::size_t order() const { return names_.size(); }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mul_.at(a).at(b); }
  Element inverse(Element a) const { return inv_.at(a); }
  const std::string& name(Element a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  /** Throws ElementNotInGroup. */
  Element index_of(const std::string& name) const;
  void require(Element a) const;
  /** h ↦ g h g⁻¹. */
  Element conjugate(Element g, Element h) const {
    return mul(mul(g, h), inverse(g));
  }
  /** Orbits of h ↦ g h g⁻¹, each sorted, ordered by smallest element. */
  std::vector<std::vector<Element>> conjugation_orbits(Element g) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Element>> mul_;
  std::vector<Element> inv_;
  Element identity_ = 0;
};

/** {"elements": [names], "mul": [[names or indices]]}. */
FiniteGroup group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const FiniteGroup& g);

}  // namespace pivcat
