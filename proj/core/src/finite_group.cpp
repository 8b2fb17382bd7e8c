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


#include "pivcat/finite_group.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "pivcat/errors.hpp"

namespace pivcat {

FiniteGroup::FiniteGroup(std::vector<std::string> names,
                         std::vector<std::vector<Element>> mul)
    : names_(std::move(names)), mul_(std::move(mul)) {
  std::size_t n = names_.size();
  if (n == 0) throw InputError("a group needs at least one element");
  if (mul_.size() != n) throw InputError("multiplication table has wrong size");
  for (const auto& row : mul_) {
    if (row.size() != n) throw InputError("multiplication table is not square");
    for (Element x : row) {
      if (x >= n) throw InputError("multiplication table leaves the group");
    }
  }
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("duplicate element names");
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) {
          throw InputError("multiplication is not associative at (" +
                           names_[a] + ", " + names_[b] + ", " + names_[c] +
                           ")");
        }
      }
    }
  }
  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) {
      ok = mul_[e][a] == a && mul_[a][e] == a;
    }
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InputError("no identity element");
  inv_.assign(n, n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (mul_[a][b] == identity_ && mul_[b][a] == identity_) inv_[a] = b;
    }
    if (inv_[a] == n) throw InputError("element " + names_[a] + " has no inverse");
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group of order 0");
  std::vector<std::string> names;
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(names), std::move(mul));
}

FiniteGroup FiniteGroup::symmetric3() {
  using Perm = std::array<int, 3>;  // image of 0, 1, 2
  const std::vector<std::pair<std::string, Perm>> elts = {
      {"e", {0, 1, 2}},     {"(12)", {1, 0, 2}},  {"(13)", {2, 1, 0}},
      {"(23)", {0, 2, 1}},  {"(123)", {1, 2, 0}}, {"(132)", {2, 0, 1}}};
  std::map<Perm, Element> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elts.size(); ++i) {
    index[elts[i].second] = i;
    names.push_back(elts[i].first);
  }
  std::vector<std::vector<Element>> mul(6, std::vector<Element>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      // Apply a first, then b.
      Perm c;
      for (int x = 0; x < 3; ++x) c[x] = elts[b].second[elts[a].second[x]];
      mul[a][b] = index.at(c);
    }
  }
  return FiniteGroup(std::move(names), std::move(mul));
}

Element FiniteGroup::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw ElementNotInGroup("'" + name + "' is not an element of the group");
  }
  return static_cast<Element>(it - names_.begin());
}

void FiniteGroup::require(Element a) const {
  if (a >= order()) {
    throw ElementNotInGroup("index " + std::to_string(a) +
                            " is outside a group of order " +
                            std::to_string(order()));
  }
}

std::vector<std::vector<Element>> FiniteGroup::conjugation_orbits(
    Element g) const {
  require(g);
  std::vector<bool> seen(order(), false);
  std::vector<std::vector<Element>> orbits;
  for (Element h = 0; h < order(); ++h) {
    if (seen[h]) continue;
    std::vector<Element> orbit;
    for (Element x = h; !seen[x]; x = conjugate(g, x)) {
      seen[x] = true;
      orbit.push_back(x);
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

FiniteGroup group_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> names = j.at("elements");
    const auto& rows = j.at("mul");
    std::vector<std::vector<Element>> mul;
    for (const auto& row : rows) {
      std::vector<Element> r;
      for (const auto& x : row) {
        if (x.is_string()) {
          auto it = std::find(names.begin(), names.end(), x.get<std::string>());
          if (it == names.end()) {
            throw InputError("table entry '" + x.get<std::string>() +
                             "' is not a listed element");
          }
          r.push_back(static_cast<Element>(it - names.begin()));
        } else {
          r.push_back(x.get<Element>());
        }
      }
      mul.push_back(std::move(r));
    }
    return FiniteGroup(std::move(names), std::move(mul));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed group table: ") + e.what());
  }
}

nlohmann::json group_to_json(const FiniteGroup& g) {
  nlohmann::json mul = nlohmann::json::array();
  for (Element a = 0; a < g.order(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (Element b = 0; b < g.order(); ++b) row.push_back(g.name(g.mul(a, b)));
    mul.push_back(row);
  }
  return {{"elements", g.names()}, {"mul", mul}};
}

}  // namespace pivcat
