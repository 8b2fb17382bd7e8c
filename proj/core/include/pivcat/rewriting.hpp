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
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "pivcat/ncpoly.hpp"
#include "pivcat/presentation.hpp"

namespace pivcat {

/** Oriented rule lhs -> rhs with every word of rhs below lhs in deglex. */
struct Rule {
  Word lhs;
  NCPoly rhs;
};

/**
 * Rewriting system from degree-bounded completion. All overlaps whose
 * overlap word has length <= bound are resolved; overlaps above the bound
 * are only tested afterwards and reported.
 */
class RewriteSystem {
 public:
  enum class Status {
    kConfluentToBound,  // unique normal forms up to the bound
    kComplete,          // every overlap resolves: a finite Gröbner basis
  };

  RewriteSystem() = default;
  RewriteSystem(std::vector<Rule> rules, std::size_t bound,
                std::vector<std::string> names);

  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t bound() const { return bound_; }
  Status status() const { return status_; }
  std::size_t overlaps_resolved() const { return overlaps_resolved_; }
  std::size_t overlaps_above_bound() const { return overlaps_above_; }
  std::size_t overlaps_above_bound_unresolved() const {
    return overlaps_above_unresolved_;
  }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t alphabet_size() const { return names_.size(); }

  /** Position and rule index of the first reducible subword, if any. */
  bool find_redex(const Word& w, std::size_t& pos, std::size_t& rule) const;
  bool is_irreducible(const Word& w) const {
    std::size_t p, r;
    return !find_redex(w, p, r);
  }
  /** Rewrites to a fixpoint without checking the degree bound. */
  NCPoly reduce(const NCPoly& p) const;

  nlohmann::json to_json() const;

 private:
  friend RewriteSystem complete(const Presentation&, std::size_t);
  void index();

  std::vector<Rule> rules_;
  std::size_t bound_ = 0;
  std::vector<std::string> names_;
  Status status_ = Status::kConfluentToBound;
  std::size_t overlaps_resolved_ = 0;
  std::size_t overlaps_above_ = 0;
  std::size_t overlaps_above_unresolved_ = 0;
  std::unordered_map<Word, std::size_t> by_lhs_;
  std::vector<std::size_t> lhs_lengths_;
};

/**
 * Bounded Buchberger-Mora completion of the relations of pres in deglex
 * order. Requires d >= 2; throws NonTerminating if a nonzero constant
 * appears (no rule can orient it).
 */
RewriteSystem complete(const Presentation& pres, std::size_t d);

/** Throws DegreeExceeded when deg p exceeds the system's bound. */
NCPoly normal_form(const NCPoly& p, const RewriteSystem& rs);

/** Irreducible words of length <= max_degree in deglex order. */
std::vector<Word> normal_words(const RewriteSystem& rs,
                               std::size_t max_degree);

}  // namespace pivcat
