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

#include "pivcat/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pivcat/errors.hpp"

namespace pivcat {

RewriteSystem::RewriteSystem(std::vector<Rule> rules, std::size_t bound,
                             std::vector<std::string> names)
    : rules_(std::move(rules)), bound_(bound), names_(std::move(names)) {
  index();
}

void RewriteSystem::index() {
  by_lhs_.clear();
  lhs_lengths_.clear();
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    by_lhs_[rules_[i].lhs] = i;
    lhs_lengths_.push_back(rules_[i].lhs.size());
  }
  std::sort(lhs_lengths_.begin(), lhs_lengths_.end());
  lhs_lengths_.erase(std::unique(lhs_lengths_.begin(), lhs_lengths_.end()),
                     lhs_lengths_.end());
}

bool RewriteSystem::find_redex(const Word& w, std::size_t& pos,
                               std::size_t& rule) const {
  for (std::size_t s = 0; s < w.size(); ++s) {
    for (std::size_t len : lhs_lengths_) {
      if (s + len > w.size()) break;
      auto it = by_lhs_.find(w.substr(s, len));
      if (it != by_lhs_.end()) {
        pos = s;
        rule = it->second;
        return true;
      }
    }
  }
  return false;
}

NCPoly RewriteSystem::reduce(const NCPoly& p) const {
  NCPoly todo = p, done;
  while (!todo.is_zero()) {
    Word w = todo.leading_word();
    Scalar c = todo.leading_coeff();
    todo.add_term(w, -c);
    std::size_t pos, r;
    if (!find_redex(w, pos, r)) {
      done.add_term(w, c);
      continue;
    }
    const Rule& rule = rules_[r];
    Word x = w.substr(0, pos), y = w.substr(pos + rule.lhs.size());
    for (const auto& [rw, rc] : rule.rhs.terms()) {
      todo.add_term(x + rw + y, c * rc);
    }
  }
  return done;
}

nlohmann::json RewriteSystem::to_json() const {
  nlohmann::json rules = nlohmann::json::array();
  for (const auto& r : rules_) {
    rules.push_back({{"lhs", word_to_string(r.lhs, names_)},
                     {"rhs", r.rhs.to_string(names_)}});
  }
  return {{"bound", bound_},
          {"rules", rules},
          {"rule_count", rules_.size()},
          {"status", status_ == Status::kComplete ? "complete"
                                                  : "confluent-to-bound"},
          {"overlaps_resolved", overlaps_resolved_},
          {"overlaps_above_bound", overlaps_above_},
          {"overlaps_above_bound_unresolved", overlaps_above_unresolved_}};
}

namespace {

// Turns a nonzero polynomial into a monic rule.
Rule orient(NCPoly p) {
  if (p.leading_word().empty()) {
    throw NonTerminating(
        "completion produced a nonzero constant; no rule can orient it");
  }
  Scalar lc = p.leading_coeff();
  p *= lc.inverse();
  Rule r;
  r.lhs = p.leading_word();
  p.add_term(r.lhs, Scalar(-1));
  r.rhs = p * Scalar(-1);
  return r;
}

// Overlaps lhs_a = xU, lhs_b = Uy with U, x, y nonempty; returns |U| list.
std::vector<std::size_t> overlap_lengths(const Word& a, const Word& b) {
  std::vector<std::size_t> out;
  std::size_t m = std::min(a.size(), b.size());
  for (std::size_t k = 1; k < m + 1; ++k) {
    if (k == a.size() || k == b.size()) continue;
    if (a.compare(a.size() - k, k, b, 0, k) == 0) out.push_back(k);
  }
  return out;
}

NCPoly s_poly(const Rule& a, const Rule& b, std::size_t k) {
  Word x = a.lhs.substr(0, a.lhs.size() - k);
  Word y = b.lhs.substr(k);
  return a.rhs.sandwich(Word(), y) - b.rhs.sandwich(x, Word());
}

}  // namespace

RewriteSystem complete(const Presentation& pres, std::size_t d) {
  if (d < 2) throw DegreeExceeded("completion needs a degree bound >= 2");
  RewriteSystem rs({}, d, pres.names);
  std::deque<NCPoly> queue(pres.relations.begin(), pres.relations.end());
  std::set<std::string> seen;

  for (;;) {
    while (!queue.empty()) {
      NCPoly p = rs.reduce(queue.front());
      queue.pop_front();
      if (p.is_zero()) continue;
      Rule r = orient(std::move(p));
      // Rules whose left side contains the new one are retired and their
      // content requeued.
      std::vector<Rule> kept;
      for (auto& old : rs.rules_) {
        if (old.lhs.find(r.lhs) != Word::npos) {
          NCPoly back = NCPoly::monomial(old.lhs) - old.rhs;
          queue.push_back(std::move(back));
        } else {
          kept.push_back(std::move(old));
        }
      }
      kept.push_back(std::move(r));
      rs.rules_ = std::move(kept);
      rs.index();
    }
    for (auto& rule : rs.rules_) rule.rhs = rs.reduce(rule.rhs);

    bool added = false;
    for (const auto& a : rs.rules_) {
      for (const auto& b : rs.rules_) {
        for (std::size_t k : overlap_lengths(a.lhs, b.lhs)) {
          std::size_t len = a.lhs.size() + b.lhs.size() - k;
          if (len > d) continue;
          std::string key = a.lhs + '\x7f' + b.lhs + '\x7f' +
                            static_cast<char>(k);
          if (!seen.insert(key).second) continue;
          NCPoly s = rs.reduce(s_poly(a, b, k));
          if (!s.is_zero()) {
            queue.push_back(std::move(s));
            added = true;
          }
        }
      }
    }
    if (added || !queue.empty()) continue;
    // Fixpoint reached; confirm every overlap within the bound against the
    // final rule set before accepting it.
    std::size_t checked = 0;
    for (const auto& a : rs.rules_) {
      for (const auto& b : rs.rules_) {
        for (std::size_t k : overlap_lengths(a.lhs, b.lhs)) {
          if (a.lhs.size() + b.lhs.size() - k > d) continue;
          ++checked;
          NCPoly s = rs.reduce(s_poly(a, b, k));
          if (!s.is_zero()) queue.push_back(std::move(s));
        }
      }
    }
    if (queue.empty()) {
      rs.overlaps_resolved_ = checked;
      break;
    }
    seen.clear();
  }

  std::size_t above = 0, unresolved = 0;
  for (const auto& a : rs.rules_) {
    for (const auto& b : rs.rules_) {
      for (std::size_t k : overlap_lengths(a.lhs, b.lhs)) {
        if (a.lhs.size() + b.lhs.size() - k <= d) continue;
        ++above;
        if (!rs.reduce(s_poly(a, b, k)).is_zero()) ++unresolved;
      }
    }
  }
  rs.overlaps_above_ = above;
  rs.overlaps_above_unresolved_ = unresolved;
  rs.status_ = unresolved == 0 ? RewriteSystem::Status::kComplete
                               : RewriteSystem::Status::kConfluentToBound;
  return rs;
}

NCPoly normal_form(const NCPoly& p, const RewriteSystem& rs) {
  if (p.degree() > rs.bound()) {
    throw DegreeExceeded("degree " + std::to_string(p.degree()) +
                         " exceeds the completion bound " +
                         std::to_string(rs.bound()));
  }
  return rs.reduce(p);
}

std::vector<Word> normal_words(const RewriteSystem& rs,
                               std::size_t max_degree) {
  std::vector<Word> out{Word()};
  std::vector<Word> layer{Word()};
  for (std::size_t len = 1; len <= max_degree; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (std::size_t a = 0; a < rs.alphabet_size(); ++a) {
        Word v = w + static_cast<char>(a);
        // Only suffixes can create a new redex.
        bool ok = true;
        for (const auto& r : rs.rules()) {
          if (r.lhs.size() <= v.size() &&
              v.compare(v.size() - r.lhs.size(), r.lhs.size(), r.lhs) == 0) {
            ok = false;
            break;
          }
        }
        if (ok) next.push_back(std::move(v));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace pivcat
