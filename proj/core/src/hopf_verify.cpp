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

#include "pivcat/hopf_verify.hpp"

#include <array>
#include <map>

#include "pivcat/errors.hpp"

namespace pivcat {
namespace {

using Triple = std::array<Word, 3>;
using TripleSum = std::map<Triple, Scalar>;

void add_triple(TripleSum& s, const Triple& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = s.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) s.erase(it);
}

// Tallies one axiom over many items; keeps the first failure for the report.
struct Tally {
  std::size_t tested = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++tested;
    if (!ok && failed++ == 0) first_failure = what;
  }
  void emit(Report& r, const std::string& name) const {
    std::string detail = std::to_string(tested) + " cases";
    if (failed) {
      detail += ", " + std::to_string(failed) + " failed; first: " +
                first_failure;
    }
    r.add(name, failed == 0, detail);
  }
};

class Verifier {
 public:
  Verifier(const Presentation& pres, const RewriteSystem& rs)
      : pres_(pres), rs_(rs) {}

  NCPoly nf(const NCPoly& p) const { return rs_.reduce(p); }
  NCPoly nf(const Word& w) const { return rs_.reduce(NCPoly::monomial(w)); }

  TensorPoly nf2(const TensorPoly& t) const {
    auto f = [this](const Word& w) { return nf(w); };
    return t.map_legs(f, f);
  }

  TripleSum nf3(const TripleSum& s) const {
    TripleSum out;
    for (const auto& [k, c] : s) {
      NCPoly a = nf(k[0]), b = nf(k[1]), d = nf(k[2]);
      for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
          for (const auto& [wd, cd] : d.terms()) {
            add_triple(out, {wa, wb, wd}, c * ca * cb * cd);
          }
        }
      }
    }
    return out;
  }

  std::string show(const Word& w) const { return word_to_string(w, pres_.names); }
  std::string show(const NCPoly& p) const { return p.to_string(pres_.names); }

  const Presentation& pres_;
  const RewriteSystem& rs_;
};

}  // namespace

std::size_t hopf_completion_degree(std::size_t d) {
  std::size_t twice = d >= 1 ? 2 * (d - 1) : 0;
  return std::max<std::size_t>({d, twice, 2});
}

Report verify_hopf(const Presentation& pres, std::size_t d) {
  return verify_hopf(pres, complete(pres, hopf_completion_degree(d)), d);
}

Report verify_hopf(const Presentation& pres, const RewriteSystem& rs,
                   std::size_t d) {
  if (rs.bound() < hopf_completion_degree(d)) {
    throw DegreeExceeded("rewrite system bound " + std::to_string(rs.bound()) +
                         " is below the required " +
                         std::to_string(hopf_completion_degree(d)));
  }
  Verifier v(pres, rs);
  Report r("Hopf axioms");
  std::size_t top = d >= 1 ? d - 1 : 0;
  std::vector<Word> words = normal_words(rs, top);
  r.info()["degree"] = d;
  r.info()["completion_degree"] = rs.bound();
  r.info()["rewrite_rules"] = rs.rules().size();
  r.info()["rewrite_status"] =
      rs.status() == RewriteSystem::Status::kComplete ? "complete"
                                                      : "confluent-to-bound";
  r.info()["normal_words_tested"] = words.size();

  // (a) well-definedness on relations.
  Tally ad, ae, as;
  for (std::size_t k = 0; k < pres.relations.size(); ++k) {
    const NCPoly& rel = pres.relations[k];
    std::string tag = "relation " + std::to_string(k) + ": " + v.show(rel);
    ad.record(v.nf2(pres.delta_of(rel)).is_zero(), tag);
    ae.record(pres.counit_of(rel).is_zero(), tag);
    as.record(v.nf(pres.antipode_of(rel)).is_zero(), tag);
  }
  ad.emit(r, "(a) Δ kills the relations");
  ae.emit(r, "(a) ε kills the relations");
  as.emit(r, "(a) S kills the relations");

  // (b) coassociativity and counit.
  Tally coassoc, lcounit, rcounit;
  for (const Word& w : words) {
    TensorPoly dw = pres.delta_of(w);
    TripleSum left, right;
    for (const auto& [k, c] : dw.terms()) {
      const TensorPoly d1 = pres.delta_of(k.first);
      const TensorPoly d2 = pres.delta_of(k.second);
      for (const auto& [k2, c2] : d1.terms()) {
        add_triple(left, {k2.first, k2.second, k.second}, c * c2);
      }
      for (const auto& [k2, c2] : d2.terms()) {
        add_triple(right, {k.first, k2.first, k2.second}, c * c2);
      }
    }
    coassoc.record(v.nf3(left) == v.nf3(right), v.show(w));
    NCPoly el, er;
    for (const auto& [k, c] : dw.terms()) {
      el.add_term(k.second, c * pres.counit_of(k.first));
      er.add_term(k.first, c * pres.counit_of(k.second));
    }
    NCPoly self = NCPoly::monomial(w);
    lcounit.record(v.nf(el) == self, v.show(w));
    rcounit.record(v.nf(er) == self, v.show(w));
  }
  coassoc.emit(r, "(b) (Δ⊗id)Δ = (id⊗Δ)Δ");
  lcounit.emit(r, "(b) (ε⊗id)Δ = id");
  rcounit.emit(r, "(b) (id⊗ε)Δ = id");

  // (c) Δ respects products: Δ(nf(xy)) = Δ(x)Δ(y) in H⊗H.
  Tally mult;
  for (const Word& x : words) {
    for (const Word& y : words) {
      if (x.size() + y.size() > top) continue;
      TensorPoly lhs = v.nf2(pres.delta_of(v.nf(x + y)));
      TensorPoly rhs = v.nf2(pres.delta_of(x) * pres.delta_of(y));
      mult.record(lhs == rhs, v.show(x) + " · " + v.show(y));
    }
  }
  mult.emit(r, "(c) Δ(xy) = Δ(x)Δ(y)");

  // (d) antipode laws.
  Tally sl, sr;
  for (const Word& w : words) {
    TensorPoly dw = pres.delta_of(w);
    NCPoly left, right;
    for (const auto& [k, c] : dw.terms()) {
      left += pres.antipode_of(k.first) * NCPoly::monomial(k.second) * c;
      right += NCPoly::monomial(k.first) * pres.antipode_of(k.second) * c;
    }
    NCPoly unit = NCPoly::constant(pres.counit_of(w));
    sl.record(v.nf(left) == unit, v.show(w));
    sr.record(v.nf(right) == unit, v.show(w));
  }
  sl.emit(r, "(d) m(S⊗id)Δ = ηε");
  sr.emit(r, "(d) m(id⊗S)Δ = ηε");

  // (e) S² = id, asserted only for the identity twist.
  Tally s2;
  for (const Word& w : words) {
    s2.record(v.nf(pres.antipode_of(pres.antipode_of(w))) ==
                  NCPoly::monomial(w),
              v.show(w));
  }
  r.info()["s_squared_identity"] = s2.failed == 0;
  if (pres.twist_is_identity()) s2.emit(r, "(e) S² = id");
  return r;
}

}  // namespace pivcat
