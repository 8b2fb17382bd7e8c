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

#include "pivcat/ncpoly.hpp"

namespace pivcat {

NCPoly NCPoly::constant(const Scalar& c) { return monomial(Word(), c); }

NCPoly NCPoly::monomial(const Word& w, const Scalar& c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

std::size_t NCPoly::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

Scalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
  }
  return r;
}

NCPoly NCPoly::sandwich(const Word& x, const Word& y) const {
  NCPoly r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(x + w + y, c);
  return r;
}

std::string word_to_string(const Word& w,
                           const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += names.at(static_cast<unsigned char>(w[i]));
  }
  return s;
}

std::string NCPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) s += " + ";
    first = false;
    if (it->second.is_one()) {
      s += word_to_string(it->first, names);
    } else if (it->first.empty()) {
      s += it->second.to_string();
    } else {
      s += "(" + it->second.to_string() + ")*" +
           word_to_string(it->first, names);
    }
  }
  return s;
}

void TensorPoly::add_term(const Word& a, const Word& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorPoly operator*(const TensorPoly& x, const TensorPoly& y) {
  TensorPoly r;
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      r.add_term(kx.first + ky.first, kx.second + ky.second, cx * cy);
    }
  }
  return r;
}

TensorPoly TensorPoly::map_legs(
    const std::function<NCPoly(const Word&)>& f,
    const std::function<NCPoly(const Word&)>& g) const {
  TensorPoly r;
  for (const auto& [k, c] : terms_) {
    NCPoly a = f(k.first), b = g(k.second);
    for (const auto& [wa, ca] : a.terms()) {
      for (const auto& [wb, cb] : b.terms()) r.add_term(wa, wb, c * ca * cb);
    }
  }
  return r;
}

std::string TensorPoly::to_string(
    const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    if (!c.is_one()) s += "(" + c.to_string() + ")*";
    s += word_to_string(k.first, names) + " ⊗ " +
         word_to_string(k.second, names);
  }
  return s;
}

}  // namespace pivcat
