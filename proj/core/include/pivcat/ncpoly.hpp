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
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pivcat/scalar.hpp"

namespace pivcat {

/** Word over a small alphabet; each char is a letter id. */
using Word = std::string;

/** Degree-lexicographic order: shorter words first, then by letter id. */
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

/** Element of the free algebra: finite sum of coefficient·word. */
class NCPoly {
 public:
  using Terms = std::map<Word, Scalar, DegLex>;

  NCPoly() = default;
  static NCPoly constant(const Scalar& c);
  static NCPoly monomial(const Word& w, const Scalar& c = Scalar(1));
  static NCPoly letter(int id) { return monomial(Word(1, static_cast<char>(id))); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;
  /** Largest word in deglex order; requires a nonzero polynomial. */
  const Word& leading_word() const { return terms_.rbegin()->first; }
  const Scalar& leading_coeff() const { return terms_.rbegin()->second; }
  Scalar coeff(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Scalar& s);

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Scalar& s) { return a *= s; }
  friend NCPoly operator*(const Scalar& s, NCPoly a) { return a *= s; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) {
    return !(a == b);
  }

  /** x·p·y for words x, y. */
  NCPoly sandwich(const Word& x, const Word& y) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  Terms terms_;
};

/** Element of A⊗A for the free algebra A, as pairs of words. */
class TensorPoly {
 public:
  using Key = std::pair<Word, Word>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      DegLex lt;
      if (a.first != b.first) return lt(a.first, b.first);
      return lt(a.second, b.second);
    }
  };
  using Terms = std::map<Key, Scalar, KeyLess>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& a, const Word& b, const Scalar& c);
  TensorPoly& operator+=(const TensorPoly& o);
  TensorPoly& operator-=(const TensorPoly& o);
  /** (a⊗b)(c⊗d) = ac⊗bd, the symmetric-flip tensor algebra. */
  friend TensorPoly operator*(const TensorPoly& x, const TensorPoly& y);
  friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
    return a.terms_ == b.terms_;
  }

  /** Applies f to the first and g to the second leg, then expands. */
  TensorPoly map_legs(const std::function<NCPoly(const Word&)>& f,
                      const std::function<NCPoly(const Word&)>& g) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  Terms terms_;
};

std::string word_to_string(const Word& w,
                           const std::vector<std::string>& names);

}  // namespace pivcat
