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

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pivcat {

/**
 * Ground field selector. modulus == 0 means the rationals, otherwise the
 * prime field of that order.
 */
struct Field {
  unsigned long modulus = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(unsigned long p);
  bool is_rational() const { return modulus == 0; }
  std::string describe() const;
  /** Parses "q" or "fp:<p>". */
  static Field parse(std::string_view text);
};

/**
 * Sets the field used by all Scalar arithmetic. Switch once at the start
 * of a session: values created under one field are not converted.
 */
void set_field(Field f);
Field current_field();

/** RAII guard that swaps the session field and restores it on exit. */
class FieldScope {
 public:
  explicit FieldScope(Field f) : saved_(current_field()) { set_field(f); }
  ~FieldScope() { set_field(saved_); }
  FieldScope(const FieldScope&) = delete;
  FieldScope& operator=(const FieldScope&) = delete;

 private:
  Field saved_;
};

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& v);
  explicit Scalar(const mpz_class& v);

  /** Accepts "p", "-p" or "p/q" with decimal integers. */
  static Scalar parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  Scalar inverse() const;
  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) {
    return !(a == b);
  }

  /** Adds a*b into this; avoids a temporary in inner loops. */
  void add_product(const Scalar& a, const Scalar& b);

 private:
  void reduce();
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace pivcat
