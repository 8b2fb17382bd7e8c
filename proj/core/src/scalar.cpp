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

#include "pivcat/scalar.hpp"

#include <atomic>
#include <ostream>

#include "pivcat/errors.hpp"

namespace pivcat {
namespace {

std::atomic<unsigned long> g_modulus{0};

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  mpz_class z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

}  // namespace

Field Field::prime(unsigned long p) {
  if (!is_prime(p)) {
    throw InputError("field modulus " + std::to_string(p) + " is not prime");
  }
  return Field{p};
}

std::string Field::describe() const {
  return is_rational() ? "q" : "fp:" + std::to_string(modulus);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.substr(0, 3) == "fp:") {
    std::string digits(text.substr(3));
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("bad field descriptor '" + std::string(text) + "'");
    }
    return prime(std::stoul(digits));
  }
  throw InputError("bad field descriptor '" + std::string(text) + "'");
}

void set_field(Field f) { g_modulus.store(f.modulus); }
Field current_field() { return Field{g_modulus.load()}; }

Scalar::Scalar(long v) : v_(v) {
  if (g_modulus.load() != 0) reduce();
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw SingularMatrix("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
  reduce();
}

Scalar::Scalar(const mpq_class& v) : v_(v) {
  v_.canonicalize();
  reduce();
}

Scalar::Scalar(const mpz_class& v) : v_(v) { reduce(); }

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return t.size() > start &&
           t.find_first_not_of("0123456789", start) == std::string::npos;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw InputError("bad scalar '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw InputError("zero denominator in '" + s + "'");
  return Scalar(mpq_class(n, d));
}

void Scalar::reduce() {
  unsigned long p = g_modulus.load();
  if (p == 0) return;
  mpz_class m(p);
  mpz_class num = v_.get_num();
  mpz_class den = v_.get_den();
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) {
      throw SingularMatrix("denominator not invertible modulo " +
                           std::to_string(p));
    }
    num *= inv;
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
  v_ = mpq_class(r);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw SingularMatrix("inverse of zero");
  Scalar r;
  r.v_ = 1 / v_;
  r.v_.canonicalize();
  r.reduce();
  return r;
}

std::string Scalar::to_string() const { return v_.get_str(10); }

Scalar& Scalar::operator+=(const Scalar& o) {
  v_ += o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  v_ -= o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  v_ *= o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw SingularMatrix("division by zero");
  v_ /= o.v_;
  reduce();
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.v_ = -v_;
  r.reduce();
  return r;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (g_modulus.load() == 0) {
    if (mpz_cmp_ui(a.v_.get_den_mpz_t(), 1) == 0 &&
        mpz_cmp_ui(b.v_.get_den_mpz_t(), 1) == 0 &&
        mpz_cmp_ui(v_.get_den_mpz_t(), 1) == 0) {
      mpz_addmul(v_.get_num_mpz_t(), a.v_.get_num_mpz_t(),
                 b.v_.get_num_mpz_t());
      return;
    }
    v_ += a.v_ * b.v_;
    return;
  }
  v_ += a.v_ * b.v_;
  reduce();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace pivcat
