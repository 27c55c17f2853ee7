// Copyright 2026 The lncert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LNCERT_RATIONAL_HPP
#define LNCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "lncert/errors.hpp"

namespace lncert {

using Integer = mpz_class;

enum class Cmp { LT, EQ, GT };

// Exact rational number. Invariants: denominator > 0 and gcd(|num|, den) = 1
// after every constructor and arithmetic result. Comparisons are exact; there
// is no epsilon anywhere in this type. Decimal output exists only for display
// and is always labeled approximate by callers.
//
// Values are immutable in spirit: every operation returns a fresh value, so
// concurrent use needs no coordination.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose, mirrors integer literals
  explicit Rational(const Integer& n) : q_(n) {}

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(ErrorCode::ZeroDenominator, "rational with denominator 0");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  // Accepts "p/q", integer, and decimal literals with optional exponent
  // ("-3/7", "42", "2.75", "1e-9"); decimals parse to exact rationals.
  static Rational from_string(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& mpq() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(x.q_ + y.q_); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(x.q_ - y.q_); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(x.q_ * y.q_); }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) fail(ErrorCode::ZeroDenominator, "division by zero");
    return Rational(x.q_ / y.q_);
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& y) { q_ += y.q_; return *this; }
  Rational& operator-=(const Rational& y) { q_ -= y.q_; return *this; }
  Rational& operator*=(const Rational& y) { q_ *= y.q_; return *this; }
  Rational& operator/=(const Rational& y) { *this = *this / y; return *this; }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational reciprocal() const {
    if (is_zero()) fail(ErrorCode::ZeroDenominator, "reciprocal of zero");
    return Rational(q_.get_den(), q_.get_num());
  }

  // x^e for integer e; negative e inverts (zero base -> ZeroDenominator).
  Rational pow_int(long e) const;

  Integer floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }
  Integer ceil() const {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }

  // Exact trichotomy; equivalent to the sign of num_x*den_y - num_y*den_x.
  friend Cmp cmp(const Rational& x, const Rational& y) {
    int c = ::cmp(x.q_, y.q_);
    return c < 0 ? Cmp::LT : (c == 0 ? Cmp::EQ : Cmp::GT);
  }

  friend bool operator==(const Rational& x, const Rational& y) { return ::cmp(x.q_, y.q_) == 0; }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) { return ::cmp(x.q_, y.q_) < 0; }
  friend bool operator<=(const Rational& x, const Rational& y) { return ::cmp(x.q_, y.q_) <= 0; }
  friend bool operator>(const Rational& x, const Rational& y) { return ::cmp(x.q_, y.q_) > 0; }
  friend bool operator>=(const Rational& x, const Rational& y) { return ::cmp(x.q_, y.q_) >= 0; }

  // Canonical text form: base-10 "num/den" with the sign on the numerator;
  // integers print without the "/1" ("-3/7", "2", "0"). This is the form used
  // in certificates and CLI output.
  std::string to_string() const;

  // Display only. GMP's conversion truncates toward zero, which is
  // deterministic across platforms.
  double to_double() const { return q_.get_d(); }

  // Fixed-point decimal with round-half-even, e.g. digits=6 -> "0.405465".
  // Display/rendering only; never fed back into arithmetic.
  std::string to_decimal_string(int digits) const;

  static const Rational& zero();
  static const Rational& one();

 private:
  explicit Rational(const mpq_class& q) : q_(q) {}
  mpq_class q_;  // canonical at all times
};

inline Rational min(const Rational& x, const Rational& y) { return x <= y ? x : y; }
inline Rational max(const Rational& x, const Rational& y) { return x >= y ? x : y; }

}  // namespace lncert

#endif  // LNCERT_RATIONAL_HPP
