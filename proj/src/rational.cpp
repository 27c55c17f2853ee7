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

#include "lncert/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace lncert {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational Rational::from_string(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) fail(ErrorCode::UsageError, "empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  // Split an optional exponent first: 12.5e-3, 1E6.
  std::string_view mantissa = s;
  long exponent = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'e' || s[i] == 'E') {
      std::string_view exp = s.substr(i + 1);
      mantissa = s.substr(0, i);
      bool exp_neg = false;
      if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
        exp_neg = exp.front() == '-';
        exp.remove_prefix(1);
      }
      if (!all_digits(exp) || exp.size() > 6) {
        fail(ErrorCode::UsageError, "bad exponent in rational literal '" + std::string(text) + "'");
      }
      exponent = std::strtol(std::string(exp).c_str(), nullptr, 10);
      if (exp_neg) exponent = -exponent;
      break;
    }
  }

  Integer num, den = 1;
  if (auto slash = mantissa.find('/'); slash != std::string_view::npos) {
    std::string_view ns = mantissa.substr(0, slash);
    std::string_view ds = mantissa.substr(slash + 1);
    if (!all_digits(ns) || !all_digits(ds)) {
      fail(ErrorCode::UsageError, "bad rational literal '" + std::string(text) + "'");
    }
    num = Integer(std::string(ns), 10);
    den = Integer(std::string(ds), 10);
    if (den == 0) fail(ErrorCode::ZeroDenominator, "rational literal with denominator 0");
  } else if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mantissa.substr(0, dot);
    std::string_view fp = mantissa.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp))) {
      fail(ErrorCode::UsageError, "bad decimal literal '" + std::string(text) + "'");
    }
    std::string joined = std::string(ip) + std::string(fp);
    num = joined.empty() ? Integer(0) : Integer(joined, 10);
    den = pow10(fp.size());
  } else {
    if (!all_digits(mantissa)) {
      fail(ErrorCode::UsageError, "bad rational literal '" + std::string(text) + "'");
    }
    num = Integer(std::string(mantissa), 10);
  }

  if (exponent > 0) {
    num *= pow10(static_cast<unsigned long>(exponent));
  } else if (exponent < 0) {
    den *= pow10(static_cast<unsigned long>(-exponent));
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), k);
  if (invert) {
    if (n == 0) fail(ErrorCode::ZeroDenominator, "0 raised to a negative power");
    return Rational(d, n);
  }
  return Rational(n, d);
}

std::string Rational::to_string() const {
  std::string s = q_.get_num().get_str();
  if (q_.get_den() != 1) {
    s += '/';
    s += q_.get_den().get_str();
  }
  return s;
}

std::string Rational::to_decimal_string(int digits) const {
  if (digits < 0) fail(ErrorCode::DomainError, "negative digit count");
  Integer n = num(), d = den();
  bool negative = n < 0;
  if (negative) n = -n;

  Integer scaled = n * pow10(static_cast<unsigned long>(digits));
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), d.get_mpz_t());
  Integer twice = 2 * r;
  if (twice > d || (twice == d && mpz_odd_p(q.get_mpz_t()))) q += 1;

  std::string body = q.get_str();
  std::string result;
  if (digits == 0) {
    result = body;
  } else {
    if (body.size() <= static_cast<size_t>(digits)) {
      body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<size_t>(digits), ".");
    result = body;
  }
  if (negative && q != 0) result.insert(0, 1, '-');
  return result;
}

const Rational& Rational::zero() {
  static const Rational v(0);
  return v;
}

const Rational& Rational::one() {
  static const Rational v(1);
  return v;
}

}  // namespace lncert
