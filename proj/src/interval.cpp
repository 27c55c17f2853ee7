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

#include "lncert/interval.hpp"

#include <utility>

namespace lncert {

namespace {

// Best approximations to v from below and above with denominator <= max_den,
// for v > 0 with den(v) > max_den. Walks the continued fraction of v until a
// convergent's denominator would blow the budget; the last convergent inside
// the budget and the deepest semiconvergent built on it straddle v.
std::pair<Rational, Rational> straddle_positive(const Rational& v, const Integer& max_den) {
  Integer n = v.num(), d = v.den();

  Integer h_prev = 1, k_prev = 0;  // convergent i-1
  Integer h_cur, k_cur;            // convergent i
  {
    Integer a = n / d;  // v > 0, so truncation == floor here
    h_cur = a;
    k_cur = 1;
    Integer r = n - a * d;
    n = d;
    d = r;
  }

  while (d != 0) {
    Integer a = n / d;
    Integer k_next = a * k_cur + k_prev;
    if (k_next > max_den) break;
    Integer h_next = a * h_cur + h_prev;
    h_prev = h_cur;
    k_prev = k_cur;
    h_cur = h_next;
    k_cur = k_next;
    Integer r = n - a * d;
    n = d;
    d = r;
  }
  // d == 0 cannot happen before the budget check fails: the final convergent
  // is v itself and den(v) > max_den.

  Integer t = (max_den - k_prev) / k_cur;
  Rational convergent(h_cur, k_cur);
  Rational semiconvergent(h_prev + t * h_cur, k_prev + t * k_cur);

  if (convergent < v) return {convergent, semiconvergent};
  return {semiconvergent, convergent};
}

}  // namespace

Rational round_down(const Rational& v, const Integer& max_den) {
  if (max_den < 1) fail(ErrorCode::DomainError, "denominator budget must be >= 1");
  if (v.den() <= max_den) return v;
  if (v.sign() < 0) return -round_up(-v, max_den);
  return straddle_positive(v, max_den).first;
}

Rational round_up(const Rational& v, const Integer& max_den) {
  if (max_den < 1) fail(ErrorCode::DomainError, "denominator budget must be >= 1");
  if (v.den() <= max_den) return v;
  if (v.sign() < 0) return -round_down(-v, max_den);
  return straddle_positive(v, max_den).second;
}

Interval round_outward(const Interval& iv, const Integer& max_den) {
  return Interval(round_down(iv.lo(), max_den), round_up(iv.hi(), max_den));
}

}  // namespace lncert
