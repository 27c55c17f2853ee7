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

#ifndef LNCERT_INTERVAL_HPP
#define LNCERT_INTERVAL_HPP

#include <string>

#include "lncert/rational.hpp"

namespace lncert {

// Closed interval [lo, hi] of exact rationals enclosing one real value.
// Soundness contract: operations may widen an enclosure, never shrink it
// past the true value.
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) fail(ErrorCode::DomainError, "interval with lo > hi");
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool intersects(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
  bool strictly_inside(const Interval& outer) const {
    return outer.lo_ < lo_ && hi_ < outer.hi_;
  }

  Interval negate() const { return Interval(-hi_, -lo_); }

  friend Interval operator+(const Interval& x, const Interval& y) {
    return Interval(x.lo_ + y.lo_, x.hi_ + y.hi_);
  }

  // Endpoint-wise sum with a constant.
  friend Interval operator+(const Rational& c, const Interval& x) {
    return Interval(c + x.lo_, c + x.hi_);
  }
  friend Interval operator-(const Rational& c, const Interval& x) {
    return Interval(c - x.hi_, c - x.lo_);
  }

  // Scale by a positive constant.
  Interval scale(const Rational& factor) const {
    if (factor.sign() <= 0) fail(ErrorCode::DomainError, "interval scale factor must be > 0");
    return Interval(lo_ * factor, hi_ * factor);
  }

  friend bool operator==(const Interval& x, const Interval& y) {
    return x.lo_ == y.lo_ && x.hi_ == y.hi_;
  }

  std::string to_string() const { return "[" + lo_.to_string() + ", " + hi_.to_string() + "]"; }

 private:
  Rational lo_, hi_;
};

// Largest rational <= v whose denominator is <= max_den, and smallest >= v.
// Built from continued-fraction convergents and semiconvergents, so the
// result is the best one-sided approximation within the denominator budget.
Rational round_down(const Rational& v, const Integer& max_den);
Rational round_up(const Rational& v, const Integer& max_den);

// Containing interval with endpoint denominators <= max_den: lo rounds down,
// hi rounds up. round_outward(iv, d) always contains iv.
Interval round_outward(const Interval& iv, const Integer& max_den);

}  // namespace lncert

#endif  // LNCERT_INTERVAL_HPP
