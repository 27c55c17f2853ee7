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

#ifndef LNCERT_LN_BOUNDS_HPP
#define LNCERT_LN_BOUNDS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "lncert/interval.hpp"
#include "lncert/rational.hpp"

namespace lncert {

// Elementary area bounds on the integral of 1/x over [a, b], 0 < a <= b.
// Each value depends only on b/a, and each bound is strict for a < b:
//
//   ChordLower     (b-a)/b                 <  ln(b/a)
//   MidpointLower  2(b-a)/(a+b)            <  ln(b/a)   (tangent trapezoid)
//   TrapezoidUpper (1/2)(1/a + 1/b)(b-a)   >  ln(b/a)   (secant trapezoid)
//   ChordUpper     (b-a)/a                 >  ln(b/a)
enum class BoundMethod { TrapezoidUpper, MidpointLower, ChordUpper, ChordLower };

inline bool is_lower_method(BoundMethod m) {
  return m == BoundMethod::MidpointLower || m == BoundMethod::ChordLower;
}
inline bool is_upper_method(BoundMethod m) {
  return m == BoundMethod::TrapezoidUpper || m == BoundMethod::ChordUpper;
}

const char* method_name(BoundMethod m);
BoundMethod method_from_name(std::string_view name);

Rational trapezoid_upper(const Rational& a, const Rational& b);
Rational midpoint_lower(const Rational& a, const Rational& b);
Rational chord_upper(const Rational& a, const Rational& b);
Rational chord_lower(const Rational& a, const Rational& b);

Rational bound_value(BoundMethod m, const Rational& a, const Rational& b);

// Strictly increasing finite sequence of positive rationals; the bounds are
// summed over consecutive pairs.
class Partition {
 public:
  explicit Partition(std::vector<Rational> points);

  const std::vector<Rational>& points() const { return points_; }
  size_t interval_count() const { return points_.size() - 1; }
  const Rational& first() const { return points_.front(); }
  const Rational& last() const { return points_.back(); }

  // New partition with the exact midpoint of subinterval [points[i], points[i+1]] inserted.
  Partition bisected_at(size_t i) const;

 private:
  std::vector<Rational> points_;
};

// [sum of lower(x_i, x_{i+1}), sum of upper(x_i, x_{i+1})]; encloses
// ln(last/first). Rejects methods used against their role.
Interval partition_bounds(const Partition& p, BoundMethod lower, BoundMethod upper);

inline constexpr long kDefaultMaxBisections = 1'000'000;

struct LnOptions {
  long max_bisections = kDefaultMaxBisections;
  // Denominator budget for the outward-rounded running sums. The default
  // picks the smallest power of two that keeps the accumulated rounding
  // slack under eps/8 across every possible bisection. An explicit budget
  // below that threshold is rejected, since it could not honor the width
  // contract.
  std::optional<Integer> denominator_budget;
};

// Interval of width <= eps containing ln x, by greedy bisection of the
// partition of [1, x] at the exact midpoint of the subinterval with the
// largest trapezoid-minus-midpoint gap. x = 1 gives [0, 0]; x < 1 is the
// negated enclosure of 1/x. Deterministic for a given input.
Interval ln_enclosure(const Rational& x, const Rational& eps);
Interval ln_enclosure(const Rational& x, const Rational& eps, const LnOptions& options);

}  // namespace lncert

#endif  // LNCERT_LN_BOUNDS_HPP
