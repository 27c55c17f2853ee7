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

#include "lncert/ln_bounds.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <utility>

namespace lncert {

namespace {

void require_bound_domain(const Rational& a, const Rational& b) {
  if (a.sign() <= 0) fail(ErrorCode::DomainError, "bound requires a > 0, got a = " + a.to_string());
  if (b < a) {
    fail(ErrorCode::DomainError,
         "bound requires a <= b, got a = " + a.to_string() + ", b = " + b.to_string());
  }
}

}  // namespace

const char* method_name(BoundMethod m) {
  switch (m) {
    case BoundMethod::TrapezoidUpper: return "TrapezoidUpper";
    case BoundMethod::MidpointLower: return "MidpointLower";
    case BoundMethod::ChordUpper: return "ChordUpper";
    case BoundMethod::ChordLower: return "ChordLower";
  }
  return "?";
}

BoundMethod method_from_name(std::string_view name) {
  if (name == "TrapezoidUpper") return BoundMethod::TrapezoidUpper;
  if (name == "MidpointLower") return BoundMethod::MidpointLower;
  if (name == "ChordUpper") return BoundMethod::ChordUpper;
  if (name == "ChordLower") return BoundMethod::ChordLower;
  fail(ErrorCode::UsageError, "unknown bound method '" + std::string(name) + "'");
}

Rational trapezoid_upper(const Rational& a, const Rational& b) {
  require_bound_domain(a, b);
  // (1/2)(1/a + 1/b)(b - a) = (a + b)(b - a) / (2ab)
  return ((a + b) * (b - a)) / (Rational(2) * a * b);
}

Rational midpoint_lower(const Rational& a, const Rational& b) {
  require_bound_domain(a, b);
  return (Rational(2) * (b - a)) / (a + b);
}

Rational chord_upper(const Rational& a, const Rational& b) {
  require_bound_domain(a, b);
  return (b - a) / a;
}

Rational chord_lower(const Rational& a, const Rational& b) {
  require_bound_domain(a, b);
  return (b - a) / b;
}

Rational bound_value(BoundMethod m, const Rational& a, const Rational& b) {
  switch (m) {
    case BoundMethod::TrapezoidUpper: return trapezoid_upper(a, b);
    case BoundMethod::MidpointLower: return midpoint_lower(a, b);
    case BoundMethod::ChordUpper: return chord_upper(a, b);
    case BoundMethod::ChordLower: return chord_lower(a, b);
  }
  fail(ErrorCode::DomainError, "invalid bound method");
}

Partition::Partition(std::vector<Rational> points) : points_(std::move(points)) {
  if (points_.size() < 2) fail(ErrorCode::DomainError, "partition needs at least 2 points");
  if (points_.front().sign() <= 0) {
    fail(ErrorCode::DomainError, "partition points must be > 0");
  }
  for (size_t i = 0; i + 1 < points_.size(); ++i) {
    if (!(points_[i] < points_[i + 1])) {
      fail(ErrorCode::DomainError, "partition points must be strictly increasing");
    }
  }
}

Partition Partition::bisected_at(size_t i) const {
  if (i + 1 >= points_.size()) fail(ErrorCode::DomainError, "bisection index out of range");
  std::vector<Rational> pts = points_;
  Rational mid = (pts[i] + pts[i + 1]) / Rational(2);
  pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(i) + 1, mid);
  return Partition(std::move(pts));
}

Interval partition_bounds(const Partition& p, BoundMethod lower, BoundMethod upper) {
  if (!is_lower_method(lower)) {
    fail(ErrorCode::MethodRoleError,
         std::string(method_name(lower)) + " is not a lower-bound method");
  }
  if (!is_upper_method(upper)) {
    fail(ErrorCode::MethodRoleError,
         std::string(method_name(upper)) + " is not an upper-bound method");
  }
  Rational lo(0), hi(0);
  const auto& pts = p.points();
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    lo += bound_value(lower, pts[i], pts[i + 1]);
    hi += bound_value(upper, pts[i], pts[i + 1]);
  }
  return Interval(lo, hi);
}

namespace {

// One live subinterval of the refinement. The fixed-point contributions are
// floor(midpoint_lower * scale) and ceil(trapezoid_upper * scale), so the
// running totals stay sound while staying on a single denominator.
struct RefineNode {
  mpq_class a, b;
  mpz_class lo_fp, hi_fp;
  double gap_key;
};

// Heap entries stay plain data; the nodes themselves live in a slot pool so
// sift operations never copy GMP values.
struct HeapEntry {
  double key;
  std::uint64_t seq;
  std::uint32_t slot;
};

struct EntryOrder {
  bool operator()(const HeapEntry& x, const HeapEntry& y) const {
    if (x.key != y.key) return x.key < y.key;
    return x.seq > y.seq;  // older node wins a tie, keeping the order deterministic
  }
};

mpz_class floor_scaled(const mpq_class& v, const mpz_class& scale) {
  mpz_class r;
  mpz_class n = v.get_num() * scale;
  mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), v.get_den_mpz_t());
  return r;
}

mpz_class ceil_scaled(const mpq_class& v, const mpz_class& scale) {
  mpz_class r;
  mpz_class n = v.get_num() * scale;
  mpz_cdiv_q(r.get_mpz_t(), n.get_mpz_t(), v.get_den_mpz_t());
  return r;
}

RefineNode make_node(mpq_class a, mpq_class b, const mpz_class& scale) {
  const mpz_class& an = a.get_num();
  const mpz_class& ad = a.get_den();
  const mpz_class& bn = b.get_num();
  const mpz_class& bd = b.get_den();

  // Over the common denominator ad*bd: diff = dn, sum = sn.
  mpz_class left = bn * ad;
  mpz_class right = an * bd;
  mpz_class dn = left - right;
  mpz_class sn = left + right;

  mpq_class mid(2 * dn, sn);  // 2(b-a)/(a+b)
  mid.canonicalize();
  mpq_class trap(sn * dn, 2 * an * bn * ad * bd);  // (a+b)(b-a)/(2ab)
  trap.canonicalize();

  RefineNode node;
  node.lo_fp = floor_scaled(mid, scale);
  node.hi_fp = ceil_scaled(trap, scale);
  // Ordering key only, from the values already at hand. mid is always < 2, so
  // the difference can overflow to +inf (clamped) but never hit inf - inf;
  // NaN cannot reach the heap and the ordering stays strict-weak.
  node.gap_key = trap.get_d() - mid.get_d();
  if (!std::isfinite(node.gap_key)) node.gap_key = std::numeric_limits<double>::max();
  node.a = std::move(a);
  node.b = std::move(b);
  return node;
}

Interval refine_above_one(const Rational& x, const Rational& eps, const LnOptions& options) {
  const mpz_class eps_num = eps.num();
  const mpz_class eps_den = eps.den();
  const long max_bisections = options.max_bisections;
  if (max_bisections < 0) fail(ErrorCode::DomainError, "negative bisection cap");

  // Scale for the outward-rounded running sums. Worst-case slack is one unit
  // per live subinterval per side, so scale * eps >= 16 (cap + 2) keeps the
  // total slack under eps/8 and the width contract intact.
  mpz_class threshold;
  {
    mpz_class need = 16 * (mpz_class(max_bisections) + 2) * eps_den;
    mpz_cdiv_q(threshold.get_mpz_t(), need.get_mpz_t(), eps_num.get_mpz_t());
  }
  mpz_class scale;
  if (options.denominator_budget) {
    scale = *options.denominator_budget;
    if (scale < threshold) {
      fail(ErrorCode::DomainError,
           "denominator budget too small for eps (needs >= " + threshold.get_str() + ")");
    }
  } else {
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, mpz_sizeinbase(threshold.get_mpz_t(), 2));
  }

  std::vector<RefineNode> pool;
  std::vector<std::uint32_t> free_slots;
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, EntryOrder> queue;
  std::uint64_t seq = 0;

  auto add_node = [&](RefineNode&& node) {
    std::uint32_t slot;
    if (free_slots.empty()) {
      slot = static_cast<std::uint32_t>(pool.size());
      pool.push_back(std::move(node));
    } else {
      slot = free_slots.back();
      free_slots.pop_back();
      pool[slot] = std::move(node);
    }
    queue.push(HeapEntry{pool[slot].gap_key, seq++, slot});
  };

  mpz_class lower_fp, upper_fp;
  {
    RefineNode root = make_node(mpq_class(1), x.mpq(), scale);
    lower_fp = root.lo_fp;
    upper_fp = root.hi_fp;
    add_node(std::move(root));
  }

  const mpz_class width_limit = eps_num * scale;  // accept when (upper-lower)*eps_den <= this
  long bisections = 0;
  while ((upper_fp - lower_fp) * eps_den > width_limit) {
    if (bisections >= max_bisections) {
      fail(ErrorCode::PrecisionError,
           "bisection cap " + std::to_string(max_bisections) + " hit before reaching width " +
               eps.to_string());
    }
    HeapEntry top = queue.top();
    queue.pop();
    RefineNode worst = std::move(pool[top.slot]);
    free_slots.push_back(top.slot);
    lower_fp -= worst.lo_fp;
    upper_fp -= worst.hi_fp;

    mpq_class mid = (worst.a + worst.b) / 2;
    RefineNode left = make_node(std::move(worst.a), mid, scale);
    RefineNode right = make_node(std::move(mid), std::move(worst.b), scale);
    lower_fp += left.lo_fp + right.lo_fp;
    upper_fp += left.hi_fp + right.hi_fp;
    add_node(std::move(left));
    add_node(std::move(right));
    ++bisections;
  }

  return Interval(Rational(Integer(lower_fp), Integer(scale)),
                  Rational(Integer(upper_fp), Integer(scale)));
}

}  // namespace

Interval ln_enclosure(const Rational& x, const Rational& eps) {
  return ln_enclosure(x, eps, LnOptions{});
}

Interval ln_enclosure(const Rational& x, const Rational& eps, const LnOptions& options) {
  if (x.sign() <= 0) fail(ErrorCode::DomainError, "ln requires x > 0, got " + x.to_string());
  if (eps.sign() <= 0) fail(ErrorCode::DomainError, "eps must be > 0, got " + eps.to_string());
  Rational one(1);
  if (x == one) return Interval(Rational(0), Rational(0));
  if (x < one) return ln_enclosure(x.reciprocal(), eps, options).negate();
  return refine_above_one(x, eps, options);
}

}  // namespace lncert
