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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lncert/ln_bounds.hpp"
#include "oracle_ln.hpp"
#include "test_util.hpp"

using namespace lncert;

TEST_CASE("trapezoid upper bound values") {
  CHECK(trapezoid_upper(Rational(1), Rational(2)) == Rational(3, 4));
  CHECK(trapezoid_upper(Rational(5), Rational(5)) == Rational(0));
  CHECK(trapezoid_upper(Rational(10), Rational(12)) == Rational(11, 60));
}

TEST_CASE("midpoint tangent lower bound values") {
  CHECK(midpoint_lower(Rational(4), Rational(6)) == Rational(2, 5));
  CHECK(midpoint_lower(Rational(9), Rational(11)) == Rational(1, 5));
  CHECK(midpoint_lower(Rational(1), Rational(1)) == Rational(0));
}

TEST_CASE("chord bounds") {
  CHECK(chord_upper(Rational(1), Rational(3, 2)) == Rational(1, 2));
  CHECK(chord_upper(Rational(2), Rational(2)) == Rational(0));
  CHECK(chord_upper(Rational(4), Rational(6)) == Rational(1, 2));

  CHECK(chord_lower(Rational(3), Rational(4)) == Rational(1, 4));
  CHECK(chord_lower(Rational(7), Rational(7)) == Rational(0));
  CHECK(chord_lower(Rational(2), Rational(3)) == Rational(1, 3));
}

TEST_CASE("bounds reject bad domains") {
  CHECK_THROWS_AS(trapezoid_upper(Rational(0), Rational(1)), Error);
  CHECK_THROWS_AS(midpoint_lower(Rational(-1), Rational(1)), Error);
  CHECK_THROWS_AS(chord_upper(Rational(2), Rational(1)), Error);
  try {
    chord_lower(Rational(3), Rational(2));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainError);
  }
}

TEST_CASE("partition validation") {
  CHECK_NOTHROW(Partition({Rational(1), Rational(2)}));
  CHECK_THROWS_AS(Partition({Rational(1)}), Error);
  CHECK_THROWS_AS(Partition({Rational(2), Rational(2)}), Error);
  CHECK_THROWS_AS(Partition({Rational(2), Rational(1)}), Error);
  CHECK_THROWS_AS(Partition({Rational(0), Rational(1)}), Error);
  CHECK_THROWS_AS(Partition({Rational(-1), Rational(1)}), Error);
}

TEST_CASE("partition bounds over the explicit e partitions") {
  Partition lower_part({Rational(4), Rational(6), Rational(9), Rational(11)});
  Interval lower = partition_bounds(lower_part, BoundMethod::MidpointLower,
                                    BoundMethod::TrapezoidUpper);
  CHECK(lower.lo() == Rational(1));  // 2/5 + 2/5 + 1/5

  Partition upper_part({Rational(10), Rational(12), Rational(15), Rational(18), Rational(21),
                        Rational(24), Rational(27)});
  Interval upper = partition_bounds(upper_part, BoundMethod::MidpointLower,
                                    BoundMethod::TrapezoidUpper);

  // Independent recomputation of the six trapezoid terms straight from the
  // formula, in raw mpq arithmetic.
  mpq_class expected(0);
  long pts[] = {10, 12, 15, 18, 21, 24, 27};
  for (int i = 0; i + 1 < 7; ++i) {
    mpq_class a(pts[i]), b(pts[i + 1]);
    expected += mpq_class(1, 2) * (1 / a + 1 / b) * (b - a);
  }
  CHECK(upper.hi().mpq() == expected);
  CHECK(upper.hi() == Rational(629, 630));
  CHECK(upper.hi() < Rational(1));
}

TEST_CASE("partition bounds reject misplaced roles") {
  Partition p({Rational(1), Rational(2)});
  CHECK_THROWS_AS(partition_bounds(p, BoundMethod::TrapezoidUpper, BoundMethod::TrapezoidUpper),
                  Error);
  CHECK_THROWS_AS(partition_bounds(p, BoundMethod::MidpointLower, BoundMethod::ChordLower),
                  Error);
  try {
    partition_bounds(p, BoundMethod::ChordUpper, BoundMethod::TrapezoidUpper);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MethodRoleError);
  }
}

TEST_CASE("strict bound ordering on random pairs") {
  auto rng = testutil::make_rng(21);
  for (int i = 0; i < 1000; ++i) {
    auto [a, b] = testutil::rand_pair(rng, 100, 80);
    Rational cl = chord_lower(a, b);
    Rational ml = midpoint_lower(a, b);
    Rational tu = trapezoid_upper(a, b);
    Rational cu = chord_upper(a, b);
    CHECK(cl < ml);
    CHECK(ml < tu);
    CHECK(tu < cu);
  }
}

TEST_CASE("scale invariance: every bound depends only on b/a") {
  auto rng = testutil::make_rng(22);
  for (int i = 0; i < 1000; ++i) {
    auto [a, b] = testutil::rand_pair(rng, 100, 80);
    Rational lambda = testutil::rand_rational(rng, 50, 60);
    for (BoundMethod m : {BoundMethod::TrapezoidUpper, BoundMethod::MidpointLower,
                          BoundMethod::ChordUpper, BoundMethod::ChordLower}) {
      CHECK(bound_value(m, lambda * a, lambda * b) == bound_value(m, a, b));
    }
  }
}

TEST_CASE("reciprocal symmetry: f(1/b, 1/a) = f(a, b)") {
  auto rng = testutil::make_rng(23);
  for (int i = 0; i < 1000; ++i) {
    auto [a, b] = testutil::rand_pair(rng, 100, 80);
    for (BoundMethod m : {BoundMethod::TrapezoidUpper, BoundMethod::MidpointLower,
                          BoundMethod::ChordUpper, BoundMethod::ChordLower}) {
      CHECK(bound_value(m, b.reciprocal(), a.reciprocal()) == bound_value(m, a, b));
    }
  }
}

TEST_CASE("oracle soundness: lower bounds below ln, upper bounds above ln") {
  auto rng = testutil::make_rng(24);
  for (int i = 0; i < 1000; ++i) {
    auto [a, b] = testutil::rand_pair(rng, 100, 60);
    mpq_class ratio = (b / a).mpq();
    CHECK(oracle::below_ln(midpoint_lower(a, b).mpq(), ratio));
    CHECK(oracle::above_ln(trapezoid_upper(a, b).mpq(), ratio));
    CHECK(oracle::below_ln(chord_lower(a, b).mpq(), ratio));
    CHECK(oracle::above_ln(chord_upper(a, b).mpq(), ratio));
  }
}

TEST_CASE("refinement monotonicity under one bisection") {
  auto rng = testutil::make_rng(25);
  for (int i = 0; i < 400; ++i) {
    std::vector<Rational> pts;
    int count = 3 + static_cast<int>(rng() % 4);
    while (static_cast<int>(pts.size()) < count) {
      Rational x = testutil::rand_rational(rng, 100, 40);
      bool fresh = true;
      for (const Rational& p : pts) fresh = fresh && p != x;
      if (fresh) pts.push_back(x);
    }
    std::sort(pts.begin(), pts.end());
    Partition p(pts);
    size_t at = rng() % p.interval_count();
    Partition refined = p.bisected_at(at);

    Interval coarse = partition_bounds(p, BoundMethod::MidpointLower, BoundMethod::TrapezoidUpper);
    Interval fine =
        partition_bounds(refined, BoundMethod::MidpointLower, BoundMethod::TrapezoidUpper);
    CHECK(coarse.lo() <= fine.lo());
    CHECK(fine.hi() <= coarse.hi());
    CHECK(coarse.contains(fine));
  }
}

TEST_CASE("ln enclosure basics") {
  Interval at_one = ln_enclosure(Rational(1), Rational(1, 1000));
  CHECK(at_one.lo() == Rational(0));
  CHECK(at_one.hi() == Rational(0));

  Interval ln2 = ln_enclosure(Rational(2), Rational(1, 12));
  CHECK(ln2.width() <= Rational(1, 12));
  CHECK(Rational(2, 3) <= ln2.lo());
  CHECK(ln2.hi() <= Rational(3, 4));
  oracle::Enclosure o = oracle::ln_enclosure(mpq_class(2), mpq_class(1, 1000000));
  CHECK(ln2.lo().mpq() <= o.lo);
  CHECK(o.hi <= ln2.hi().mpq());

  Interval half = ln_enclosure(Rational(1, 2), Rational(1, 12));
  CHECK(half == ln2.negate());

  CHECK_THROWS_AS(ln_enclosure(Rational(0), Rational(1, 10)), Error);
  CHECK_THROWS_AS(ln_enclosure(Rational(-2), Rational(1, 10)), Error);
  CHECK_THROWS_AS(ln_enclosure(Rational(2), Rational(0)), Error);
}

TEST_CASE("ln enclosure meets requested widths and stays sound") {
  auto rng = testutil::make_rng(26);
  for (int i = 0; i < 40; ++i) {
    Rational x = testutil::rand_rational(rng, 200, 50);
    if (x == Rational(1)) continue;
    Rational eps(1, 100000);
    Interval iv = ln_enclosure(x, eps);
    CHECK(iv.width() <= eps);
    oracle::Enclosure o = oracle::ln_enclosure(x.mpq(), mpq_class(1, 10000000));
    CHECK(iv.lo().mpq() <= o.lo);
    CHECK(o.hi <= iv.hi().mpq());
  }
}

TEST_CASE("ln enclosure is deterministic") {
  Interval first = ln_enclosure(Rational(17, 3), Rational(1, 1000000));
  Interval second = ln_enclosure(Rational(17, 3), Rational(1, 1000000));
  CHECK(first == second);
}

TEST_CASE("ln enclosure additivity consistency") {
  auto rng = testutil::make_rng(27);
  Rational eps(1, 10000);
  for (int i = 0; i < 30; ++i) {
    Rational x = testutil::rand_rational(rng, 40, 30);
    Rational y = testutil::rand_rational(rng, 40, 30);
    Interval product = ln_enclosure(x * y, eps);
    Interval sum = ln_enclosure(x, eps) + ln_enclosure(y, eps);
    CHECK(product.intersects(sum));
  }
}

TEST_CASE("ln enclosure survives arguments beyond double range") {
  // 10^400 overflows double; the refinement must still converge and the
  // result must contain 400 * ln(10).
  Rational huge = Rational(10).pow_int(400);
  Interval iv = ln_enclosure(huge, Rational(1, 2));
  CHECK(iv.width() <= Rational(1, 2));
  oracle::Enclosure ln10 = oracle::ln_enclosure(mpq_class(10), mpq_class(1, 100000000));
  CHECK(iv.lo().mpq() <= 400 * ln10.lo);
  CHECK(400 * ln10.hi <= iv.hi().mpq());

  Interval tiny = ln_enclosure(huge.reciprocal(), Rational(1, 2));
  CHECK(tiny == iv.negate());
}

TEST_CASE("ln enclosure caps and budgets") {
  LnOptions tight;
  tight.max_bisections = 5;
  CHECK_THROWS_AS(ln_enclosure(Rational(1000), Rational(1, 1000000000), tight), Error);
  try {
    ln_enclosure(Rational(1000), Rational(1, 1000000000), tight);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PrecisionError);
  }

  LnOptions small_budget;
  small_budget.denominator_budget = Integer(10);
  CHECK_THROWS_AS(ln_enclosure(Rational(2), Rational(1, 100), small_budget), Error);

  // A generous explicit budget works and keeps the contract.
  LnOptions big_budget;
  big_budget.max_bisections = 1000;
  big_budget.denominator_budget = Integer(1) << 40;
  Interval iv = ln_enclosure(Rational(2), Rational(1, 100), big_budget);
  CHECK(iv.width() <= Rational(1, 100));
  CHECK(iv.lo().den() <= (Integer(1) << 40));
}
