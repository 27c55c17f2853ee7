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

#include "lncert/interval.hpp"
#include "lncert/rational.hpp"
#include "oracle_ln.hpp"
#include "test_util.hpp"

using lncert::Cmp;
using lncert::Error;
using lncert::ErrorCode;
using lncert::Integer;
using lncert::Interval;
using lncert::Rational;

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(11, 4).num() == 11);
  CHECK(Rational(11, 4).den() == 4);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7).den() == 1);

  CHECK_THROWS_AS(Rational(1, 0), Error);
  try {
    Rational bad(5, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDenominator);
  }
}

TEST_CASE("arithmetic is exact and canonical") {
  Rational two_fifths(2, 5);
  CHECK(two_fifths + two_fifths + Rational(1, 5) == Rational(1));
  CHECK(Rational(3, 4) * Rational(0) == Rational(0));
  CHECK(Rational(1) / Rational(3) == Rational(1, 3));
  CHECK(Rational(1, 6) + Rational(1, 3) == Rational(1, 2));
  CHECK(Rational(7, 3) - Rational(1, 3) == Rational(2));

  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), Error);
}

TEST_CASE("comparison is an exact trichotomy") {
  CHECK(cmp(Rational(27, 10), Rational(11, 4)) == Cmp::LT);
  CHECK(cmp(Rational(1, 2), Rational(1, 2)) == Cmp::EQ);
  CHECK(cmp(Rational(2, 3), Rational(3, 4)) == Cmp::LT);  // cross products 8 < 9
  CHECK(cmp(Rational(3, 4), Rational(2, 3)) == Cmp::GT);
}

TEST_CASE("comparison agrees with the cross product on random pairs") {
  auto rng = testutil::make_rng();
  std::uniform_int_distribution<long> num_dist(-10000, 10000);
  std::uniform_int_distribution<long> den_dist(1, 997);
  for (int i = 0; i < 10000; ++i) {
    Rational x(num_dist(rng), den_dist(rng));
    Rational y(num_dist(rng), den_dist(rng));
    Integer cross = x.num() * y.den() - y.num() * x.den();
    Cmp expected = cross < 0 ? Cmp::LT : (cross == 0 ? Cmp::EQ : Cmp::GT);
    CHECK(cmp(x, y) == expected);
  }
}

TEST_CASE("arithmetic results round-trip through canonicalization") {
  auto rng = testutil::make_rng(7);
  for (int i = 0; i < 2000; ++i) {
    Rational x = testutil::rand_rational(rng, 50, 60);
    Rational y = testutil::rand_rational(rng, 50, 60);
    for (const Rational& r : {x + y, x - y, x * y, x / y}) {
      CHECK(Rational(r.num(), r.den()) == r);
      CHECK(r.den() > 0);
      Integer g;
      mpz_gcd(g.get_mpz_t(), Integer(::abs(r.num())).get_mpz_t(), r.den().get_mpz_t());
      CHECK(g == 1);
    }
  }
}

TEST_CASE("text form") {
  CHECK(Rational(-3, 7).to_string() == "-3/7");
  CHECK(Rational(2, 1).to_string() == "2");
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational(54, 20).to_string() == "27/10");
}

TEST_CASE("parsing accepts p/q, integers, decimals, exponents") {
  CHECK(Rational::from_string("2.75") == Rational(11, 4));
  CHECK(Rational::from_string("2.7") == Rational(27, 10));
  CHECK(Rational::from_string("2.7").to_string() == "27/10");
  CHECK(Rational::from_string("-3/7") == Rational(-3, 7));
  CHECK(Rational::from_string("42") == Rational(42));
  CHECK(Rational::from_string("1e-9") == Rational(1, 1000000000));
  CHECK(Rational::from_string("2.5e3") == Rational(2500));
  CHECK(Rational::from_string("+.5") == Rational(1, 2));

  CHECK_THROWS_AS(Rational::from_string("abc"), Error);
  CHECK_THROWS_AS(Rational::from_string(""), Error);
  CHECK_THROWS_AS(Rational::from_string("1/"), Error);
  CHECK_THROWS_AS(Rational::from_string("1/0"), Error);
  CHECK_THROWS_AS(Rational::from_string("1.2.3"), Error);
}

TEST_CASE("decimal rendering uses round-half-even") {
  CHECK(Rational(1, 8).to_decimal_string(2) == "0.12");
  CHECK(Rational(3, 8).to_decimal_string(2) == "0.38");
  CHECK(Rational(1, 2).to_decimal_string(0) == "0");
  CHECK(Rational(3, 2).to_decimal_string(0) == "2");
  CHECK(Rational(-1, 3).to_decimal_string(6) == "-0.333333");
  CHECK(Rational(27, 10).to_decimal_string(6) == "2.700000");
  CHECK(Rational(0).to_decimal_string(3) == "0.000");
}

TEST_CASE("floor, ceil, pow") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(2, 3).pow_int(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow_int(-2) == Rational(9, 4));
  CHECK(Rational(5).pow_int(0) == Rational(1));
  CHECK_THROWS_AS(Rational(0).pow_int(-1), Error);
}

TEST_CASE("interval basics") {
  Interval iv(Rational(1, 3), Rational(1, 2));
  CHECK(iv.width() == Rational(1, 6));
  CHECK(iv.contains(Rational(2, 5)));
  CHECK(!iv.contains(Rational(2)));
  CHECK(iv.negate() == Interval(Rational(-1, 2), Rational(-1, 3)));
  CHECK((iv + Interval(Rational(1), Rational(2))) ==
        Interval(Rational(4, 3), Rational(5, 2)));
  CHECK_THROWS_AS(Interval(Rational(1), Rational(0)), Error);
}

TEST_CASE("outward rounding keeps the input inside a coarser interval") {
  // Already within budget: unchanged.
  CHECK(round_outward(Interval(Rational(1, 3), Rational(1, 3)), 10) ==
        Interval(Rational(1, 3), Rational(1, 3)));
  CHECK(round_outward(Interval(Rational(0), Rational(1)), 1) ==
        Interval(Rational(0), Rational(1)));

  Rational pi_ish(355, 113);
  Rational delta(1, 1000000000);
  Interval tight(pi_ish - delta, pi_ish + delta);
  Interval rounded = round_outward(tight, 113);
  CHECK(rounded.contains(tight));
  CHECK(rounded.lo().den() <= 113);
  CHECK(rounded.hi().den() <= 113);

  CHECK_THROWS_AS(round_outward(tight, 0), lncert::Error);
}

TEST_CASE("outward rounding returns best one-sided approximations") {
  auto rng = testutil::make_rng(11);
  std::uniform_int_distribution<long> num_dist(-40000, 40000);
  std::uniform_int_distribution<long> den_dist(101, 99991);
  std::uniform_int_distribution<long> budget_dist(1, 60);
  for (int i = 0; i < 300; ++i) {
    Rational v(num_dist(rng), den_dist(rng));
    long budget = budget_dist(rng);
    Rational down = round_down(v, budget);
    Rational up = round_up(v, budget);
    CHECK(down <= v);
    CHECK(up >= v);
    CHECK(down.den() <= budget);
    CHECK(up.den() <= budget);
    mpq_class expect_down = oracle::best_below(v.mpq(), static_cast<unsigned long>(budget));
    mpq_class expect_up = oracle::best_above(v.mpq(), static_cast<unsigned long>(budget));
    CHECK(down.mpq() == expect_down);
    CHECK(up.mpq() == expect_up);
  }
}
