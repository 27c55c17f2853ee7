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

#include "lncert/certificates.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace lncert {

namespace {

const Rational kOne(1);
const Rational kHalf(1, 2);

Rational rat(long n) { return Rational(n); }

void require_positive_eps(const Rational& eps) {
  if (eps.sign() <= 0) fail(ErrorCode::DomainError, "eps must be > 0, got " + eps.to_string());
}

std::vector<BoundTerm> method_terms(const Partition& p, BoundMethod m) {
  std::vector<BoundTerm> terms;
  const auto& pts = p.points();
  terms.reserve(pts.size() - 1);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    terms.push_back({pts[i], pts[i + 1], m, bound_value(m, pts[i], pts[i + 1])});
  }
  return terms;
}

Rational term_sum(const std::vector<BoundTerm>& terms) {
  Rational s(0);
  for (const auto& t : terms) s += t.value;
  return s;
}

}  // namespace

const char* claim_kind_name(ClaimKind k) {
  switch (k) {
    case ClaimKind::EUpper: return "EUpper";
    case ClaimKind::ELower: return "ELower";
    case ClaimKind::EEnclosure: return "EEnclosure";
    case ClaimKind::PowerInequality: return "PowerInequality";
    case ClaimKind::PiE: return "PiE";
    case ClaimKind::GammaEnclosure: return "GammaEnclosure";
    case ClaimKind::GammaSandwich: return "GammaSandwich";
    case ClaimKind::EulerLimitSandwich: return "EulerLimitSandwich";
    case ClaimKind::GeometricIdentity: return "GeometricIdentity";
  }
  return "?";
}

ClaimKind claim_kind_from_name(std::string_view name) {
  for (ClaimKind k : {ClaimKind::EUpper, ClaimKind::ELower, ClaimKind::EEnclosure,
                      ClaimKind::PowerInequality, ClaimKind::PiE, ClaimKind::GammaEnclosure,
                      ClaimKind::GammaSandwich, ClaimKind::EulerLimitSandwich,
                      ClaimKind::GeometricIdentity}) {
    if (name == claim_kind_name(k)) return k;
  }
  fail(ErrorCode::UsageError, "unknown claim kind '" + std::string(name) + "'");
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Undecided: return "Undecided";
  }
  return "?";
}

Verdict verdict_from_name(std::string_view name) {
  if (name == "Certified") return Verdict::Certified;
  if (name == "Refuted") return Verdict::Refuted;
  if (name == "Undecided") return Verdict::Undecided;
  fail(ErrorCode::UsageError, "unknown verdict '" + std::string(name) + "'");
}

const Rational* find_value(const NamedValues& values, std::string_view name) {
  for (const auto& [k, v] : values) {
    if (k == name) return &v;
  }
  return nullptr;
}

Rational harmonic(long n) {
  if (n < 1) fail(ErrorCode::DomainError, "harmonic number needs n >= 1");
  Rational h(0);
  for (long k = 1; k <= n; ++k) h += Rational(1, k);
  return h;
}

std::pair<Certificate, Certificate> certify_e_paper() {
  CertConfig config;

  Partition lower_part({rat(4), rat(6), rat(9), rat(11)});
  Certificate upper_cert;  // upper bound on e
  upper_cert.claim_kind = ClaimKind::EUpper;
  upper_cert.parameters = {{"e_upper", Rational(11, 4)}, {"target", kOne}};
  upper_cert.partitions = {lower_part};
  upper_cert.terms = method_terms(lower_part, BoundMethod::MidpointLower);
  Rational lower_sum = term_sum(upper_cert.terms);
  upper_cert.totals = {{"lower_sum", lower_sum}, {"target", kOne}};
  upper_cert.verdict = lower_sum >= kOne ? Verdict::Certified : Verdict::Undecided;
  upper_cert.statement =
      "e < 11/4: tangent-trapezoid lower bounds over {4, 6, 9, 11} sum to " +
      lower_sum.to_string() + " >= 1, and each bound is strict, so ln(11/4) > 1 = ln e";
  upper_cert.config = config;

  Partition upper_part({rat(10), rat(12), rat(15), rat(18), rat(21), rat(24), rat(27)});
  Certificate lower_cert;  // lower bound on e
  lower_cert.claim_kind = ClaimKind::ELower;
  lower_cert.parameters = {{"e_lower", Rational(27, 10)}, {"target", kOne}};
  lower_cert.partitions = {upper_part};
  lower_cert.terms = method_terms(upper_part, BoundMethod::TrapezoidUpper);
  Rational upper_sum = term_sum(lower_cert.terms);
  lower_cert.totals = {{"upper_sum", upper_sum}, {"target", kOne}};
  lower_cert.verdict = upper_sum < kOne ? Verdict::Certified : Verdict::Undecided;
  lower_cert.statement =
      "e > 27/10: secant-trapezoid upper bounds over {10, 12, 15, 18, 21, 24, 27} sum to " +
      upper_sum.to_string() + " < 1, so ln(27/10) < 1 = ln e";
  lower_cert.config = config;

  return {std::move(upper_cert), std::move(lower_cert)};
}

Interval e_enclosure(const Rational& eps) { return e_enclosure(eps, CertConfig{}); }

Interval e_enclosure(const Rational& eps, const CertConfig& config) {
  require_positive_eps(eps);

  // Seed with the certified bracket 27/10 < e < 11/4.
  auto [upper_cert, lower_cert] = certify_e_paper();
  if (upper_cert.verdict != Verdict::Certified || lower_cert.verdict != Verdict::Certified) {
    fail(ErrorCode::PrecisionError, "seed certificates for the e bracket failed");
  }
  Rational lo(27, 10), hi(11, 4);

  LnOptions opts = config.ln_options();
  long probes = 0;
  while (hi - lo > eps) {
    if (++probes > 100000) {
      fail(ErrorCode::PrecisionError, "bisection for e did not reach width " + eps.to_string());
    }
    Rational t = (lo + hi) / rat(2);
    Rational delta = (hi - lo) / rat(8);
    for (;;) {
      Interval iv = ln_enclosure(t, delta, opts);
      if (iv.hi() < kOne) {  // ln t < 1, so t < e
        lo = t;
        break;
      }
      if (iv.lo() > kOne) {  // ln t > 1, so t > e
        hi = t;
        break;
      }
      delta = delta / rat(2);
      if (delta < config.refinement_floor) {
        fail(ErrorCode::PrecisionError,
             "could not separate ln t from 1 above the refinement floor at t = " + t.to_string());
      }
    }
  }
  return Interval(lo, hi);
}

namespace {

// Refines the e enclosure until c falls strictly outside it.
// Returns +1 when c > e is proven, -1 when c < e, 0 when the refinement floor
// was reached first (only possible within the configured budget).
int side_of_e(const Rational& c, const CertConfig& config, Interval* last) {
  Rational e_eps = min(config.eps, Rational(1, 100));
  for (;;) {
    Interval ee;
    try {
      ee = e_enclosure(e_eps, config);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::PrecisionError) return 0;
      throw;
    }
    if (last != nullptr) *last = ee;
    if (c >= ee.hi()) return +1;  // hi is a strict upper bound for e
    if (c <= ee.lo()) return -1;
    e_eps = e_eps / Rational(2);
    if (e_eps < config.refinement_floor) return 0;
  }
}

}  // namespace

Certificate certify_power(const PowerBase& a, const Rational& b, const Rational& eps) {
  return certify_power(a, b, eps, CertConfig{});
}

Certificate certify_power(const PowerBase& a, const Rational& b, const Rational& eps,
                          const CertConfig& config) {
  require_positive_eps(eps);
  if (b.sign() <= 0) fail(ErrorCode::DomainError, "power inequality needs b > 0");

  Certificate cert;
  cert.claim_kind = ClaimKind::PowerInequality;
  cert.config = config;
  cert.config.eps = eps;
  LnOptions opts = config.ln_options();

  if (a.symbolic_e) {
    cert.parameters = {{"a_is_e", kOne}, {"b", b}};
    cert.statement = "b^e < e^b with b = " + b.to_string() + " (via e*ln b < b)";

    Interval ee_seen;
    int side = side_of_e(b, config, &ee_seen);
    if (side < 0) {
      fail(ErrorCode::DomainError,
           "requires b > e, but b = " + b.to_string() + " is provably below e");
    }
    if (side == 0) {
      cert.verdict = Verdict::Undecided;
      cert.totals = {{"rhs", b}};
      return cert;
    }

    Rational cur = eps;
    for (;;) {
      Interval ee, lnb;
      try {
        ee = e_enclosure(cur, config);
        lnb = ln_enclosure(b, cur, opts);
      } catch (const Error& err) {
        if (err.code() == ErrorCode::PrecisionError) {
          cert.verdict = Verdict::Undecided;
          cert.totals = {{"rhs", b}};
          return cert;
        }
        throw;
      }
      Rational product_upper = ee.hi() * lnb.hi();
      Rational product_lower = ee.lo() * lnb.lo();
      cert.totals = {{"e_lower", ee.lo()},         {"e_upper", ee.hi()},
                     {"ln_b_lower", lnb.lo()},     {"ln_b_upper", lnb.hi()},
                     {"product_lower", product_lower}, {"product_upper", product_upper},
                     {"rhs", b}};
      if (product_upper < b) {
        cert.verdict = Verdict::Certified;
        return cert;
      }
      if (product_lower > b) {
        cert.verdict = Verdict::Refuted;
        return cert;
      }
      cur = cur / rat(2);
      if (cur < config.refinement_floor) {
        cert.verdict = Verdict::Undecided;
        return cert;
      }
    }
  }

  const Rational& base = a.value;
  if (base.sign() <= 0) fail(ErrorCode::DomainError, "power inequality needs a > 0");
  if (b <= base) {
    fail(ErrorCode::DomainError,
         "requires a < b, got a = " + base.to_string() + ", b = " + b.to_string());
  }

  cert.parameters = {{"a", base}, {"b", b}};
  cert.statement = "b^a < a^b with a = " + base.to_string() + ", b = " + b.to_string() +
                   " (via a*ln b < b*ln a)";

  Interval ee;
  int side = side_of_e(base, config, &ee);
  if (side < 0) {
    fail(ErrorCode::PreconditionRefuted,
         "a = " + base.to_string() + " is provably below e; hypothesis e <= a < b fails");
  }
  if (side == 0) {
    cert.verdict = Verdict::Undecided;
    return cert;
  }
  cert.parameters.push_back({"e_upper_used", ee.hi()});

  Rational cur = eps;
  for (;;) {
    Interval lna, lnb;
    try {
      lna = ln_enclosure(base, cur, opts);
      lnb = ln_enclosure(b, cur, opts);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::PrecisionError) {
        cert.verdict = Verdict::Undecided;
        return cert;
      }
      throw;
    }
    Rational lhs_upper = base * lnb.hi();
    Rational lhs_lower = base * lnb.lo();
    Rational rhs_upper = b * lna.hi();
    Rational rhs_lower = b * lna.lo();
    cert.totals = {{"ln_a_lower", lna.lo()},    {"ln_a_upper", lna.hi()},
                   {"ln_b_lower", lnb.lo()},    {"ln_b_upper", lnb.hi()},
                   {"a_ln_b_lower", lhs_lower}, {"a_ln_b_upper", lhs_upper},
                   {"b_ln_a_lower", rhs_lower}, {"b_ln_a_upper", rhs_upper}};
    if (lhs_upper < rhs_lower) {
      cert.verdict = Verdict::Certified;
      return cert;
    }
    if (lhs_lower > rhs_upper) {
      cert.verdict = Verdict::Refuted;
      return cert;
    }
    cur = cur / rat(2);
    if (cur < config.refinement_floor) {
      cert.verdict = Verdict::Undecided;
      return cert;
    }
  }
}

Interval archimedes_pi() { return Interval(Rational(223, 71), Rational(22, 7)); }

Certificate certify_pi_e(const Interval& pi, const Rational& eps) {
  return certify_pi_e(pi, eps, CertConfig{});
}

Certificate certify_pi_e(const Interval& pi, const Rational& eps, const CertConfig& config) {
  require_positive_eps(eps);
  if (pi.lo() < rat(3)) {
    fail(ErrorCode::DomainError, "pi enclosure must have lo >= 3, got " + pi.lo().to_string());
  }

  Certificate cert;
  cert.claim_kind = ClaimKind::PiE;
  cert.config = config;
  cert.config.eps = eps;
  cert.config.pi = pi;
  cert.parameters = {{"pi_lo", pi.lo()}, {"pi_hi", pi.hi()}};
  cert.statement = "pi^e < e^pi (via upper(e) * upper(ln pi_hi) < pi_lo, pi in [" +
                   pi.lo().to_string() + ", " + pi.hi().to_string() + "])";

  LnOptions opts = config.ln_options();
  Rational cur = eps;
  for (;;) {
    Interval ee, ln_hi, ln_lo;
    try {
      ee = e_enclosure(cur, config);
      ln_hi = ln_enclosure(pi.hi(), cur, opts);
      ln_lo = ln_enclosure(pi.lo(), cur, opts);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::PrecisionError) {
        cert.verdict = Verdict::Undecided;
        return cert;
      }
      throw;
    }
    Rational product = ee.hi() * ln_hi.hi();
    cert.totals = {{"e_upper", ee.hi()},
                   {"ln_pi_hi_upper", ln_hi.hi()},
                   {"product", product},
                   {"target", pi.lo()}};
    if (product < pi.lo()) {
      cert.verdict = Verdict::Certified;
      return cert;
    }
    if (ee.lo() * ln_lo.lo() >= pi.hi()) {
      cert.totals.push_back({"refute_product", ee.lo() * ln_lo.lo()});
      cert.totals.push_back({"refute_target", pi.hi()});
      cert.verdict = Verdict::Refuted;
      return cert;
    }
    // The enclosure of pi itself caps what refinement can achieve: once even
    // the optimistic products sit on the wrong side, give up.
    bool certify_futile = ee.lo() * ln_hi.lo() >= pi.lo();
    bool refute_futile = ee.hi() * ln_lo.hi() < pi.hi();
    if (certify_futile && refute_futile) {
      cert.verdict = Verdict::Undecided;
      return cert;
    }
    cur = cur / rat(2);
    if (cur < config.refinement_floor) {
      cert.verdict = Verdict::Undecided;
      return cert;
    }
  }
}

GammaTriple gamma_sequences(long n, const Rational& eps) {
  return gamma_sequences(n, eps, CertConfig{});
}

GammaTriple gamma_sequences(long n, const Rational& eps, const CertConfig& config) {
  if (n < 1) fail(ErrorCode::DomainError, "gamma sequences need n >= 1");
  require_positive_eps(eps);
  LnOptions opts = config.ln_options();
  Rational h = harmonic(n);
  Interval ln_n = ln_enclosure(rat(n), eps, opts);
  Interval ln_n1 = ln_enclosure(rat(n + 1), eps, opts);
  Interval ln_nh = ln_enclosure(rat(n) + kHalf, eps, opts);
  return GammaTriple{n, h - ln_n, h - ln_n1, h - ln_nh};
}

Interval gamma_enclosure(long n, const Rational& eps) {
  return gamma_enclosure(n, eps, CertConfig{});
}

Interval gamma_enclosure(long n, const Rational& eps, const CertConfig& config) {
  GammaTriple t = gamma_sequences(n, eps, config);
  return Interval(t.a_n.lo(), t.big_gamma_n.hi());
}

GammaSandwichReport verify_gamma_sandwich(long n_max, const Rational& eps) {
  if (n_max < 2) fail(ErrorCode::DomainError, "sandwich verification needs n_max >= 2");
  require_positive_eps(eps);

  GammaSandwichReport report;
  report.n_max = n_max;
  report.eps = eps;
  report.note =
      "gamma lies in [1/2, 1): the closed-left form is what these checks certify; "
      "the interior form (1/2, 1) is narrated alongside but not separately certified. "
      "Every comparison below resolves exactly through the four area bounds.";

  GammaCheck gamma_dec{"gamma_strictly_decreasing",
                       "gamma_{n+1} < gamma_n reduces to ln((n+1)/n) > 1/(n+1), the strict "
                       "chord lower bound, whose value equals 1/(n+1) exactly",
                       0, true, 0};
  GammaCheck a_inc{"a_strictly_increasing",
                   "A_{n+1} > A_n reduces to ln((n+2)/(n+1)) < 1/(n+1), the strict chord "
                   "upper bound, whose value equals 1/(n+1) exactly",
                   0, true, 0};
  GammaCheck big_dec{"big_gamma_strictly_decreasing",
                     "Gamma_{n+1} < Gamma_n reduces to ln((n+3/2)/(n+1/2)) > 1/(n+1), the "
                     "strict tangent lower bound, whose value equals 1/(n+1) exactly",
                     0, true, 0};
  GammaCheck ordering{"a_below_big_gamma_below_gamma",
                      "A_n < Gamma_n < gamma_n reduces to ln(n+1) > ln(n+1/2) > ln n, "
                      "witnessed by strictly positive chord lower bounds",
                      0, true, 0};
  GammaCheck gap{"gap_chord_bounds",
                 "gamma_n - Gamma_n = ln((2n+1)/(2n)) sits strictly between the chord "
                 "bounds 1/(2n+1) and 1/(2n), which the chord formulas hit exactly",
                 0, true, 0};
  GammaCheck above_half{"big_gamma_above_half",
                        "Gamma_n > 1/2: the telescoped trapezoid-plus-chord upper bound for "
                        "ln(n+1/2) equals H_n - 1/2 exactly and every term is strict",
                        0, true, 0};
  GammaCheck below_one{"gamma_below_one",
                       "gamma_1 = 1 exactly; for n >= 2 the telescoped chord lower bound "
                       "for ln n equals H_n - 1 exactly and is strict",
                       0, true, 0};

  auto record_failure = [&report](GammaCheck& check, long n, const std::string& what) {
    if (check.passed) {
      check.passed = false;
      check.first_failure = n;
    }
    if (report.failures.size() < 32) {
      report.failures.push_back(check.name + " failed at n = " + std::to_string(n) + ": " + what);
    }
  };

  Rational h = kOne;          // H_n
  Rational trap_sum(0);       // sum of trapezoid uppers over {1, ..., n}
  Rational chord_low_sum(0);  // sum of chord lowers over {1, ..., n}

  for (long n = 1; n <= n_max; ++n) {
    Rational rn = rat(n);
    Rational rn_half = rn + kHalf;
    Rational rn1 = rat(n + 1);
    if (n >= 2) {
      h += Rational(1, n);
      trap_sum += trapezoid_upper(rn - kOne, rn);
      chord_low_sum += chord_lower(rn - kOne, rn);
    }

    Rational inv_n1 = Rational(1, n + 1);
    if (n < n_max) {
      gamma_dec.checked++;
      if (chord_lower(rn, rn1) != inv_n1) {
        record_failure(gamma_dec, n, "chord lower identity broke");
      }
      a_inc.checked++;
      if (chord_upper(rn1, rat(n + 2)) != inv_n1) {
        record_failure(a_inc, n, "chord upper identity broke");
      }
      big_dec.checked++;
      if (midpoint_lower(rn_half, rn1 + kHalf) != inv_n1) {
        record_failure(big_dec, n, "tangent lower identity broke");
      }
    }

    ordering.checked++;
    if (!(chord_lower(rn_half, rn1).sign() > 0 && chord_lower(rn, rn_half).sign() > 0)) {
      record_failure(ordering, n, "chord lower bound not positive");
    }

    gap.checked++;
    if (chord_lower(rn, rn_half) != Rational(1, 2 * n + 1) ||
        chord_upper(rn, rn_half) != Rational(1, 2 * n)) {
      record_failure(gap, n, "chord gap bounds are not 1/(2n+1), 1/(2n)");
    }

    above_half.checked++;
    Rational upper_ln_nh = trap_sum + chord_upper(rn, rn_half);
    if (!(upper_ln_nh <= h - kHalf)) {
      record_failure(above_half, n, "upper bound for ln(n+1/2) exceeds H_n - 1/2");
    }

    below_one.checked++;
    if (n == 1) {
      if (h != kOne) record_failure(below_one, n, "gamma_1 != 1");
    } else {
      if (!(chord_low_sum >= h - kOne)) {
        record_failure(below_one, n, "lower bound for ln n falls below H_n - 1");
      }
    }
  }

  report.checks = {gamma_dec, a_inc, big_dec, ordering, gap, above_half, below_one};
  report.all_passed = report.failures.empty();
  return report;
}

std::pair<Rational, Rational> euler_limit_sandwich(const Rational& a_n, const Rational& a_n1) {
  if (a_n.sign() <= 0 || !(a_n < a_n1)) {
    fail(ErrorCode::DomainError,
         "sandwich needs 0 < a_n < a_n1, got a_n = " + a_n.to_string() +
             ", a_n1 = " + a_n1.to_string());
  }
  Rational r = a_n1 / a_n;
  Rational lower = rat(2) / (kOne + r);
  Rational upper = (kOne + r.reciprocal()) / rat(2);
  return {lower, upper};
}

const char* sequence_kind_name(SequenceKind k) {
  switch (k) {
    case SequenceKind::Identity: return "identity";
    case SequenceKind::Square: return "square";
    case SequenceKind::SqrtLike: return "sqrtlike";
    case SequenceKind::ExplicitRatios: return "ratios";
  }
  return "?";
}

namespace {

// A_n = floor(sqrt(n) * 2^16) / 2^16: strictly increasing for n < 2^30 and
// ratio -> 1, a rational stand-in for sqrt growth.
Rational sqrt_like_term(long n) {
  Integer scaled = Integer(n) << 32;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return Rational(root, Integer(1) << 16);
}

Rational sequence_term(SequenceKind kind, long n) {
  switch (kind) {
    case SequenceKind::Identity: return rat(n);
    case SequenceKind::Square: return Rational(Integer(Integer(n) * Integer(n)));
    case SequenceKind::SqrtLike: return sqrt_like_term(n);
    case SequenceKind::ExplicitRatios: break;
  }
  fail(ErrorCode::DomainError, "explicit ratios have no closed-form term");
}

EulerLimitRow make_row(long n, const Rational& a_n, const Rational& a_n1) {
  if (a_n.sign() <= 0 || !(a_n < a_n1)) {
    fail(ErrorCode::NonIncreasingSequence,
         "sequence ratio <= 1 at n = " + std::to_string(n));
  }
  auto [lower, upper] = euler_limit_sandwich(a_n, a_n1);
  return EulerLimitRow{n, a_n, a_n1, lower, upper, upper - lower, false};
}

// Verifies lower < n*ln((n+1)/n) < upper by enclosure, refining as needed.
void check_identity_row(EulerLimitRow& row, const CertConfig& config) {
  Rational ratio = row.a_n1 / row.a_n;
  Rational factor = row.a_n;  // A_n / d_n = n for the identity sequence
  Rational delta = row.gap / (rat(8) * factor);
  LnOptions opts = config.ln_options();
  for (;;) {
    Interval scaled = ln_enclosure(ratio, delta, opts).scale(factor);
    if (row.lower < scaled.lo() && scaled.hi() < row.upper) {
      row.ln_checked = true;
      return;
    }
    delta = delta / rat(2);
    if (delta < config.refinement_floor) {
      fail(ErrorCode::PrecisionError,
           "could not pin n*ln((n+1)/n) inside the sandwich at n = " + std::to_string(row.n));
    }
  }
}

}  // namespace

EulerLimitTable euler_limit_demo(SequenceKind kind, long n_max) {
  return euler_limit_demo(kind, n_max, CertConfig{});
}

EulerLimitTable euler_limit_demo(SequenceKind kind, long n_max, const CertConfig& config) {
  if (kind == SequenceKind::ExplicitRatios) {
    fail(ErrorCode::DomainError, "explicit ratios take the ratio-list entry point");
  }
  if (n_max < 1) fail(ErrorCode::DomainError, "demo needs n_max >= 1");

  EulerLimitTable table;
  table.kind = kind;
  table.n_max = n_max;

  std::vector<long> sample_ns;
  for (long n = 1; n < n_max; n *= 2) sample_ns.push_back(n);
  sample_ns.push_back(n_max);

  for (long n : sample_ns) {
    EulerLimitRow row = make_row(n, sequence_term(kind, n), sequence_term(kind, n + 1));
    if (kind == SequenceKind::Identity) check_identity_row(row, config);
    table.rows.push_back(std::move(row));
  }
  return table;
}

EulerLimitTable euler_limit_demo_ratios(const std::vector<Rational>& ratios) {
  return euler_limit_demo_ratios(ratios, CertConfig{});
}

EulerLimitTable euler_limit_demo_ratios(const std::vector<Rational>& ratios,
                                        const CertConfig& config) {
  (void)config;
  if (ratios.empty()) fail(ErrorCode::DomainError, "ratio list is empty");

  EulerLimitTable table;
  table.kind = SequenceKind::ExplicitRatios;
  table.n_max = static_cast<long>(ratios.size());

  Rational a_n = kOne;
  long n = 1;
  for (const Rational& r : ratios) {
    if (r <= kOne) {
      fail(ErrorCode::NonIncreasingSequence,
           "ratio " + r.to_string() + " at position " + std::to_string(n) + " is <= 1");
    }
    Rational a_n1 = a_n * r;
    table.rows.push_back(make_row(n, a_n, a_n1));
    a_n = a_n1;
    ++n;
  }
  return table;
}

Certificate geometric_identity(const Rational& r, long m) {
  if (r <= kOne) {
    fail(ErrorCode::DomainError, "geometric identity needs r > 1, got " + r.to_string());
  }
  if (m < 0) fail(ErrorCode::DomainError, "geometric identity needs m >= 0");

  Rational inv_r = r.reciprocal();
  Rational r_minus_1 = r - kOne;

  Rational partial(0);
  Rational power = kOne;  // r^-k
  for (long k = 0; k <= m; ++k) {
    partial += power;
    power *= inv_r;
  }
  // power is now r^-(m+1)
  Rational tail = kOne / (r_minus_1 * r.pow_int(m));
  Rational total = partial + tail;
  Rational target = r / r_minus_1;

  Rational rect_sum(0);
  Rational pk = inv_r;  // r^-k
  for (long k = 1; k <= m; ++k) {
    Rational pk1 = pk * inv_r;
    rect_sum += (pk - pk1) * r_minus_1;
    pk = pk1;
  }
  Rational rect_remainder = r_minus_1 * power;  // (r-1)/r^(m+1)
  Rational rect_total = rect_sum + rect_remainder;
  Rational rect_lhs = kOne - inv_r;

  Certificate cert;
  cert.claim_kind = ClaimKind::GeometricIdentity;
  cert.parameters = {{"r", r}, {"m", rat(m)}};
  cert.totals = {{"partial_sum", partial},   {"tail", tail},
                 {"total", total},           {"target", target},
                 {"rect_sum", rect_sum},     {"rect_remainder", rect_remainder},
                 {"rect_total", rect_total}, {"rect_lhs", rect_lhs}};
  bool ok = total == target && rect_total == rect_lhs;
  cert.verdict = ok ? Verdict::Certified : Verdict::Refuted;
  cert.statement = "geometric series: sum of r^-k for k = 0.." + std::to_string(m) +
                   " plus exact tail equals r/(r-1) for r = " + r.to_string() +
                   ", with the matching equal-area rectangle decomposition";
  return cert;
}

Certificate e_enclosure_certificate(const Rational& eps, const CertConfig& config) {
  Interval iv = e_enclosure(eps, config);
  Certificate cert;
  cert.claim_kind = ClaimKind::EEnclosure;
  cert.config = config;
  cert.config.eps = eps;
  cert.parameters = {{"eps", eps}};
  cert.totals = {{"lo", iv.lo()}, {"hi", iv.hi()}, {"width", iv.width()}};
  cert.verdict = iv.width() <= eps ? Verdict::Certified : Verdict::Undecided;
  cert.statement = "e lies in [" + iv.lo().to_string() + ", " + iv.hi().to_string() +
                   "], width <= " + eps.to_string();
  return cert;
}

Certificate gamma_certificate(long n, const Rational& eps, const CertConfig& config) {
  GammaTriple t = gamma_sequences(n, eps, config);
  Interval enc(t.a_n.lo(), t.big_gamma_n.hi());
  Certificate cert;
  cert.claim_kind = ClaimKind::GammaEnclosure;
  cert.config = config;
  cert.config.eps = eps;
  cert.parameters = {{"n", rat(n)}, {"eps", eps}};
  cert.totals = {{"h_n", harmonic(n)},
                 {"gamma_n_lo", t.gamma_n.lo()},
                 {"gamma_n_hi", t.gamma_n.hi()},
                 {"a_n_lo", t.a_n.lo()},
                 {"a_n_hi", t.a_n.hi()},
                 {"big_gamma_n_lo", t.big_gamma_n.lo()},
                 {"big_gamma_n_hi", t.big_gamma_n.hi()},
                 {"enclosure_lo", enc.lo()},
                 {"enclosure_hi", enc.hi()},
                 {"enclosure_width", enc.width()}};
  cert.verdict = enc.lo() < enc.hi() ? Verdict::Certified : Verdict::Undecided;
  cert.statement = "Euler's constant lies in [" + enc.lo().to_string() + ", " +
                   enc.hi().to_string() + "] = [lower(A_n), upper(Gamma_n)] at n = " +
                   std::to_string(n);
  return cert;
}

Certificate gamma_sandwich_certificate(const GammaSandwichReport& report,
                                       const CertConfig& config) {
  Certificate cert;
  cert.claim_kind = ClaimKind::GammaSandwich;
  cert.config = config;
  cert.config.eps = report.eps;
  cert.parameters = {{"n_max", rat(report.n_max)}, {"eps", report.eps}};
  long checks_passed = 0;
  for (const auto& c : report.checks) checks_passed += c.passed ? 1 : 0;
  cert.totals = {{"checks", rat(static_cast<long>(report.checks.size()))},
                 {"checks_passed", rat(checks_passed)},
                 {"failures", rat(static_cast<long>(report.failures.size()))}};
  cert.verdict = report.all_passed ? Verdict::Certified : Verdict::Refuted;
  cert.statement = "sandwich laws for gamma_n, A_n, Gamma_n hold for all n <= " +
                   std::to_string(report.n_max) + "; gamma in [1/2, 1)";
  return cert;
}

Certificate euler_limit_certificate(const EulerLimitTable& table, const CertConfig& config) {
  if (table.rows.empty()) fail(ErrorCode::DomainError, "empty sandwich table");
  const EulerLimitRow& last = table.rows.back();
  Certificate cert;
  cert.claim_kind = ClaimKind::EulerLimitSandwich;
  cert.config = config;
  cert.parameters = {{"n_max", rat(table.n_max)},
                     {"rows", rat(static_cast<long>(table.rows.size()))},
                     {"final_a_n", last.a_n},
                     {"final_a_n1", last.a_n1}};
  cert.totals = {{"final_lower", last.lower},
                 {"final_upper", last.upper},
                 {"final_gap", last.gap}};
  cert.verdict = Verdict::Certified;
  cert.statement = "sandwich 2/(1+r) < ln(r)^(A_n/d_n) < (1+1/r)/2 over the " +
                   std::string(sequence_kind_name(table.kind)) + " sequence up to n = " +
                   std::to_string(table.n_max) + "; both ends approach 1";
  return cert;
}

namespace {

// Name-based: key order is a serialization detail, not part of the claim.
bool totals_match(const Certificate& cert, const NamedValues& expected) {
  if (cert.totals.size() != expected.size()) return false;
  for (const auto& [name, value] : expected) {
    const Rational* have = cert.total(name);
    if (have == nullptr || *have != value) return false;
  }
  return true;
}

bool terms_follow_partition(const Certificate& cert) {
  if (cert.partitions.size() != 1) return false;
  const auto& pts = cert.partitions[0].points();
  if (cert.terms.size() != pts.size() - 1) return false;
  for (size_t i = 0; i < cert.terms.size(); ++i) {
    if (cert.terms[i].a != pts[i] || cert.terms[i].b != pts[i + 1]) return false;
  }
  return true;
}

bool replay_e_paper(const Certificate& cert, bool upper_kind) {
  if (!terms_follow_partition(cert)) return false;
  const Rational* target = cert.total("target");
  if (target == nullptr) return false;
  Rational sum = term_sum(cert.terms);
  if (upper_kind) {
    const Rational* lower_sum = cert.total("lower_sum");
    if (lower_sum == nullptr || *lower_sum != sum) return false;
    return (cert.verdict == Verdict::Certified) == (sum >= *target);
  }
  const Rational* upper_sum = cert.total("upper_sum");
  if (upper_sum == nullptr || *upper_sum != sum) return false;
  return (cert.verdict == Verdict::Certified) == (sum < *target);
}

bool replay_power(const Certificate& cert) {
  if (cert.parameter("a_is_e") != nullptr) {
    const Rational* rhs = cert.total("rhs");
    if (rhs == nullptr) return false;
    if (cert.verdict == Verdict::Undecided) return true;  // nothing further to recompute
    const Rational *e_lo = cert.total("e_lower"), *e_hi = cert.total("e_upper");
    const Rational *ln_lo = cert.total("ln_b_lower"), *ln_hi = cert.total("ln_b_upper");
    const Rational *p_lo = cert.total("product_lower"), *p_hi = cert.total("product_upper");
    if (!e_lo || !e_hi || !ln_lo || !ln_hi || !p_lo || !p_hi) return false;
    if (*p_hi != *e_hi * *ln_hi || *p_lo != *e_lo * *ln_lo) return false;
    if (cert.verdict == Verdict::Certified) return *p_hi < *rhs;
    return *p_lo > *rhs;
  }
  const Rational *a = cert.parameter("a"), *b = cert.parameter("b");
  if (a == nullptr || b == nullptr) return false;
  if (cert.verdict == Verdict::Undecided && cert.totals.empty()) return true;
  const Rational *lna_lo = cert.total("ln_a_lower"), *lna_hi = cert.total("ln_a_upper");
  const Rational *lnb_lo = cert.total("ln_b_lower"), *lnb_hi = cert.total("ln_b_upper");
  const Rational *lhs_lo = cert.total("a_ln_b_lower"), *lhs_hi = cert.total("a_ln_b_upper");
  const Rational *rhs_lo = cert.total("b_ln_a_lower"), *rhs_hi = cert.total("b_ln_a_upper");
  if (!lna_lo || !lna_hi || !lnb_lo || !lnb_hi || !lhs_lo || !lhs_hi || !rhs_lo || !rhs_hi) {
    return false;
  }
  if (*lhs_hi != *a * *lnb_hi || *lhs_lo != *a * *lnb_lo) return false;
  if (*rhs_lo != *b * *lna_lo || *rhs_hi != *b * *lna_hi) return false;
  switch (cert.verdict) {
    case Verdict::Certified: return *lhs_hi < *rhs_lo;
    case Verdict::Refuted: return *lhs_lo > *rhs_hi;
    case Verdict::Undecided: return !(*lhs_hi < *rhs_lo) && !(*lhs_lo > *rhs_hi);
  }
  return false;
}

bool replay_pi_e(const Certificate& cert) {
  const Rational *e_hi = cert.total("e_upper"), *ln_hi = cert.total("ln_pi_hi_upper");
  const Rational *product = cert.total("product"), *target = cert.total("target");
  if (!e_hi || !ln_hi || !product || !target) return cert.verdict == Verdict::Undecided;
  if (*product != *e_hi * *ln_hi) return false;
  if (cert.verdict == Verdict::Certified) return *product < *target;
  if (cert.verdict == Verdict::Refuted) {
    const Rational *rp = cert.total("refute_product"), *rt = cert.total("refute_target");
    return rp != nullptr && rt != nullptr && *rp >= *rt;
  }
  return !(*product < *target);
}

bool replay_geometric(const Certificate& cert) {
  const Rational *r = cert.parameter("r"), *m = cert.parameter("m");
  if (r == nullptr || m == nullptr || !m->is_integer()) return false;
  Certificate fresh = geometric_identity(*r, m->num().get_si());
  return totals_match(cert, fresh.totals) && cert.verdict == fresh.verdict;
}

bool replay_e_enclosure(const Certificate& cert) {
  const Rational* eps = cert.parameter("eps");
  if (eps == nullptr) return false;
  Certificate fresh = e_enclosure_certificate(*eps, cert.config);
  return totals_match(cert, fresh.totals) && cert.verdict == fresh.verdict;
}

bool replay_gamma_enclosure(const Certificate& cert) {
  const Rational *n = cert.parameter("n"), *eps = cert.parameter("eps");
  if (n == nullptr || eps == nullptr || !n->is_integer()) return false;
  Certificate fresh = gamma_certificate(n->num().get_si(), *eps, cert.config);
  return totals_match(cert, fresh.totals) && cert.verdict == fresh.verdict;
}

bool replay_gamma_sandwich(const Certificate& cert) {
  const Rational *n_max = cert.parameter("n_max"), *eps = cert.parameter("eps");
  if (n_max == nullptr || eps == nullptr || !n_max->is_integer()) return false;
  GammaSandwichReport fresh = verify_gamma_sandwich(n_max->num().get_si(), *eps);
  Certificate fresh_cert = gamma_sandwich_certificate(fresh, cert.config);
  return totals_match(cert, fresh_cert.totals) && cert.verdict == fresh_cert.verdict;
}

bool replay_euler_limit(const Certificate& cert) {
  const Rational *a_n = cert.parameter("final_a_n"), *a_n1 = cert.parameter("final_a_n1");
  if (a_n == nullptr || a_n1 == nullptr) return false;
  auto [lower, upper] = euler_limit_sandwich(*a_n, *a_n1);
  const Rational *lo = cert.total("final_lower"), *hi = cert.total("final_upper");
  const Rational* gp = cert.total("final_gap");
  if (!lo || !hi || !gp) return false;
  return *lo == lower && *hi == upper && *gp == upper - lower;
}

}  // namespace

bool replay(const Certificate& cert) {
  try {
    for (const BoundTerm& t : cert.terms) {
      if (bound_value(t.method, t.a, t.b) != t.value) return false;
    }
    switch (cert.claim_kind) {
      case ClaimKind::EUpper: return replay_e_paper(cert, true);
      case ClaimKind::ELower: return replay_e_paper(cert, false);
      case ClaimKind::EEnclosure: return replay_e_enclosure(cert);
      case ClaimKind::PowerInequality: return replay_power(cert);
      case ClaimKind::PiE: return replay_pi_e(cert);
      case ClaimKind::GammaEnclosure: return replay_gamma_enclosure(cert);
      case ClaimKind::GammaSandwich: return replay_gamma_sandwich(cert);
      case ClaimKind::EulerLimitSandwich: return replay_euler_limit(cert);
      case ClaimKind::GeometricIdentity: return replay_geometric(cert);
    }
    return false;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace lncert
