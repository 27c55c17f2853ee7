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

#ifndef LNCERT_CERTIFICATES_HPP
#define LNCERT_CERTIFICATES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lncert/interval.hpp"
#include "lncert/ln_bounds.hpp"
#include "lncert/rational.hpp"

namespace lncert {

enum class ClaimKind {
  EUpper,             // e < 11/4 via the tangent-trapezoid partition sum
  ELower,             // e > 27/10 via the secant-trapezoid partition sum
  EEnclosure,         // two-sided enclosure of e by bisection on ln t = 1
  PowerInequality,    // b^a < a^b for e <= a < b
  PiE,                // pi^e < e^pi from a caller-supplied pi enclosure
  GammaEnclosure,     // [A_n lower, Gamma_n upper] encloses Euler's constant
  GammaSandwich,      // monotonicity and gap laws of gamma_n, A_n, Gamma_n
  EulerLimitSandwich, // 2/(1+r) < ln(r)^(A_n/d_n) < (1+1/r)/2
  GeometricIdentity,  // partial sum + exact tail = r/(r-1)
};

const char* claim_kind_name(ClaimKind k);
ClaimKind claim_kind_from_name(std::string_view name);

enum class Verdict { Certified, Refuted, Undecided };

const char* verdict_name(Verdict v);
Verdict verdict_from_name(std::string_view name);

// One recorded bound evaluation: value == bound_value(method, a, b) exactly.
struct BoundTerm {
  Rational a, b;
  BoundMethod method;
  Rational value;
};

// Provenance block echoed into every certificate.
struct CertConfig {
  Rational eps = Rational(1, 1000000);
  Rational refinement_floor = Rational(10).pow_int(-30);
  long max_bisections = kDefaultMaxBisections;
  std::optional<Interval> pi;  // recorded only by the pi^e < e^pi certificate

  LnOptions ln_options() const { return LnOptions{max_bisections, std::nullopt}; }
};

using NamedValues = std::vector<std::pair<std::string, Rational>>;

const Rational* find_value(const NamedValues& values, std::string_view name);

// Self-contained, re-checkable record: claim, partitions, per-interval bound
// terms, exact totals, and a three-valued verdict. Certified is only ever set
// when the final exact comparison holds strictly.
struct Certificate {
  ClaimKind claim_kind;
  std::string statement;
  NamedValues parameters;
  std::vector<Partition> partitions;
  std::vector<BoundTerm> terms;
  NamedValues totals;
  Verdict verdict = Verdict::Undecided;
  CertConfig config;

  const Rational* total(std::string_view name) const { return find_value(totals, name); }
  const Rational* parameter(std::string_view name) const { return find_value(parameters, name); }
};

// Recomputes every term from its (a, b, method) triple, every total that the
// claim derives from terms or parameters, and the final comparison. For
// enclosure-backed claims the producing operation is re-run (they are
// deterministic). True iff everything reproduces exactly, verdict included.
bool replay(const Certificate& cert);

// Exact harmonic number H_n = 1 + 1/2 + ... + 1/n.
Rational harmonic(long n);

// The two explicit-partition certificates: midpoint-tangent lower sums over
// {4,6,9,11} prove ln(11/4) > 1 (so e < 11/4), and secant-trapezoid upper
// sums over {10,12,15,18,21,24,27} prove ln(27/10) < 1 (so e > 27/10).
std::pair<Certificate, Certificate> certify_e_paper();

// Width <= eps enclosure of e by exact bisection on t in [27/10, 11/4],
// deciding each probe by whether the ln enclosure of t falls below or above 1.
Interval e_enclosure(const Rational& eps);
Interval e_enclosure(const Rational& eps, const CertConfig& config);

// Base of the power inequality: either an exact rational or the symbol e
// (e is irrational, so the a = e corollaries are unreachable with a rational).
struct PowerBase {
  static PowerBase e() { return PowerBase{true, Rational(0)}; }
  static PowerBase rational(Rational v) { return PowerBase{false, std::move(v)}; }

  bool symbolic_e;
  Rational value;
};

// Certifies b^a < a^b under the hypothesis e <= a < b. Rational a must clear
// a refined e enclosure (a < e is PreconditionRefuted); a = e certifies
// e*ln b < b directly. Auto-refines down to config.refinement_floor,
// returning Undecided when the enclosures cannot separate the sides.
Certificate certify_power(const PowerBase& a, const Rational& b, const Rational& eps);
Certificate certify_power(const PowerBase& a, const Rational& b, const Rational& eps,
                          const CertConfig& config);

// Certifies pi^e < e^pi by verifying upper(e) * upper(ln pi_hi) < pi_lo.
// pi is an input enclosure (default Archimedes [223/71, 22/7]); the
// certificate records which enclosure was used.
Certificate certify_pi_e(const Interval& pi, const Rational& eps);
Certificate certify_pi_e(const Interval& pi, const Rational& eps, const CertConfig& config);

Interval archimedes_pi();

// gamma_n = H_n - ln n, A_n = H_n - ln(n+1), Gamma_n = H_n - ln(n+1/2),
// each enclosed to width <= eps.
struct GammaTriple {
  long n;
  Interval gamma_n;
  Interval a_n;
  Interval big_gamma_n;
};

GammaTriple gamma_sequences(long n, const Rational& eps);
GammaTriple gamma_sequences(long n, const Rational& eps, const CertConfig& config);

// [lower(A_n), upper(Gamma_n)]: a sound enclosure of Euler's constant.
Interval gamma_enclosure(long n, const Rational& eps);
Interval gamma_enclosure(long n, const Rational& eps, const CertConfig& config);

struct GammaCheck {
  std::string name;
  std::string detail;
  long checked = 0;        // how many n were verified
  bool passed = false;
  long first_failure = 0;  // 0 when passed
};

struct GammaSandwichReport {
  long n_max = 0;
  Rational eps;
  std::vector<GammaCheck> checks;
  std::vector<std::string> failures;
  bool all_passed = false;
  std::string note;
};

// For each n <= n_max: gamma_n strictly decreasing, A_n strictly increasing,
// Gamma_n strictly decreasing, A_n < Gamma_n < gamma_n, the chord-gap law
// 1/(2n+1) < gamma_n - Gamma_n < 1/(2n), Gamma_n > 1/2, and gamma_n < 1 for
// n >= 2 with gamma_1 = 1 exactly. Every comparison resolves through exact
// closed forms of the four bounds, so no refinement is needed.
GammaSandwichReport verify_gamma_sandwich(long n_max, const Rational& eps);

// Exactly (2/(1+r), (1+1/r)/2) with r = a_n1/a_n; the two rationals straddle
// (A_n/d_n) * ln r for any strictly increasing positive pair.
std::pair<Rational, Rational> euler_limit_sandwich(const Rational& a_n, const Rational& a_n1);

enum class SequenceKind { Identity, Square, SqrtLike, ExplicitRatios };

const char* sequence_kind_name(SequenceKind k);

struct EulerLimitRow {
  long n;
  Rational a_n, a_n1;
  Rational lower, upper, gap;
  bool ln_checked = false;  // true when n*ln((n+1)/n) was verified strictly inside
};

struct EulerLimitTable {
  SequenceKind kind;
  long n_max = 0;
  std::vector<EulerLimitRow> rows;
};

// Sandwich table for a built-in sequence, sampled at 1, 2, 4, ... and n_max.
// For Identity every emitted row also verifies that n*ln((n+1)/n) lies
// strictly inside the sandwich, refining the ln enclosure as needed.
EulerLimitTable euler_limit_demo(SequenceKind kind, long n_max);
EulerLimitTable euler_limit_demo(SequenceKind kind, long n_max, const CertConfig& config);

// One row per supplied ratio, applied to the running products A_1 = 1,
// A_{k+1} = A_k * r_k. Any ratio <= 1 is NonIncreasingSequence.
EulerLimitTable euler_limit_demo_ratios(const std::vector<Rational>& ratios);
EulerLimitTable euler_limit_demo_ratios(const std::vector<Rational>& ratios,
                                        const CertConfig& config);

// Exact finite form of the geometric series: partial sum of r^-k for
// k = 0..m plus the exact tail 1/((r-1) r^m) equals r/(r-1), and the
// rectangle decomposition (1 - 1/r) = sum of (1/r^k - 1/r^(k+1))(r-1) plus
// (r-1)/r^(m+1). Certified on exact equality of both.
Certificate geometric_identity(const Rational& r, long m);

// Certificate wrappers for the enclosure-style results, used by the CLI.
Certificate e_enclosure_certificate(const Rational& eps, const CertConfig& config);
Certificate gamma_certificate(long n, const Rational& eps, const CertConfig& config);
Certificate gamma_sandwich_certificate(const GammaSandwichReport& report,
                                       const CertConfig& config);
Certificate euler_limit_certificate(const EulerLimitTable& table, const CertConfig& config);

}  // namespace lncert

#endif  // LNCERT_CERTIFICATES_HPP
