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

// Test-only oracles, kept independent of the library: exact-rational artanh
// series for ln, the factorial series for e, and brute-force one-sided best
// rational approximations. Everything here works directly on mpq_class.

#ifndef LNCERT_TESTS_ORACLE_LN_HPP
#define LNCERT_TESTS_ORACLE_LN_HPP

#include <gmpxx.h>

namespace oracle {

struct Enclosure {
  mpq_class lo, hi;
};

// ln x = 2 * sum of t^(2k+1)/(2k+1) for t = (x-1)/(x+1), with the geometric
// tail bound 2 t^(2K+3) / ((2K+3)(1 - t^2)). Adds terms until the tail drops
// below width_goal.
Enclosure ln_enclosure(const mpq_class& x, const mpq_class& width_goal);

// Strict separation with adaptive refinement: true iff probe < ln x
// (respectively probe > ln x) once the series pins the side down.
bool below_ln(const mpq_class& probe, const mpq_class& x);
bool above_ln(const mpq_class& probe, const mpq_class& x);

// e in [S_K, S_K + 2/((K+1)(K+1)!)] for the factorial partial sum S_K.
Enclosure e_enclosure(unsigned terms);

// Brute force over every denominator 1..max_den; the tightness oracle for
// continued-fraction outward rounding.
mpq_class best_below(const mpq_class& v, unsigned long max_den);
mpq_class best_above(const mpq_class& v, unsigned long max_den);

}  // namespace oracle

#endif  // LNCERT_TESTS_ORACLE_LN_HPP
