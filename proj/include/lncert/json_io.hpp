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

#ifndef LNCERT_JSON_IO_HPP
#define LNCERT_JSON_IO_HPP

#include <string>
#include <string_view>

#include "lncert/certificates.hpp"

namespace lncert {

// Byte-deterministic JSON: top-level keys in the fixed order claim_kind,
// statement, parameters, partitions, terms, totals, verdict, config; every
// rational as its canonical "num/den" string; no whitespace. parameters and
// totals keep the library's insertion order.
std::string certificate_to_json(const Certificate& cert);

// Inverse of certificate_to_json; malformed input raises UsageError.
Certificate certificate_from_json(std::string_view text);

}  // namespace lncert

#endif  // LNCERT_JSON_IO_HPP
