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

#ifndef LNCERT_CLI_HPP
#define LNCERT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lncert::cli {

// Exit codes: 0 = Certified/success, 1 = Refuted (including a refuted
// precondition), 2 = Undecided at the configured precision, 3 = usage or
// domain error. Errors print one machine-parsable "<Code>: <reason>" line to
// the error stream.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lncert::cli

#endif  // LNCERT_CLI_HPP
