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

#ifndef LNCERT_ERRORS_HPP
#define LNCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lncert {

enum class ErrorCode {
  ZeroDenominator,        // denominator of zero in a rational construction or division
  DomainError,            // argument outside an operation's domain
  MethodRoleError,        // lower-bound method passed where an upper one is needed, or vice versa
  PrecisionError,         // iteration/refinement cap reached before the goal was met
  PreconditionRefuted,    // a claim's hypothesis is provably false for the given inputs
  NonIncreasingSequence,  // sequence ratio <= 1 where strict growth is required
  WriteError,             // filesystem output failure
  UsageError,             // malformed command line or unparsable input text
};

inline const char* error_code_name(ErrorCode c) noexcept {
  switch (c) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::MethodRoleError: return "MethodRoleError";
    case ErrorCode::PrecisionError: return "PrecisionError";
    case ErrorCode::PreconditionRefuted: return "PreconditionRefuted";
    case ErrorCode::NonIncreasingSequence: return "NonIncreasingSequence";
    case ErrorCode::WriteError: return "WriteError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "UnknownError";
}

// Every library failure is thrown as an Error; code() drives the CLI exit code
// and the one-line machine-parsable reason printed to stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace lncert

#endif  // LNCERT_ERRORS_HPP
