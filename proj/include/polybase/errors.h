// Copyright 2026 The Polybase Authors.
//
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

#ifndef POLYBASE_ERRORS_H_
#define POLYBASE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace polybase {

// Exit codes of the command-line tool. These are stable API.
enum class ExitCode : int {
  kOk = 0,
  kInputFailure = 1,
  kParseError = 2,
  kInvariantViolation = 3,
  kBudgetExceeded = 4,
};

class Error : public std::runtime_error {
 public:
  Error(const std::string& what, ExitCode code)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

// Caller supplied something outside an operation's contract.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what)
      : Error(what, ExitCode::kInputFailure) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what)
      : Error(what, ExitCode::kParseError) {}
};

// A mathematical guarantee failed at runtime. Always a software defect.
// `context` carries a diagnostic dump (constraint system, partial trace).
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what, std::string context = {})
      : Error(what, ExitCode::kInvariantViolation),
        context_(std::move(context)) {}
  const std::string& context() const { return context_; }

 private:
  std::string context_;
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : Error(what, ExitCode::kBudgetExceeded) {}
};

}  // namespace polybase

#endif  // POLYBASE_ERRORS_H_
