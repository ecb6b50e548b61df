// Copyright 2026 The nullcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nullcert {

// Mirrors nc_status in the C header; the C layer maps one to the other.
enum class ErrorCode {
  invalid_argument = 1,
  parse = 2,
  validation = 3,
  resource = 4,
  verification = 5,
  io = 6,
  internal = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Precondition or shape mismatch detected by a library operation.
class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& what) : Error(ErrorCode::invalid_argument, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(ErrorCode::parse, format(what, line, column)), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }
  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : Error(ErrorCode::validation, join(issues)), issues_(std::move(issues)) {}
  const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out = "invalid task";
    for (const auto& issue : issues) out += "\n  - " + issue;
    return out;
  }
  std::vector<std::string> issues_;
};

// A computation would exceed its memory budget. `progress` carries whatever
// statistics were available at the point of abort.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::string progress = {})
      : Error(ErrorCode::resource, what), progress_(std::move(progress)) {}
  const std::string& progress() const noexcept { return progress_; }

 private:
  std::string progress_;
};

// A solver reported success but the symbolic check disagreed. Always a bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorCode::internal, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::io, what) {}
};

}  // namespace nullcert
