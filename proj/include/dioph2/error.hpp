/*
   Copyright 2026 The dioph2 Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dioph2 {

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Operands live in different constant fields.
class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

/// A precondition on the mathematical input failed (zero where nonzero is
/// required, unachievable sizes, degenerate denominators, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Syntax or semantic error in textual input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Raised when an internal cross-check disagrees, e.g. two independent
/// decision procedures give different answers. Never expected in practice.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dioph2
