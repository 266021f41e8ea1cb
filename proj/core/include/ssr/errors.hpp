// Copyright 2026 The ssr Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ssr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `position` is a 1-based line number for line-oriented
// formats and a 0-based byte offset for GML.
class ParseError : public Error {
 public:
  enum class Unit { kLine, kByte };

  ParseError(const std::string& what, std::size_t position, Unit unit)
      : Error(format(what, position, unit)), position_(position), unit_(unit) {}

  std::size_t position() const noexcept { return position_; }
  Unit unit() const noexcept { return unit_; }

 private:
  static std::string format(const std::string& what, std::size_t position,
                            Unit unit) {
    return (unit == Unit::kLine ? "line " : "byte offset ") +
           std::to_string(position) + ": " + what;
  }

  std::size_t position_;
  Unit unit_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

// Raised when every power-iteration start vector lands in the null space,
// i.e. the operator is zero on the scope.
class NullOperatorError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ssr
