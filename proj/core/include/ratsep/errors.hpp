// Copyright 2026 The ratsep Authors
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

#include <stdexcept>
#include <string>

namespace ratsep {

// Argument outside the domain of an exact operation (negative radicand,
// empty interval, nonpositive radius).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two irrational surds from different quadratic fields were combined.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but violates a geometric precondition of the
// separation pipeline. The CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPointedError : public ValidationError {
 public:
  NotPointedError() : ValidationError("set is not pointed") {}
  explicit NotPointedError(const std::string& what) : ValidationError(what) {}
};

class PointInsideError : public ValidationError {
 public:
  PointInsideError() : ValidationError("point inside set") {}
};

// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ratsep
