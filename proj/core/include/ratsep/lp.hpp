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

// Dense two-phase simplex over Q(sqrt k) with Bland's rule. Every pivot and
// ratio test is an exact comparison, so the reported status is exact.
// Problem sizes here are a handful of rows and a dozen columns.

#pragma once

#include <cstddef>
#include <vector>

#include "ratsep/scalar.hpp"

namespace ratsep::lp {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct Row {
  std::vector<Surd> coeffs;
  Sense sense = Sense::kLessEqual;
  Surd rhs;
};

// maximize <objective, x> subject to rows, x >= 0.
struct Program {
  std::size_t num_vars = 0;
  std::vector<Surd> objective;  // empty means pure feasibility
  std::vector<Row> rows;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Result {
  Status status = Status::kInfeasible;
  std::vector<Surd> x;
  Surd value;
};

Result maximize(const Program& program);

bool is_feasible(const Program& program);

}  // namespace ratsep::lp
