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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ratsep/approximation.hpp"
#include "ratsep/certification.hpp"
#include "ratsep/convex.hpp"
#include "ratsep/json.hpp"

namespace ratsep::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitUsage = 64;

// Everything a subcommand may read. Parsed from
//   {"set": <set>, "point": <vector>, "probes": [<vector>...],
//    "certificate": <certificate>, "cuts": [<certificate>...],
//    "options": {"budget": N, "max_den": N, "grid": <grid>}}
// where only "set" is required. A bare set object is accepted as well.
struct Instance {
  explicit Instance(VPolyhedron s) : set(std::move(s)) {}

  VPolyhedron set;
  std::optional<Vector> point;
  std::vector<Vector> probes;
  std::optional<Certificate> certificate;
  std::vector<Certificate> cuts;
  std::optional<std::size_t> budget;
  std::optional<std::size_t> max_den;
  std::optional<Grid> grid;

  friend bool operator==(const Instance&, const Instance&) = default;
};

Instance instance_from_json(const json::Json& j);
json::Json to_json(const Instance& instance);

// Runs one subcommand: args excludes the program name, so args[0] is the
// subcommand. JSON results go to out, diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratsep::cli
