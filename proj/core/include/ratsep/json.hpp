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

// Exact JSON encodings. Rationals are "p/q" strings, surds are
// {"r": "p/q", "s": "p/q", "k": int}, vectors are arrays of surds. Readers
// also accept integers and "p" / decimal strings wherever a rational is
// expected. Every reader throws ParseError on malformed input.

#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "ratsep/approximation.hpp"
#include "ratsep/certification.hpp"
#include "ratsep/convex.hpp"
#include "ratsep/scalar.hpp"
#include "ratsep/separation.hpp"

namespace ratsep::json {

using Json = nlohmann::json;

Json to_json(const Rational& value);
Json to_json(const Surd& value);
Json to_json(const Vector& value);
Json to_json(const VPolyhedron& set);
Json to_json(const Certificate& cert);
Json to_json(const SeparationTrace& trace);
Json to_json(const OuterApprox& approx);
Json to_json(const Grid& grid);

Rational rational_from_json(const Json& j);
// field: the enclosing field; rational entries are tagged with it and
// irrational entries must match it.
Surd surd_from_json(const Json& j, std::optional<long> field = std::nullopt);
Vector vector_from_json(const Json& j, std::optional<long> field = std::nullopt);
VPolyhedron polyhedron_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);
SeparationTrace trace_from_json(const Json& j);
OuterApprox outer_approx_from_json(const Json& j);
Grid grid_from_json(const Json& j);

// Largest field tag among the set's coordinates (1 when all rational).
long field_of(const VPolyhedron& set);

}  // namespace ratsep::json
