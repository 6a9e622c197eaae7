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

#include <cstddef>
#include <optional>

#include "ratsep/convex.hpp"
#include "ratsep/scalar.hpp"

namespace ratsep {

// The rational closed halfspace {x : <a, x> <= beta}.
struct Certificate {
  Vector a;  // rational, nonzero
  Rational beta;

  // a is nonzero with rational coordinates.
  bool is_well_formed() const { return a.is_rational() && !a.is_zero(); }
  // <a, x> <= beta, exactly.
  bool contains(const Vector& x) const { return dot(a, x) <= Surd(beta); }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// True iff <a, v> <= beta for every vertex, <a, r> <= 0 for every ray and
// <a, y> > beta. A malformed certificate (a = 0 or irrational) is invalid.
bool verify_certificate(const VPolyhedron& x, const Vector& y, const Certificate& cert);

// Exhaustive 2-D oracle: scans a = (p1/q1, p2/q2) with |p| <= max_den and
// 1 <= q <= max_den, one representative per direction, in a fixed order
// (coordinates by increasing height max(|p|, q)). The first a with
// sigma_X(a) < <a, y> yields (a, choose_rational_between(...)).
// Throws DimensionMismatch unless dim == 2.
std::optional<Certificate> brute_force_separator(const VPolyhedron& x, const Vector& y,
                                                 std::size_t max_den);

// Rational c = mu * a with mu > 0, if one exists. Normalizes by the first
// nonzero coordinate; such a c exists iff every ratio a_i / a_first is
// rational. Consequently {<a, x> <= beta} lies inside some rational closed
// halfspace iff this returns a value. Throws DomainError for a = 0.
std::optional<Vector> rational_parallel_direction(const Vector& a);

}  // namespace ratsep
