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

// Iterates the separation oracle over caller-supplied probe points, giving a
// finite rational outer approximation of a pointed set.

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "ratsep/certification.hpp"
#include "ratsep/convex.hpp"

namespace ratsep {

struct OuterApprox {
  std::vector<Certificate> cuts;  // insertion order
  // Index into the probe list of the probe that produced each cut.
  std::vector<std::size_t> source_probes;

  // Point satisfies every stored cut.
  bool admits(const Vector& p) const;

  friend bool operator==(const OuterApprox&, const OuterApprox&) = default;
};

// For each probe in order, while fewer than budget cuts are stored: skip it
// if it lies in X or already violates a stored cut, otherwise append the
// certificate of separate(X, probe). Throws NotPointedError.
OuterApprox outer_approximate(const VPolyhedron& x, std::span<const Vector> probes,
                              std::size_t budget);

// Axis-aligned 2-D lattice min + step * (i, j) clipped to [min, max].
struct Grid {
  std::array<Rational, 2> min;
  std::array<Rational, 2> max;
  Rational step;

  // Throws DomainError for step <= 0 or max < min.
  void validate() const;
  std::vector<Vector> points() const;
  friend bool operator==(const Grid&, const Grid&) = default;
};

// Fraction of grid points that satisfy every cut but are not in X.
// Throws DimensionMismatch unless dim == 2.
Rational excess_measure(const VPolyhedron& x, std::span<const Certificate> cuts, const Grid& grid);
Rational excess_measure(const VPolyhedron& x, const OuterApprox& approx, const Grid& grid);

}  // namespace ratsep
