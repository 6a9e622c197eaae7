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

#include "ratsep/approximation.hpp"

#include "ratsep/errors.hpp"
#include "ratsep/separation.hpp"

namespace ratsep {

bool OuterApprox::admits(const Vector& p) const {
  for (const Certificate& cut : cuts) {
    if (!cut.contains(p)) return false;
  }
  return true;
}

OuterApprox outer_approximate(const VPolyhedron& x, std::span<const Vector> probes,
                              std::size_t budget) {
  if (!is_pointed(x)) throw NotPointedError();
  OuterApprox approx;
  for (std::size_t i = 0; i < probes.size() && approx.cuts.size() < budget; ++i) {
    const Vector& probe = probes[i];
    if (!approx.admits(probe)) continue;
    if (membership(x, probe)) continue;
    approx.cuts.push_back(separate(x, probe).certificate);
    approx.source_probes.push_back(i);
  }
  return approx;
}

void Grid::validate() const {
  if (sgn(step) <= 0) throw DomainError("grid step must be positive");
  for (std::size_t i = 0; i < 2; ++i) {
    if (max[i] < min[i]) throw DomainError("grid max below min");
  }
}

std::vector<Vector> Grid::points() const {
  validate();
  std::vector<Vector> out;
  for (Rational y = min[1]; y <= max[1]; y += step) {
    for (Rational x = min[0]; x <= max[0]; x += step) out.push_back(Vector{Surd(x), Surd(y)});
  }
  return out;
}

Rational excess_measure(const VPolyhedron& x, std::span<const Certificate> cuts, const Grid& grid) {
  if (x.dim() != 2) throw DimensionMismatch("excess_measure is 2-D only");
  const std::vector<Vector> pts = grid.points();
  long excess = 0;
  for (const Vector& p : pts) {
    bool admitted = true;
    for (const Certificate& cut : cuts) {
      if (!cut.contains(p)) {
        admitted = false;
        break;
      }
    }
    if (admitted && !membership(x, p)) ++excess;
  }
  return make_rational(excess, static_cast<long>(pts.size()));
}

Rational excess_measure(const VPolyhedron& x, const OuterApprox& approx, const Grid& grid) {
  return excess_measure(x, std::span<const Certificate>(approx.cuts), grid);
}

}  // namespace ratsep
