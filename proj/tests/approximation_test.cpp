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

#include <doctest.h>

#include <vector>

#include "ratsep/approximation.hpp"
#include "ratsep/errors.hpp"
#include "support/oracles.hpp"

using namespace ratsep;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
Vector v2(Surd x, Surd y) { return Vector{std::move(x), std::move(y)}; }

VPolyhedron unit_square() { return VPolyhedron({v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)}); }

Grid grid(long lo, long hi, Rational step) { return Grid{{q(lo), q(lo)}, {q(hi), q(hi)}, step}; }

bool sound(const VPolyhedron& x, const OuterApprox& approx) {
  for (const Certificate& c : approx.cuts) {
    if (!c.is_well_formed()) return false;
    for (const Vector& v : x.vertices())
      if (!c.contains(v)) return false;
    for (const Vector& r : x.rays())
      if (surd_sign(dot(c.a, r)) > 0) return false;
  }
  return true;
}

// Count by brute force: the points of the grid and those in neither X nor
// any cut's complement.
Rational excess_oracle(const VPolyhedron& x, const std::vector<Certificate>& cuts, const Grid& g) {
  long total = 0;
  long excess = 0;
  for (Rational py = g.min[1]; py <= g.max[1]; py += g.step) {
    for (Rational px = g.min[0]; px <= g.max[0]; px += g.step) {
      ++total;
      Vector p = v2(px, py);
      bool admitted = true;
      for (const Certificate& c : cuts) admitted = admitted && c.contains(p);
      if (admitted && !membership(x, p)) ++excess;
    }
  }
  return make_rational(excess, total);
}

}  // namespace

TEST_CASE("outer_approximate documented cases") {
  VPolyhedron square = unit_square();
  std::vector<Vector> inner{v2(q(1, 2), q(1, 2))};
  OuterApprox none = outer_approximate(square, inner, 4);
  CHECK(none.cuts.empty());
  CHECK(none.source_probes.empty());

  std::vector<Vector> far{v2(2, 0)};
  OuterApprox one = outer_approximate(square, far, 1);
  REQUIRE(one.cuts.size() == 1);
  CHECK(one.source_probes == std::vector<std::size_t>{0});
  CHECK_FALSE(one.cuts[0].contains(v2(2, 0)));
  for (const Vector& v : square.vertices()) CHECK(one.cuts[0].contains(v));

  VPolyhedron origin({v2(0, 0)});
  std::vector<Vector> compass{v2(1, 0),  v2(1, 1),   v2(0, 1),  v2(-1, 1),
                              v2(-1, 0), v2(-1, -1), v2(0, -1), v2(1, -1)};
  OuterApprox star = outer_approximate(origin, compass, 8);
  CHECK(star.cuts.size() <= 8);
  CHECK(sound(origin, star));
  for (const Vector& p : compass) CHECK_FALSE(star.admits(p));
}

TEST_CASE("outer_approximate respects the budget and rejects bad input") {
  VPolyhedron origin({v2(0, 0)});
  std::vector<Vector> probes{v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)};
  OuterApprox two = outer_approximate(origin, probes, 2);
  CHECK(two.cuts.size() == 2);
  CHECK(two.source_probes == std::vector<std::size_t>{0, 1});
  CHECK(outer_approximate(origin, probes, 0).cuts.empty());

  VPolyhedron line({v2(0, 0)}, {v2(1, 0), v2(-1, 0)});
  CHECK_THROWS_AS(outer_approximate(line, probes, 2), NotPointedError);
}

TEST_CASE("outer_approximate soundness and progress") {
  testing::Rng rng(61);
  for (int iter = 0; iter < 20; ++iter) {
    std::size_t dim = 2 + iter % 2;
    long k = iter % 2 ? 2 : 1;
    VPolyhedron x = testing::random_polyhedron(rng, dim, 2 + iter % 3, iter % 3, k);
    std::vector<Vector> probes;
    for (int i = 0; i < 12; ++i) probes.push_back(testing::random_rational_vector(rng, dim, 12, 2));
    OuterApprox approx = outer_approximate(x, probes, 100);
    CHECK(sound(x, approx));
    CHECK(approx.cuts.size() == approx.source_probes.size());
    for (const Vector& p : probes) {
      // Every exterior probe is consumed (budget is never reached) and
      // must be excluded.
      if (!membership(x, p)) CHECK_FALSE(approx.admits(p));
    }
    for (std::size_t i = 1; i < approx.source_probes.size(); ++i)
      CHECK(approx.source_probes[i - 1] < approx.source_probes[i]);
  }
}

TEST_CASE("Grid points and validation") {
  Grid g = grid(0, 1, q(1, 2));
  std::vector<Vector> pts = g.points();
  REQUIRE(pts.size() == 9);
  CHECK(pts[0] == v2(0, 0));
  CHECK(pts[1] == v2(q(1, 2), 0));
  CHECK(pts[3] == v2(0, q(1, 2)));
  CHECK(pts[8] == v2(1, 1));
  CHECK(Grid{{q(0), q(0)}, {q(1), q(1)}, q(2, 3)}.points().size() == 4);
  CHECK_THROWS_AS(grid(0, 1, q(0)).validate(), DomainError);
  CHECK_THROWS_AS(grid(1, 0, q(1)).validate(), DomainError);
}

TEST_CASE("excess_measure documented cases") {
  VPolyhedron square = unit_square();
  CHECK(excess_measure(square, std::vector<Certificate>{}, grid(-1, 2, q(1, 2))) == q(40, 49));
  std::vector<Certificate> box{{v2(1, 0), q(1)}, {v2(-1, 0), q(0)}, {v2(0, 1), q(1)}, {v2(0, -1), q(0)}};
  CHECK(excess_measure(square, box, grid(-1, 2, q(1, 2))) == 0);
  CHECK_THROWS_AS(excess_measure(VPolyhedron({Vector{Surd(0), Surd(0), Surd(0)}}),
                                 std::vector<Certificate>{}, grid(0, 1, q(1))),
                  DimensionMismatch);
}

TEST_CASE("excess_measure matches counting and is monotone") {
  VPolyhedron x({v2(0, 0), v2(Surd::root(2), 0), v2(0, 1)});
  std::vector<Vector> probes;
  for (const Vector& p : grid(-1, 2, q(1, 2)).points())
    if (!membership(x, p)) probes.push_back(p);
  OuterApprox approx = outer_approximate(x, probes, probes.size());
  CHECK(sound(x, approx));
  Grid g = grid(-1, 2, q(1, 4));
  Rational previous = excess_measure(x, std::vector<Certificate>{}, g);
  CHECK(previous == excess_oracle(x, {}, g));
  for (std::size_t n = 1; n <= approx.cuts.size(); ++n) {
    std::vector<Certificate> prefix(approx.cuts.begin(), approx.cuts.begin() + static_cast<long>(n));
    Rational current = excess_measure(x, prefix, g);
    CHECK(current <= previous);
    CHECK(current == excess_oracle(x, prefix, g));
    previous = current;
  }
  CHECK(excess_measure(x, approx, g) == previous);
  CHECK(previous < excess_measure(x, std::vector<Certificate>{}, g));
}
