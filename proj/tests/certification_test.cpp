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

#include <algorithm>

#include "ratsep/certification.hpp"
#include "ratsep/errors.hpp"
#include "ratsep/separation.hpp"
#include "support/oracles.hpp"

using namespace ratsep;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
Vector v2(Surd x, Surd y) { return Vector{std::move(x), std::move(y)}; }

VPolyhedron triangle() { return VPolyhedron({v2(0, 0), v2(1, 0), v2(0, 1)}); }

bool is_rational_surd(const Surd& s) { return s.s() == 0; }

// Height of a rational a = (p1/q1, p2/q2): max |p|, q over coordinates.
Integer height(const Vector& a) {
  Integer h = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Rational& r = a[i].r();
    h = std::max({h, Integer(abs(r.get_num())), Integer(r.get_den())});
  }
  return h;
}

// {<a, x> <= 0} inside {<c, x> <= 0}, judged on 64 samples of the first
// halfspace: 32 boundary points s p and 32 interior points s p - t a, with
// p = (-a2, a1).
bool halfspace_contained_on_samples(const Vector& a, const Vector& c) {
  const Vector p = v2(-a[1], a[0]);
  for (long i = 1; i <= 16; ++i) {
    for (long sign : {-1L, 1L}) {
      Vector boundary = p * Surd(q(sign * i * i, 3));
      if (!dot(a, boundary).is_zero()) return false;
      if (surd_sign(dot(c, boundary)) > 0) return false;
      Vector inner = boundary - a * Surd(q(i, 5));
      if (surd_sign(dot(c, inner)) > 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("verify_certificate documented cases") {
  VPolyhedron tri = triangle();
  CHECK(verify_certificate(tri, v2(1, 1), Certificate{v2(1, 1), q(3, 2)}));
  CHECK_FALSE(verify_certificate(tri, v2(1, 1), Certificate{v2(1, 1), q(2)}));
  CHECK_FALSE(verify_certificate(tri, v2(1, 1), Certificate{v2(1, 1), q(1, 2)}));
  CHECK_FALSE(verify_certificate(tri, v2(1, 1), Certificate{v2(0, 0), q(1)}));
  CHECK_FALSE(verify_certificate(tri, v2(1, 1), Certificate{v2(Surd::root(2), 1), q(2)}));

  VPolyhedron ray({v2(0, 0)}, {v2(1, 0)});
  CHECK_FALSE(verify_certificate(ray, v2(0, 1), Certificate{v2(1, 1), q(1, 2)}));
  CHECK(verify_certificate(ray, v2(0, 1), Certificate{v2(0, 1), q(1, 2)}));
  CHECK_THROWS_AS(verify_certificate(ray, Vector{Surd(1)}, Certificate{Vector{Surd(1)}, q(0)}),
                  DimensionMismatch);
}

TEST_CASE("Certificate helpers") {
  Certificate c{v2(1, 1), q(3, 2)};
  CHECK(c.is_well_formed());
  CHECK(c.contains(v2(1, q(1, 2))));
  CHECK_FALSE(c.contains(v2(1, 1)));
  CHECK_FALSE(Certificate{v2(0, 0), q(1)}.is_well_formed());
  CHECK_FALSE(Certificate{v2(Surd::root(3), 0), q(1)}.is_well_formed());
}

TEST_CASE("brute_force_separator documented cases") {
  VPolyhedron tri = triangle();
  auto found = brute_force_separator(tri, v2(1, 1), 2);
  REQUIRE(found.has_value());
  CHECK(verify_certificate(tri, v2(1, 1), *found));
  CHECK(height(found->a) <= 2);

  VPolyhedron square({v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)});
  CHECK_FALSE(brute_force_separator(square, v2(q(1, 2), q(1, 2)), 3).has_value());

  VPolyhedron ray({v2(0, 0)}, {v2(1, 0)});
  auto above = brute_force_separator(ray, v2(0, 1), 1);
  REQUIRE(above.has_value());
  CHECK(verify_certificate(ray, v2(0, 1), *above));

  CHECK_THROWS_AS(brute_force_separator(VPolyhedron({Vector{Surd(0), Surd(0), Surd(0)}}),
                                        Vector{Surd(1), Surd(0), Surd(0)}, 2),
                  DimensionMismatch);
}

TEST_CASE("brute_force_separator agrees with separate") {
  testing::Rng rng(51);
  int found = 0;
  for (int iter = 0; iter < 60; ++iter) {
    long k = iter % 2 ? 2 : 1;
    VPolyhedron x = testing::random_polyhedron(rng, 2, 1 + iter % 4, iter % 3, k);
    Vector y = testing::random_vector(rng, 2, k, 9, 2);
    bool inside = membership(x, y);
    auto brute = brute_force_separator(x, y, 6);
    if (inside) {
      CHECK_FALSE(brute.has_value());
      continue;
    }
    CHECK(verify_certificate(x, y, separate(x, y).certificate));
    if (brute) {
      ++found;
      CHECK(verify_certificate(x, y, *brute));
      CHECK(height(brute->a) <= 6);
    }
  }
  CHECK(found > 10);
}

TEST_CASE("rational_parallel_direction documented cases") {
  auto r = rational_parallel_direction(v2(2, 4));
  REQUIRE(r.has_value());
  CHECK(*r == v2(1, 2));
  auto s = rational_parallel_direction(v2(Surd::root(2), Surd(q(0), q(3), 2)));
  REQUIRE(s.has_value());
  CHECK(*s == v2(1, 3));
  auto neg = rational_parallel_direction(v2(-3, 6));
  REQUIRE(neg.has_value());
  CHECK(*neg == v2(-1, 2));
  CHECK_FALSE(rational_parallel_direction(v2(1, Surd::root(2))).has_value());
  auto diag = rational_parallel_direction(v2(Surd::root(2), Surd::root(2)));
  REQUIRE(diag.has_value());
  CHECK(*diag == v2(1, 1));
  CHECK_THROWS_AS(rational_parallel_direction(v2(0, 0)), DomainError);
}

TEST_CASE("no rational halfspace contains the (1, sqrt 2) halfspace") {
  // Every rational a with numerators and denominators up to 50 fails to be a
  // positive multiple of (1, sqrt 2): along the boundary direction t, one of
  // +t or -t has <a, .> > 0, so {<a, x> <= beta} misses points of the set.
  const Vector normal = v2(1, Surd::root(2));
  const Vector boundary = v2(Surd::root(2), -1);
  REQUIRE(dot(normal, boundary).is_zero());
  for (long p1 = -50; p1 <= 50; ++p1) {
    for (long p2 = -50; p2 <= 50; ++p2) {
      if (p1 == 0 && p2 == 0) continue;
      for (long q1 : {1L, 7L, 50L}) {
        for (long q2 : {1L, 3L, 49L}) {
          Vector a = v2(q(p1, q1), q(p2, q2));
          CHECK_FALSE(dot(a, boundary).is_zero());
        }
      }
    }
  }
  CHECK_FALSE(rational_parallel_direction(normal).has_value());
}

TEST_CASE("rational_parallel_direction on random normals") {
  testing::Rng rng(52);
  for (int iter = 0; iter < 64; ++iter) {
    std::size_t dim = 2 + iter % 3;
    Vector a = iter % 3 == 0 ? testing::random_nonzero_rational_vector(rng, dim, 9, 5)
                             : testing::random_vector(rng, dim, 2 + iter % 2, 9, 5);
    if (a.is_zero()) continue;
    std::size_t first = 0;
    while (a[first].is_zero()) ++first;
    bool all_ratios_rational = true;
    for (std::size_t i = 0; i < dim; ++i) {
      all_ratios_rational = all_ratios_rational && is_rational_surd(a[i] * a[first].reciprocal());
    }
    auto c = rational_parallel_direction(a);
    CHECK(c.has_value() == all_ratios_rational);
    if (!c) continue;
    CHECK(c->is_rational());
    // c = mu a with mu > 0: c_i a_first = a_i c_first and sign agreement.
    for (std::size_t i = 0; i < dim; ++i) CHECK((*c)[i] * a[first] == a[i] * (*c)[first]);
    CHECK(surd_sign((*c)[first]) == surd_sign(a[first]));
    // Any beta works: the halfspace {<a, x> <= beta} is {<c, x> <= mu beta}.
    Surd mu = (*c)[first] * a[first].reciprocal();
    CHECK(surd_sign(mu) > 0);
    CHECK(is_rational_surd(mu) == a.is_rational());
  }
}

TEST_CASE("halfspace containment on samples matches positive parallelism") {
  testing::Rng rng(53);
  for (int iter = 0; iter < 64; ++iter) {
    Vector a = iter % 2 ? testing::random_vector(rng, 2, 2, 9, 4)
                        : testing::random_nonzero_rational_vector(rng, 2, 9, 4) * Surd::root(3);
    if (a.is_zero()) continue;
    auto c = rational_parallel_direction(a);
    if (c) {
      CHECK(halfspace_contained_on_samples(a, *c));
      CHECK_FALSE(halfspace_contained_on_samples(a, -*c));
      const Vector perp = v2(-(*c)[1], (*c)[0]);
      CHECK_FALSE(halfspace_contained_on_samples(a, *c + perp * Surd(q(1, 97))));
      CHECK_FALSE(halfspace_contained_on_samples(a, *c - perp * Surd(q(1, 89))));
    } else {
      for (int s = 0; s < 8; ++s) {
        CHECK_FALSE(halfspace_contained_on_samples(a, testing::random_nonzero_rational_vector(rng, 2, 50, 50)));
      }
    }
  }
  CHECK_FALSE(halfspace_contained_on_samples(v2(1, Surd::root(2)), v2(q(99, 70), q(1))));
}
