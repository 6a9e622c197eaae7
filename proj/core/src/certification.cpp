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

#include "ratsep/certification.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>

#include "ratsep/errors.hpp"

namespace ratsep {
namespace {

// Distinct rationals p/q with |p| <= bound, 1 <= q <= bound, ordered by
// height max(|p|, q), then q, then p.
std::vector<Rational> bounded_rationals(std::size_t bound) {
  struct Entry {
    long height, q, p;
  };
  std::vector<Entry> entries;
  const long b = static_cast<long>(bound);
  for (long q = 1; q <= b; ++q) {
    for (long p = -b; p <= b; ++p) {
      if (std::gcd(std::abs(p), q) != 1) continue;
      entries.push_back({std::max(std::abs(p), q), q, p});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
    return std::tie(l.height, l.q, l.p) < std::tie(r.height, r.q, r.p);
  });
  std::vector<Rational> out;
  out.reserve(entries.size());
  for (const Entry& e : entries) out.push_back(make_rational(e.p, e.q));
  return out;
}

// Primitive integer representative of the ray through (x, y).
std::pair<Integer, Integer> direction_key(const Rational& x, const Rational& y) {
  Integer den;
  mpz_lcm(den.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
  Integer ix = x.get_num() * (den / x.get_den());
  Integer iy = y.get_num() * (den / y.get_den());
  Integer g;
  mpz_gcd(g.get_mpz_t(), ix.get_mpz_t(), iy.get_mpz_t());
  return {Integer(ix / g), Integer(iy / g)};
}

}  // namespace

bool verify_certificate(const VPolyhedron& x, const Vector& y, const Certificate& cert) {
  require_same_dim(cert.a, y);
  if (cert.a.dim() != x.dim()) throw DimensionMismatch("certificate dimension differs from set");
  if (!cert.is_well_formed()) return false;
  const Surd beta(cert.beta);
  for (const Vector& v : x.vertices()) {
    if (dot(cert.a, v) > beta) return false;
  }
  for (const Vector& r : x.rays()) {
    if (surd_sign(dot(cert.a, r)) > 0) return false;
  }
  return dot(cert.a, y) > beta;
}

std::optional<Certificate> brute_force_separator(const VPolyhedron& x, const Vector& y,
                                                 std::size_t max_den) {
  if (x.dim() != 2 || y.dim() != 2) throw DimensionMismatch("brute_force_separator is 2-D only");
  if (max_den == 0) throw DomainError("max_den must be positive");
  const std::vector<Rational> values = bounded_rationals(max_den);
  std::set<std::pair<Integer, Integer>> seen;
  for (const Rational& a1 : values) {
    for (const Rational& a2 : values) {
      if (sgn(a1) == 0 && sgn(a2) == 0) continue;
      if (!seen.insert(direction_key(a1, a2)).second) continue;
      Vector a{Surd(a1), Surd(a2)};
      SupportValue sigma = support_value(x, a);
      if (!sigma.is_finite()) continue;
      Surd at_point = dot(a, y);
      if (sigma.value() < at_point) {
        return Certificate{a, choose_rational_between(sigma.value(), at_point)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Vector> rational_parallel_direction(const Vector& a) {
  if (a.is_zero()) throw DomainError("rational_parallel_direction: a = 0");
  std::size_t first = 0;
  while (a[first].is_zero()) ++first;
  // c = a / a_first scaled by sign(a_first), so c = mu a with mu > 0.
  Surd scale = a[first].reciprocal();
  if (surd_sign(a[first]) < 0) scale = -scale;
  Vector c = a * scale;
  if (!c.is_rational()) return std::nullopt;
  return c;
}

}  // namespace ratsep
