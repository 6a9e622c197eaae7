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

// Exact scalars: rationals backed by GMP and elements r + s*sqrt(k) of a
// real quadratic field Q(sqrt(k)), plus the rational enclosures and
// rational-point selection used wherever a square root leaves the field.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ratsep {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical rational num/den; throws DomainError when den == 0.
Rational make_rational(long num, long den = 1);

// Accepts "p", "p/q" and finite decimals such as "-1.25". The result is
// canonical (q > 0, lowest terms). Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

// Always "p/q" with q > 0, e.g. "3/1", "-1/2".
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

bool is_square_free(long k);

// r + s*sqrt(k) with k square-free. k == 1 denotes the rational field and
// is normalized to s == 0. The k of a rational-valued surd is a field tag
// only; it never affects equality.
class Surd {
 public:
  Surd() = default;
  Surd(Rational r);  // NOLINT: implicit embedding of Q
  Surd(long r) : Surd(Rational(r)) {}  // NOLINT
  Surd(Rational r, Rational s, long k);

  // sqrt(k) itself.
  static Surd root(long k);

  const Rational& r() const { return r_; }
  const Rational& s() const { return s_; }
  long k() const { return k_; }
  bool is_rational() const { return sgn(s_) == 0; }
  bool is_zero() const { return sgn(r_) == 0 && sgn(s_) == 0; }

  Surd& operator+=(const Surd& other);
  Surd& operator-=(const Surd& other);
  Surd& operator*=(const Surd& other);
  Surd& operator/=(const Surd& other);
  Surd operator-() const;

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend Surd operator/(Surd a, const Surd& b) { return a /= b; }

  friend bool operator==(const Surd& a, const Surd& b);

  // Same field, with k re-tagged; throws FieldMismatch for an irrational
  // surd of another field.
  Surd in_field(long k) const;

  Surd reciprocal() const;

  // Display only; never used inside a comparison.
  double to_double() const;

 private:
  Rational r_{0};
  Rational s_{0};
  long k_ = 1;
};

// Sign of r + s*sqrt(k), decided exactly.
int surd_sign(const Surd& x);

int compare(const Surd& a, const Surd& b);
inline bool operator<(const Surd& a, const Surd& b) { return compare(a, b) < 0; }
inline bool operator<=(const Surd& a, const Surd& b) { return compare(a, b) <= 0; }
inline bool operator>(const Surd& a, const Surd& b) { return compare(a, b) > 0; }
inline bool operator>=(const Surd& a, const Surd& b) { return compare(a, b) >= 0; }

// Greatest integer <= x, computed exactly.
Integer floor(const Surd& x);

std::ostream& operator<<(std::ostream& os, const Surd& x);

// Closed rational interval [lo, hi].
struct QInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return Rational(hi - lo); }
  bool contains(const Surd& x) const { return Surd(lo) <= x && x <= Surd(hi); }
  friend bool operator==(const QInterval&, const QInterval&) = default;
};

// Enclosure [lo, hi] of sqrt(x) with lo >= 0, lo^2 <= x <= hi^2 and
// hi - lo <= tol. Exact squares of rationals give lo == hi. Otherwise lo is
// the largest multiple of tol whose square is <= x, found by binary search
// inside the integer bracket [floor(sqrt x), floor(sqrt x) + 1], and
// hi = lo + tol.
QInterval sqrt_enclosure(const Surd& x, const Rational& tol);

// Rational bounds within tol of x. Exact when x is rational.
Rational lower_bound(const Surd& x, const Rational& tol);
Rational upper_bound(const Surd& x, const Rational& tol);

// Strictly between lo and hi. The midpoint when it is rational, otherwise
// the first decimal truncation floor(m * 10^j) / 10^j of the midpoint m
// that lands strictly inside. Throws DomainError unless lo < hi.
Rational choose_rational_between(const Surd& lo, const Surd& hi);

// Point of Q^n or Q(sqrt k)^n.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coords_(dim) {}
  explicit Vector(std::vector<Surd> coords) : coords_(std::move(coords)) {}
  Vector(std::initializer_list<Surd> coords) : coords_(coords) {}

  static Vector zero(std::size_t dim) { return Vector(dim); }
  static Vector from_rationals(const std::vector<Rational>& coords);

  std::size_t dim() const { return coords_.size(); }
  const Surd& operator[](std::size_t i) const { return coords_[i]; }
  Surd& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<Surd>& coords() const { return coords_; }

  bool is_rational() const;
  bool is_zero() const;
  // Common field of the irrational coordinates (1 if all rational); throws
  // FieldMismatch if two coordinates disagree.
  long field() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Surd& factor);
  Vector operator-() const;

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Surd& t, Vector v) { return v *= t; }
  friend Vector operator*(Vector v, const Surd& t) { return v *= t; }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Surd> coords_;
};

std::ostream& operator<<(std::ostream& os, const Vector& v);

void require_same_dim(const Vector& a, const Vector& b);

Surd dot(const Vector& a, const Vector& b);
inline Surd norm2(const Vector& v) { return dot(v, v); }

// Rational upper bound of the Euclidean norm, hi(||v||), at tolerance tol.
Rational norm_upper(const Vector& v, const Rational& tol);

// Rational vector q with ||q - center|| <= radius, checked exactly on the
// squared distance. Irrational coordinates are replaced by the first
// continued-fraction convergent within radius / (16 n) of them (decimal
// truncation after 64 partial quotients); rational coordinates are kept.
Vector rational_in_ball(const Vector& center, const Rational& radius);

// Enclosure tolerance used by the separation pipeline for norms and
// irrational bounds.
Rational default_tolerance();

}  // namespace ratsep
