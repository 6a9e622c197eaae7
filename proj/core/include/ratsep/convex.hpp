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

// Pointed closed convex sets given as V-polyhedra conv(vertices) + cone(rays)
// with coordinates in Q(sqrt k), and the exact operations the separation
// pipeline needs on them.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ratsep/scalar.hpp"

namespace ratsep {

class VPolyhedron {
 public:
  // Throws DomainError without vertices or with a zero ray, and
  // DimensionMismatch when generators disagree on the dimension.
  explicit VPolyhedron(std::vector<Vector> vertices, std::vector<Vector> rays = {});

  std::size_t dim() const { return vertices_.front().dim(); }
  const std::vector<Vector>& vertices() const { return vertices_; }
  const std::vector<Vector>& rays() const { return rays_; }
  bool is_bounded() const { return rays_.empty(); }

  // P + shift.
  VPolyhedron translated(const Vector& shift) const;

  friend bool operator==(const VPolyhedron&, const VPolyhedron&) = default;

 private:
  std::vector<Vector> vertices_;
  std::vector<Vector> rays_;
};

// center + radius * B. Only used for demos: its support value
// <a, c> + radius ||a|| leaves the field.
struct BallSet {
  Vector center;
  Rational radius;

  BallSet(Vector c, Rational r);
  bool contains(const Vector& x) const;
  QInterval support_enclosure(const Vector& a, const Rational& tol) const;
};

// sigma_P(a), either a finite exact value (with the lowest-index maximizing
// vertex) or +infinity.
class SupportValue {
 public:
  static SupportValue infinite() { return SupportValue(); }
  static SupportValue finite(Surd value, std::size_t argmax) {
    SupportValue s;
    s.finite_ = true;
    s.value_ = std::move(value);
    s.argmax_ = argmax;
    return s;
  }

  bool is_finite() const { return finite_; }
  // Throws std::logic_error when infinite.
  const Surd& value() const;
  std::size_t argmax() const { return argmax_; }

 private:
  SupportValue() = default;
  bool finite_ = false;
  Surd value_;
  std::size_t argmax_ = 0;
};

SupportValue support_value(const VPolyhedron& p, const Vector& a);

// cone(rays) contains no line.
bool is_pointed(const VPolyhedron& p);
bool is_pointed(std::span<const Vector> rays);

// <y, r> <= 0 for every ray, i.e. y lies in the polar of the recession cone,
// which is the closure of the barrier cone.
bool polar_cone_contains(std::span<const Vector> rays, const Vector& y);

bool membership(const VPolyhedron& p, const Vector& x);

// Exact metric projection of y onto a pointed P by face enumeration.
// Throws NotPointedError for non-pointed P.
Vector project(const VPolyhedron& p, const Vector& y);

}  // namespace ratsep
