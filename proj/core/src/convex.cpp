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

#include "ratsep/convex.hpp"

#include <optional>
#include <stdexcept>

#include "ratsep/errors.hpp"
#include "ratsep/lp.hpp"

namespace ratsep {
namespace {

// Solves the square system a x = b exactly; nullopt when singular.
std::optional<std::vector<Surd>> solve(std::vector<std::vector<Surd>> a, std::vector<Surd> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    Surd inv = a[col][col].reciprocal();
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      Surd f = a[row][col] * inv;
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Calls visit(indices) for every size-k subset of [0, n) in lexicographic
// order; stops early when visit returns true.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void require_dim(const VPolyhedron& p, const Vector& v) {
  if (v.dim() != p.dim()) {
    throw DimensionMismatch("vector of dimension " + std::to_string(v.dim()) +
                            " used with a set in dimension " + std::to_string(p.dim()));
  }
}

// Nearest point to y on the affine hull of vertices[vs] + span(rays[rs]),
// provided the generators are affinely independent, the point has
// nonnegative coefficients and satisfies the variational inequality of P.
std::optional<Vector> face_candidate(const VPolyhedron& p, const Vector& y,
                                     const std::vector<std::size_t>& vs,
                                     const std::vector<std::size_t>& rs) {
  const Vector& base = p.vertices()[vs.front()];
  std::vector<Vector> dirs;
  dirs.reserve(vs.size() - 1 + rs.size());
  for (std::size_t i = 1; i < vs.size(); ++i) dirs.push_back(p.vertices()[vs[i]] - base);
  for (std::size_t r : rs) dirs.push_back(p.rays()[r]);

  Vector z = base;
  if (!dirs.empty()) {
    const std::size_t m = dirs.size();
    std::vector<std::vector<Surd>> gram(m, std::vector<Surd>(m));
    std::vector<Surd> rhs(m);
    Vector offset = y - base;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        gram[i][j] = dot(dirs[i], dirs[j]);
        gram[j][i] = gram[i][j];
      }
      rhs[i] = dot(dirs[i], offset);
    }
    auto coef = solve(std::move(gram), std::move(rhs));
    if (!coef) return std::nullopt;

    Surd base_weight(1);
    const std::size_t vertex_dirs = vs.size() - 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (surd_sign((*coef)[i]) < 0) return std::nullopt;
      if (i < vertex_dirs) base_weight -= (*coef)[i];
      z += (*coef)[i] * dirs[i];
    }
    if (surd_sign(base_weight) < 0) return std::nullopt;
  }

  Vector residual = y - z;
  for (const Vector& v : p.vertices()) {
    if (surd_sign(dot(residual, v - z)) > 0) return std::nullopt;
  }
  for (const Vector& r : p.rays()) {
    if (surd_sign(dot(residual, r)) > 0) return std::nullopt;
  }
  return z;
}

}  // namespace

VPolyhedron::VPolyhedron(std::vector<Vector> vertices, std::vector<Vector> rays)
    : vertices_(std::move(vertices)), rays_(std::move(rays)) {
  if (vertices_.empty()) throw DomainError("polyhedron needs at least one vertex");
  const std::size_t n = vertices_.front().dim();
  if (n == 0) throw DomainError("polyhedron dimension must be >= 1");
  for (const Vector& v : vertices_) {
    if (v.dim() != n) throw DimensionMismatch("vertices of differing dimension");
  }
  for (const Vector& r : rays_) {
    if (r.dim() != n) throw DimensionMismatch("ray dimension differs from vertices");
    if (r.is_zero()) throw DomainError("rays must be nonzero");
  }
}

VPolyhedron VPolyhedron::translated(const Vector& shift) const {
  require_dim(*this, shift);
  std::vector<Vector> moved;
  moved.reserve(vertices_.size());
  for (const Vector& v : vertices_) moved.push_back(v + shift);
  return VPolyhedron(std::move(moved), rays_);
}

BallSet::BallSet(Vector c, Rational r) : center(std::move(c)), radius(std::move(r)) {
  if (sgn(radius) <= 0) throw DomainError("ball radius must be positive");
}

bool BallSet::contains(const Vector& x) const {
  return norm2(x - center) <= Surd(Rational(radius * radius));
}

QInterval BallSet::support_enclosure(const Vector& a, const Rational& tol) const {
  Surd linear = dot(a, center);
  QInterval norm = sqrt_enclosure(norm2(a), tol / (2 * radius));
  return {Rational(lower_bound(linear, tol / 2) + radius * norm.lo),
          Rational(upper_bound(linear, tol / 2) + radius * norm.hi)};
}

const Surd& SupportValue::value() const {
  if (!finite_) throw std::logic_error("support value is +infinity");
  return value_;
}

SupportValue support_value(const VPolyhedron& p, const Vector& a) {
  require_dim(p, a);
  for (const Vector& r : p.rays()) {
    if (surd_sign(dot(a, r)) > 0) return SupportValue::infinite();
  }
  std::size_t best = 0;
  Surd best_value = dot(a, p.vertices()[0]);
  for (std::size_t i = 1; i < p.vertices().size(); ++i) {
    Surd value = dot(a, p.vertices()[i]);
    if (value > best_value) {
      best = i;
      best_value = std::move(value);
    }
  }
  return SupportValue::finite(std::move(best_value), best);
}

bool is_pointed(std::span<const Vector> rays) {
  if (rays.empty()) return true;
  // A line exists iff some mu >= 0, sum(mu) = 1 has sum(mu_i r_i) = 0.
  const std::size_t n = rays.front().dim();
  lp::Program program;
  program.num_vars = rays.size();
  for (std::size_t j = 0; j < n; ++j) {
    lp::Row row;
    row.sense = lp::Sense::kEqual;
    for (const Vector& r : rays) row.coeffs.push_back(r[j]);
    program.rows.push_back(std::move(row));
  }
  program.rows.push_back({std::vector<Surd>(rays.size(), Surd(1)), lp::Sense::kEqual, Surd(1)});
  return !lp::is_feasible(program);
}

bool is_pointed(const VPolyhedron& p) { return is_pointed(std::span<const Vector>(p.rays())); }

bool polar_cone_contains(std::span<const Vector> rays, const Vector& y) {
  for (const Vector& r : rays) {
    if (surd_sign(dot(y, r)) > 0) return false;
  }
  return true;
}

bool membership(const VPolyhedron& p, const Vector& x) {
  require_dim(p, x);
  const std::size_t nv = p.vertices().size();
  const std::size_t nr = p.rays().size();
  if (nv == 1 && nr == 0) return p.vertices()[0] == x;
  lp::Program program;
  program.num_vars = nv + nr;
  for (std::size_t j = 0; j < p.dim(); ++j) {
    lp::Row row;
    row.sense = lp::Sense::kEqual;
    for (const Vector& v : p.vertices()) row.coeffs.push_back(v[j]);
    for (const Vector& r : p.rays()) row.coeffs.push_back(r[j]);
    row.rhs = x[j];
    program.rows.push_back(std::move(row));
  }
  lp::Row convexity;
  convexity.sense = lp::Sense::kEqual;
  convexity.coeffs.assign(nv + nr, Surd());
  for (std::size_t i = 0; i < nv; ++i) convexity.coeffs[i] = Surd(1);
  convexity.rhs = Surd(1);
  program.rows.push_back(std::move(convexity));
  return lp::is_feasible(program);
}

Vector project(const VPolyhedron& p, const Vector& y) {
  require_dim(p, y);
  if (!is_pointed(p)) throw NotPointedError();
  if (membership(p, y)) return y;

  const std::size_t n = p.dim();
  const std::size_t nv = p.vertices().size();
  const std::size_t nr = p.rays().size();
  // Faces by increasing number of generators; the projection lies in the
  // relative interior of a face spanned by affinely independent generators
  // with positive weights, so the first accepted candidate is it.
  for (std::size_t size = 1; size <= n + 1; ++size) {
    for (std::size_t k_v = std::min(size, nv); k_v >= 1; --k_v) {
      const std::size_t k_r = size - k_v;
      if (k_r > nr || k_r > n) continue;
      std::optional<Vector> found;
      for_each_combination(nv, k_v, [&](const std::vector<std::size_t>& vs) {
        return for_each_combination(nr, k_r, [&](const std::vector<std::size_t>& rs) {
          found = face_candidate(p, y, vs, rs);
          return found.has_value();
        });
      });
      if (found) return *found;
    }
  }
  throw std::logic_error("project: no face candidate satisfied the optimality conditions");
}

}  // namespace ratsep
