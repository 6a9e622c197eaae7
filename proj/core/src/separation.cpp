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

#include "ratsep/separation.hpp"

#include <algorithm>
#include <optional>

#include "ratsep/errors.hpp"
#include "ratsep/lp.hpp"

namespace ratsep {
namespace {

// Positive rational lower bound of a positive surd.
Rational positive_lower_bound(const Surd& x) {
  Rational tol = default_tolerance();
  for (;;) {
    Rational lb = lower_bound(x, tol);
    if (sgn(lb) > 0) return lb;
    tol /= 16;
  }
}

// <d, r> + eps ||r|| <= 0, decided exactly on squares.
bool ray_slope_nonpositive(const Vector& d, const Rational& eps, const Vector& r) {
  Surd g = dot(d, r);
  if (surd_sign(g) > 0) return false;
  return Surd(Rational(eps * eps)) * norm2(r) <= g * g;
}

}  // namespace

BarrierDirection find_barrier_direction(const VPolyhedron& c) {
  const std::size_t n = c.dim();
  const auto& rays = c.rays();
  if (rays.empty()) return {Vector::zero(n), Rational(1)};

  // Variables e_0..e_{n-1} (d_j = e_j - 1, so -1 <= d_j <= 1) and t >= 0.
  lp::Program program;
  program.num_vars = n + 1;
  program.objective.assign(n + 1, Surd());
  program.objective[n] = Surd(1);
  for (const Vector& r : rays) {
    lp::Row row;
    row.coeffs.assign(r.begin(), r.end());
    row.coeffs.push_back(Surd(1));
    row.sense = lp::Sense::kLessEqual;
    for (const Surd& x : r) row.rhs += x;
    program.rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < n; ++j) {
    lp::Row box;
    box.coeffs.assign(n + 1, Surd());
    box.coeffs[j] = Surd(1);
    box.rhs = Surd(2);
    program.rows.push_back(std::move(box));
  }
  lp::Result margin = lp::maximize(program);
  if (margin.status != lp::Status::kOptimal) {
    throw std::logic_error("find_barrier_direction: margin LP is not bounded-feasible");
  }
  const Surd& t = margin.x[n];
  if (surd_sign(t) <= 0) throw NotPointedError("recession cone contains a line");

  Vector d_star(n);
  for (std::size_t j = 0; j < n; ++j) d_star[j] = margin.x[j] - Surd(1);

  Rational ray_norm_max(0);
  std::vector<Rational> ray_norm_hi;
  for (const Vector& r : rays) {
    ray_norm_hi.push_back(norm_upper(r, default_tolerance()));
    ray_norm_max = std::max(ray_norm_max, ray_norm_hi.back());
  }

  Vector d = d_star;
  if (!d.is_rational()) {
    // Moving d by rho changes each <d, r> by at most rho ||r|| <= t / 2.
    Rational t_lo = choose_rational_between(Surd(), t);
    d = rational_in_ball(d_star, Rational(t_lo / (2 * ray_norm_max)));
  }

  std::optional<Rational> slack;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    Rational ratio = positive_lower_bound(-dot(d, rays[i])) / ray_norm_hi[i];
    if (!slack || ratio < *slack) slack = ratio;
  }
  Rational eps = *slack / 2;

  for (std::size_t i = 0; i < rays.size(); ++i) {
    Surd bound = dot(d, rays[i]) + Surd(Rational(eps * ray_norm_hi[i]));
    if (surd_sign(bound) > 0 || !ray_slope_nonpositive(d, eps, rays[i])) {
      throw std::logic_error("find_barrier_direction: ball leaves the barrier cone");
    }
  }
  return {std::move(d), std::move(eps)};
}

Rational bound_support_on_ball(const VPolyhedron& c, const Vector& d, const Rational& eps) {
  require_same_dim(d, c.vertices().front());
  if (sgn(eps) <= 0) throw DomainError("bound_support_on_ball: eps must be positive");
  for (const Vector& r : c.rays()) {
    if (!ray_slope_nonpositive(d, eps, r)) {
      throw DomainError("bound_support_on_ball: d + eps*B is not inside the barrier cone");
    }
  }
  // x -> <d, x> + eps ||x|| is convex and nonincreasing along every ray, so
  // its supremum over C is attained at a vertex.
  const Rational tol = default_tolerance();
  Rational m(1);
  for (const Vector& v : c.vertices()) {
    Rational value = upper_bound(dot(d, v), tol) + eps * norm_upper(v, tol);
    m = std::max(m, value);
  }
  return m;
}

WedgeParameters compute_wedge_parameters(const Vector& y_bar, const Rational& m,
                                         const Vector& d, const Rational& eps) {
  require_same_dim(y_bar, d);
  if (y_bar.is_zero()) throw DomainError("compute_wedge_parameters: y_bar = 0");
  if (sgn(m) <= 0) throw DomainError("compute_wedge_parameters: M must be positive");
  if (sgn(eps) <= 0) throw DomainError("compute_wedge_parameters: eps must be positive");

  const Surd norm_sq = norm2(y_bar);
  const Rational q = norm_sq.is_rational() ? norm_sq.r() : positive_lower_bound(norm_sq);

  WedgeParameters w;
  w.alpha = q / 3 / m;
  w.d_bar = d * Surd(w.alpha);
  w.eps_bar = w.alpha * eps;
  Rational tol = default_tolerance();
  Rational norm_lo = sqrt_enclosure(norm_sq, tol).lo;
  while (sgn(norm_lo) <= 0) {
    tol /= 16;
    norm_lo = sqrt_enclosure(norm_sq, tol).lo;
  }
  w.delta_hat = norm_lo / 3;
  return w;
}

WedgeBall wedge_interior_ball(const Vector& x0, const Vector& d_bar, const Rational& eps_bar,
                              const Rational& delta_hat) {
  require_same_dim(x0, d_bar);
  if (sgn(eps_bar) <= 0) throw DomainError("wedge_interior_ball: eps_bar must be positive");
  if (sgn(delta_hat) <= 0) throw DomainError("wedge_interior_ball: delta_hat must be positive");

  Rational reach = norm_upper(d_bar - x0, default_tolerance()) + eps_bar;
  Rational lambda = std::min(Rational(delta_hat / reach), Rational(1));
  WedgeBall ball;
  ball.center = x0 * Surd(Rational(1 - lambda)) + d_bar * Surd(lambda);
  ball.radius = lambda * eps_bar / 2;
  ball.lambda = std::move(lambda);
  return ball;
}

SeparationResult separate(const VPolyhedron& x, const Vector& y_tilde) {
  if (y_tilde.dim() != x.dim()) throw DimensionMismatch("point and set dimensions differ");
  if (!is_pointed(x)) throw NotPointedError();
  if (membership(x, y_tilde)) throw PointInsideError();

  SeparationTrace trace;
  trace.z_tilde = project(x, y_tilde);
  const VPolyhedron c = x.translated(-trace.z_tilde);
  trace.y_bar = y_tilde - trace.z_tilde;

  BarrierDirection barrier = find_barrier_direction(c);
  trace.d = std::move(barrier.d);
  trace.eps = std::move(barrier.eps);
  trace.m = bound_support_on_ball(c, trace.d, trace.eps);

  WedgeParameters wedge = compute_wedge_parameters(trace.y_bar, trace.m, trace.d, trace.eps);
  trace.alpha = std::move(wedge.alpha);
  trace.d_bar = std::move(wedge.d_bar);
  trace.eps_bar = std::move(wedge.eps_bar);
  trace.delta_hat = std::move(wedge.delta_hat);

  WedgeBall ball = wedge_interior_ball(trace.y_bar, trace.d_bar, trace.eps_bar, trace.delta_hat);
  trace.lambda = std::move(ball.lambda);
  trace.ball_center = std::move(ball.center);
  trace.ball_radius = std::move(ball.radius);

  trace.a = rational_in_ball(trace.ball_center, trace.ball_radius);
  SupportValue sigma = support_value(x, trace.a);
  if (!sigma.is_finite()) {
    throw SeparationFailure("separate: support value of the drawn normal is infinite", trace);
  }
  const Surd at_point = dot(trace.a, y_tilde);
  if (!(sigma.value() < at_point)) {
    throw SeparationFailure("separate: drawn normal does not separate", trace);
  }
  trace.beta = choose_rational_between(sigma.value(), at_point);
  return {Certificate{trace.a, trace.beta}, std::move(trace)};
}

}  // namespace ratsep
