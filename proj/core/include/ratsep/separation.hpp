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

// Rational separation oracle. Given a pointed V-polyhedron X and a point y
// outside it, build a rational halfspace {<a, x> <= beta} containing X and
// excluding y:
//
//   z   = projection of y onto X,  C = X - z,  ybar = y - z
//   (d, eps)  with d + eps*B inside the barrier cone of C
//   M   >= sup over the ball d + eps*B of sigma_C
//   alpha = (||ybar||^2 / 3) / M, dbar = alpha d, epsbar = alpha eps,
//   deltahat <= ||ybar|| / 3
//
// Every a in conv({ybar} u (dbar + epsbar*B)) n (ybar + deltahat*B) has
// sigma_C(a) <= ||ybar||^2 / 3 < 2/3 ||ybar||^2 <= <a, ybar>, hence
// sigma_X(a) < <a, y>. That set contains an explicit ball, from which a
// rational a is drawn. All quantities below are exact; square roots only
// enter through rational enclosures chosen so that each replacement shrinks
// the set a is drawn from.

#pragma once

#include <stdexcept>

#include "ratsep/certification.hpp"
#include "ratsep/convex.hpp"
#include "ratsep/scalar.hpp"

namespace ratsep {

struct BarrierDirection {
  Vector d;  // rational
  Rational eps;
};

// (0, 1) for bounded sets. Otherwise d maximizes the margin t in
// <d, r_i> <= -t, ||d||_inf <= 1 (rounded to a rational point if the LP
// optimum is irrational), and eps is half the largest value keeping
// <d, r> + eps * hi(||r||) <= 0 for every ray. Throws NotPointedError when
// the margin is 0.
BarrierDirection find_barrier_direction(const VPolyhedron& c);

// Rational M >= sup_{u in B} sigma_C(d + eps u), M >= 1: the vertex maximum
// of <d, v> + eps * hi(||v||), clamped below by 1. Throws DomainError if
// some ray has <d, r> + eps ||r|| > 0.
Rational bound_support_on_ball(const VPolyhedron& c, const Vector& d, const Rational& eps);

struct WedgeParameters {
  Rational alpha;
  Vector d_bar;
  Rational eps_bar;
  Rational delta_hat;
};

// alpha = (q / 3) / M with 0 < q <= ||ybar||^2 (q exact when ||ybar||^2 is
// rational); delta_hat = lo(||ybar||) / 3 > 0. Throws DomainError for
// ybar = 0 or M <= 0.
WedgeParameters compute_wedge_parameters(const Vector& y_bar, const Rational& m,
                                         const Vector& d, const Rational& eps);

struct WedgeBall {
  Rational lambda;
  Vector center;
  Rational radius;
};

// lambda = min(delta_hat / (hi(||d_bar - x0||) + eps_bar), 1),
// center = (1 - lambda) x0 + lambda d_bar, radius = lambda eps_bar / 2.
// The closed ball of radius 2 * radius lies in
// conv({x0} u (d_bar + eps_bar B)) n (x0 + delta_hat B).
WedgeBall wedge_interior_ball(const Vector& x0, const Vector& d_bar, const Rational& eps_bar,
                              const Rational& delta_hat);

struct SeparationTrace {
  Vector z_tilde;
  Vector y_bar;
  Vector d;
  Rational eps;
  Rational m;
  Rational alpha;
  Vector d_bar;
  Rational eps_bar;
  Rational delta_hat;
  Rational lambda;
  Vector ball_center;
  Rational ball_radius;
  Vector a;
  Rational beta;

  friend bool operator==(const SeparationTrace&, const SeparationTrace&) = default;
};

struct SeparationResult {
  Certificate certificate;
  SeparationTrace trace;
};

// Raised when the exact final check sigma_X(a) < <a, y> fails. This is an
// internal bug, never an input problem; the trace is attached.
class SeparationFailure : public std::logic_error {
 public:
  SeparationFailure(const std::string& what, SeparationTrace trace)
      : std::logic_error(what), trace_(std::move(trace)) {}
  const SeparationTrace& trace() const { return trace_; }

 private:
  SeparationTrace trace_;
};

// Throws NotPointedError, PointInsideError or DimensionMismatch on bad input.
SeparationResult separate(const VPolyhedron& x, const Vector& y_tilde);

}  // namespace ratsep
