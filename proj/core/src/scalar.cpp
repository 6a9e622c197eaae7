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

#include "ratsep/scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ratsep/errors.hpp"

namespace ratsep {
namespace {

long merge_fields(const Surd& a, const Surd& b) {
  if (a.k() == b.k()) return a.k();
  if (a.is_rational() && b.is_rational()) return std::max(a.k(), b.k());
  if (a.is_rational()) return b.k();
  if (b.is_rational()) return a.k();
  throw FieldMismatch("surds from Q(sqrt " + std::to_string(a.k()) + ") and Q(sqrt " +
                      std::to_string(b.k()) + ") combined");
}

Integer pow10(unsigned long exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

Integer isqrt(const Integer& n) {
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

bool is_perfect_square(const Integer& n) { return mpz_perfect_square_p(n.get_mpz_t()) != 0; }

// Rational truncation of x at 10^-digits, rounding toward -infinity.
Rational decimal_floor(const Surd& x, unsigned long digits) {
  Integer scale = pow10(digits);
  Rational q(floor(x * Surd(Rational(scale))), scale);
  q.canonicalize();
  return q;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&] { return ParseError("malformed rational: '" + s + "'"); };
  if (s.empty()) throw fail();
  auto all_digits = [](std::string_view v, bool allow_sign) {
    if (allow_sign && !v.empty() && (v[0] == '-' || v[0] == '+')) v.remove_prefix(1);
    if (v.empty()) return false;
    for (char c : v)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view view(s);
  if (auto dot = view.find('.'); dot != std::string_view::npos) {
    std::string_view whole = view.substr(0, dot);
    std::string_view frac = view.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    std::string_view whole_digits = whole;
    if (!whole_digits.empty() && (whole_digits[0] == '-' || whole_digits[0] == '+'))
      whole_digits.remove_prefix(1);
    if ((!whole_digits.empty() && !all_digits(whole_digits, false)) || !all_digits(frac, false))
      throw fail();
    Integer numer(std::string(whole_digits.empty() ? "0" : whole_digits) + std::string(frac), 10);
    Rational q(numer, pow10(frac.size()));
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  std::string_view numer = view;
  std::string_view denom = "1";
  if (auto slash = view.find('/'); slash != std::string_view::npos) {
    numer = view.substr(0, slash);
    denom = view.substr(slash + 1);
  }
  if (!all_digits(numer, true) || !all_digits(denom, false)) throw fail();
  if (numer[0] == '+') numer.remove_prefix(1);
  Integer n(std::string(numer), 10);
  Integer d(std::string(denom), 10);
  if (sgn(d) == 0) throw fail();
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

bool is_square_free(long k) {
  if (k <= 0) return false;
  for (long p = 2; p * p <= k; ++p) {
    if (k % (p * p) == 0) return false;
  }
  return true;
}

// -- Surd -------------------------------------------------------------------

Surd::Surd(Rational r) : r_(std::move(r)) { r_.canonicalize(); }

Surd::Surd(Rational r, Rational s, long k) : r_(std::move(r)), s_(std::move(s)), k_(k) {
  if (!is_square_free(k)) throw DomainError("k must be a positive square-free integer");
  r_.canonicalize();
  s_.canonicalize();
  if (k_ == 1) {
    r_ += s_;
    s_ = 0;
  }
}

Surd Surd::root(long k) { return Surd(Rational(0), Rational(1), k); }

Surd& Surd::operator+=(const Surd& other) {
  k_ = merge_fields(*this, other);
  r_ += other.r_;
  s_ += other.s_;
  return *this;
}

Surd& Surd::operator-=(const Surd& other) {
  k_ = merge_fields(*this, other);
  r_ -= other.r_;
  s_ -= other.s_;
  return *this;
}

Surd& Surd::operator*=(const Surd& other) {
  k_ = merge_fields(*this, other);
  if (other.is_rational()) {
    r_ *= other.r_;
    s_ *= other.r_;
    return *this;
  }
  Rational r = r_ * other.r_ + s_ * other.s_ * k_;
  Rational s = r_ * other.s_ + s_ * other.r_;
  r_ = std::move(r);
  s_ = std::move(s);
  return *this;
}

Surd& Surd::operator/=(const Surd& other) { return *this *= other.reciprocal(); }

Surd Surd::operator-() const {
  Surd out = *this;
  out.r_ = -out.r_;
  out.s_ = -out.s_;
  return out;
}

Surd Surd::reciprocal() const {
  if (is_zero()) throw DomainError("division by zero");
  Surd out = *this;
  if (is_rational()) {
    out.r_ = 1 / r_;
    return out;
  }
  // (r - s sqrt k) / (r^2 - s^2 k); the norm is nonzero because k is not a
  // perfect square.
  Rational norm = r_ * r_ - s_ * s_ * k_;
  out.r_ = r_ / norm;
  out.s_ = -s_ / norm;
  return out;
}

Surd Surd::in_field(long k) const {
  if (!is_rational() && k != k_) throw FieldMismatch("surd does not belong to Q(sqrt " +
                                                     std::to_string(k) + ")");
  if (!is_square_free(k)) throw DomainError("k must be a positive square-free integer");
  Surd out = *this;
  out.k_ = k;
  return out;
}

bool operator==(const Surd& a, const Surd& b) {
  if (a.r_ != b.r_ || a.s_ != b.s_) return false;
  return a.is_rational() || a.k_ == b.k_;
}

double Surd::to_double() const {
  return r_.get_d() + s_.get_d() * std::sqrt(static_cast<double>(k_));
}

int surd_sign(const Surd& x) {
  int sr = sgn(x.r());
  int ss = sgn(x.s());
  if (ss == 0) return sr;
  if (sr == 0 || sr == ss) return ss;
  // Opposite signs: compare r^2 with s^2 k.
  Rational r2 = x.r() * x.r();
  Rational s2k = x.s() * x.s() * x.k();
  int c = cmp(r2, s2k);
  if (c > 0) return sr;
  if (c < 0) return ss;
  return 0;
}

int compare(const Surd& a, const Surd& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.r(), b.r()) > 0 ? 1 : (cmp(a.r(), b.r()) < 0 ? -1 : 0);
  return surd_sign(a - b);
}

Integer floor(const Surd& x) {
  if (x.is_rational()) return floor(x.r());
  // x = (A + B sqrt k) / D with integers A, B and D > 0.
  Integer den;
  mpz_lcm(den.get_mpz_t(), x.r().get_den_mpz_t(), x.s().get_den_mpz_t());
  Integer a = x.r().get_num() * (den / x.r().get_den());
  Integer b = x.s().get_num() * (den / x.s().get_den());
  // sqrt(B^2 k) is irrational, strictly inside (t, t + 1).
  Integer t = isqrt(Integer(b * b * x.k()));
  Integer numer = sgn(b) > 0 ? Integer(a + t) : Integer(a - t - 1);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), numer.get_mpz_t(), den.get_mpz_t());
  return q;
}

std::ostream& operator<<(std::ostream& os, const Surd& x) {
  os << to_string(x.r());
  if (!x.is_rational()) os << " + " << to_string(x.s()) << "*sqrt(" << x.k() << ")";
  return os;
}

// -- enclosures ---------------------------------------------------------------

QInterval sqrt_enclosure(const Surd& x, const Rational& tol) {
  if (sgn(tol) <= 0) throw DomainError("tolerance must be positive");
  if (surd_sign(x) < 0) throw DomainError("square root of a negative value");
  if (x.is_rational() && is_perfect_square(x.r().get_num()) &&
      is_perfect_square(x.r().get_den())) {
    Rational root(isqrt(x.r().get_num()), isqrt(x.r().get_den()));
    return {root, root};
  }
  Integer m = isqrt(floor(x));  // floor(sqrt x)
  // Largest j with (j tol)^2 <= x, j in [floor(m / tol), ceil((m + 1) / tol)).
  Integer lo_j = floor(Rational(Rational(m) / tol));
  Integer hi_j = ceil(Rational(Rational(m + 1) / tol));
  auto fits = [&](const Integer& j) {
    Rational v = Rational(j) * tol;
    return Surd(Rational(v * v)) <= x;
  };
  while (hi_j - lo_j > 1) {
    Integer mid = (lo_j + hi_j) / 2;
    if (fits(mid)) {
      lo_j = mid;
    } else {
      hi_j = mid;
    }
  }
  Rational lo = Rational(lo_j) * tol;
  if (x == Surd(Rational(lo * lo))) return {lo, lo};
  return {lo, Rational(lo + tol)};
}

Rational lower_bound(const Surd& x, const Rational& tol) {
  if (x.is_rational()) return x.r();
  Rational scaled_tol = tol / abs(x.s());
  QInterval root = sqrt_enclosure(Surd(Rational(x.k())), scaled_tol);
  return x.r() + x.s() * (sgn(x.s()) > 0 ? root.lo : root.hi);
}

Rational upper_bound(const Surd& x, const Rational& tol) {
  if (x.is_rational()) return x.r();
  Rational scaled_tol = tol / abs(x.s());
  QInterval root = sqrt_enclosure(Surd(Rational(x.k())), scaled_tol);
  return x.r() + x.s() * (sgn(x.s()) > 0 ? root.hi : root.lo);
}

Rational choose_rational_between(const Surd& lo, const Surd& hi) {
  if (!(lo < hi)) throw DomainError("choose_rational_between: empty interval");
  Surd mid = (lo + hi) * Surd(Rational(1, 2));
  if (mid.is_rational()) return mid.r();
  // mid is irrational, so every truncation is strictly below it (< hi) and
  // they increase towards it (eventually > lo).
  for (unsigned long digits = 0;; ++digits) {
    Rational q = decimal_floor(mid, digits);
    if (lo < Surd(q)) return q;
  }
}

Rational default_tolerance() { return Rational(1, 1000); }

// -- Vector -----------------------------------------------------------------

Vector Vector::from_rationals(const std::vector<Rational>& coords) {
  Vector v(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) v[i] = Surd(coords[i]);
  return v;
}

bool Vector::is_rational() const {
  for (const Surd& c : coords_)
    if (!c.is_rational()) return false;
  return true;
}

bool Vector::is_zero() const {
  for (const Surd& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

long Vector::field() const {
  long k = 1;
  for (const Surd& c : coords_) {
    if (c.is_rational()) continue;
    if (k != 1 && c.k() != k) throw FieldMismatch("vector mixes quadratic fields");
    k = c.k();
  }
  return k;
}

void require_same_dim(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

Vector& Vector::operator+=(const Vector& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Surd& factor) {
  for (Surd& c : coords_) c *= factor;
  return *this;
}

Vector Vector::operator-() const {
  Vector out = *this;
  for (Surd& c : out.coords_) c = -c;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  os << "(";
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
  return os << ")";
}

Surd dot(const Vector& a, const Vector& b) {
  require_same_dim(a, b);
  Surd sum;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
  return sum;
}

Rational norm_upper(const Vector& v, const Rational& tol) { return sqrt_enclosure(norm2(v), tol).hi; }

Vector rational_in_ball(const Vector& center, const Rational& radius) {
  if (sgn(radius) <= 0) throw DomainError("rational_in_ball: radius must be positive");
  const std::size_t n = std::max<std::size_t>(center.dim(), 1);
  const Rational coord_tol = radius / (16 * static_cast<long>(n));
  const Surd coord_tol2(Rational(coord_tol * coord_tol));
  auto close_enough = [&](const Rational& q, const Surd& c) {
    Surd err = Surd(q) - c;
    return err * err <= coord_tol2;
  };

  Vector q(center.dim());
  for (std::size_t i = 0; i < center.dim(); ++i) {
    const Surd& c = center[i];
    if (c.is_rational()) {
      q[i] = c;
      continue;
    }
    // Convergents p_j / q_j of the continued fraction of c.
    Integer p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
    Surd x = c;
    bool found = false;
    for (int term = 0; term < 64 && !found; ++term) {
      Integer a = floor(x);
      Integer p_next = a * p_prev + p_prev2;
      Integer q_next = a * q_prev + q_prev2;
      p_prev2 = p_prev;
      p_prev = p_next;
      q_prev2 = q_prev;
      q_prev = q_next;
      Rational convergent(p_next, q_next);
      convergent.canonicalize();
      if (close_enough(convergent, c)) {
        q[i] = Surd(convergent);
        found = true;
        break;
      }
      x = (x - Surd(Rational(a))).reciprocal();
    }
    for (unsigned long digits = 0; !found; ++digits) {
      Rational t = decimal_floor(c, digits);
      if (close_enough(t, c)) {
        q[i] = Surd(t);
        found = true;
      }
    }
  }
  if (norm2(q - center) > Surd(Rational(radius * radius))) {
    throw std::logic_error("rational_in_ball: rounded point left the ball");
  }
  return q;
}

}  // namespace ratsep
