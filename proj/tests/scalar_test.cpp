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

#include <cmath>
#include <vector>

#include "ratsep/errors.hpp"
#include "ratsep/scalar.hpp"
#include "support/oracles.hpp"

using namespace ratsep;
using ratsep::testing::Rng;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
Surd sqrt2() { return Surd::root(2); }

}  // namespace

TEST_CASE("surd_sign on the documented cases") {
  CHECK(surd_sign(Surd(q(0), q(0), 2)) == 0);
  // sqrt 2 > 1 because 2 > 1.
  CHECK(cmp(q(2), q(1)) > 0);
  CHECK(surd_sign(Surd(q(-1), q(1), 2)) == 1);
  // 3 > 2 sqrt 2 because 9 > 8.
  CHECK(cmp(q(9), q(8)) > 0);
  CHECK(surd_sign(Surd(q(3), q(-2), 2)) == 1);
  CHECK(surd_sign(Surd(q(-3), q(2), 2)) == -1);
  CHECK(surd_sign(Surd(q(0), q(-1, 7), 3)) == -1);
}

TEST_CASE("surd field laws hold exactly on random inputs") {
  Rng rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    Surd a = testing::random_surd(rng, 2, 9, 7);
    Surd b = testing::random_surd(rng, 2, 9, 7);
    Surd c = testing::random_surd(rng, 2, 9, 7);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.reciprocal() == Surd(1));
    CHECK(surd_sign(a * b) == surd_sign(a) * surd_sign(b));
  }
}

TEST_CASE("surd_sign agrees with floating point away from zero") {
  Rng rng(12);
  for (int iter = 0; iter < 500; ++iter) {
    Surd a = testing::random_surd(rng, 3, 50, 9);
    double v = a.to_double();
    if (std::abs(v) < 1e-9) continue;
    CHECK(surd_sign(a) == (v > 0 ? 1 : -1));
  }
}

TEST_CASE("floor of a surd brackets the value exactly") {
  Rng rng(13);
  for (int iter = 0; iter < 300; ++iter) {
    Surd a = testing::random_surd(rng, 5, 40, 7);
    Integer f = floor(a);
    CHECK(Surd(Rational(f)) <= a);
    CHECK(a < Surd(Rational(f + 1)));
  }
  CHECK(floor(sqrt2()) == 1);
  CHECK(floor(-sqrt2()) == -2);
}

TEST_CASE("mixing quadratic fields is rejected") {
  CHECK_THROWS_AS(Surd::root(2) + Surd::root(3), FieldMismatch);
  CHECK_NOTHROW(Surd::root(2) + Surd(q(1)).in_field(3));
  CHECK_THROWS_AS(Surd(q(1), q(1), 4), DomainError);
  Surd one_k1(q(2), q(3), 1);
  CHECK(one_k1 == Surd(q(5)));
}

TEST_CASE("sqrt_enclosure documented cases") {
  CHECK(sqrt_enclosure(Surd(q(4)), q(1)) == QInterval{q(2), q(2)});
  // 49/25 <= 2 <= 9/4, width 1/10.
  CHECK(sqrt_enclosure(Surd(q(2)), q(1, 10)) == QInterval{q(7, 5), q(3, 2)});
  CHECK(sqrt_enclosure(Surd(q(0)), q(1, 10)) == QInterval{q(0), q(0)});
  CHECK(sqrt_enclosure(Surd(q(1, 9)), q(1, 1000)) == QInterval{q(1, 3), q(1, 3)});
  CHECK_THROWS_AS(sqrt_enclosure(Surd(q(-1)), q(1)), DomainError);
  CHECK_THROWS_AS(sqrt_enclosure(Surd(q(2), q(-2), 2), q(1)), DomainError);
  CHECK_THROWS_AS(sqrt_enclosure(Surd(q(2)), q(0)), DomainError);
}

TEST_CASE("sqrt_enclosure brackets the root within tolerance") {
  Rng rng(14);
  for (int iter = 0; iter < 300; ++iter) {
    Surd x = testing::random_surd(rng, 2, 60, 9);
    if (surd_sign(x) < 0) x = -x;
    Rational tol = make_rational(1, std::uniform_int_distribution<long>(1, 5000)(rng));
    QInterval e = sqrt_enclosure(x, tol);
    CHECK(sgn(e.lo) >= 0);
    CHECK(Surd(Rational(e.lo * e.lo)) <= x);
    CHECK(x <= Surd(Rational(e.hi * e.hi)));
    CHECK(e.width() <= tol);
  }
}

TEST_CASE("lower and upper bounds of a surd are within tolerance") {
  Rng rng(15);
  for (int iter = 0; iter < 200; ++iter) {
    Surd x = testing::random_surd(rng, 7, 30, 9);
    Rational tol = q(1, 997);
    Rational lo = lower_bound(x, tol);
    Rational hi = upper_bound(x, tol);
    CHECK(Surd(lo) <= x);
    CHECK(x <= Surd(hi));
    CHECK(x - Surd(lo) <= Surd(tol));
    CHECK(Surd(hi) - x <= Surd(tol));
  }
}

TEST_CASE("rational_in_ball documented cases") {
  CHECK(rational_in_ball(Vector{Surd(q(0)), Surd(q(0))}, q(1, 100)) ==
        Vector{Surd(q(0)), Surd(q(0))});

  // Oracle: convergents of sqrt 2 via the Pell recurrence (p, q) -> (p + 2q,
  // p + q) from 1/1, taking the first within radius / (16 n).
  auto first_convergent_within = [](const Rational& bound) {
    Integer p = 1, d = 1;
    for (;;) {
      Surd err = Surd(Rational(p, d)) - Surd::root(2);
      if (err * err <= Surd(Rational(bound * bound))) return Rational(p, d);
      Integer np = p + 2 * d;
      Integer nd = p + d;
      p = np;
      d = nd;
    }
  };
  Rational expected_first = first_convergent_within(q(1, 10) / 32);
  CHECK(expected_first == q(17, 12));
  // (17/12 - sqrt 2)^2 < 1/100 exactly.
  Surd err = Surd(q(17, 12)) - sqrt2();
  CHECK(err * err < Surd(q(1, 100)));
  CHECK(rational_in_ball(Vector{sqrt2(), Surd(q(0))}, q(1, 10)) ==
        Vector{Surd(q(17, 12)), Surd(q(0))});

  Rational expected_second = first_convergent_within(q(1, 100) / 32);
  CHECK(expected_second == q(99, 70));
  CHECK(rational_in_ball(Vector{Surd(q(1, 3)), sqrt2()}, q(1, 100)) ==
        Vector{Surd(q(1, 3)), Surd(q(99, 70))});

  CHECK_THROWS_AS(rational_in_ball(Vector{sqrt2()}, q(0)), DomainError);
  CHECK_THROWS_AS(rational_in_ball(Vector{sqrt2()}, q(-1, 2)), DomainError);
}

TEST_CASE("rational_in_ball output is rational and inside the ball") {
  Rng rng(16);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t dim = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    long k = iter % 2 == 0 ? 2 : 3;
    Vector center = testing::random_vector(rng, dim, k, 20, 9);
    Rational radius = make_rational(1, std::uniform_int_distribution<long>(1, 100000)(rng));
    Vector p = rational_in_ball(center, radius);
    CHECK(p.is_rational());
    CHECK(norm2(p - center) <= Surd(Rational(radius * radius)));
    CHECK(rational_in_ball(center, radius) == p);
  }
}

TEST_CASE("choose_rational_between documented cases") {
  CHECK(choose_rational_between(Surd(q(0)), Surd(q(1))) == q(1, 2));
  // 29/20 > sqrt 2 since 841 > 800; 29/20 < 3/2.
  CHECK(cmp(q(841), q(800)) > 0);
  CHECK(choose_rational_between(sqrt2(), Surd(q(3, 2))) == q(29, 20));
  CHECK_THROWS_AS(choose_rational_between(Surd(q(1)), Surd(q(1))), DomainError);
  CHECK_THROWS_AS(choose_rational_between(Surd(q(2)), Surd(q(1))), DomainError);
}

TEST_CASE("choose_rational_between is strictly inside on random intervals") {
  Rng rng(17);
  for (int iter = 0; iter < 300; ++iter) {
    Surd a = testing::random_surd(rng, 2, 20, 9);
    Surd b = a + Surd(make_rational(1, std::uniform_int_distribution<long>(1, 1000000)(rng))) *
                     (iter % 3 == 0 ? Surd::root(2) : Surd(1));
    Rational m = choose_rational_between(a, b);
    CHECK(a < Surd(m));
    CHECK(Surd(m) < b);
  }
}

TEST_CASE("rational text form") {
  CHECK(to_string(q(3)) == "3/1");
  CHECK(to_string(q(-2, 4)) == "-1/2");
  CHECK(parse_rational("6/4") == q(3, 2));
  CHECK(parse_rational("-7") == q(-7));
  CHECK(parse_rational("+7/14") == q(1, 2));
  CHECK(parse_rational("-1.25") == q(-5, 4));
  CHECK(parse_rational(".5") == q(1, 2));
  CHECK(parse_rational("0.125") == q(1, 8));
  CHECK(parse_rational("-0.05") == q(-1, 20));
  CHECK(parse_rational("010/012") == q(5, 6));
  CHECK_THROWS_AS(parse_rational("6/-1"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1e5"), ParseError);
}
