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

#include "ratsep/json.hpp"

#include <algorithm>
#include <string>

#include "ratsep/errors.hpp"

namespace ratsep::json {
namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

const Json& array_member(const Json& j, const char* key) {
  const Json& value = member(j, key);
  if (!value.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
  return value;
}

long integer_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::vector<Vector> vectors_from_json(const Json& j, std::optional<long> field, std::size_t dim) {
  if (!j.is_array()) throw ParseError("expected an array of vectors");
  std::vector<Vector> out;
  for (const Json& v : j) {
    out.push_back(vector_from_json(v, field));
    if (out.back().dim() != dim) throw ParseError("vector length differs from dim");
  }
  return out;
}

Json vectors_to_json(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const Vector& v : vs) out.push_back(to_json(v));
  return out;
}

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const Surd& value) {
  return Json{{"r", to_string(value.r())}, {"s", to_string(value.s())}, {"k", value.k()}};
}

Json to_json(const Vector& value) {
  Json out = Json::array();
  for (const Surd& c : value) out.push_back(to_json(c));
  return out;
}

long field_of(const VPolyhedron& set) {
  long k = 1;
  auto scan = [&](const std::vector<Vector>& vs) {
    for (const Vector& v : vs) {
      v.field();  // throws on mixed fields
      for (const Surd& c : v) k = std::max(k, c.k());
    }
  };
  scan(set.vertices());
  scan(set.rays());
  return k;
}

Json to_json(const VPolyhedron& set) {
  return Json{{"dim", set.dim()},
              {"k", field_of(set)},
              {"vertices", vectors_to_json(set.vertices())},
              {"rays", vectors_to_json(set.rays())}};
}

Json to_json(const Certificate& cert) {
  Json a = Json::array();
  for (const Surd& c : cert.a) {
    if (!c.is_rational()) throw DomainError("certificate normal must be rational");
    a.push_back(to_json(c.r()));
  }
  return Json{{"a", std::move(a)}, {"beta", to_json(cert.beta)}};
}

Json to_json(const SeparationTrace& t) {
  return Json{{"z_tilde", to_json(t.z_tilde)},     {"y_bar", to_json(t.y_bar)},
              {"d", to_json(t.d)},                 {"eps", to_json(t.eps)},
              {"M", to_json(t.m)},                 {"alpha", to_json(t.alpha)},
              {"d_bar", to_json(t.d_bar)},         {"eps_bar", to_json(t.eps_bar)},
              {"delta_hat", to_json(t.delta_hat)}, {"lambda", to_json(t.lambda)},
              {"ball_center", to_json(t.ball_center)}, {"ball_radius", to_json(t.ball_radius)},
              {"a", to_json(t.a)},                 {"beta", to_json(t.beta)}};
}

Json to_json(const OuterApprox& approx) {
  Json cuts = Json::array();
  for (const Certificate& c : approx.cuts) cuts.push_back(to_json(c));
  return Json{{"cuts", std::move(cuts)}, {"source_probes", approx.source_probes}};
}

Json to_json(const Grid& grid) {
  return Json{{"min", Json::array({to_json(grid.min[0]), to_json(grid.min[1])})},
              {"max", Json::array({to_json(grid.max[0]), to_json(grid.max[1])})},
              {"step", to_json(grid.step)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

Surd surd_from_json(const Json& j, std::optional<long> field) {
  if (!j.is_object()) {
    Surd value(rational_from_json(j));
    return field ? value.in_field(*field) : value;
  }
  Rational r = rational_from_json(member(j, "r"));
  Rational s = j.contains("s") ? rational_from_json(j["s"]) : Rational(0);
  long k = j.contains("k") ? integer_from_json(j["k"], "k") : field.value_or(1);
  if (!is_square_free(k)) throw ParseError("k must be a positive square-free integer");
  Surd value(r, s, k);
  if (field) {
    if (!value.is_rational() && value.k() != *field) {
      throw ParseError("surd field k=" + std::to_string(k) + " differs from enclosing k=" +
                       std::to_string(*field));
    }
    value = value.in_field(*field);
  }
  return value;
}

Vector vector_from_json(const Json& j, std::optional<long> field) {
  if (!j.is_array()) throw ParseError("vector must be an array, got " + j.dump());
  std::vector<Surd> coords;
  for (const Json& c : j) coords.push_back(surd_from_json(c, field));
  Vector v(std::move(coords));
  try {
    v.field();
  } catch (const FieldMismatch& e) {
    throw ParseError(e.what());
  }
  return v;
}

namespace {

// Field of the irrational entries of an untagged set, or 1.
long inferred_field(const Json& j) {
  long k = 1;
  for (const char* key : {"vertices", "rays"}) {
    if (!j.contains(key) || !j[key].is_array()) continue;
    for (const Json& v : j[key]) {
      if (!v.is_array()) continue;
      for (const Json& c : v) {
        Surd s = surd_from_json(c);
        if (s.is_rational()) continue;
        if (k != 1 && s.k() != k) throw ParseError("set mixes fields k=" + std::to_string(k) +
                                                   " and k=" + std::to_string(s.k()));
        k = s.k();
      }
    }
  }
  return k;
}

}  // namespace

VPolyhedron polyhedron_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("set must be a JSON object, got " + j.dump());
  const long k = j.contains("k") ? integer_from_json(j["k"], "k") : inferred_field(j);
  if (!is_square_free(k)) throw ParseError("k must be a positive square-free integer");
  const Json& vertices = array_member(j, "vertices");
  if (vertices.empty()) throw ParseError("set needs at least one vertex");
  const long dim = j.contains("dim") ? integer_from_json(j["dim"], "dim")
                                     : static_cast<long>(vertices.front().size());
  if (dim < 1) throw ParseError("dim must be >= 1");
  const auto n = static_cast<std::size_t>(dim);
  std::vector<Vector> vs = vectors_from_json(vertices, k, n);
  std::vector<Vector> rs;
  if (j.contains("rays")) rs = vectors_from_json(j["rays"], k, n);
  try {
    return VPolyhedron(std::move(vs), std::move(rs));
  } catch (const std::logic_error& e) {
    throw ParseError(e.what());
  }
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  std::vector<Rational> a;
  for (const Json& c : array_member(j, "a")) a.push_back(rational_from_json(c));
  cert.a = Vector::from_rationals(a);
  cert.beta = rational_from_json(member(j, "beta"));
  return cert;
}

SeparationTrace trace_from_json(const Json& j) {
  SeparationTrace t;
  t.z_tilde = vector_from_json(member(j, "z_tilde"));
  t.y_bar = vector_from_json(member(j, "y_bar"));
  t.d = vector_from_json(member(j, "d"));
  t.eps = rational_from_json(member(j, "eps"));
  t.m = rational_from_json(member(j, "M"));
  t.alpha = rational_from_json(member(j, "alpha"));
  t.d_bar = vector_from_json(member(j, "d_bar"));
  t.eps_bar = rational_from_json(member(j, "eps_bar"));
  t.delta_hat = rational_from_json(member(j, "delta_hat"));
  t.lambda = rational_from_json(member(j, "lambda"));
  t.ball_center = vector_from_json(member(j, "ball_center"));
  t.ball_radius = rational_from_json(member(j, "ball_radius"));
  t.a = vector_from_json(member(j, "a"));
  t.beta = rational_from_json(member(j, "beta"));
  return t;
}

OuterApprox outer_approx_from_json(const Json& j) {
  OuterApprox approx;
  for (const Json& c : array_member(j, "cuts")) approx.cuts.push_back(certificate_from_json(c));
  if (j.contains("source_probes")) {
    for (const Json& i : j["source_probes"]) {
      if (!i.is_number_unsigned()) throw ParseError("source_probes entries must be indices");
      approx.source_probes.push_back(i.get<std::size_t>());
    }
  }
  return approx;
}

Grid grid_from_json(const Json& j) {
  const Json& lo = array_member(j, "min");
  const Json& hi = array_member(j, "max");
  if (lo.size() != 2 || hi.size() != 2) throw ParseError("grid min/max must have two entries");
  Grid g{{rational_from_json(lo[0]), rational_from_json(lo[1])},
         {rational_from_json(hi[0]), rational_from_json(hi[1])},
         rational_from_json(member(j, "step"))};
  try {
    g.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return g;
}

}  // namespace ratsep::json
