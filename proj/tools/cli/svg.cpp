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

#include "cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "ratsep/errors.hpp"

namespace ratsep::cli {
namespace {

constexpr double kCanvas = 480.0;

struct Point2 {
  double x, y;
};

struct Viewport {
  double min_x, min_y, max_x, max_y;

  void include(Point2 p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
};

Point2 to_point(const Vector& v) { return {v[0].to_double(), v[1].to_double()}; }

Surd cross(const Vector& o, const Vector& a, const Vector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Exact monotone-chain hull, counter-clockwise, collinear points dropped.
std::vector<Vector> convex_hull(std::vector<Vector> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vector& l, const Vector& r) {
    int c = compare(l[0], r[0]);
    return c != 0 ? c < 0 : l[1] < r[1];
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vector> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Vector& p : pts) {
    while (k >= 2 && surd_sign(cross(hull[k - 2], hull[k - 1], p)) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && surd_sign(cross(hull[k - 2], hull[k - 1], pts[i])) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

// Endpoints of {p : a.p = beta} inside the viewport, if it crosses it.
std::optional<std::pair<Point2, Point2>> clip_line(double a1, double a2, double beta,
                                                   const Viewport& vp) {
  std::vector<Point2> hits;
  constexpr double kSlack = 1e-12;
  if (a2 != 0.0) {
    for (double x : {vp.min_x, vp.max_x}) {
      double y = (beta - a1 * x) / a2;
      if (y >= vp.min_y - kSlack && y <= vp.max_y + kSlack) hits.push_back({x, y});
    }
  }
  if (a1 != 0.0) {
    for (double y : {vp.min_y, vp.max_y}) {
      double x = (beta - a2 * y) / a1;
      if (x >= vp.min_x - kSlack && x <= vp.max_x + kSlack) hits.push_back({x, y});
    }
  }
  if (hits.size() < 2) return std::nullopt;
  std::sort(hits.begin(), hits.end(),
            [](Point2 l, Point2 r) { return l.x != r.x ? l.x < r.x : l.y < r.y; });
  return std::make_pair(hits.front(), hits.back());
}

// Exit point of the ray anchor + t*dir, t >= 0, from the viewport.
Point2 clip_ray(Point2 anchor, Point2 dir, const Viewport& vp) {
  double t = std::numeric_limits<double>::infinity();
  if (dir.x > 0) t = std::min(t, (vp.max_x - anchor.x) / dir.x);
  if (dir.x < 0) t = std::min(t, (vp.min_x - anchor.x) / dir.x);
  if (dir.y > 0) t = std::min(t, (vp.max_y - anchor.y) / dir.y);
  if (dir.y < 0) t = std::min(t, (vp.min_y - anchor.y) / dir.y);
  t = std::max(t, 0.0);
  return {anchor.x + t * dir.x, anchor.y + t * dir.y};
}

class Canvas {
 public:
  explicit Canvas(const Viewport& vp) : vp_(vp) {
    scale_ = kCanvas / std::max(vp.max_x - vp.min_x, vp.max_y - vp.min_y);
  }
  double width() const { return (vp_.max_x - vp_.min_x) * scale_; }
  double height() const { return (vp_.max_y - vp_.min_y) * scale_; }
  std::string x(double v) const { return fmt((v - vp_.min_x) * scale_); }
  std::string y(double v) const { return fmt((vp_.max_y - v) * scale_); }

  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    return s == "-0.000" ? "0.000" : s;
  }

 private:
  Viewport vp_;
  double scale_;
};

}  // namespace

std::string render_svg(const VPolyhedron& set, std::span<const Certificate> cuts,
                       const std::optional<Vector>& point) {
  if (set.dim() != 2) throw DimensionMismatch("render_svg is 2-D only");
  if (point && point->dim() != 2) throw DimensionMismatch("point must be 2-D");

  // Each ray is drawn once, from the lowest-index vertex furthest along it.
  std::vector<std::size_t> anchors;
  for (const Vector& r : set.rays()) {
    anchors.push_back(support_value(VPolyhedron(set.vertices()), r).argmax());
  }

  Point2 first = to_point(set.vertices().front());
  Viewport box{first.x, first.y, first.x, first.y};
  for (const Vector& v : set.vertices()) box.include(to_point(v));
  for (std::size_t i = 0; i < set.rays().size(); ++i) {
    box.include(to_point(set.vertices()[anchors[i]] + set.rays()[i]));
  }
  if (point) box.include(to_point(*point));
  double span_x = box.max_x - box.min_x;
  double span_y = box.max_y - box.min_y;
  double pad_x = span_x > 0 ? 0.2 * span_x : 1.0;
  double pad_y = span_y > 0 ? 0.2 * span_y : 1.0;
  Viewport vp{box.min_x - pad_x, box.min_y - pad_y, box.max_x + pad_x, box.max_y + pad_y};
  Canvas canvas(vp);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Canvas::fmt(canvas.width())
      << "\" height=\"" << Canvas::fmt(canvas.height()) << "\" viewBox=\"0 0 "
      << Canvas::fmt(canvas.width()) << " " << Canvas::fmt(canvas.height()) << "\">\n"
      << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
         "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
         "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"#1f4e79\"/></marker></defs>\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "  <polygon class=\"set\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#1f4e79\" "
         "stroke-width=\"1.5\" points=\"";
  std::vector<Vector> hull = convex_hull(set.vertices());
  for (std::size_t i = 0; i < hull.size(); ++i) {
    Point2 p = to_point(hull[i]);
    out << (i ? " " : "") << canvas.x(p.x) << "," << canvas.y(p.y);
  }
  out << "\"/>\n";

  for (std::size_t i = 0; i < set.rays().size(); ++i) {
    Point2 anchor = to_point(set.vertices()[anchors[i]]);
    Point2 tip = clip_ray(anchor, to_point(set.rays()[i]), vp);
    out << "  <line class=\"ray\" x1=\"" << canvas.x(anchor.x) << "\" y1=\"" << canvas.y(anchor.y)
        << "\" x2=\"" << canvas.x(tip.x) << "\" y2=\"" << canvas.y(tip.y)
        << "\" stroke=\"#1f4e79\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
  }

  for (const Certificate& cut : cuts) {
    if (cut.a.dim() != 2) throw DimensionMismatch("cut must be 2-D");
    double a1 = cut.a[0].to_double();
    double a2 = cut.a[1].to_double();
    double beta = cut.beta.get_d();
    auto seg = clip_line(a1, a2, beta, vp);
    if (!seg) {
      // Boundary misses the viewport: a zero-length segment at the foot of
      // the perpendicular from the viewport center keeps one line per cut.
      double cx = 0.5 * (vp.min_x + vp.max_x);
      double cy = 0.5 * (vp.min_y + vp.max_y);
      double t = (beta - a1 * cx - a2 * cy) / (a1 * a1 + a2 * a2);
      Point2 foot{cx + t * a1, cy + t * a2};
      seg = std::make_pair(foot, foot);
    }
    out << "  <line class=\"cut\" x1=\"" << canvas.x(seg->first.x) << "\" y1=\""
        << canvas.y(seg->first.y) << "\" x2=\"" << canvas.x(seg->second.x) << "\" y2=\""
        << canvas.y(seg->second.y) << "\" stroke=\"#d62728\" stroke-width=\"1\"/>\n";
  }

  if (point) {
    Point2 p = to_point(*point);
    out << "  <circle class=\"point\" cx=\"" << canvas.x(p.x) << "\" cy=\"" << canvas.y(p.y)
        << "\" r=\"4\" fill=\"#2ca02c\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ratsep::cli
