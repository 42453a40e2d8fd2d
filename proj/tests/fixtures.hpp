#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "foldsafe/geometry.hpp"

namespace fixtures {

using foldsafe::ConvexPolygon;
using foldsafe::Point;

inline ConvexPolygon polygon(std::vector<Point> pts) { return foldsafe::normalize_polygon(pts); }

inline ConvexPolygon unit_square() { return polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
inline ConvexPolygon rectangle_2x1() { return polygon({{0, 0}, {2, 0}, {2, 1}, {0, 1}}); }
inline ConvexPolygon triangle() { return polygon({{0, 0}, {5, 0}, {3.3, 3}}); }
inline constexpr Point triangle_f2{1.5, 0.4};
inline constexpr Point triangle_f3{3.75, 1.0};

inline ConvexPolygon pentagon() {
  return polygon({{1.932, 3.468}, {0.180, 2.124}, {2.568, 0.198}, {4.734, 0.534}, {5.790, 1.590}});
}
inline constexpr Point pentagon_focus{1.428, 1.824};

inline ConvexPolygon nonagon() {
  return polygon({{0, 2}, {0, 0.6}, {1, 0}, {9.3, 0}, {10, 0.6}, {10, 1}, {9, 2.5}, {3.4, 4.2}, {2.45, 4.2}});
}

// Thin octagon on which the scan repeatedly eclipses every stored arc but one.
inline ConvexPolygon eclipse_octagon() {
  return polygon({{3.5988819170977946, 0.33790802190674918},
                  {0, 0.32584316846037337},
                  {0.14072612496366332, 0.28095791687499511},
                  {1.5321191876905322, 0.082163112524935189},
                  {2.35318776293163, 0.042781808941130761},
                  {2.6254574574538641, 0.032020438429070153},
                  {4.7356747893206821, 0},
                  {7.6206094702797049, 0.13745262468861086}});
}
inline constexpr Point eclipse_focus{4.5532734849725927, 0.1832424415199618};

// Distance from p to the line through a and b, written out directly.
inline double line_distance(Point a, Point b, Point p) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  return ((p.y - a.y) * dx - (p.x - a.x) * dy) / std::hypot(dx, dy);
}

// Defining predicate evaluated from raw vertices: min edge-line distance
// minus distance to the focus. Positive strictly inside the region.
inline double region_slack(const std::vector<Point>& v, Point f, Point p) {
  double s = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) s = std::min(s, line_distance(v[i], v[(i + 1) % v.size()], p));
  return s - std::hypot(p.x - f.x, p.y - f.y);
}

inline std::vector<Point> vertex_list(const ConvexPolygon& poly) {
  return {poly.vertices().begin(), poly.vertices().end()};
}

// Midpoint-rule area of {slack > 0} on a res x res grid over the bounding box.
inline double grid_area(const ConvexPolygon& poly, Point f, int res) {
  const auto v = vertex_list(poly);
  const Point lo = poly.bbox_min(), hi = poly.bbox_max();
  const double hx = (hi.x - lo.x) / res, hy = (hi.y - lo.y) / res;
  long inside = 0;
  for (int i = 0; i < res; ++i)
    for (int j = 0; j < res; ++j)
      if (region_slack(v, f, {lo.x + (i + 0.5) * hx, lo.y + (j + 0.5) * hy}) > 0) ++inside;
  return inside * hx * hy;
}

// Junction of the parabolas of two edge lines found without the quadratic:
// bisection along the inner angle bisector ray from the lines' meeting point
// (or the midline for parallel lines) on dist(q, line) - |qf|.
struct Line {
  Point a, b;
};

inline Point bisector_junction(Line li, Line lj, Point f, Point near) {
  auto dist = [](Line l, Point p) { return line_distance(l.a, l.b, p); };
  // Points with dist_i == dist_j form a line with normal n_i - n_j, hence
  // direction d_i - d_j. Start from the projection of `near` onto it and
  // bisect on g = dist_i - |qf| along it.
  auto unit = [](Point d) {
    const double n = std::hypot(d.x, d.y);
    return Point{d.x / n, d.y / n};
  };
  const Point di = unit(li.b - li.a), dj = unit(lj.b - lj.a);
  const Point dir = unit(Point{di.x - dj.x, di.y - dj.y});
  auto project_to_bisector = [&](Point p) {
    // Move along the normal difference until dist_i == dist_j.
    const Point ni{-di.y, di.x}, nj{-dj.y, dj.x};
    const Point g{ni.x - nj.x, ni.y - nj.y};
    const double gg = g.x * g.x + g.y * g.y;
    const double e = dist(li, p) - dist(lj, p);
    return Point{p.x - e * g.x / gg, p.y - e * g.y / gg};
  };
  const Point base = project_to_bisector(near);
  auto g = [&](double s) {
    const Point q{base.x + s * dir.x, base.y + s * dir.y};
    return dist(li, q) - std::hypot(q.x - f.x, q.y - f.y);
  };
  // Bracket the root nearest to s = 0.
  double step = 1e-3;
  double a = 0, b = 0;
  const double g0 = g(0);
  for (;; step *= 2) {
    if ((g(step) > 0) != (g0 > 0)) {
      a = 0, b = step;
      break;
    }
    if ((g(-step) > 0) != (g0 > 0)) {
      a = -step, b = 0;
      break;
    }
  }
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if ((g(m) > 0) == (g(a) > 0))
      a = m;
    else
      b = m;
  }
  const double s = 0.5 * (a + b);
  return {base.x + s * dir.x, base.y + s * dir.y};
}

}  // namespace fixtures
