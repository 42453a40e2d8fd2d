#include "foldsafe/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace foldsafe {

namespace {

// Splits sorted coordinates into two monotone chains and returns the
// component steps; they sum to zero.
std::vector<double> chain_steps(std::vector<double> values, std::mt19937_64& rng) {
  std::sort(values.begin(), values.end());
  const double lo = values.front(), hi = values.back();
  std::vector<double> steps;
  steps.reserve(values.size());
  double top = lo, bottom = lo;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    if (rng() & 1u) {
      steps.push_back(values[i] - top);
      top = values[i];
    } else {
      steps.push_back(bottom - values[i]);
      bottom = values[i];
    }
  }
  steps.push_back(hi - top);
  steps.push_back(bottom - hi);
  return steps;
}

std::vector<Point> valtr(int n, std::mt19937_64& rng) {
  std::vector<double> xs(n), ys(n);
  for (double& x : xs) x = unit_uniform(rng);
  for (double& y : ys) y = unit_uniform(rng);
  const std::vector<double> dx = chain_steps(std::move(xs), rng);
  std::vector<double> dy = chain_steps(std::move(ys), rng);
  for (std::size_t i = dy.size(); i > 1; --i) std::swap(dy[i - 1], dy[rng() % i]);

  std::vector<Vec2> steps(n);
  for (int i = 0; i < n; ++i) steps[i] = {dx[i], dy[i]};
  std::sort(steps.begin(), steps.end(),
            [](Vec2 a, Vec2 b) { return std::atan2(a.y, a.x) < std::atan2(b.y, b.x); });

  std::vector<Point> pts(n);
  Point at{};
  Point lo{};
  for (int i = 0; i < n; ++i) {
    pts[i] = at;
    lo = {std::min(lo.x, at.x), std::min(lo.y, at.y)};
    at = at + steps[i];
  }
  for (Point& p : pts) p = p - lo;
  return pts;
}

}  // namespace

ConvexPolygon random_convex_polygon(int n, std::uint64_t seed, const Tolerance& tolerance) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "a polygon needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    try {
      return normalize_polygon(valtr(n, rng), tolerance);
    } catch (const Error&) {
      // Near-parallel steps; redraw.
    }
  }
  throw Error(ErrorCode::InternalInvariantViolation,
              "no valid convex polygon after 1000 draws for n=" + std::to_string(n));
}

ConvexPolygon regular_polygon(int n, double radius, Point centre, double phase,
                              const Tolerance& tolerance) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "a polygon needs at least 3 vertices");
  std::vector<Point> pts(n);
  for (int i = 0; i < n; ++i) {
    const double a = phase + 2.0 * std::numbers::pi * i / n;
    pts[i] = centre + radius * Point{std::cos(a), std::sin(a)};
  }
  return normalize_polygon(pts, tolerance);
}

Point random_interior_point(const ConvexPolygon& poly, std::mt19937_64& rng, double margin) {
  const Point lo = poly.bbox_min(), hi = poly.bbox_max();
  const double clearance = std::max(poly.tol(), margin * poly.scale());
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const Point p{lo.x + unit_uniform(rng) * (hi.x - lo.x), lo.y + unit_uniform(rng) * (hi.y - lo.y)};
    bool ok = true;
    for (std::size_t i = 0; i < poly.size() && ok; ++i)
      ok = poly.edge_line(i).signed_distance(p) > clearance;
    if (ok) return p;
  }
  throw Error(ErrorCode::InternalInvariantViolation, "could not sample an interior point");
}

}  // namespace foldsafe
