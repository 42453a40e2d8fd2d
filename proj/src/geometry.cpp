#include "foldsafe/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <string>

namespace foldsafe {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::CollinearVertices: return "CollinearVertices";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::InvalidPolygon: return "InvalidPolygon";
    case ErrorCode::FocusNotStrictlyInterior: return "FocusNotStrictlyInterior";
    case ErrorCode::FocusOnDirectrix: return "FocusOnDirectrix";
    case ErrorCode::SameDirectionalAngle: return "SameDirectionalAngle";
    case ErrorCode::TangentParabolas: return "TangentParabolas";
    case ErrorCode::PointNotOnParabola: return "PointNotOnParabola";
    case ErrorCode::BoundaryAmbiguous: return "BoundaryAmbiguous";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

DirectedLine DirectedLine::through(Point a, Point b) {
  const Vec2 d = b - a;
  const double len = norm(d);
  return {a, {d.x / len, d.y / len}};
}

double Tolerance::at_scale(double scale) const {
  return std::max(eps_abs, eps_rel * scale);
}

void Tolerance::validate() const {
  if (!(eps_abs > 0.0) || !(eps_rel > 0.0) || !std::isfinite(eps_abs) || !std::isfinite(eps_rel))
    throw Error(ErrorCode::InvalidArgument, "tolerances must be positive and finite");
}

double signed_area(std::span<const Point> points) {
  // Shoelace about the first vertex keeps the products small.
  double twice = 0.0;
  const Point o = points.empty() ? Point{} : points[0];
  for (std::size_t i = 1; i + 1 < points.size(); ++i)
    twice += cross(points[i] - o, points[i + 1] - o);
  return 0.5 * twice;
}

ConvexPolygon ConvexPolygon::build(std::vector<Point> ccw, const Tolerance& tolerance) {
  auto data = std::make_shared<Data>();
  const std::size_t n = ccw.size();
  data->lines.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    data->lines.push_back(DirectedLine::through(ccw[i], ccw[(i + 1) % n]));

  Point lo = ccw[0], hi = ccw[0];
  for (const Point& p : ccw) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  data->bbox_min = lo;
  data->bbox_max = hi;
  data->scale = distance(lo, hi);
  data->tolerance = tolerance;
  data->tol = tolerance.at_scale(data->scale);
  data->vertices = std::move(ccw);
  return ConvexPolygon(std::move(data));
}

ConvexPolygon ConvexPolygon::with_tolerance(const Tolerance& tolerance) const {
  tolerance.validate();
  return build(data_->vertices, tolerance);
}

double ConvexPolygon::area() const { return signed_area(vertices()); }

double ConvexPolygon::perimeter() const {
  double total = 0.0;
  for (std::size_t i = 0; i < size(); ++i) total += distance(edge_start(i), edge_end(i));
  return total;
}

Point ConvexPolygon::centroid() const {
  const Point o = vertex(0);
  double a2 = 0.0;
  Point acc{};
  for (std::size_t i = 1; i + 1 < size(); ++i) {
    const Vec2 u = vertex(i) - o, v = vertex(i + 1) - o;
    const double w = cross(u, v);
    a2 += w;
    acc = acc + (w / 3.0) * (u + v);
  }
  return o + (1.0 / a2) * acc;
}

ConvexPolygon normalize_polygon(std::span<const Point> points, const Tolerance& tolerance) {
  tolerance.validate();
  if (points.size() < 3)
    throw Error(ErrorCode::TooFewVertices,
                "a polygon needs at least 3 vertices, got " + std::to_string(points.size()));
  for (const Point& p : points)
    if (!is_finite(p)) throw Error(ErrorCode::NonFinite, "vertex coordinates must be finite");

  std::vector<Point> ccw(points.begin(), points.end());
  if (signed_area(ccw) < 0.0) std::reverse(ccw.begin() + 1, ccw.end());

  const std::size_t n = ccw.size();
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = ccw[(i + 1) % n] - ccw[i];
    const Vec2 b = ccw[(i + 2) % n] - ccw[(i + 1) % n];
    const double la = norm(a), lb = norm(b);
    const double c = cross(a, b);
    if (la == 0.0 || lb == 0.0 || std::abs(c) <= tolerance.eps_rel * la * lb)
      throw Error(ErrorCode::CollinearVertices,
                  "vertices " + std::to_string(i) + ".." + std::to_string((i + 2) % n) +
                      " are collinear");
    if (c < 0.0)
      throw Error(ErrorCode::NotConvex, "reflex turn at vertex " + std::to_string((i + 1) % n));
    turning += std::atan2(c, dot(a, b));
  }
  // All left turns but winding more than once: a star, not a convex polygon.
  if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6)
    throw Error(ErrorCode::NotConvex, "boundary winds more than once");

  return ConvexPolygon::build(std::move(ccw), tolerance);
}

double signed_distance_to_edge_line(const ConvexPolygon& poly, std::size_t edge, Point p) {
  return poly.edge_line(edge).signed_distance(p);
}

bool strictly_inside(const ConvexPolygon& poly, Point p) {
  const double tol = poly.tol();
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (!(poly.edge_line(i).signed_distance(p) > tol)) return false;
  return true;
}

}  // namespace foldsafe
