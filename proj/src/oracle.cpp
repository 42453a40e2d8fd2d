#include "foldsafe/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace foldsafe {

namespace {

// min over j != i of dist(q, line_j) - |qf|
double slack_excluding(const ConvexPolygon& poly, Point f, std::size_t i, Point q) {
  const double to_focus = distance(q, f);
  double slack = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < poly.size(); ++j) {
    if (j == i) continue;
    slack = std::min(slack, poly.edge_line(j).signed_distance(q) - to_focus);
  }
  return slack;
}

bool in_polygon(const ConvexPolygon& poly, Point q) {
  for (std::size_t j = 0; j < poly.size(); ++j)
    if (poly.edge_line(j).signed_distance(q) < 0.0) return false;
  return true;
}

// Parameter interval of the curve inside the polygon.
std::pair<double, double> clip_to_polygon(const ConvexPolygon& poly, const Parabola& p, int samples) {
  const DirectedLine& line = p.directrix;
  double far = 0.0;
  for (const Point& v : poly.vertices()) far = std::max(far, line.signed_distance(v));
  // On the curve dist(q, line) = r/2 + t^2/(2r), which cannot exceed `far`.
  const double r = p.focal_distance;
  const double bound = std::sqrt(std::max(0.0, 2.0 * r * (far - 0.5 * r)));

  const int coarse = std::max(samples, 2);
  const double step = 2.0 * bound / coarse;
  int first = -1, last = -1;
  for (int k = 0; k <= coarse; ++k) {
    if (in_polygon(poly, p.point_at(-bound + k * step))) {
      if (first < 0) first = k;
      last = k;
    }
  }
  if (first < 0) return {-bound, bound};

  auto refine = [&](double inside, double outside) {
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (inside + outside);
      (in_polygon(poly, p.point_at(mid)) ? inside : outside) = mid;
    }
    return inside;
  };
  const double t_first = -bound + first * step, t_last = -bound + last * step;
  const double lo = first > 0 ? refine(t_first, t_first - step) : t_first;
  const double hi = last < coarse ? refine(t_last, t_last + step) : t_last;
  return {lo, hi};
}

}  // namespace

CreaseLine crease_through(Point boundary_point, Point f, int edge) {
  const Vec2 w = f - boundary_point;
  const double len = norm(w);
  const Vec2 toward_focus{w.x / len, w.y / len};
  const Vec2 direction{toward_focus.y, -toward_focus.x};
  return {boundary_point, DirectedLine{0.5 * (boundary_point + f), direction}, edge};
}

std::vector<double> oracle_edge_slack(const ConvexPolygon& poly, Point f, int samples_per_edge) {
  if (samples_per_edge < 2)
    throw Error(ErrorCode::InvalidArgument, "samples_per_edge must be at least 2");
  std::vector<double> best(poly.size(), -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Parabola p = parabola_from_edge(f, poly, i);
    const auto [lo, hi] = clip_to_polygon(poly, p, samples_per_edge);
    const double step = (hi - lo) / (samples_per_edge - 1);
    auto slack_at = [&](double t) { return slack_excluding(poly, f, i, p.point_at(t)); };

    int arg = 0;
    double value = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples_per_edge; ++k) {
      const double s = slack_at(lo + k * step);
      if (s > value) {
        value = s;
        arg = k;
      }
    }
    // Golden-section search on the bracket around the best sample.
    double a = lo + (arg - 1) * step, b = lo + (arg + 1) * step;
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = slack_at(x1), f2 = slack_at(x2);
    for (int it = 0; it < 80; ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + g * (b - a);
        f2 = slack_at(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - g * (b - a);
        f1 = slack_at(x1);
      }
    }
    best[i] = std::max({value, f1, f2});
  }
  return best;
}

std::vector<int> oracle_contributing_edges(const ConvexPolygon& poly, Point f, int samples_per_edge) {
  if (samples_per_edge < 100)
    throw Error(ErrorCode::InvalidArgument, "samples_per_edge must be at least 100");
  const std::vector<double> slack = oracle_edge_slack(poly, f, samples_per_edge);
  std::vector<int> edges;
  for (std::size_t i = 0; i < slack.size(); ++i)
    if (slack[i] > poly.tol()) edges.push_back(static_cast<int>(i));
  return edges;
}

std::vector<CreaseLine> sample_creases(const ConvexPolygon& poly, Point f, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "need at least one crease");
  const double perimeter = poly.perimeter();
  std::vector<CreaseLine> creases;
  creases.reserve(m);
  std::size_t edge = 0;
  double edge_begin = 0.0;
  double edge_len = distance(poly.edge_start(0), poly.edge_end(0));
  for (int k = 0; k < m; ++k) {
    const double s = perimeter * k / m;
    while (s > edge_begin + edge_len && edge + 1 < poly.size()) {
      edge_begin += edge_len;
      ++edge;
      edge_len = distance(poly.edge_start(edge), poly.edge_end(edge));
    }
    const double local = std::clamp((s - edge_begin) / edge_len, 0.0, 1.0);
    const Point u = poly.edge_start(edge) + local * (poly.edge_end(edge) - poly.edge_start(edge));
    creases.push_back(crease_through(u, f, static_cast<int>(edge)));
  }
  return creases;
}

std::vector<Point> region_samples(const SafeRegion& region, int per_arc) {
  const Point f = region.focus();
  std::vector<Point> pts{f};
  for (std::size_t a = 0; a < region.size(); ++a) {
    const QuadBezier b = region.bezier(a);
    for (int s = 0; s <= per_arc; ++s) {
      const Point q = b.at(static_cast<double>(s) / per_arc);
      for (double scale : {1.0, 0.75, 0.5, 0.25}) pts.push_back(f + scale * (q - f));
    }
  }
  return pts;
}

OracleReport verify_instance(const ConvexPolygon& poly, Point f, const SafeRegion& region, int grid,
                             int m, int samples_per_edge) {
  if (grid < 1) throw Error(ErrorCode::InvalidArgument, "grid must be positive");
  OracleReport report;
  report.contributing_edges = oracle_contributing_edges(poly, f, samples_per_edge);

  const Point lo = poly.bbox_min(), hi = poly.bbox_max();
  const double dx = (hi.x - lo.x) / grid, dy = (hi.y - lo.y) / grid;
  std::size_t agree = 0, compared = 0, covered = 0;
  for (int iy = 0; iy < grid; ++iy) {
    for (int ix = 0; ix < grid; ++ix) {
      const Point p{lo.x + (ix + 0.5) * dx, lo.y + (iy + 0.5) * dy};
      const Containment direct = region_contains(poly, f, p);
      if (direct != Containment::Outside) ++covered;
      const Containment by_arcs = region.contains(p);
      if (direct == Containment::Boundary || by_arcs == Containment::Boundary) continue;
      ++compared;
      if (direct == by_arcs) ++agree;
    }
  }
  report.compared_points = compared;
  report.membership_agreement = compared ? static_cast<double>(agree) / compared : 1.0;
  report.area_estimate = covered * dx * dy;

  const std::vector<CreaseLine> creases = sample_creases(poly, f, m);
  const std::vector<Point> pts = region_samples(region);
  double clearance = std::numeric_limits<double>::infinity();
  for (const CreaseLine& c : creases)
    for (const Point& p : pts) clearance = std::min(clearance, c.clearance(p));
  report.min_crease_clearance = clearance;
  return report;
}

}  // namespace foldsafe
