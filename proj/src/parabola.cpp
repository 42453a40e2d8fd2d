#include "foldsafe/parabola.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace foldsafe {

namespace {

// Directrix directions closer than this are treated as the same directional
// angle. Polygon validation keeps adjacent edges far above it.
constexpr double kSameDirection = 1e-14;

detail::Conic to_conic(const Parabola& p) {
  return {p.directrix.direction, p.focal_distance, p.edge_index};
}

}  // namespace

Parabola Parabola::from_directrix(Point focus, const DirectedLine& directrix, double tol,
                                  int edge_index) {
  const double r = directrix.signed_distance(focus);
  if (!(r > tol))
    throw Error(ErrorCode::FocusOnDirectrix,
                "focus is " + std::to_string(r) + " from the directrix of edge " +
                    std::to_string(edge_index));
  Parabola p;
  p.focus = focus;
  p.directrix = directrix;
  const Vec2 toward = -1.0 * directrix.left_normal();
  p.directional_angle = std::atan2(toward.y, toward.x);
  p.focal_distance = r;
  p.edge_index = edge_index;
  p.tol = tol;
  return p;
}

Point Parabola::point_at(double t) const {
  return detail::conic_point(focus, to_conic(*this), t);
}

bool Parabola::on_curve(Point q) const {
  return std::abs(excess(q)) <= std::max(tol, 1e-12 * distance(q, focus));
}

Vec2 Parabola::tangent_at(double t) const {
  return directrix.direction + (t / focal_distance) * axis();
}

double Parabola::polar_radius(double angle) const {
  return focal_distance / (1.0 + std::cos(angle - directional_angle));
}

Parabola parabola_from_edge(Point focus, const ConvexPolygon& poly, std::size_t edge) {
  return Parabola::from_directrix(focus, poly.edge_line(edge), poly.tol(), static_cast<int>(edge));
}

Containment halfplane_contains(const Parabola& p, Point v) {
  const double e = p.excess(v);
  if (e < -p.tol) return Containment::Inside;
  if (e > p.tol) return Containment::Outside;
  return Containment::Boundary;
}

namespace detail {

std::pair<double, double> intersect_params(const Conic& a, const Conic& b) {
  const Vec2 diff = a.direction - b.direction;
  const double gap2 = dot(diff, diff);
  if (std::sqrt(gap2) <= kSameDirection)
    throw Error(ErrorCode::SameDirectionalAngle,
                "edges " + std::to_string(a.edge) + " and " + std::to_string(b.edge) +
                    " have the same directional angle");
  const Vec2 sum = a.direction + b.direction;

  // In the upright frame of `a` the curve is y = t^2 / (2 r_a); the inner
  // bisector is where the signed distances to both directrices agree:
  //   A t^2 + B t + C = 0.
  // 1 - n_a.n_b and 1 + n_a.n_b are taken from |d_a - d_b|^2 and
  // |d_a + d_b|^2 so nearly parallel edges keep full relative precision.
  const double qa = gap2 / (4.0 * a.r);
  const double qb = cross(a.direction, b.direction);
  const double qc = 0.25 * a.r * dot(sum, sum) - b.r;

  const double disc = qb * qb - 4.0 * qa * qc;
  if (!(disc > 0.0))
    throw Error(ErrorCode::TangentParabolas,
                "parabolas of edges " + std::to_string(a.edge) + " and " + std::to_string(b.edge) +
                    " touch at a single point");
  const double root = std::sqrt(disc);
  const double q = -0.5 * (qb + std::copysign(root, qb));
  const double t1 = q / qa;
  const double t2 = qc / q;
  return {std::max(t1, t2), std::min(t1, t2)};
}

}  // namespace detail

std::pair<Junction, Junction> intersect_parabolas(const Parabola& p_i, const Parabola& p_j) {
  if (!(p_i.focus == p_j.focus))
    throw Error(ErrorCode::InvalidArgument, "parabolas must share the focus");
  const auto [t_ij, t_ji] = detail::intersect_params(to_conic(p_i), to_conic(p_j));
  return {Junction{p_i.point_at(t_ij), p_i.edge_index, p_j.edge_index},
          Junction{p_i.point_at(t_ji), p_j.edge_index, p_i.edge_index}};
}

Point point_at_param(const Parabola& p, double t) { return p.point_at(t); }

double param_of_point(const Parabola& p, Point q) {
  if (!p.on_curve(q))
    throw Error(ErrorCode::PointNotOnParabola,
                "point is " + std::to_string(p.excess(q)) + " off the parabola");
  return p.param(q);
}

ArcClass classify_on_arc(const Parabola& p, std::pair<Point, Point> split, Point q) {
  const double tl = param_of_point(p, split.first);
  const double tr = param_of_point(p, split.second);
  const double t = param_of_point(p, q);
  if (t < tl - p.tol) return ArcClass::LeftArc;
  if (t > tr + p.tol) return ArcClass::RightArc;
  return ArcClass::CentralArc;
}

}  // namespace foldsafe
