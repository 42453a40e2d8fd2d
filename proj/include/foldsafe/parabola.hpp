#pragma once

#include <cstddef>
#include <utility>

#include "foldsafe/geometry.hpp"

namespace foldsafe {

// The envelope of the creases obtained by folding every point of one edge
// line onto the focus.
//
// The upright frame has its origin at the vertex, x-axis along the directrix
// direction and y-axis along the interior normal; there the curve reads
// y = x^2 / (2 r). The parameter t of a point is its x coordinate in that
// frame, so t grows counter-clockwise as seen from the focus.
struct Parabola {
  Point focus;
  DirectedLine directrix;
  // Angle of the direction from the focus towards the nearest directrix point.
  double directional_angle = 0.0;
  // Distance from the focus to the directrix; the vertex sits halfway.
  double focal_distance = 0.0;
  // Edge the directrix extends, or -1 for free-standing parabolas.
  int edge_index = -1;
  // Length tolerance used by the membership and on-curve tests.
  double tol = 1e-9;

  // Builds the parabola with the given focus and directrix; the focus must lie
  // on the interior (left) side.
  static Parabola from_directrix(Point focus, const DirectedLine& directrix, double tol = 1e-9,
                                 int edge_index = -1);

  Vec2 axis() const { return directrix.left_normal(); }
  Point vertex() const { return focus - (0.5 * focal_distance) * axis(); }

  Point point_at(double t) const;
  // Parameter of the orthogonal projection onto the axis frame; no on-curve check.
  double param(Point q) const { return dot(q - focus, directrix.direction); }
  // Signed |qf| - dist(q, directrix): negative inside the half-plane.
  double excess(Point q) const { return distance(q, focus) - directrix.signed_distance(q); }
  bool on_curve(Point q) const;
  // Tangent direction (unnormalized) at parameter t.
  Vec2 tangent_at(double t) const;
  // Distance from the focus to the curve along the unit direction at `angle`.
  double polar_radius(double angle) const;
};

struct Junction {
  Point position;
  // Walking the region boundary counter-clockwise, the arc of `first` ends
  // here and the arc of `second` begins.
  int first = -1;
  int second = -1;
};

enum class ArcClass { LeftArc, CentralArc, RightArc };

Parabola parabola_from_edge(Point focus, const ConvexPolygon& poly, std::size_t edge);

Containment halfplane_contains(const Parabola& p, Point v);

// Both intersections of two parabolas sharing a focus, labelled (q_ij, q_ji)
// for (p_i, p_j). Solved as the quadratic of p_i in its upright frame against
// the inner bisector of the two directrices.
std::pair<Junction, Junction> intersect_parabolas(const Parabola& p_i, const Parabola& p_j);

ArcClass classify_on_arc(const Parabola& p, std::pair<Point, Point> split, Point q);

Point point_at_param(const Parabola& p, double t);
// Throws PointNotOnParabola when q is off the curve.
double param_of_point(const Parabola& p, Point q);

namespace detail {

// Parabola data reduced to what the intersection needs. The focus is shared.
struct Conic {
  Vec2 direction;  // directrix direction
  double r = 0.0;  // focal distance
  int edge = -1;
};

// Upright-frame parameters on `a` of the two intersections with `b`:
// first is q_ab (larger parameter), second is q_ba.
std::pair<double, double> intersect_params(const Conic& a, const Conic& b);

inline Point conic_point(Point focus, const Conic& c, double t) {
  const Vec2 n = perp(c.direction);
  return focus + t * c.direction + ((t * t - c.r * c.r) / (2.0 * c.r)) * n;
}

}  // namespace detail

}  // namespace foldsafe
