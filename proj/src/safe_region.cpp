#include "foldsafe/safe_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>

namespace foldsafe {

namespace {

using detail::Conic;
using detail::conic_point;
using detail::intersect_params;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Conic conic_of_edge(const ConvexPolygon& poly, Point f, std::size_t i) {
  const DirectedLine line = poly.edge_line(i);
  return {line.direction, line.signed_distance(f), static_cast<int>(i)};
}

double param_on(Point f, const Conic& c, Point q) { return dot(q - f, c.direction); }

// |qf| minus the distance from q to the directrix of c; <= 0 inside H(c).
double excess_on(const ConvexPolygon& poly, Point f, const Conic& c, Point q) {
  return distance(q, f) - poly.edge_line(static_cast<std::size_t>(c.edge)).signed_distance(q);
}

void require_interior(const ConvexPolygon& poly, Point f) {
  if (!is_finite(f) || !strictly_inside(poly, f))
    throw Error(ErrorCode::FocusNotStrictlyInterior, "focus must lie strictly inside the polygon");
}

[[noreturn]] void invariant_violation(const std::string& what) {
  throw Error(ErrorCode::InternalInvariantViolation, what);
}

}  // namespace

Point QuadBezier::at(double s) const {
  const double u = 1.0 - s;
  return (u * u) * start + (2.0 * u * s) * control + (s * s) * end;
}

SafeRegion::SafeRegion(ConvexPolygon polygon, Point focus, std::vector<ParabolaArc> arcs)
    : polygon_(std::move(polygon)), focus_(focus), arcs_(std::move(arcs)) {
  const std::size_t k = arcs_.size();
  if (k < 2) invariant_violation("a safe region has at least two arcs");
  std::vector<char> seen(polygon_.size(), 0);
  start_angles_.reserve(k);
  for (std::size_t a = 0; a < k; ++a) {
    const ParabolaArc& arc = arcs_[a];
    const ParabolaArc& next = arcs_[(a + 1) % k];
    if (arc.edge_index < 0 || static_cast<std::size_t>(arc.edge_index) >= polygon_.size())
      invariant_violation("arc references a missing edge");
    if (seen[arc.edge_index]++) invariant_violation("edge contributes two arcs");
    if (arc.left.second != arc.edge_index || arc.right.first != arc.edge_index ||
        arc.right.second != next.edge_index || !(arc.right.position == next.left.position))
      invariant_violation("arc chain is not closed");

    const Vec2 v = arc.left.position - focus_;
    double angle = std::atan2(v.y, v.x);
    if (a > 0) {
      while (angle <= start_angles_.back()) angle += kTwoPi;
    }
    start_angles_.push_back(angle);
  }
}

Parabola SafeRegion::parabola(std::size_t arc) const {
  return parabola_from_edge(focus_, polygon_, static_cast<std::size_t>(arcs_[arc].edge_index));
}

std::vector<int> SafeRegion::edge_set() const {
  std::vector<int> edges;
  edges.reserve(arcs_.size());
  for (const ParabolaArc& arc : arcs_) edges.push_back(arc.edge_index);
  return edges;
}

std::pair<double, double> SafeRegion::arc_params(std::size_t arc) const {
  const Parabola p = parabola(arc);
  return {p.param(arcs_[arc].left.position), p.param(arcs_[arc].right.position)};
}

QuadBezier SafeRegion::bezier(std::size_t arc) const {
  const Parabola p = parabola(arc);
  const auto t0 = p.param(arcs_[arc].left.position);
  const auto t1 = p.param(arcs_[arc].right.position);
  // Tangents at t0 and t1 meet above the parameter midpoint, at height
  // t0 t1 / (2 r) in the upright frame.
  const Point control = p.vertex() + (0.5 * (t0 + t1)) * p.directrix.direction +
                        (t0 * t1 / (2.0 * p.focal_distance)) * p.axis();
  return {arcs_[arc].left.position, control, arcs_[arc].right.position};
}

Containment SafeRegion::contains(Point p) const {
  const Vec2 v = p - focus_;
  if (v.x == 0.0 && v.y == 0.0) return Containment::Inside;
  double angle = std::atan2(v.y, v.x);
  while (angle < start_angles_.front()) angle += kTwoPi;
  while (angle >= start_angles_.front() + kTwoPi) angle -= kTwoPi;
  const auto it = std::upper_bound(start_angles_.begin(), start_angles_.end(), angle);
  const std::size_t arc = static_cast<std::size_t>(it - start_angles_.begin()) - 1;
  return halfplane_contains(parabola(arc), p);
}

double SafeRegion::area() const {
  double twice = 0.0;
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    const QuadBezier b = bezier(a);
    const Vec2 p0 = b.start - focus_, p1 = b.control - focus_, p2 = b.end - focus_;
    // Chord plus the parabolic segment, which is 2/3 of its control triangle.
    twice += cross(p0, p2) + (2.0 / 3.0) * cross(p1 - p0, p2 - p0);
  }
  return 0.5 * twice;
}

SafeRegion compute_safe_region(const ConvexPolygon& poly, Point f, const ScanOptions& options,
                               ScanStats* stats) {
  require_interior(poly, f);
  const std::size_t n = poly.size();
  const double tol = poly.tol();
  ScanStats local;
  ScanStats& st = stats ? *stats : local;
  st = {};

  struct Slot {
    Conic conic;
    Point left;
    Point right;
  };
  // Only the back ever grows, so a vector with a moving head serves as the
  // double-ended queue.
  std::vector<Slot> slots;
  slots.reserve(n);
  std::size_t head = 0;
  auto live = [&] { return slots.size() - head; };

  {
    const Conic c0 = conic_of_edge(poly, f, 0);
    const Conic c1 = conic_of_edge(poly, f, 1);
    const auto [t01, t10] = intersect_params(c0, c1);
    const Point q01 = conic_point(f, c0, t01);
    const Point q10 = conic_point(f, c0, t10);
    slots.push_back({c0, q10, q01});
    slots.push_back({c1, q01, q10});
  }
  st.max_arcs = 2;

  for (std::size_t i = 2; i < n; ++i) {
    const Conic ci = conic_of_edge(poly, f, i);
    const Point seam = slots.back().right;
    const double seam_excess = excess_on(poly, f, ci, seam);

    if (options.cross_check && std::abs(seam_excess) > tol) {
      // Arc-class form: q_iH on the left arc of the head and q_Ti on the
      // right arc of the tail.
      const Slot& first = slots[head];
      const Slot& last = slots.back();
      const double t_iH = intersect_params(first.conic, ci).second;
      const double t_Ti = intersect_params(last.conic, ci).first;
      const bool arc_class_skip = t_iH < param_on(f, first.conic, first.left) &&
                                  t_Ti > param_on(f, last.conic, last.right);
      if (arc_class_skip != (seam_excess < 0.0))
        invariant_violation("skip tests disagree at edge " + std::to_string(i));
    }

    if (seam_excess <= 0.0) {
      ++st.skipped;
      if (options.cross_check) {
        for (std::size_t s = head; s < slots.size(); ++s)
          if (excess_on(poly, f, ci, slots[s].right) > tol)
            invariant_violation("skipped edge " + std::to_string(i) + " cuts a stored junction");
      }
      continue;
    }

    std::size_t popped = 0;

    // Head: pop while q_iH lies on the right arc of the head, past r_H.
    double t_iH = 0.0;
    for (;;) {
      const Slot& first = slots[head];
      t_iH = intersect_params(first.conic, ci).second;
      if (t_iH < param_on(f, first.conic, first.right)) break;
      if (live() == 1) invariant_violation("scan eclipsed every arc at edge " + std::to_string(i));
      ++head;
      ++st.head_pops;
      ++popped;
    }
    const Point q_iH = conic_point(f, slots[head].conic, t_iH);

    // Tail: pop while q_Ti lies on the left arc of the tail, before l_T.
    double t_Ti = 0.0;
    for (;;) {
      const Slot& last = slots.back();
      t_Ti = intersect_params(last.conic, ci).first;
      if (t_Ti > param_on(f, last.conic, last.left)) break;
      if (live() == 1) invariant_violation("scan eclipsed every arc at edge " + std::to_string(i));
      slots.pop_back();
      ++st.tail_pops;
      ++popped;
    }
    const Point q_Ti = conic_point(f, slots.back().conic, t_Ti);

    if (live() == 1) ++st.single_survivor;
    slots[head].left = q_iH;
    slots.back().right = q_Ti;
    slots.push_back({ci, q_Ti, q_iH});
    ++(popped ? st.eclipsed : st.clipped);
    st.max_arcs = std::max(st.max_arcs, live());
  }

  const std::span<const Slot> arcs(slots.data() + head, live());
  const std::size_t k = arcs.size();
  std::vector<ParabolaArc> out;
  out.reserve(k);
  for (std::size_t a = 0; a < k; ++a) {
    const int prev = arcs[(a + k - 1) % k].conic.edge;
    const int self = arcs[a].conic.edge;
    const int next = arcs[(a + 1) % k].conic.edge;
    out.push_back({self, Junction{arcs[a].left, prev, self}, Junction{arcs[a].right, self, next}});
  }
  return SafeRegion(poly, f, std::move(out));
}

SafeRegion compute_safe_region_naive(const ConvexPolygon& poly, Point f) {
  require_interior(poly, f);
  const std::size_t n = poly.size();
  std::vector<Conic> conics;
  conics.reserve(n);
  for (std::size_t i = 0; i < n; ++i) conics.push_back(conic_of_edge(poly, f, i));

  struct Span {
    int edge;
    Point left, right;
  };
  std::vector<Span> spans;
  for (std::size_t i = 0; i < n; ++i) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      // p_i inside H(p_j) is its central arc [t_ji, t_ij].
      const auto [t_ij, t_ji] = intersect_params(conics[i], conics[j]);
      lo = std::max(lo, t_ji);
      hi = std::min(hi, t_ij);
    }
    if (lo < hi)
      spans.push_back({static_cast<int>(i), conic_point(f, conics[i], lo),
                       conic_point(f, conics[i], hi)});
  }

  const std::size_t k = spans.size();
  if (k < 2) invariant_violation("naive clipping left fewer than two arcs");
  std::vector<ParabolaArc> out;
  out.reserve(k);
  for (std::size_t a = 0; a < k; ++a) {
    const int prev = spans[(a + k - 1) % k].edge;
    const int next = spans[(a + 1) % k].edge;
    // Neighbouring arcs meet at one junction; share it so the chain closes.
    const Point right = spans[(a + 1) % k].left;
    out.push_back({spans[a].edge, Junction{spans[a].left, prev, spans[a].edge},
                   Junction{right, spans[a].edge, next}});
  }
  return SafeRegion(poly, f, std::move(out));
}

Containment region_contains(const ConvexPolygon& poly, Point f, Point p) {
  const double tol = poly.tol();
  const double to_focus = distance(p, f);
  bool boundary = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const double slack = poly.edge_line(i).signed_distance(p) - to_focus;
    if (slack < -tol) return Containment::Outside;
    if (slack <= tol) boundary = true;
  }
  return boundary ? Containment::Boundary : Containment::Inside;
}

double region_area(const SafeRegion& region) { return region.area(); }

std::vector<int> arc_edge_set(const SafeRegion& region) { return region.edge_set(); }

}  // namespace foldsafe
