#pragma once

#include <cstddef>
#include <vector>

#include "foldsafe/geometry.hpp"
#include "foldsafe/parabola.hpp"

namespace foldsafe {

// One boundary piece of the safe region: the part of the parabola of
// `edge_index` between its left and right junctions (counter-clockwise).
struct ParabolaArc {
  int edge_index = -1;
  Junction left;
  Junction right;
};

// Quadratic Bezier segment that traces a parabolic arc exactly.
struct QuadBezier {
  Point start;
  Point control;
  Point end;

  Point at(double s) const;
};

class SafeRegion {
 public:
  SafeRegion(ConvexPolygon polygon, Point focus, std::vector<ParabolaArc> arcs);

  const ConvexPolygon& polygon() const { return polygon_; }
  Point focus() const { return focus_; }
  const std::vector<ParabolaArc>& arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  // Built on demand; regions of very large polygons stay compact.
  Parabola parabola(std::size_t arc) const;

  // Contributing edge indices in counter-clockwise order.
  std::vector<int> edge_set() const;

  // Upright-frame parameters of the arc endpoints on its own parabola.
  std::pair<double, double> arc_params(std::size_t arc) const;
  QuadBezier bezier(std::size_t arc) const;

  // Membership decided from the arc chain alone: the arc whose angular span
  // (seen from the focus) covers p, compared against its polar radius.
  Containment contains(Point p) const;

  // Exact area by Green's theorem over the Bezier form of each arc.
  double area() const;

 private:
  ConvexPolygon polygon_;
  Point focus_;
  std::vector<ParabolaArc> arcs_;
  // Angle of each arc's left junction around the focus, unwrapped so the
  // sequence increases from arcs_[0].
  std::vector<double> start_angles_;
};

struct ScanOptions {
  // Evaluate the arc-class form of the skip test next to the membership form
  // and require that they agree; also check every stored junction against
  // each skipped half-plane. Quadratic in the worst case.
  bool cross_check = false;
};

struct ScanStats {
  std::size_t skipped = 0;   // region unchanged by the new edge
  std::size_t clipped = 0;   // new arc added, nothing removed
  std::size_t eclipsed = 0;  // new arc added, at least one arc removed
  std::size_t head_pops = 0;
  std::size_t tail_pops = 0;
  // Insertions after which a single earlier arc survived.
  std::size_t single_survivor = 0;
  std::size_t max_arcs = 0;
};

// Incremental scan over the edges in order, maintaining the region as a
// double-ended queue of arcs whose head/tail seam is the junction of the last
// and first stored arcs. Amortized linear.
SafeRegion compute_safe_region(const ConvexPolygon& poly, Point f, const ScanOptions& options = {},
                               ScanStats* stats = nullptr);

// Quadratic reference: clips each parabola against every other one.
SafeRegion compute_safe_region_naive(const ConvexPolygon& poly, Point f);

// Evaluates the defining predicate against every edge, independent of any
// computed region.
Containment region_contains(const ConvexPolygon& poly, Point f, Point p);

double region_area(const SafeRegion& region);
std::vector<int> arc_edge_set(const SafeRegion& region);

}  // namespace foldsafe
