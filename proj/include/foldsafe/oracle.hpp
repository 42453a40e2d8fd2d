#pragma once

#include <cstddef>
#include <vector>

#include "foldsafe/geometry.hpp"
#include "foldsafe/safe_region.hpp"

namespace foldsafe {

// Fold line that maps a boundary point onto the focus: the perpendicular
// bisector of the two, oriented so the focus is on its left.
struct CreaseLine {
  Point boundary_point;
  DirectedLine line;
  int edge = -1;

  // Positive on the focus side.
  double clearance(Point p) const { return line.signed_distance(p); }
};

struct OracleReport {
  std::vector<int> contributing_edges;
  // Fraction of grid points, away from the boundary band, on which the
  // defining predicate and the arc-chain membership agree.
  double membership_agreement = 1.0;
  std::size_t compared_points = 0;
  // Smallest signed distance from a region sample to any sampled crease.
  double min_crease_clearance = 0.0;
  double area_estimate = 0.0;
};

CreaseLine crease_through(Point boundary_point, Point f, int edge = -1);

// For each edge, the best slack any sampled point of its parabola keeps with
// respect to every other parabolic half-plane. Samples are uniform in the
// upright parameter over the part of the curve inside the polygon; the best
// sample is then refined by golden-section search (the slack is concave
// along the curve).
std::vector<double> oracle_edge_slack(const ConvexPolygon& poly, Point f, int samples_per_edge = 512);

// Edges whose best slack exceeds the polygon tolerance.
std::vector<int> oracle_contributing_edges(const ConvexPolygon& poly, Point f,
                                           int samples_per_edge = 512);

// m creases from boundary points spaced evenly by arc length, starting at
// vertex 0.
std::vector<CreaseLine> sample_creases(const ConvexPolygon& poly, Point f, int m);

// Points of the region used for the crease test: the focus and, on rays from
// it, points of every arc scaled by 1, 3/4, 1/2 and 1/4.
std::vector<Point> region_samples(const SafeRegion& region, int per_arc = 64);

OracleReport verify_instance(const ConvexPolygon& poly, Point f, const SafeRegion& region, int grid,
                             int m, int samples_per_edge = 512);

}  // namespace foldsafe
