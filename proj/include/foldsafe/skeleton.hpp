#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "foldsafe/geometry.hpp"
#include "foldsafe/safe_region.hpp"

namespace foldsafe {

struct SkeletonNode {
  Point position;
  // Distance to the tangent edge lines; 0 for polygon vertices.
  double radius = 0.0;
  // Sorted edge indices whose line lies at `radius` from the node.
  std::vector<int> tangent_edges;
};

// Straight skeleton of a convex polygon. Nodes [0, n) are the polygon
// vertices; the rest are event points. For convex input it coincides with the
// medial axis.
struct StraightSkeleton {
  std::vector<SkeletonNode> nodes;
  std::vector<std::pair<int, int>> edges;
  // faces[i] lists node indices around the face of edge i counter-clockwise,
  // starting with the endpoints of edge i.
  std::vector<std::vector<int>> faces;
  std::size_t vertex_count = 0;

  bool is_event_point(std::size_t node) const { return node >= vertex_count; }
  std::vector<Point> face_polygon(std::size_t edge) const;
};

struct EventCircle {
  Point center;
  double radius = 0.0;
  std::vector<int> tangent_edges;

  bool tangent_to(int edge) const;
  bool strictly_contains(Point p) const { return distance(p, center) < radius; }
};

struct ArcCountPrediction {
  int count = 0;
  // Sorted; empty when the focus lies in no event circle.
  std::vector<int> edges;
};

// Edge-collapse wavefront simulation, O(n log n) plus an O(n) tangency scan per
// event point. Convex input has no split events. Events closer than the
// polygon tolerance in time and position share one node.
StraightSkeleton compute_skeleton(const ConvexPolygon& poly);

std::vector<EventCircle> event_circles(const StraightSkeleton& skeleton);

// Number of arcs of the safe region predicted from the event circles holding
// the focus. Throws BoundaryAmbiguous when the focus is within `tol` of a
// circle.
ArcCountPrediction predict_arc_count(const std::vector<EventCircle>& circles, std::size_t n_edges,
                                     Point f, double tol = 1e-9);

// Faces met by the interior of the region, found by locating interior sample
// points just inside each arc.
std::vector<int> faces_containing(const StraightSkeleton& skeleton, const SafeRegion& region);

}  // namespace foldsafe
