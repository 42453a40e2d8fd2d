#include "foldsafe/skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <string>

namespace foldsafe {

namespace {

// Point at equal signed distance from three edge lines, and that distance.
bool equidistant_point(const DirectedLine& a, const DirectedLine& b, const DirectedLine& c,
                       Point& out, double& time) {
  const Vec2 na = a.left_normal(), nb = b.left_normal(), nc = c.left_normal();
  const Vec2 r1 = nb - na, r2 = nb - nc;
  const double h1 = dot(nb, b.origin) - dot(na, a.origin);
  const double h2 = dot(nb, b.origin) - dot(nc, c.origin);
  const double det = cross(r1, r2);
  if (det == 0.0) return false;
  out = {(h1 * r2.y - h2 * r1.y) / det, (r1.x * h2 - r2.x * h1) / det};
  time = b.signed_distance(out);
  return std::isfinite(time) && is_finite(out);
}

struct Event {
  double time;
  int edge;
  unsigned version;
  bool operator>(const Event& o) const { return time > o.time; }
};

}  // namespace

std::vector<Point> StraightSkeleton::face_polygon(std::size_t edge) const {
  std::vector<Point> pts;
  pts.reserve(faces[edge].size());
  for (int node : faces[edge]) pts.push_back(nodes[node].position);
  return pts;
}

StraightSkeleton compute_skeleton(const ConvexPolygon& poly) {
  const int n = static_cast<int>(poly.size());
  const double tol = poly.tol();
  StraightSkeleton sk;
  sk.vertex_count = poly.size();
  for (int i = 0; i < n; ++i)
    sk.nodes.push_back({poly.vertex(i), 0.0, {std::min(i, (i + n - 1) % n), std::max(i, (i + n - 1) % n)}});

  std::vector<int> prev(n), next(n);
  // Node where the wavefront vertex between prev[i] and i currently starts.
  std::vector<int> origin(n);
  std::vector<std::vector<int>> left_chain(n), right_chain(n);
  std::vector<int> collapse(n, -1);
  std::vector<unsigned> version(n, 0);
  for (int i = 0; i < n; ++i) {
    prev[i] = (i + n - 1) % n;
    next[i] = (i + 1) % n;
    origin[i] = i;
    left_chain[i] = {i};
    right_chain[i] = {(i + 1) % n};
  }

  std::priority_queue<Event, std::vector<Event>, std::greater<>> queue;
  double now = 0.0;
  auto schedule = [&](int i) {
    Point c;
    double t;
    if (!equidistant_point(poly.edge_line(prev[i]), poly.edge_line(i), poly.edge_line(next[i]), c, t))
      return;
    // A growing edge meets its neighbours behind the wavefront: never collapses.
    if (t < now - tol) return;
    queue.push({t, i, version[i]});
  };

  // Nodes are created in time order, so simultaneous events are found by
  // walking back over the most recent event points.
  auto node_at = [&](Point c, double t) {
    for (std::size_t k = sk.nodes.size(); k-- > sk.vertex_count;) {
      if (sk.nodes[k].radius < t - tol) break;
      if (distance(sk.nodes[k].position, c) <= tol) return static_cast<int>(k);
    }
    sk.nodes.push_back({c, t, {}});
    return static_cast<int>(sk.nodes.size() - 1);
  };

  std::set<std::pair<int, int>> links;
  auto link = [&](int a, int b) {
    if (a != b) links.insert({std::min(a, b), std::max(a, b)});
  };

  for (int i = 0; i < n; ++i) schedule(i);
  int active = n;
  while (active > 3) {
    if (queue.empty())
      throw Error(ErrorCode::InternalInvariantViolation, "wavefront stalled before collapsing");
    const Event ev = queue.top();
    queue.pop();
    if (collapse[ev.edge] >= 0 || ev.version != version[ev.edge]) continue;
    const int i = ev.edge, p = prev[i], q = next[i];
    Point c;
    double t;
    equidistant_point(poly.edge_line(p), poly.edge_line(i), poly.edge_line(q), c, t);
    now = std::max(now, t);
    const int node = node_at(c, t);

    link(origin[i], node);
    link(origin[q], node);
    collapse[i] = node;
    right_chain[p].push_back(node);
    left_chain[q].push_back(node);
    next[p] = q;
    prev[q] = p;
    origin[q] = node;
    ++version[p];
    ++version[q];
    --active;
    schedule(p);
    schedule(q);
  }

  // The last three edges collapse together at their common inscribed centre.
  {
    int a = 0;
    while (collapse[a] >= 0) ++a;
    const int b = next[a], c3 = next[b];
    Point c;
    double t;
    if (!equidistant_point(poly.edge_line(a), poly.edge_line(b), poly.edge_line(c3), c, t))
      throw Error(ErrorCode::InternalInvariantViolation, "final wavefront triangle is degenerate");
    const int node = node_at(c, std::max(now, t));
    for (int e : {a, b, c3}) {
      link(origin[e], node);
      collapse[e] = node;
    }
  }

  sk.edges.assign(links.begin(), links.end());

  for (std::size_t k = sk.vertex_count; k < sk.nodes.size(); ++k) {
    SkeletonNode& node = sk.nodes[k];
    for (int e = 0; e < n; ++e)
      if (std::abs(poly.edge_line(e).signed_distance(node.position) - node.radius) <= tol)
        node.tangent_edges.push_back(e);
  }

  sk.faces.resize(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> ring;
    auto add = [&](int node) {
      if (ring.empty() || ring.back() != node) ring.push_back(node);
    };
    add(i);
    for (int node : right_chain[i]) add(node);
    add(collapse[i]);
    for (auto it = left_chain[i].rbegin(); it != left_chain[i].rend(); ++it) add(*it);
    while (ring.size() > 1 && ring.back() == ring.front()) ring.pop_back();
    sk.faces[i] = std::move(ring);
  }
  return sk;
}

bool EventCircle::tangent_to(int edge) const {
  return std::binary_search(tangent_edges.begin(), tangent_edges.end(), edge);
}

std::vector<EventCircle> event_circles(const StraightSkeleton& skeleton) {
  std::vector<EventCircle> circles;
  for (std::size_t k = skeleton.vertex_count; k < skeleton.nodes.size(); ++k) {
    const SkeletonNode& node = skeleton.nodes[k];
    circles.push_back({node.position, node.radius, node.tangent_edges});
  }
  return circles;
}

ArcCountPrediction predict_arc_count(const std::vector<EventCircle>& circles, std::size_t n_edges,
                                     Point f, double tol) {
  std::vector<char> hit(n_edges, 0);
  bool inside_any = false;
  for (const EventCircle& c : circles) {
    const double gap = distance(f, c.center) - c.radius;
    if (std::abs(gap) <= tol)
      throw Error(ErrorCode::BoundaryAmbiguous, "focus lies on an event circle");
    if (gap < 0.0) {
      inside_any = true;
      for (int e : c.tangent_edges) {
        if (e < 0 || static_cast<std::size_t>(e) >= n_edges)
          throw Error(ErrorCode::InvalidArgument, "tangent edge index out of range");
        hit[e] = 1;
      }
    }
  }
  ArcCountPrediction out;
  if (!inside_any) {
    out.count = 2;
    return out;
  }
  for (std::size_t e = 0; e < n_edges; ++e)
    if (hit[e]) out.edges.push_back(static_cast<int>(e));
  out.count = static_cast<int>(out.edges.size());
  return out;
}

std::vector<int> faces_containing(const StraightSkeleton& skeleton, const SafeRegion& region) {
  constexpr int kSamplesPerArc = 64;
  constexpr double kMaxInset = 1e-6;
  const Point f = region.focus();

  std::vector<Point> samples{f};
  for (std::size_t a = 0; a < region.size(); ++a) {
    const QuadBezier b = region.bezier(a);
    // Pull samples towards the focus by a small fraction of the arc's own
    // extent so that very short arcs keep their samples in their own face.
    const double reach = std::max(distance(b.at(0.5), f), std::numeric_limits<double>::min());
    const double inset = std::min(kMaxInset, 1e-3 * distance(b.start, b.end) / reach);
    for (int s = 0; s < kSamplesPerArc; ++s) {
      const Point on_arc = b.at((s + 0.5) / kSamplesPerArc);
      samples.push_back(f + (1.0 - inset) * (on_arc - f));
    }
  }

  // Depth of p in a convex face: smallest signed distance to its sides.
  auto depth = [&](std::size_t face, Point p) {
    const std::vector<int>& ring = skeleton.faces[face];
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < ring.size(); ++k) {
      const Point a = skeleton.nodes[ring[k]].position;
      const Point b = skeleton.nodes[ring[(k + 1) % ring.size()]].position;
      if (a == b) continue;
      d = std::min(d, DirectedLine::through(a, b).signed_distance(p));
    }
    return d;
  };

  std::set<int> found;
  for (const Point& p : samples) {
    int best = -1;
    double best_depth = -std::numeric_limits<double>::infinity();
    for (std::size_t face = 0; face < skeleton.faces.size(); ++face) {
      const double d = depth(face, p);
      if (d > best_depth) {
        best_depth = d;
        best = static_cast<int>(face);
      }
    }
    if (best >= 0) found.insert(best);
  }
  return {found.begin(), found.end()};
}

}  // namespace foldsafe
