#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "foldsafe/error.hpp"

namespace foldsafe {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

// Points double as free vectors.
using Vec2 = Point;

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
// Counter-clockwise quarter turn.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Line through `origin` with unit `direction`; the interior side is the left.
struct DirectedLine {
  Point origin;
  Vec2 direction;

  static DirectedLine through(Point a, Point b);

  Vec2 left_normal() const { return perp(direction); }
  // Positive on the interior (left) side.
  double signed_distance(Point p) const { return cross(direction, p - origin); }
  Point project(Point p) const { return origin + dot(p - origin, direction) * direction; }
};

// Tolerance policy shared by every predicate: a length comparison at
// characteristic scale L uses max(eps_abs, eps_rel * L). eps_rel on its own is
// also the threshold for dimensionless (sine-of-angle) tests.
struct Tolerance {
  double eps_abs = 1e-9;
  double eps_rel = 1e-12;

  double at_scale(double scale) const;
  void validate() const;
};

enum class Containment { Inside, Boundary, Outside };

// Strictly convex polygon with counter-clockwise vertices. Edge i joins
// vertex i and vertex i+1 (circularly). Copies share the vertex storage.
class ConvexPolygon {
 public:
  std::size_t size() const { return data_->vertices.size(); }
  std::span<const Point> vertices() const { return data_->vertices; }
  Point vertex(std::size_t i) const { return data_->vertices[i % size()]; }
  Point edge_start(std::size_t i) const { return vertex(i); }
  Point edge_end(std::size_t i) const { return vertex(i + 1); }
  DirectedLine edge_line(std::size_t i) const { return data_->lines[i]; }

  const Tolerance& tolerance() const { return data_->tolerance; }
  // Bounding-box diagonal.
  double scale() const { return data_->scale; }
  // Effective length tolerance for this polygon.
  double tol() const { return data_->tol; }

  double area() const;
  double perimeter() const;
  Point centroid() const;
  Point bbox_min() const { return data_->bbox_min; }
  Point bbox_max() const { return data_->bbox_max; }

  // Same vertices, different tolerance policy.
  ConvexPolygon with_tolerance(const Tolerance& tolerance) const;

 private:
  struct Data {
    std::vector<Point> vertices;
    std::vector<DirectedLine> lines;
    Tolerance tolerance;
    Point bbox_min, bbox_max;
    double scale = 0.0;
    double tol = 0.0;
  };

  explicit ConvexPolygon(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static ConvexPolygon build(std::vector<Point> ccw, const Tolerance& tolerance);

  std::shared_ptr<const Data> data_;

  friend ConvexPolygon normalize_polygon(std::span<const Point>, const Tolerance&);
};

// Validates and orients the input. Clockwise input is reversed around its
// first vertex, which stays first. Collinear consecutive vertices and
// non-convex or self-crossing chains are rejected.
ConvexPolygon normalize_polygon(std::span<const Point> points, const Tolerance& tolerance = {});

double signed_distance_to_edge_line(const ConvexPolygon& poly, std::size_t edge, Point p);

// True iff p is farther than the polygon tolerance from every edge line,
// on the interior side.
bool strictly_inside(const ConvexPolygon& poly, Point p);

double signed_area(std::span<const Point> points);

}  // namespace foldsafe
