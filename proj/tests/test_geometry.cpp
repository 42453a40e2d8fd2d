#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "fixtures.hpp"
#include "foldsafe/error.hpp"
#include "foldsafe/geometry.hpp"

using namespace foldsafe;

namespace {

ErrorCode error_of(std::vector<Point> pts) {
  try {
    normalize_polygon(pts);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalInvariantViolation;
}

}  // namespace

TEST_CASE("clockwise input is reoriented") {
  const ConvexPolygon p = normalize_polygon(std::vector<Point>{{0, 0}, {3.3, 3}, {5, 0}});
  REQUIRE(p.size() == 3);
  CHECK(p.vertex(0) == Point{0, 0});
  CHECK(p.vertex(1) == Point{5, 0});
  CHECK(p.vertex(2) == Point{3.3, 3});
  CHECK(p.area() == doctest::Approx(7.5));
}

TEST_CASE("invalid vertex lists are rejected with the matching code") {
  CHECK(error_of({{0, 0}, {1, 0}}) == ErrorCode::TooFewVertices);
  CHECK(error_of({{0, 0}, {1, 0}, {2, 0}, {1, 1}}) == ErrorCode::CollinearVertices);
  CHECK(error_of({{0, 0}, {1, 1}, {1, 0}, {0, 1}}) == ErrorCode::NotConvex);
  CHECK(error_of({{0, 0}, {1, 0}, {NAN, 1}}) == ErrorCode::NonFinite);
  CHECK(error_of({{0, 0}, {1, 0}, {1, 0}, {0, 1}}) == ErrorCode::CollinearVertices);
  // Reflex vertex.
  CHECK(error_of({{0, 0}, {2, 0}, {1, 0.5}, {2, 1}, {0, 1}}) == ErrorCode::NotConvex);
  // Star pentagon winds twice.
  std::vector<Point> star;
  for (int k = 0; k < 5; ++k) {
    const double a = 2 * std::numbers::pi * (2 * k) / 5;
    star.push_back({std::cos(a), std::sin(a)});
  }
  CHECK(error_of(star) == ErrorCode::NotConvex);
}

TEST_CASE("tolerance scales with the bounding box") {
  const ConvexPolygon small = fixtures::unit_square();
  CHECK(small.tol() == doctest::Approx(1e-9));
  const ConvexPolygon big =
      normalize_polygon(std::vector<Point>{{0, 0}, {1e5, 0}, {1e5, 1e5}, {0, 1e5}});
  CHECK(big.tol() == doctest::Approx(1e-12 * std::sqrt(2.0) * 1e5));
  CHECK_THROWS_AS(Tolerance({-1.0, 1e-12}).validate(), Error);
}

TEST_CASE("signed distance to edge lines") {
  const ConvexPolygon sq = fixtures::unit_square();
  CHECK(signed_distance_to_edge_line(sq, 0, {0.5, 0.5}) == doctest::Approx(0.5));
  CHECK(signed_distance_to_edge_line(sq, 0, {0.25, -2}) == doctest::Approx(-2));
  for (std::size_t i = 0; i < sq.size(); ++i) {
    const Point mid = 0.5 * (sq.edge_start(i) + sq.edge_end(i));
    CHECK(std::abs(signed_distance_to_edge_line(sq, i, mid)) < 1e-15);
    CHECK(std::abs(signed_distance_to_edge_line(sq, i, sq.edge_start(i) + 7.0 * (sq.edge_end(i) - sq.edge_start(i)))) <
          1e-14);
  }
  // Pentagon edge v2v3 against the focus, by the two-point line formula.
  const ConvexPolygon pent = fixtures::pentagon();
  const double dx = 2.568 - 0.180, dy = 0.198 - 2.124;
  const double expected = ((1.824 - 2.124) * dx - (1.428 - 0.180) * dy) / std::sqrt(dx * dx + dy * dy);
  CHECK(signed_distance_to_edge_line(pent, 1, fixtures::pentagon_focus) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected > 0);
}

TEST_CASE("strict interior test") {
  const ConvexPolygon sq = fixtures::unit_square();
  CHECK(strictly_inside(sq, {0.5, 0.5}));
  CHECK_FALSE(strictly_inside(sq, {0, 0}));
  CHECK_FALSE(strictly_inside(sq, {0.5, 0}));
  CHECK_FALSE(strictly_inside(sq, {0.5, 1e-10}));
  CHECK(strictly_inside(sq, {0.5, 1e-8}));
  CHECK_FALSE(strictly_inside(sq, {1.5, 0.5}));
  CHECK(strictly_inside(fixtures::pentagon(), fixtures::pentagon_focus));
}

TEST_CASE("polygon measures") {
  const ConvexPolygon tri = fixtures::triangle();
  CHECK(tri.perimeter() == doctest::Approx(5 + std::hypot(3.3, 3) + std::hypot(1.7, 3)));
  const Point c = tri.centroid();
  CHECK(c.x == doctest::Approx(8.3 / 3));
  CHECK(c.y == doctest::Approx(1.0));
  CHECK(signed_area(std::vector<Point>{{0, 0}, {0, 1}, {1, 0}}) == doctest::Approx(-0.5));
}

TEST_CASE("huge regular polygons still validate") {
  const int n = 200000;
  std::vector<Point> v;
  for (int k = 0; k < n; ++k) {
    const double a = 2 * std::numbers::pi * k / n;
    v.push_back({std::cos(a), std::sin(a)});
  }
  CHECK(normalize_polygon(v).size() == static_cast<std::size_t>(n));
}
