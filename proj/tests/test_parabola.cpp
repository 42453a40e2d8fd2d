#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "foldsafe/error.hpp"
#include "foldsafe/parabola.hpp"

using namespace foldsafe;

namespace {

// y = x^2: focus (0, 1/4), directrix y = -1/4.
Parabola upright_unit() { return Parabola::from_directrix({0, 0.25}, {{0, -0.25}, {1, 0}}); }

bool near(Point a, Point b, double eps) { return distance(a, b) <= eps; }

}  // namespace

TEST_CASE("vertex is halfway between focus and directrix") {
  const Parabola p = Parabola::from_directrix({0, 1}, {{0, 0.25}, {1, 0}});
  CHECK(p.focal_distance == doctest::Approx(0.75));
  CHECK(near(p.vertex(), {0, 0.625}, 1e-15));
  CHECK(p.directional_angle == doctest::Approx(-std::numbers::pi / 2));

  const ConvexPolygon sq = fixtures::unit_square();
  const Parabola bottom = parabola_from_edge({0.5, 0.5}, sq, 0);
  CHECK(bottom.focal_distance == doctest::Approx(0.5));
  CHECK(near(bottom.vertex(), {0.5, 0.25}, 1e-15));
  CHECK(bottom.edge_index == 0);
}

TEST_CASE("focus on the directrix is rejected") {
  const ConvexPolygon sq = fixtures::unit_square();
  try {
    parabola_from_edge({0.5, 0}, sq, 0);
    FAIL("expected FocusOnDirectrix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FocusOnDirectrix);
  }
}

TEST_CASE("parabolic half-plane membership") {
  const ConvexPolygon sq = fixtures::unit_square();
  const Parabola p = parabola_from_edge({0.5, 0.5}, sq, 0);
  CHECK(halfplane_contains(p, p.focus) == Containment::Inside);
  CHECK(halfplane_contains(p, p.vertex()) == Containment::Boundary);
  CHECK(halfplane_contains(p, {0.5, 0}) == Containment::Outside);
  CHECK(halfplane_contains(p, {0.5, 0.25 + 1e-6}) == Containment::Inside);
  CHECK(halfplane_contains(p, {0.5, 0.25 - 1e-6}) == Containment::Outside);
}

TEST_CASE("square junctions lie on the diagonal") {
  const ConvexPolygon sq = fixtures::unit_square();
  const Point f{0.5, 0.5};
  const Parabola bottom = parabola_from_edge(f, sq, 0);
  const Parabola left = parabola_from_edge(f, sq, 3);
  // x = (x - 1/2)^2 + 1/4 on y = x.
  const double h = std::sqrt(2.0) / 2;
  const auto [q_left_bottom, q_bottom_left] = intersect_parabolas(left, bottom);
  CHECK(near(q_left_bottom.position, {1 - h, 1 - h}, 1e-12));
  CHECK(q_left_bottom.first == 3);
  CHECK(q_left_bottom.second == 0);
  CHECK(near(q_bottom_left.position, {1 + h, 1 + h}, 1e-12));

  const auto [a, b] = intersect_parabolas(bottom, left);
  CHECK(near(a.position, q_bottom_left.position, 1e-12));
  CHECK(near(b.position, q_left_bottom.position, 1e-12));
  CHECK(a.first == 0);
  CHECK(a.second == 3);
}

TEST_CASE("pentagon junction matches the bisector root") {
  const ConvexPolygon pent = fixtures::pentagon();
  const Point f = fixtures::pentagon_focus;
  const auto [q01, q10] = intersect_parabolas(parabola_from_edge(f, pent, 0), parabola_from_edge(f, pent, 1));
  CHECK(near(q01.position, {1.007, 2.114}, 0.05));
  const Point independent = fixtures::bisector_junction({pent.vertex(0), pent.vertex(1)},
                                                        {pent.vertex(1), pent.vertex(2)}, f, {1.0, 2.1});
  CHECK(near(q01.position, independent, 1e-9));
  // Both points sit on each curve and on the bisector.
  for (const Junction& q : {q01, q10}) {
    const double d0 = fixtures::line_distance(pent.vertex(0), pent.vertex(1), q.position);
    const double d1 = fixtures::line_distance(pent.vertex(1), pent.vertex(2), q.position);
    CHECK(std::abs(d0 - d1) < 1e-9 * std::max(1.0, distance(q.position, f)));
    CHECK(std::abs(d0 - distance(q.position, f)) < 1e-9 * std::max(1.0, distance(q.position, f)));
  }
}

TEST_CASE("parallel directrices with the same direction are rejected") {
  const Parabola a = Parabola::from_directrix({0, 0}, {{0, -1}, {1, 0}});
  const Parabola b = Parabola::from_directrix({0, 0}, {{0, -2}, {1, 0}});
  try {
    intersect_parabolas(a, b);
    FAIL("expected SameDirectionalAngle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SameDirectionalAngle);
  }
  const Parabola c = Parabola::from_directrix({1, 0}, {{0, -2}, {1, 0}});
  CHECK_THROWS_AS(intersect_parabolas(a, c), Error);
}

TEST_CASE("opposite parallel directrices meet on the midline") {
  const Parabola below = Parabola::from_directrix({0, 0}, {{0, -1}, {1, 0}});
  const Parabola above = Parabola::from_directrix({0, 0}, {{0, 3}, {-1, 0}});
  const auto [q, r] = intersect_parabolas(below, above);
  CHECK(q.position.y == doctest::Approx(1.0));
  CHECK(r.position.y == doctest::Approx(1.0));
  CHECK(std::abs(q.position.x) == doctest::Approx(std::sqrt(3.0)));
  CHECK(q.position.x > r.position.x);
}

TEST_CASE("arc classification on y = x^2") {
  const Parabola p = upright_unit();
  const std::pair<Point, Point> split{{-1, 1}, {1, 1}};
  CHECK(classify_on_arc(p, split, {-2, 4}) == ArcClass::LeftArc);
  CHECK(classify_on_arc(p, split, {0, 0}) == ArcClass::CentralArc);
  CHECK(classify_on_arc(p, split, {3, 9}) == ArcClass::RightArc);
  CHECK(classify_on_arc(p, split, {1, 1}) == ArcClass::CentralArc);
  try {
    classify_on_arc(p, split, {0, 1});
    FAIL("expected PointNotOnParabola");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PointNotOnParabola);
  }
}

TEST_CASE("parameter round trip") {
  const Parabola p = upright_unit();
  CHECK(near(point_at_param(p, 0), p.vertex(), 1e-15));
  CHECK(near(point_at_param(p, 0.5), {0.5, 0.25}, 1e-15));

  const Parabola bottom = parabola_from_edge({0.5, 0.5}, fixtures::unit_square(), 0);
  CHECK(std::abs(param_of_point(bottom, {0, 0.5})) == doctest::Approx(0.5));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k < 1000; ++k) {
    const double ang = 3.2 * u(rng);
    const Vec2 dir{std::cos(ang), std::sin(ang)};
    const Point f{5 * u(rng), 5 * u(rng)};
    const double r = 0.01 + std::abs(3 * u(rng));
    const Parabola q = Parabola::from_directrix(f, {f - r * perp(dir), dir});
    const double t = 10 * u(rng);
    const Point x = point_at_param(q, t);
    CHECK(q.on_curve(x));
    CHECK(param_of_point(q, x) == doctest::Approx(t).epsilon(1e-9).scale(1));
  }
}

TEST_CASE("tangent and polar radius") {
  const Parabola p = upright_unit();
  const Vec2 tan = p.tangent_at(1.0);
  CHECK(tan.y / tan.x == doctest::Approx(2.0));
  // Along the axis, away from the directrix, the ray never meets the curve.
  CHECK(p.polar_radius(std::numbers::pi / 2) > 1e12);
  CHECK(p.polar_radius(-std::numbers::pi / 2) == doctest::Approx(0.25));
  CHECK(p.polar_radius(0) == doctest::Approx(0.5));
}
