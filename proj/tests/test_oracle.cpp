#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "foldsafe/error.hpp"
#include "foldsafe/generate.hpp"
#include "foldsafe/oracle.hpp"
#include "foldsafe/safe_region.hpp"

using namespace foldsafe;

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("oracle edge sets on the reference instances") {
  CHECK(oracle_contributing_edges(fixtures::triangle(), fixtures::triangle_f3) == std::vector<int>{0, 1, 2});
  CHECK(oracle_contributing_edges(fixtures::triangle(), fixtures::triangle_f2) == std::vector<int>{0, 2});
  CHECK(oracle_contributing_edges(fixtures::unit_square(), {0.5, 0.5}) == std::vector<int>{0, 1, 2, 3});
  const SafeRegion pent = compute_safe_region(fixtures::pentagon(), fixtures::pentagon_focus);
  CHECK(oracle_contributing_edges(fixtures::pentagon(), fixtures::pentagon_focus) == sorted(pent.edge_set()));
  CHECK_THROWS_AS(oracle_contributing_edges(fixtures::unit_square(), {0.5, 0.5}, 50), Error);
}

TEST_CASE("finer sampling never loses an edge") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const ConvexPolygon poly = random_convex_polygon(3 + static_cast<int>(s % 30), s + 5);
    std::mt19937_64 rng(s);
    const Point f = random_interior_point(poly, rng, 1e-3);
    const auto coarse = oracle_contributing_edges(poly, f, 128);
    const auto fine = oracle_contributing_edges(poly, f, 256);
    for (int e : coarse) CHECK(std::find(fine.begin(), fine.end(), e) != fine.end());
  }
}

TEST_CASE("crease through the foot of the focus is parallel to that edge") {
  const ConvexPolygon pent = fixtures::pentagon();
  const Point f = fixtures::pentagon_focus;
  for (std::size_t e = 0; e < pent.size(); ++e) {
    const Point foot = pent.edge_line(e).project(f);
    const CreaseLine c = crease_through(foot, f, static_cast<int>(e));
    CHECK(std::abs(cross(c.line.direction, pent.edge_line(e).direction)) < 1e-12);
    CHECK(c.clearance(f) > 0);
    CHECK(std::abs(c.clearance(0.5 * (foot + f))) < 1e-12);
  }
}

TEST_CASE("mirrored boundary points give mirrored creases") {
  const Point f{0.5, 0.5};
  const auto creases = sample_creases(fixtures::unit_square(), f, 40);
  REQUIRE(creases.size() == 40);
  // Spacing 0.1 along the perimeter from (0, 0); point k on the bottom edge
  // mirrors point 10 - k on the same edge about x = 1/2.
  for (int k = 1; k < 10; ++k) {
    const CreaseLine& a = creases[k];
    const CreaseLine& b = creases[10 - k];
    CHECK(a.boundary_point.x == doctest::Approx(1 - b.boundary_point.x));
    // Mirror a's line through x = 1/2 and compare with b.
    const Point pa = a.line.origin, da = a.line.direction;
    const Point mirrored{1 - pa.x, pa.y};
    CHECK(std::abs(b.line.signed_distance(mirrored)) < 1e-12);
    CHECK(std::abs(cross(b.line.direction, Point{-da.x, da.y})) < 1e-12);
  }
  CHECK_THROWS_AS(sample_creases(fixtures::unit_square(), f, 0), Error);
}

TEST_CASE("every crease supports its edge's parabola") {
  const ConvexPolygon pent = fixtures::pentagon();
  const Point f = fixtures::pentagon_focus;
  for (const CreaseLine& c : sample_creases(pent, f, 500)) {
    REQUIRE(c.edge >= 0);
    const Parabola p = parabola_from_edge(f, pent, static_cast<std::size_t>(c.edge));
    // Point of the curve straight above u.
    const Vec2 n = pent.edge_line(c.edge).left_normal();
    const Vec2 uf = f - c.boundary_point;
    const double s = dot(uf, uf) / (2 * dot(n, uf));
    const Point touch = c.boundary_point + s * n;
    CHECK(std::abs(p.excess(touch)) < 1e-9);
    CHECK(std::abs(c.clearance(touch)) < 1e-9);
    // The rest of the curve stays on the focus side.
    const double t0 = p.param(touch);
    double lowest = 1e300;
    for (int k = -200; k <= 200; ++k) lowest = std::min(lowest, c.clearance(p.point_at(t0 + 0.05 * k)));
    CHECK(lowest > -1e-9);
    CHECK(lowest < 1e-9);
  }
}

TEST_CASE("verification report on the square") {
  const ConvexPolygon sq = fixtures::unit_square();
  const SafeRegion r = compute_safe_region(sq, {0.5, 0.5});
  const OracleReport rep = verify_instance(sq, {0.5, 0.5}, r, 2000, 10000);
  CHECK(rep.contributing_edges == std::vector<int>{0, 1, 2, 3});
  CHECK(rep.membership_agreement >= 0.999);
  CHECK(rep.membership_agreement <= 1.0);
  CHECK(rep.compared_points > 3'900'000);
  CHECK(rep.min_crease_clearance >= -sq.tol());
  CHECK(rep.area_estimate == doctest::Approx(r.area()).epsilon(1e-3));
}

TEST_CASE("verification report on the two-arc triangle") {
  const ConvexPolygon tri = fixtures::triangle();
  const SafeRegion r = compute_safe_region(tri, fixtures::triangle_f2);
  const OracleReport rep = verify_instance(tri, fixtures::triangle_f2, r, 300, 2000);
  CHECK(rep.contributing_edges == std::vector<int>{0, 2});
  CHECK(rep.membership_agreement >= 0.999);
  CHECK(rep.min_crease_clearance >= -tri.tol());
  CHECK(std::isfinite(rep.area_estimate));
}

TEST_CASE("region samples stay inside the region") {
  const ConvexPolygon pent = fixtures::pentagon();
  const SafeRegion r = compute_safe_region(pent, fixtures::pentagon_focus);
  const auto v = fixtures::vertex_list(pent);
  for (Point p : region_samples(r, 32)) CHECK(fixtures::region_slack(v, fixtures::pentagon_focus, p) > -1e-9);
}
