#pragma once

#include <cstdint>
#include <random>

#include "foldsafe/geometry.hpp"

namespace foldsafe {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Random convex polygon with n vertices (Valtr's construction), scaled into the
// unit square. Deterministic per seed; draws that fail validation are
// redrawn from the same stream.
ConvexPolygon random_convex_polygon(int n, std::uint64_t seed, const Tolerance& tolerance = {});

// Regular n-gon with the given circumradius centred at `centre`.
ConvexPolygon regular_polygon(int n, double radius = 1.0, Point centre = {}, double phase = 0.0,
                              const Tolerance& tolerance = {});

// Uniform point at least `margin` (relative to the polygon scale) inside
// every edge line.
Point random_interior_point(const ConvexPolygon& poly, std::mt19937_64& rng, double margin = 1e-6);

}  // namespace foldsafe
