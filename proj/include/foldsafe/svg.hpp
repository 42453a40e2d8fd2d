#pragma once

#include <string>
#include <vector>

#include "foldsafe/geometry.hpp"
#include "foldsafe/safe_region.hpp"
#include "foldsafe/skeleton.hpp"

namespace foldsafe {

struct SvgOptions {
  double width_px = 800.0;
  double margin_px = 20.0;
  // Number of sampled creases drawn under the region; 0 draws none.
  int creases = 0;
  // Event circles to overlay, if any.
  std::vector<EventCircle> circles;
};

// Polygon, focus and region in one SVG 1.1 document. Geometry is written in
// plane coordinates under a single flipping transform; every arc is one
// quadratic Bezier ("Q") segment of the path with id "region".
std::string region_to_svg(const SafeRegion& region, const SvgOptions& options = {});

// Colour map of the predicted arc count over a cells x cells grid covering the
// polygon, with the event circles drawn on top.
std::string atlas_to_svg(const ConvexPolygon& poly, const std::vector<EventCircle>& circles, int cells,
                         const SvgOptions& options = {});

}  // namespace foldsafe
