#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foldsafe/geometry.hpp"
#include "foldsafe/safe_region.hpp"
#include "foldsafe/skeleton.hpp"

namespace foldsafe {

struct Instance {
  ConvexPolygon polygon;
  Point focus;
};

// {"vertices": [[x, y], ...], "focus": [x, y],
//  "tolerance": {"eps_abs": a, "eps_rel": r}}   (tolerance optional)
//
// Throws ParseError for malformed documents, InvalidPolygon when the vertices
// do not form a strictly convex polygon and FocusNotStrictlyInterior.
Instance parse_instance(std::string_view text, const std::optional<Tolerance>& override = {});
std::string serialize_instance(const Instance& instance);

struct RegionArcDoc {
  int edge_index = -1;
  Point left;
  Point right;
  Point bezier_control;
  friend bool operator==(const RegionArcDoc&, const RegionArcDoc&) = default;
};

struct RegionDoc {
  std::vector<RegionArcDoc> arcs;
  int arc_count = 0;
  double area = 0.0;
  // Absent when the focus sits on an event circle.
  std::optional<int> predicted_count;
  std::vector<int> contributing_edges;

  friend bool operator==(const RegionDoc&, const RegionDoc&) = default;
};

RegionDoc make_region_doc(const SafeRegion& region, const std::optional<ArcCountPrediction>& prediction);
std::string region_doc_to_json(const RegionDoc& doc, int indent = 2);
RegionDoc parse_region_doc(std::string_view text);

}  // namespace foldsafe
