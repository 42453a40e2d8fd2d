#include "foldsafe/instance_io.hpp"

#include <json.hpp>

namespace foldsafe {

using nlohmann::json;

namespace {

Point to_point(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorCode::ParseError, std::string(what) + " must be a [x, y] pair of numbers");
  return {j[0].get<double>(), j[1].get<double>()};
}

json from_point(Point p) { return json::array({p.x, p.y}); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

Instance parse_instance(std::string_view text, const std::optional<Tolerance>& override) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "instance must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error(ErrorCode::ParseError, "missing \"vertices\" array");
  if (!doc.contains("focus")) throw Error(ErrorCode::ParseError, "missing \"focus\"");

  std::vector<Point> vertices;
  for (const json& v : doc["vertices"]) vertices.push_back(to_point(v, "vertex"));
  const Point focus = to_point(doc["focus"], "focus");

  Tolerance tolerance;
  if (doc.contains("tolerance")) {
    const json& t = doc["tolerance"];
    if (!t.is_object()) throw Error(ErrorCode::ParseError, "\"tolerance\" must be an object");
    try {
      tolerance.eps_abs = t.value("eps_abs", tolerance.eps_abs);
      tolerance.eps_rel = t.value("eps_rel", tolerance.eps_rel);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }
  if (override) tolerance = *override;

  std::optional<ConvexPolygon> polygon;
  try {
    polygon = normalize_polygon(vertices, tolerance);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) throw;
    throw Error(ErrorCode::InvalidPolygon, e.what());
  }
  if (!is_finite(focus) || !strictly_inside(*polygon, focus))
    throw Error(ErrorCode::FocusNotStrictlyInterior, "focus must lie strictly inside the polygon");
  return {*polygon, focus};
}

std::string serialize_instance(const Instance& instance) {
  json doc;
  json vertices = json::array();
  for (const Point& v : instance.polygon.vertices()) vertices.push_back(from_point(v));
  doc["vertices"] = std::move(vertices);
  doc["focus"] = from_point(instance.focus);
  doc["tolerance"] = {{"eps_abs", instance.polygon.tolerance().eps_abs},
                      {"eps_rel", instance.polygon.tolerance().eps_rel}};
  return doc.dump(2);
}

RegionDoc make_region_doc(const SafeRegion& region, const std::optional<ArcCountPrediction>& prediction) {
  RegionDoc doc;
  for (std::size_t a = 0; a < region.size(); ++a) {
    const ParabolaArc& arc = region.arcs()[a];
    doc.arcs.push_back({arc.edge_index, arc.left.position, arc.right.position, region.bezier(a).control});
  }
  doc.arc_count = static_cast<int>(region.size());
  doc.area = region.area();
  if (prediction) doc.predicted_count = prediction->count;
  doc.contributing_edges = region.edge_set();
  return doc;
}

std::string region_doc_to_json(const RegionDoc& doc, int indent) {
  json j;
  json arcs = json::array();
  for (const RegionArcDoc& a : doc.arcs)
    arcs.push_back({{"edge_index", a.edge_index},
                    {"left", from_point(a.left)},
                    {"right", from_point(a.right)},
                    {"bezier_control", from_point(a.bezier_control)}});
  j["arcs"] = std::move(arcs);
  j["arc_count"] = doc.arc_count;
  j["area"] = doc.area;
  j["predicted_count"] = doc.predicted_count ? json(*doc.predicted_count) : json(nullptr);
  j["contributing_edges"] = doc.contributing_edges;
  return j.dump(indent);
}

RegionDoc parse_region_doc(std::string_view text) {
  const json j = parse_json(text);
  RegionDoc doc;
  try {
    for (const json& a : j.at("arcs"))
      doc.arcs.push_back({a.at("edge_index").get<int>(), to_point(a.at("left"), "left"),
                          to_point(a.at("right"), "right"),
                          to_point(a.at("bezier_control"), "bezier_control")});
    doc.arc_count = j.at("arc_count").get<int>();
    doc.area = j.at("area").get<double>();
    if (!j.at("predicted_count").is_null()) doc.predicted_count = j["predicted_count"].get<int>();
    doc.contributing_edges = j.at("contributing_edges").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return doc;
}

}  // namespace foldsafe
