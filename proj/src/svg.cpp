#include "foldsafe/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "foldsafe/oracle.hpp"

namespace foldsafe {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string xy(Point p) { return num(p.x) + " " + num(p.y); }

struct Canvas {
  double scale = 1.0;
  double width = 0.0, height = 0.0;
  Point lo, hi;
  double margin = 0.0;
};

Canvas make_canvas(const ConvexPolygon& poly, const SvgOptions& options) {
  Canvas c;
  c.lo = poly.bbox_min();
  c.hi = poly.bbox_max();
  c.margin = options.margin_px;
  const double span_x = std::max(c.hi.x - c.lo.x, 1e-300);
  c.scale = (options.width_px - 2.0 * options.margin_px) / span_x;
  c.width = options.width_px;
  c.height = (c.hi.y - c.lo.y) * c.scale + 2.0 * options.margin_px;
  return c;
}

void open_document(std::ostringstream& out, const Canvas& c) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(c.width)
      << "\" height=\"" << num(c.height) << "\" viewBox=\"0 0 " << num(c.width) << " "
      << num(c.height) << "\">\n";
  // Plane y points up; SVG y points down.
  out << "<g transform=\"matrix(" << num(c.scale) << " 0 0 " << num(-c.scale) << " "
      << num(c.margin - c.lo.x * c.scale) << " " << num(c.margin + c.hi.y * c.scale) << ")\">\n";
}

void close_document(std::ostringstream& out) { out << "</g>\n</svg>\n"; }

void polygon_path(std::ostringstream& out, const ConvexPolygon& poly, double stroke) {
  out << "<path id=\"polygon\" fill=\"none\" stroke=\"black\" stroke-width=\"" << num(stroke)
      << "\" d=\"";
  for (std::size_t i = 0; i < poly.size(); ++i) out << (i ? " L " : "M ") << xy(poly.vertex(i));
  out << " Z\"/>\n";
}

void circles_group(std::ostringstream& out, const std::vector<EventCircle>& circles, double stroke) {
  if (circles.empty()) return;
  out << "<g id=\"event-circles\" fill=\"none\" stroke=\"#d97706\" stroke-width=\"" << num(stroke)
      << "\">\n";
  for (const EventCircle& c : circles)
    out << "<circle cx=\"" << num(c.center.x) << "\" cy=\"" << num(c.center.y) << "\" r=\""
        << num(c.radius) << "\"/>\n";
  out << "</g>\n";
}

const char* count_colour(int count) {
  switch (count) {
    case 2: return "#fed7aa";
    case 3: return "#99f6e4";
    case 4: return "#bfdbfe";
    case 5: return "#ffffff";
    case 6: return "#fecaca";
    default: return "#e9d5ff";
  }
}

}  // namespace

std::string region_to_svg(const SafeRegion& region, const SvgOptions& options) {
  const ConvexPolygon& poly = region.polygon();
  const Canvas c = make_canvas(poly, options);
  const double stroke = 1.0 / c.scale;
  std::ostringstream out;
  open_document(out, c);

  if (options.creases > 0) {
    out << "<g id=\"creases\" stroke=\"#9ca3af\" stroke-width=\"" << num(0.5 * stroke) << "\">\n";
    const double reach = poly.scale();
    for (const CreaseLine& cr : sample_creases(poly, region.focus(), options.creases)) {
      const Point a = cr.line.origin - reach * cr.line.direction;
      const Point b = cr.line.origin + reach * cr.line.direction;
      out << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
          << "\" y2=\"" << num(b.y) << "\"/>\n";
    }
    out << "</g>\n";
  }

  out << "<path id=\"region\" fill=\"#bfdbfe\" fill-opacity=\"0.6\" stroke=\"#1d4ed8\" "
         "stroke-width=\""
      << num(stroke) << "\" d=\"M " << xy(region.arcs().front().left.position);
  for (std::size_t a = 0; a < region.size(); ++a) {
    const QuadBezier b = region.bezier(a);
    out << " Q " << xy(b.control) << " " << xy(b.end);
  }
  out << " Z\"/>\n";

  polygon_path(out, poly, stroke);
  circles_group(out, options.circles, stroke);
  out << "<circle id=\"focus\" cx=\"" << num(region.focus().x) << "\" cy=\"" << num(region.focus().y)
      << "\" r=\"" << num(3.0 * stroke) << "\" fill=\"black\"/>\n";
  close_document(out);
  return out.str();
}

std::string atlas_to_svg(const ConvexPolygon& poly, const std::vector<EventCircle>& circles, int cells,
                         const SvgOptions& options) {
  if (cells < 1) throw Error(ErrorCode::InvalidArgument, "atlas needs at least one cell");
  const Canvas c = make_canvas(poly, options);
  const double stroke = 1.0 / c.scale;
  std::ostringstream out;
  open_document(out, c);

  const double dx = (c.hi.x - c.lo.x) / cells, dy = (c.hi.y - c.lo.y) / cells;
  out << "<g id=\"atlas\" stroke=\"none\">\n";
  for (int iy = 0; iy < cells; ++iy) {
    for (int ix = 0; ix < cells; ++ix) {
      const Point centre{c.lo.x + (ix + 0.5) * dx, c.lo.y + (iy + 0.5) * dy};
      if (!strictly_inside(poly, centre)) continue;
      const char* colour = "#6b7280";
      int count = 0;
      try {
        count = predict_arc_count(circles, poly.size(), centre, poly.tol()).count;
        colour = count_colour(count);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BoundaryAmbiguous) throw;
      }
      out << "<rect x=\"" << num(centre.x - 0.5 * dx) << "\" y=\"" << num(centre.y - 0.5 * dy)
          << "\" width=\"" << num(dx) << "\" height=\"" << num(dy) << "\" fill=\"" << colour
          << "\" data-count=\"" << count << "\"/>\n";
    }
  }
  out << "</g>\n";
  polygon_path(out, poly, stroke);
  circles_group(out, circles, stroke);
  close_document(out);
  return out.str();
}

}  // namespace foldsafe
