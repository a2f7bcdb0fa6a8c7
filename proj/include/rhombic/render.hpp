#pragma once

// SVG drawings of tilings. Label i is drawn as the unit vector at angle
// pi - (2i-1)pi/(2n), so the sides 1..n trace half of a regular 2n-gon from
// C^0 at the bottom, bulging to the left. A vertex S sits at the sum of the
// directions of its labels. Geometry is only used here.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rhombic/bott_samelson.hpp"
#include "rhombic/error.hpp"
#include "rhombic/label_set.hpp"
#include "rhombic/tiling.hpp"
#include "rhombic/zonotopal.hpp"

namespace rhombic {

struct Point {
  double x = 0;
  double y = 0;
};

class PolygonGeometry {
 public:
  explicit PolygonGeometry(int n) : n_(n) {
    if (n < 1) throw InvalidInput("geometry rank must be positive");
  }

  int rank() const { return n_; }

  double angle(int label) const {
    return std::numbers::pi - (2.0 * label - 1.0) * std::numbers::pi / (2.0 * n_);
  }

  Point direction(int label) const { return {std::cos(angle(label)), std::sin(angle(label))}; }

 private:
  int n_;
};

inline Point vertex_position(LabelSet s, const PolygonGeometry& g) {
  Point p;
  for (int label : s.members()) {
    const Point d = g.direction(label);
    p.x += d.x;
    p.y += d.y;
  }
  return p;
}

/// Corner positions of a tile, in the order of ZonoTile::corners().
inline std::vector<Point> tile_corners(const ZonoTile& tile, const PolygonGeometry& g) {
  std::vector<Point> out;
  for (LabelSet v : tile.corners()) out.push_back(vertex_position(v, g));
  return out;
}

struct RenderSpec {
  double scale = 60.0;  // pixels per unit edge
  bool show_vertex_labels = true;
  std::optional<Coloring> coloring;
  std::string light_fill = "#f6ecd2";
  std::string dark_fill = "#4f6d8f";
};

namespace detail {

inline std::string tile_fill(int order) {
  switch (order) {
    case 2: return "#ffffff";
    case 3: return "#dbe7f0";
    case 4: return "#f2d7d5";
    default: return "#e4ecd9";
  }
}

inline std::string fixed(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(3);
  s << (std::abs(v) < 5e-4 ? 0.0 : v);
  return s.str();
}

inline std::string render(const ZonoTiling& z, const RenderSpec& spec, const std::vector<std::string>& fills) {
  if (!(spec.scale > 0)) throw InvalidInput("render scale must be positive");
  const PolygonGeometry g(z.rank());
  const std::vector<LabelSet> outline = boundary_vertices(z.w);

  double min_x = std::numeric_limits<double>::max(), max_x = std::numeric_limits<double>::lowest();
  double min_y = min_x, max_y = max_x;
  for (LabelSet v : vertices_of(z)) {
    const Point p = vertex_position(v, g);
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double margin = 0.6;
  const double width = (max_x - min_x + 2 * margin) * spec.scale;
  const double height = (max_y - min_y + 2 * margin) * spec.scale;
  auto sx = [&](const Point& p) { return (p.x - min_x + margin) * spec.scale; };
  auto sy = [&](const Point& p) { return (max_y - p.y + margin) * spec.scale; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed(width)
      << "\" height=\"" << fixed(height) << "\" viewBox=\"0 0 " << fixed(width) << ' ' << fixed(height) << "\">\n"
      << "<g stroke=\"#000000\" stroke-width=\"1.5\" stroke-linejoin=\"round\">\n";
  std::size_t k = 0;
  for (const ZonoTile& tile : z.tiles) {
    out << "<polygon fill=\"" << fills[k++] << "\" points=\"";
    bool first = true;
    for (const Point& p : tile_corners(tile, g)) {
      out << (first ? "" : " ") << fixed(sx(p)) << ',' << fixed(sy(p));
      first = false;
    }
    out << "\"/>\n";
  }
  out << "</g>\n";
  if (spec.show_vertex_labels) {
    out << "<g font-family=\"serif\" font-size=\"" << fixed(spec.scale * 0.28) << "\" text-anchor=\"middle\">\n";
    const int n = z.rank();
    for (std::size_t j = 0; j < outline.size(); ++j) {
      const Point p = vertex_position(outline[j], g);
      const bool left = static_cast<int>(j) <= n;
      const int index = left ? static_cast<int>(j) : static_cast<int>(j) - n;
      const double dx = (left ? -0.3 : 0.3) * spec.scale;
      out << "<text x=\"" << fixed(sx(p) + dx) << "\" y=\"" << fixed(sy(p) + 0.1 * spec.scale) << "\">"
          << (left ? "C" : "G") << "<tspan font-size=\"" << fixed(spec.scale * 0.2) << "\" baseline-shift=\""
          << (left ? "super" : "sub") << "\">" << index << "</tspan></text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace detail

inline std::string render_svg(const ZonoTiling& z, const RenderSpec& spec = {}) {
  if (spec.coloring) {
    if (!is_rhombic(z)) throw InvalidInput("colorings apply to rhombic tilings only");
    const RhombicTiling t = as_rhombic(z);
    if (spec.coloring->shade.size() != t.tiles.size()) throw InvalidInput("coloring does not match tiling");
    std::vector<std::string> fills;
    for (const ZonoTile& tile : z.tiles) {
      const std::vector<int> pair = tile.labels.members();
      auto it = spec.coloring->shade.find(Rhombus{pair[0], pair[1], tile.base});
      if (it == spec.coloring->shade.end()) throw InvalidInput("coloring does not match tiling");
      fills.push_back(it->second == Shade::dark ? spec.dark_fill : spec.light_fill);
    }
    return detail::render(z, spec, fills);
  }
  std::vector<std::string> fills;
  for (const ZonoTile& tile : z.tiles) fills.push_back(detail::tile_fill(tile.order()));
  return detail::render(z, spec, fills);
}

inline std::string render_svg(const RhombicTiling& t, const RenderSpec& spec = {}) {
  return render_svg(as_zonotopal(t), spec);
}

}  // namespace rhombic
