#include "ust/svg.hpp"

#include <sstream>

namespace ust {

std::string render_diamond_svg(const UnifiedSegmentTree& tree) {
  const TreeStats stats = tree.stats();
  const std::uint32_t lx = tree.coords().levels(Axis::X);
  const std::uint32_t ly = tree.coords().levels(Axis::Y);

  // Unit (a, b) sits at diamond column b - a and row a + b; cells tile
  // edge to edge.
  const double half_w = 58.0;
  const double half_h = 34.0;
  const double margin = 24.0;
  const double origin_x = margin + static_cast<double>(lx) * half_w + half_w;
  const double origin_y = margin + half_h;
  const double width = 2 * margin + static_cast<double>(lx + ly) * half_w + 2 * half_w;
  const double height = 2 * margin + static_cast<double>(lx + ly) * half_h + 2 * half_h;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << " <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"#ffffff\"/>\n";
  for (const UnitStats& unit : stats.units) {
    const double cx = origin_x +
                      (static_cast<double>(unit.y_level) - static_cast<double>(unit.x_level)) *
                          half_w;
    const double cy = origin_y + static_cast<double>(unit.x_level + unit.y_level) * half_h;
    out << " <polygon points=\"" << cx << "," << (cy - half_h) << " " << (cx + half_w) << ","
        << cy << " " << cx << "," << (cy + half_h) << " " << (cx - half_w) << "," << cy
        << "\" fill=\"" << (unit.nodes ? "#dbeafe" : "#f3f4f6")
        << "\" stroke=\"#374151\" stroke-width=\"1\"/>\n";
    out << " <text x=\"" << cx << "\" y=\"" << (cy - 6)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\" "
           "fill=\"#6b7280\">"
        << unit.x_level << "," << unit.y_level << "</text>\n";
    out << " <text x=\"" << cx << "\" y=\"" << (cy + 10)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\" "
           "fill=\"#111827\">"
        << unit.nodes << " / " << unit.stored << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ust
