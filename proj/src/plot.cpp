#include "invol/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>

namespace invol {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Evenly spaced hues so neighbouring leaves are distinguishable.
std::string leaf_color(std::size_t k, std::size_t count) {
  const int hue = count == 0 ? 0 : static_cast<int>(300.0 * static_cast<double>(k) / static_cast<double>(count));
  return "hsl(" + std::to_string(hue) + ",70%,40%)";
}

}  // namespace

void write_leaf_csv(std::ostream& os, const std::vector<Leaf>& leaves) {
  os << "leaf_id,leaf_parameter,point_index,x,y,residual\n";
  for (std::size_t id = 0; id < leaves.size(); ++id) {
    const Leaf& leaf = leaves[id];
    for (std::size_t k = 0; k < leaf.points.size(); ++k) {
      os << id << ',' << fmt(leaf.parameter) << ',' << k << ',' << fmt(leaf.points[k].x) << ','
         << fmt(leaf.points[k].y) << ',' << fmt(leaf.point_residuals[k]) << '\n';
    }
    if (leaf.truncated) {
      os << id << ',' << fmt(leaf.parameter) << ",-1," << fmt(leaf.failure_point.x) << ','
         << fmt(leaf.failure_point.y) << ',' << fmt(leaf.failure_residual) << '\n';
    }
  }
}

void write_svg(std::ostream& os, const Region& w, const std::vector<Leaf>& leaves,
               const std::vector<FixedPoint>& fixed_points) {
  const double width = w.x_max - w.x_min;
  const double height = w.y_max - w.y_min;
  const double stroke = 0.002 * std::max(width, height);
  // SVG y grows downwards; plot (x, -y) so the viewBox spans [-y_max, -y_min].
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << short_fmt(w.x_min) << ' ' << short_fmt(-w.y_max)
     << ' ' << short_fmt(width) << ' ' << short_fmt(height) << "\" width=\"800\" height=\""
     << static_cast<int>(800.0 * height / width) << "\">\n";
  os << "  <rect x=\"" << short_fmt(w.x_min) << "\" y=\"" << short_fmt(-w.y_max) << "\" width=\"" << short_fmt(width)
     << "\" height=\"" << short_fmt(height) << "\" fill=\"white\" stroke=\"black\" stroke-width=\"" << short_fmt(2 * stroke)
     << "\"/>\n";
  for (std::size_t id = 0; id < leaves.size(); ++id) {
    const Leaf& leaf = leaves[id];
    if (leaf.points.empty()) continue;
    os << "  <polyline class=\"leaf" << (leaf.truncated ? " truncated" : "") << "\" data-leaf=\"" << id
       << "\" data-parameter=\"" << short_fmt(leaf.parameter) << "\" fill=\"none\" stroke=\""
       << leaf_color(id, leaves.size()) << "\" stroke-width=\"" << short_fmt(stroke) << "\" points=\"";
    for (std::size_t k = 0; k < leaf.points.size(); ++k) {
      if (k) os << ' ';
      os << short_fmt(leaf.points[k].x) << ',' << short_fmt(-leaf.points[k].y);
    }
    os << "\"/>\n";
  }
  for (const FixedPoint& fp : fixed_points) {
    os << "  <circle class=\"fixed-point\" cx=\"" << short_fmt(fp.location.x) << "\" cy=\"" << short_fmt(-fp.location.y)
       << "\" r=\"" << short_fmt(3 * stroke) << "\" fill=\"crimson\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace invol
