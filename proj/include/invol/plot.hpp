#pragma once

#include <iosfwd>
#include <vector>

#include "invol/foliation.hpp"
#include "invol/involution.hpp"
#include "invol/region.hpp"

namespace invol {

/// Columns leaf_id, leaf_parameter, point_index, x, y, residual. A truncated
/// leaf ends with a marker row: point_index -1, the failing iterate as x, y
/// and the inversion residual.
void write_leaf_csv(std::ostream& os, const std::vector<Leaf>& leaves);

/// Self-contained SVG whose viewBox is the window (y axis pointing up): one
/// polyline per leaf, a circle per fixed point, and the window frame.
void write_svg(std::ostream& os, const Region& window, const std::vector<Leaf>& leaves,
               const std::vector<FixedPoint>& fixed_points);

}  // namespace invol
