#include "invol/region.hpp"

#include <cmath>

#include "invol/errors.hpp"

namespace invol {

void Region::validate() const {
  if (!(x_min < x_max) || !(y_min < y_max)) throw ConfigurationError("region bounds must satisfy min < max");
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(y_min) || !std::isfinite(y_max))
    throw ConfigurationError("region bounds must be finite");
  if (grid_n < 2) throw ConfigurationError("region grid must have at least 2 samples per axis");
}

Point Region::node(int i, int j) const {
  // Endpoints are hit exactly so that boundary nodes never drift outside.
  const double x = i == grid_n - 1 ? x_max : x_min + i * dx();
  const double y = j == grid_n - 1 ? y_max : y_min + j * dy();
  return {x, y};
}

double Region::diameter() const { return std::hypot(x_max - x_min, y_max - y_min); }

bool Region::contains(Point p, double slack) const {
  return p.x >= x_min - slack && p.x <= x_max + slack && p.y >= y_min - slack && p.y <= y_max + slack;
}

}  // namespace invol
