#pragma once

#include "invol/linalg2.hpp"

namespace invol {

/// Axis-aligned window sampled by a grid_n x grid_n lattice including the
/// boundary. Every certificate in this library is qualified by the window it
/// was computed on.
struct Region {
  double x_min = -5.0;
  double x_max = 5.0;
  double y_min = -5.0;
  double y_max = 5.0;
  int grid_n = 41;

  /// Throws ConfigurationError unless x_min < x_max, y_min < y_max, grid_n >= 2.
  void validate() const;

  /// Node (i, j), i along x, j along y. Row-major iteration is j outer, i inner.
  Point node(int i, int j) const;
  int node_count() const { return grid_n * grid_n; }
  Point node(int k) const { return node(k % grid_n, k / grid_n); }

  double dx() const { return (x_max - x_min) / (grid_n - 1); }
  double dy() const { return (y_max - y_min) / (grid_n - 1); }
  double diameter() const;
  bool contains(Point p, double slack = 0.0) const;

  Region with_grid(int n) const {
    Region r = *this;
    r.grid_n = n;
    return r;
  }

  friend bool operator==(const Region&, const Region&) = default;
};

}  // namespace invol
