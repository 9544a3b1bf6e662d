#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <utility>
#include <vector>

#include "invol/linalg2.hpp"
#include "invol/planar_map.hpp"
#include "invol/region.hpp"

namespace testing {

using invol::Mat2;
using invol::Point;

inline std::vector<Point> random_points(const invol::Region& r, int count, unsigned seed = 20261016u) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(r.x_min, r.x_max);
  std::uniform_real_distribution<double> uy(r.y_min, r.y_max);
  std::vector<Point> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    const double x = ux(rng);
    out.push_back({x, uy(rng)});
  }
  return out;
}

inline std::vector<Mat2> random_matrices(int count, double bound = 10.0, unsigned seed = 7u) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-bound, bound);
  std::vector<Mat2> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    Mat2 m;
    m.a11 = u(rng);
    m.a12 = u(rng);
    m.a21 = u(rng);
    m.a22 = u(rng);
    out.push_back(m);
  }
  return out;
}

/// Central differences with step h in each coordinate.
inline Mat2 fd_jacobian(const invol::PlanarMap& map, Point p, double h = 1e-6) {
  const Point fx = (1.0 / (2.0 * h)) * (map({p.x + h, p.y}) - map({p.x - h, p.y}));
  const Point fy = (1.0 / (2.0 * h)) * (map({p.x, p.y + h}) - map({p.x, p.y - h}));
  return {fx.x, fy.x, fx.y, fy.y};
}

/// Entrywise deviation scaled by max(1, largest entry of the reference).
inline double relative_deviation(const Mat2& got, const Mat2& want) {
  return invol::max_abs(got - want) / std::max(1.0, invol::max_abs(want));
}

/// Roots of z^2 - tr z + det computed in long double.
inline std::pair<std::complex<long double>, std::complex<long double>> roots_long(const Mat2& m) {
  const long double tr = static_cast<long double>(m.a11) + m.a22;
  const long double det = static_cast<long double>(m.a11) * m.a22 - static_cast<long double>(m.a12) * m.a21;
  const std::complex<long double> d = std::sqrt(std::complex<long double>(tr * tr - 4.0L * det, 0.0L));
  return {(tr - d) / 2.0L, (tr + d) / 2.0L};
}

/// |z^2 - tr z + det| / (1 + |z|^2).
inline double charpoly_residual(const Mat2& m, std::complex<double> z) {
  const std::complex<long double> w(z.real(), z.imag());
  const long double tr = static_cast<long double>(m.a11) + m.a22;
  const long double det = static_cast<long double>(m.a11) * m.a22 - static_cast<long double>(m.a12) * m.a21;
  const long double scale = 1.0L + std::norm(w);
  return static_cast<double>(std::abs(w * w - tr * w + det) / scale);
}

}  // namespace testing
