#pragma once

#include <optional>
#include <utility>

#include "invol/linalg2.hpp"
#include "invol/planar_map.hpp"
#include "invol/region.hpp"

namespace invol {

/// h = (I + L phi) / 2 with L = Dphi(0), the candidate conjugacy between an
/// involution fixing the origin and its linear part.
class StandardMap {
 public:
  /// Throws PreconditionError when |phi(0)| > 1e-9 (recenter the map first).
  explicit StandardMap(PlanarMap involution);

  const PlanarMap& involution() const { return phi_; }
  const Mat2& linear_part() const { return linear_; }

  Point operator()(Point p) const;
  /// Dh(p) = (I + L Dphi(p)) / 2 assembled from Dphi(p).
  Jet evaluate_with_jacobian(Point p) const;

  /// h as a standalone PlanarMap. For expression-backed phi this is a new
  /// expression tree, so its Jacobian comes from propagation through the
  /// composed tree rather than from the assembled formula above.
  const PlanarMap& as_map() const { return as_map_; }

 private:
  PlanarMap phi_;
  Mat2 linear_;
  PlanarMap as_map_;
};

inline StandardMap standard_map(const PlanarMap& map) { return StandardMap(map); }

/// g = L + phi, so that h = L g / 2.
PlanarMap auxiliary_map(const StandardMap& h);

/// |h(phi(p)) - L h(p)| / (1 + |p|).
double conjugacy_residual(const StandardMap& h, Point p);

enum class InjectivityStatus { NoCollisionFound, Collision };

struct InjectivityCertificate {
  InjectivityStatus status = InjectivityStatus::NoCollisionFound;
  std::optional<std::pair<Point, Point>> witness;
  /// Spatial-hash cells probed.
  long long cells_checked = 0;
};

constexpr int kDefaultScanN = 201;
constexpr double kDefaultCollisionTol = 1e-6;

/// Samples `map` on a scan_n x scan_n grid, hashes images into square cells
/// of side collision_tol and searches each 3x3 block for a pair with image
/// distance <= collision_tol and preimage distance >= separation_min.
/// Grid order is fixed, so the result (witness included) is deterministic.
InjectivityCertificate injectivity_scan(const PlanarMap& map, const Region& region, int scan_n,
                                        double collision_tol, double separation_min);
InjectivityCertificate injectivity_scan(const StandardMap& h, const Region& region, int scan_n = kDefaultScanN,
                                        double collision_tol = kDefaultCollisionTol,
                                        std::optional<double> separation_min = std::nullopt);

/// Max over grid nodes of the set distance between Spc(Dg(p)) = Spc(-I + Dphi(p))
/// and Spc(Dphi(p)) - 1. Requires Dphi(0) = -I within 1e-9, otherwise throws
/// NotApplicableError.
double spectrum_shift_check(const PlanarMap& map, const Region& region);

struct JacobianBounds {
  double min_trace = 0.0;
  double min_det = 0.0;
};

/// Minimum of Trace(Dh) and Det(Dh) over the grid.
JacobianBounds theorem_B_jacobian_check(const StandardMap& h, const Region& region);

std::string to_string(InjectivityStatus s);

}  // namespace invol
