#pragma once

#include <string>
#include <vector>

#include "invol/linalg2.hpp"
#include "invol/planar_map.hpp"
#include "invol/region.hpp"

namespace invol {

struct InvolutionVerdict {
  double max_residual = 0.0;
  bool pass = false;
  Point worst_point;
};

/// max over grid nodes of |phi(phi(p)) - p| / (1 + |p|), compared with tol.
InvolutionVerdict verify_involution(const PlanarMap& map, const Region& region, double tol);

enum class Orientation { Preserving, Reversing };

struct OrientationClass {
  Orientation kind = Orientation::Preserving;
  double min_abs_det = 0.0;
};

/// Sign of det Dphi over every grid node. Throws DegeneracyError with a
/// witness when signs are mixed or |det| <= 1e-12 somewhere.
OrientationClass orientation(const PlanarMap& map, const Region& region);

enum class FixClass { FixPlus, FixMinus, Curve, Unclassified };

struct FixedPoint {
  Point location;
  FixClass classification = FixClass::Unclassified;
  Mat2 jacobian;
};

struct FixedPointSet {
  std::vector<FixedPoint> points;
  /// Enough seeds converged to distinct roots that the fixed set is taken to
  /// be one-dimensional (or larger).
  bool curve = false;
  int seeds = 0;
  int converged = 0;
  /// Seeds where Dphi - I vanished before convergence.
  int skipped_singular = 0;
  int diverged = 0;
};

constexpr double kDefaultClassTol = 1e-6;

/// Damped Newton on phi(p) - p seeded from every grid node. Rank-deficient
/// Jacobians (fixed curves) use the minimum-norm least-squares step. Roots are
/// merged within 1e-6 * region diameter and classified.
FixedPointSet find_fixed_points(const PlanarMap& map, const Region& region, double newton_tol = 1e-10,
                                int max_iter = 60, double class_tol = kDefaultClassTol);

/// FixPlus / FixMinus by the Dphi = +-I test when det Dphi(p) > 0;
/// Unclassified for orientation-reversing maps and for points passing neither.
FixClass classify_fixed_point(const PlanarMap& map, Point p, double class_tol = kDefaultClassTol);

std::string to_string(Orientation o);
std::string to_string(FixClass c);

}  // namespace invol
