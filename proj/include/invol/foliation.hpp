#pragma once

#include <string>
#include <vector>

#include "invol/linalg2.hpp"
#include "invol/linearize.hpp"
#include "invol/planar_map.hpp"
#include "invol/region.hpp"

namespace invol {

enum class FoliationKind { Radial, Vertical };

std::string to_string(FoliationKind k);

/// Canonical foliation of a linear involution L != I: rays when L = -I,
/// lines {first S-coordinate = c} when L is conjugate to diag(1, -1).
/// S L S^-1 is diagonal.
struct CanonicalFoliation {
  FoliationKind kind = FoliationKind::Radial;
  Mat2 change_of_basis;
};

/// Throws NotApplicableError for L = I and PreconditionError when L is not an
/// involution within 1e-9. In the vertical case S^-1 has unit columns, the
/// +1 eigenvector first.
CanonicalFoliation diagonalize_involution(const Mat2& l);

/// Damped Newton for h(p) = target starting from `guess`. Throws
/// InversionError (with the last iterate) on divergence or singular Dh.
Point invert_standard_map(const StandardMap& h, Point target, Point guess, double tol = 1e-10, int max_iter = 50);

struct Leaf {
  /// Ray angle (radial) or first S-coordinate c (vertical).
  double parameter = 0.0;
  std::vector<Point> points;
  /// Leaf-equation residual per polyline point.
  std::vector<double> point_residuals;
  double residual = 0.0;
  bool truncated = false;
  /// Set when truncated: why tracing stopped and the failing iterate.
  std::string diagnostic;
  Point failure_point;
  double failure_residual = 0.0;
};

struct TraceOptions {
  double step = 1e-2;
  double start_radius = 1e-3;
  int max_halvings = 10;
  int max_points = 200000;
  double newton_tol = 1e-10;
};

/// Predictor-corrector continuation: marches along the canonical leaf in the
/// h-plane and pulls each target back through invert_standard_map, seeded by
/// the previous preimage plus the tangent predictor. Stops when the preimage
/// leaves `region`.
Leaf trace_leaf(const StandardMap& h, const CanonicalFoliation& fol, double parameter, const Region& region,
                const TraceOptions& options = {});

/// Leaf-equation residual of one point: |pi1(S h(p)) - c| or the angular
/// distance between S h(p) and the ray.
double leaf_residual(const StandardMap& h, const CanonicalFoliation& fol, double parameter, Point p);

/// Vertical: max |pi1(S h(phi(q))) - pi1(S h(q))|. Radial: max angle between
/// h(phi(q)) and -h(q), over points with |h(q)| >= 1e-6.
double leaf_invariance_check(const PlanarMap& map, const StandardMap& h, const CanonicalFoliation& fol,
                             const Leaf& leaf);

/// `count` evenly spread leaf parameters: angles 2 pi k / count for rays,
/// interior points of the range of pi1(S h) over the window for lines.
std::vector<double> default_leaf_parameters(const StandardMap& h, const CanonicalFoliation& fol,
                                            const Region& region, int count);

constexpr int kDefaultRadialLeaves = 24;
constexpr int kDefaultVerticalLeaves = 21;

}  // namespace invol
