#include "invol/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "invol/errors.hpp"

namespace invol {

namespace {

constexpr double kInvolutionTol = 1e-9;

Point unit_column(const Mat2& m) {
  const Point c1{m.a11, m.a21};
  const Point c2{m.a12, m.a22};
  const Point v = norm(c1) >= norm(c2) ? c1 : c2;
  return (1.0 / norm(v)) * v;
}

double angle_between(Point a, Point b) {
  return std::abs(std::remainder(std::atan2(a.y, a.x) - std::atan2(b.y, b.x), 2.0 * std::numbers::pi));
}

Point canonical_target(const CanonicalFoliation& fol, double parameter, double t) {
  const Mat2 s_inv = fol.change_of_basis.inverse();
  if (fol.kind == FoliationKind::Radial) return s_inv * Point{t * std::cos(parameter), t * std::sin(parameter)};
  return s_inv * Point{parameter, t};
}

/// Position along the canonical leaf of an h-plane point (radius or second
/// S-coordinate).
double canonical_position(const CanonicalFoliation& fol, Point w) {
  const Point s = fol.change_of_basis * w;
  return fol.kind == FoliationKind::Radial ? norm(s) : s.y;
}

struct March {
  const StandardMap& h;
  const CanonicalFoliation& fol;
  double parameter;
  const Region& region;
  const TraceOptions& opt;
  Leaf& leaf;

  /// Returns the accepted points in marching order (start excluded).
  std::vector<Point> run(Point start, double t_start, double direction, double t_floor) {
    std::vector<Point> out;
    Point p = start;
    double t = t_start;
    double step = opt.step;
    int halvings = 0;
    while (static_cast<int>(out.size()) < opt.max_points) {
      const double t_next = t + direction * step;
      if (t_next < t_floor) break;
      const Point w = canonical_target(fol, parameter, t);
      const Point w_next = canonical_target(fol, parameter, t_next);
      Point guess = p;
      try {
        guess = p + h.evaluate_with_jacobian(p).jacobian.inverse() * (w_next - w);
      } catch (const SingularMatrixError&) {
      }
      try {
        const Point q = invert_standard_map(h, w_next, guess, opt.newton_tol);
        if (!region.contains(q)) break;
        out.push_back(q);
        p = q;
        t = t_next;
        if (step < opt.step) step = std::min(opt.step, 2.0 * step);
        halvings = 0;
      } catch (const InversionError& e) {
        if (halvings < opt.max_halvings) {
          step *= 0.5;
          ++halvings;
          continue;
        }
        leaf.truncated = true;
        leaf.diagnostic = e.what();
        leaf.failure_point = e.last_iterate();
        leaf.failure_residual = e.residual();
        break;
      }
    }
    return out;
  }
};

}  // namespace

std::string to_string(FoliationKind k) { return k == FoliationKind::Radial ? "radial" : "vertical"; }

CanonicalFoliation diagonalize_involution(const Mat2& l) {
  if (!is_linear_involution(l, kInvolutionTol)) throw PreconditionError("matrix is not a linear involution");
  const Mat2 id = Mat2::identity();
  if (max_abs(l - id) <= kInvolutionTol)
    throw NotApplicableError("identity involution has no canonical foliation of this kind");
  if (max_abs(l + id) <= kInvolutionTol) return {FoliationKind::Radial, id};
  // (L + I)/2 and (I - L)/2 project onto the +1 and -1 eigenspaces.
  const Point plus = unit_column(0.5 * (l + id));
  const Point minus = unit_column(0.5 * (id - l));
  const Mat2 s_inv{plus.x, minus.x, plus.y, minus.y};
  return {FoliationKind::Vertical, s_inv.inverse()};
}

Point invert_standard_map(const StandardMap& h, Point target, Point guess, double tol, int max_iter) {
  Point p = guess;
  Point r = h(p) - target;
  for (int iter = 0;; ++iter) {
    const double rn = norm(r);
    if (rn <= tol) return p;
    if (!std::isfinite(rn)) throw InversionError(p, rn, "standard map inversion produced a non-finite residual");
    if (iter >= max_iter) throw InversionError(p, rn, "standard map inversion did not converge");
    Mat2 inv;
    try {
      inv = h.evaluate_with_jacobian(p).jacobian.inverse();
    } catch (const SingularMatrixError&) {
      throw InversionError(p, rn, "singular Dh during standard map inversion");
    }
    const Point step = -(inv * r);
    double t = 1.0;
    Point trial = p + step;
    Point rt = h(trial) - target;
    while (!(norm(rt) < rn) && t > 1.0 / 256.0) {
      t *= 0.5;
      trial = p + t * step;
      rt = h(trial) - target;
    }
    if (!(norm(rt) < rn)) throw InversionError(p, rn, "standard map inversion stalled");
    p = trial;
    r = rt;
  }
}

double leaf_residual(const StandardMap& h, const CanonicalFoliation& fol, double parameter, Point p) {
  const Point s = fol.change_of_basis * h(p);
  if (fol.kind == FoliationKind::Vertical) return std::abs(s.x - parameter);
  if (norm(s) == 0.0) return std::numbers::pi;
  return angle_between(s, {std::cos(parameter), std::sin(parameter)});
}

Leaf trace_leaf(const StandardMap& h, const CanonicalFoliation& fol, double parameter, const Region& region,
                const TraceOptions& options) {
  region.validate();
  if (!(options.step > 0.0)) throw ConfigurationError("continuation step must be positive");
  Leaf leaf;
  leaf.parameter = parameter;

  Point start;
  double t_start = 0.0;
  const bool from_origin = fol.kind == FoliationKind::Radial && region.contains({0.0, 0.0});
  if (from_origin) {
    t_start = options.start_radius;
    const Point w = canonical_target(fol, parameter, t_start);
    try {
      start = invert_standard_map(h, w, w, options.newton_tol);
    } catch (const InversionError& e) {
      leaf.truncated = true;
      leaf.diagnostic = e.what();
      leaf.failure_point = e.last_iterate();
      leaf.failure_residual = e.residual();
      return leaf;
    }
  } else {
    // Seed from the window sample lying closest to the leaf.
    double best = INFINITY;
    Point seed;
    for (int k = 0; k < region.node_count(); ++k) {
      const Point p = region.node(k);
      const double r = leaf_residual(h, fol, parameter, p);
      if (r < best) {
        best = r;
        seed = p;
      }
    }
    t_start = canonical_position(fol, h(seed));
    if (fol.kind == FoliationKind::Radial) t_start = std::max(t_start, options.start_radius);
    try {
      start = invert_standard_map(h, canonical_target(fol, parameter, t_start), seed, options.newton_tol);
    } catch (const InversionError& e) {
      leaf.truncated = true;
      leaf.diagnostic = e.what();
      leaf.failure_point = e.last_iterate();
      leaf.failure_residual = e.residual();
      return leaf;
    }
  }
  if (!region.contains(start)) return leaf;

  March march{h, fol, parameter, region, options, leaf};
  const double floor = fol.kind == FoliationKind::Radial ? options.start_radius : -INFINITY;
  std::vector<Point> backward;
  if (!from_origin) backward = march.run(start, t_start, -1.0, floor);
  const std::vector<Point> forward = march.run(start, t_start, 1.0, floor);

  leaf.points.assign(backward.rbegin(), backward.rend());
  leaf.points.push_back(start);
  leaf.points.insert(leaf.points.end(), forward.begin(), forward.end());
  leaf.point_residuals.reserve(leaf.points.size());
  for (const Point& p : leaf.points) {
    const double r = leaf_residual(h, fol, parameter, p);
    leaf.point_residuals.push_back(r);
    leaf.residual = std::max(leaf.residual, r);
  }
  return leaf;
}

double leaf_invariance_check(const PlanarMap& map, const StandardMap& h, const CanonicalFoliation& fol,
                             const Leaf& leaf) {
  double worst = 0.0;
  for (const Point& q : leaf.points) {
    const Point hq = fol.change_of_basis * h(q);
    const Point hpq = fol.change_of_basis * h(map(q));
    if (fol.kind == FoliationKind::Vertical) {
      worst = std::max(worst, std::abs(hpq.x - hq.x));
    } else if (norm(hq) >= 1e-6) {
      worst = std::max(worst, angle_between(hpq, -hq));
    }
  }
  return worst;
}

std::vector<double> default_leaf_parameters(const StandardMap& h, const CanonicalFoliation& fol,
                                            const Region& region, int count) {
  if (count < 1) throw ConfigurationError("leaf count must be positive");
  std::vector<double> out;
  out.reserve(count);
  if (fol.kind == FoliationKind::Radial) {
    for (int k = 0; k < count; ++k) out.push_back(2.0 * std::numbers::pi * k / count);
    return out;
  }
  double lo = INFINITY;
  double hi = -INFINITY;
  for (int k = 0; k < region.node_count(); ++k) {
    const double c = (fol.change_of_basis * h(region.node(k))).x;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  for (int k = 0; k < count; ++k) out.push_back(lo + (k + 1) * (hi - lo) / (count + 1));
  return out;
}

}  // namespace invol
