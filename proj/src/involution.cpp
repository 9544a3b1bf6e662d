#include "invol/involution.hpp"

#include <algorithm>
#include <cmath>

#include "invol/errors.hpp"

namespace invol {

std::string to_string(Orientation o) { return o == Orientation::Preserving ? "preserving" : "reversing"; }

std::string to_string(FixClass c) {
  switch (c) {
    case FixClass::FixPlus: return "fix_plus";
    case FixClass::FixMinus: return "fix_minus";
    case FixClass::Curve: return "curve";
    case FixClass::Unclassified: return "unclassified";
  }
  return "unclassified";
}

InvolutionVerdict verify_involution(const PlanarMap& map, const Region& region, double tol) {
  region.validate();
  if (!(tol > 0.0)) throw ConfigurationError("involution tolerance must be positive");
  InvolutionVerdict v;
  v.max_residual = -1.0;
  for (int k = 0; k < region.node_count(); ++k) {
    const Point p = region.node(k);
    Point pp;
    try {
      pp = map(map(p));
    } catch (const EvaluationError& e) {
      throw EvaluationError(p, std::string("involution check failed: ") + e.what() + "; grid point");
    }
    const double r = norm(pp - p) / (1.0 + norm(p));
    if (!(r <= v.max_residual)) {
      v.max_residual = r;
      v.worst_point = p;
    }
  }
  v.pass = v.max_residual <= tol;
  return v;
}

OrientationClass orientation(const PlanarMap& map, const Region& region) {
  region.validate();
  OrientationClass out;
  double sign = 0.0;
  out.min_abs_det = INFINITY;
  for (int k = 0; k < region.node_count(); ++k) {
    const Point p = region.node(k);
    const double d = map.evaluate_with_jacobian(p).jacobian.det();
    if (!(std::abs(d) > 1e-12)) throw DegeneracyError(p, d, "Jacobian determinant vanishes");
    const double s = d > 0.0 ? 1.0 : -1.0;
    if (sign == 0.0) sign = s;
    else if (s != sign) throw DegeneracyError(p, d, "Jacobian determinant changes sign");
    out.min_abs_det = std::min(out.min_abs_det, std::abs(d));
  }
  out.kind = sign > 0.0 ? Orientation::Preserving : Orientation::Reversing;
  return out;
}

FixClass classify_fixed_point(const PlanarMap& map, Point p, double class_tol) {
  const Mat2 j = map.evaluate_with_jacobian(p).jacobian;
  if (!(j.det() > 0.0)) return FixClass::Unclassified;
  if (max_abs(j - Mat2::identity()) <= class_tol) return FixClass::FixPlus;
  if (max_abs(j + Mat2::identity()) <= class_tol) return FixClass::FixMinus;
  return FixClass::Unclassified;
}

namespace {

enum class NewtonOutcome { Converged, Singular, Diverged };

struct NewtonResult {
  NewtonOutcome outcome;
  Point root;
};

NewtonResult newton_fixed_point(const PlanarMap& map, Point seed, double tol, int max_iter) {
  Point p = seed;
  auto residual = [&](Point q) { return map(q) - q; };
  Point f = residual(p);
  for (int iter = 0; iter <= max_iter; ++iter) {
    const double fn = norm(f);
    if (fn <= tol) return {NewtonOutcome::Converged, p};
    if (iter == max_iter) break;

    const Mat2 j = map.evaluate_with_jacobian(p).jacobian - Mat2::identity();
    const double scale = max_abs(j);
    if (!(scale > 1e-12)) return {NewtonOutcome::Singular, p};

    Point step;
    if (std::abs(j.det()) > 1e-10 * scale * scale) {
      step = -(j.inverse() * f);
    } else {
      // Rank one: minimum-norm least-squares step J^T f / |J|_F^2.
      const double fro2 = j.a11 * j.a11 + j.a12 * j.a12 + j.a21 * j.a21 + j.a22 * j.a22;
      const Mat2 jt{j.a11, j.a21, j.a12, j.a22};
      step = -(1.0 / fro2) * (jt * f);
    }

    double t = 1.0;
    Point trial = p + step;
    Point ft = residual(trial);
    while (norm(ft) > (1.0 - 1e-4 * t) * fn && t > 1.0 / 1024.0) {
      t *= 0.5;
      trial = p + t * step;
      ft = residual(trial);
    }
    if (norm(ft) >= fn) return {NewtonOutcome::Diverged, p};
    p = trial;
    f = ft;
  }
  return {NewtonOutcome::Diverged, p};
}

}  // namespace

FixedPointSet find_fixed_points(const PlanarMap& map, const Region& region, double newton_tol, int max_iter,
                                double class_tol) {
  region.validate();
  FixedPointSet out;
  const double merge_radius = 1e-6 * region.diameter();
  const double slack = 1e-9 * region.diameter();
  std::vector<Point> roots;
  for (int k = 0; k < region.node_count(); ++k) {
    ++out.seeds;
    NewtonResult r;
    try {
      r = newton_fixed_point(map, region.node(k), newton_tol, max_iter);
    } catch (const EvaluationError&) {
      ++out.diverged;
      continue;
    } catch (const SingularMatrixError&) {
      ++out.skipped_singular;
      continue;
    }
    if (r.outcome == NewtonOutcome::Singular) {
      ++out.skipped_singular;
      continue;
    }
    if (r.outcome == NewtonOutcome::Diverged || !region.contains(r.root, slack)) {
      ++out.diverged;
      continue;
    }
    ++out.converged;
    bool duplicate = false;
    for (const Point& q : roots) {
      if (norm(q - r.root) <= merge_radius) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) roots.push_back(r.root);
  }

  // An isolated fixed point attracts seeds from all over the window; a fixed
  // curve yields a distinct root for (at least) every grid column or row it
  // crosses.
  out.curve = static_cast<double>(roots.size()) > std::max(2.0, 0.05 * region.grid_n);

  out.points.reserve(roots.size());
  for (const Point& q : roots) {
    FixedPoint fp;
    fp.location = q;
    fp.jacobian = map.evaluate_with_jacobian(q).jacobian;
    fp.classification = classify_fixed_point(map, q, class_tol);
    if (out.curve && fp.classification == FixClass::Unclassified) fp.classification = FixClass::Curve;
    out.points.push_back(fp);
  }
  return out;
}

}  // namespace invol
