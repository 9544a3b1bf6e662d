#include "invol/linalg2.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "invol/errors.hpp"

namespace invol {

double norm(Point p) { return std::hypot(p.x, p.y); }

std::ostream& operator<<(std::ostream& os, Point p) { return os << "(" << p.x << ", " << p.y << ")"; }

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m.a11 << ", " << m.a12 << "], [" << m.a21 << ", " << m.a22 << "]]";
}

Mat2 Mat2::inverse() const {
  const double d = det();
  if (!(std::abs(d) > 1e-14)) throw SingularMatrixError(d);
  return {a22 / d, -a12 / d, -a21 / d, a11 / d};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}

Mat2 operator*(double c, const Mat2& a) { return {c * a.a11, c * a.a12, c * a.a21, c * a.a22}; }

Point operator*(const Mat2& a, Point p) { return {a.a11 * p.x + a.a12 * p.y, a.a21 * p.x + a.a22 * p.y}; }

double max_abs(const Mat2& a) {
  return std::max({std::abs(a.a11), std::abs(a.a12), std::abs(a.a21), std::abs(a.a22)});
}

Spectrum eigenvalues(const Mat2& m) {
  const double tr = m.trace();
  // tr^2 - 4 det rewritten as (a11 - a22)^2 + 4 a12 a21: same value, but a
  // repeated eigenvalue does not come out of a cancellation of two large terms.
  const double diff = m.a11 - m.a22;
  const double disc = diff * diff + 4.0 * m.a12 * m.a21;
  Spectrum s;
  s.discriminant = disc;
  if (disc >= 0.0) {
    // The root away from zero comes from the formula, the other from
    // lambda1 * lambda2 = det, so neither loses digits to cancellation.
    const double r = std::sqrt(disc);
    const double det = m.det();
    double lo = (tr - r) / 2.0;
    double hi = (tr + r) / 2.0;
    if (tr >= 0.0 && hi != 0.0) lo = det / hi;
    else if (tr < 0.0) hi = det / lo;
    s.lambda1 = {lo, 0.0};
    s.lambda2 = {hi, 0.0};
    s.real = true;
  } else {
    const double r = std::sqrt(-disc);
    s.lambda1 = {tr / 2.0, -r / 2.0};
    s.lambda2 = {tr / 2.0, r / 2.0};
    s.real = false;
  }
  return s;
}

double set_distance(const Spectrum& a, const Spectrum& b) {
  const double straight = std::max(std::abs(a.lambda1 - b.lambda1), std::abs(a.lambda2 - b.lambda2));
  const double crossed = std::max(std::abs(a.lambda1 - b.lambda2), std::abs(a.lambda2 - b.lambda1));
  return std::min(straight, crossed);
}

Spectrum shifted(const Spectrum& s, double delta) {
  Spectrum out = s;
  out.lambda1 += delta;
  out.lambda2 += delta;
  return out;
}

bool is_linear_involution(const Mat2& a, double tol) { return max_abs(a * a - Mat2::identity()) <= tol; }

}  // namespace invol
