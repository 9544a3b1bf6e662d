#pragma once

#include <complex>
#include <iosfwd>

namespace invol {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
  friend constexpr Point operator*(double c, Point a) { return {c * a.x, c * a.y}; }
  friend constexpr bool operator==(Point, Point) = default;
};

double norm(Point p);
std::ostream& operator<<(std::ostream& os, Point p);

/// Real 2x2 matrix, row-major entries.
struct Mat2 {
  double a11 = 0.0;
  double a12 = 0.0;
  double a21 = 0.0;
  double a22 = 0.0;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 diagonal(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }

  constexpr double trace() const { return a11 + a22; }
  constexpr double det() const { return a11 * a22 - a12 * a21; }

  /// Throws SingularMatrixError when |det| <= 1e-14.
  Mat2 inverse() const;

  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(double c, const Mat2& a);
Point operator*(const Mat2& a, Point p);

inline Mat2 multiply(const Mat2& a, const Mat2& b) { return a * b; }
inline Mat2 add(const Mat2& a, const Mat2& b) { return a + b; }
inline Mat2 scale(double c, const Mat2& a) { return c * a; }
inline Point apply(const Mat2& a, Point p) { return a * p; }
inline Mat2 inverse(const Mat2& a) { return a.inverse(); }

/// Largest entry magnitude.
double max_abs(const Mat2& a);

std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// Eigenvalue pair of a 2x2 matrix. lambda1 is the "-" root of the quadratic
/// formula and lambda2 the "+" root. When the discriminant is non-negative
/// both are exactly real (imaginary parts are 0.0, not rounding noise).
struct Spectrum {
  std::complex<double> lambda1;
  std::complex<double> lambda2;
  bool real = true;
  double discriminant = 0.0;
};

/// lambda_j = (tr + (-1)^j sqrt(tr^2 - 4 det)) / 2, branching on the sign of
/// the discriminant before any square root is taken.
Spectrum eigenvalues(const Mat2& m);

/// Distance between two unordered eigenvalue pairs: the better of the two
/// pairings, each scored by its worse match.
double set_distance(const Spectrum& a, const Spectrum& b);

/// Shift both eigenvalues by a real constant.
Spectrum shifted(const Spectrum& s, double delta);

/// True iff every entry of A*A - I is within tol.
bool is_linear_involution(const Mat2& a, double tol);

}  // namespace invol
