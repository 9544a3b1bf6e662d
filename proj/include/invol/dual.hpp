#pragma once

#include <cmath>

namespace invol {

/// Value paired with its partials in x and y. Arithmetic applies the chain
/// rule exactly, so evaluating a map on seeded duals yields its Jacobian.
struct Dual {
  double value = 0.0;
  double dx = 0.0;
  double dy = 0.0;

  constexpr Dual() = default;
  constexpr Dual(double v) : value(v) {}  // NOLINT: constants promote implicitly
  constexpr Dual(double v, double ddx, double ddy) : value(v), dx(ddx), dy(ddy) {}

  static constexpr Dual seed_x(double v) { return {v, 1.0, 0.0}; }
  static constexpr Dual seed_y(double v) { return {v, 0.0, 1.0}; }

  friend constexpr Dual operator+(Dual a, Dual b) { return {a.value + b.value, a.dx + b.dx, a.dy + b.dy}; }
  friend constexpr Dual operator-(Dual a, Dual b) { return {a.value - b.value, a.dx - b.dx, a.dy - b.dy}; }
  friend constexpr Dual operator-(Dual a) { return {-a.value, -a.dx, -a.dy}; }
  friend constexpr Dual operator*(Dual a, Dual b) {
    return {a.value * b.value, a.dx * b.value + a.value * b.dx, a.dy * b.value + a.value * b.dy};
  }
  // Caller guarantees b.value != 0.
  friend constexpr Dual operator/(Dual a, Dual b) {
    const double q = a.value / b.value;
    return {q, (a.dx - q * b.dx) / b.value, (a.dy - q * b.dy) / b.value};
  }
};

inline double value_of(double v) { return v; }
inline double value_of(const Dual& d) { return d.value; }

inline Dual sinh(Dual a) {
  const double c = std::cosh(a.value);
  return {std::sinh(a.value), c * a.dx, c * a.dy};
}

inline Dual cosh(Dual a) {
  const double s = std::sinh(a.value);
  return {std::cosh(a.value), s * a.dx, s * a.dy};
}

inline Dual asinh(Dual a) {
  const double k = 1.0 / std::sqrt(1.0 + a.value * a.value);
  return {std::asinh(a.value), k * a.dx, k * a.dy};
}

inline Dual sin(Dual a) {
  const double c = std::cos(a.value);
  return {std::sin(a.value), c * a.dx, c * a.dy};
}

inline Dual cos(Dual a) {
  const double s = -std::sin(a.value);
  return {std::cos(a.value), s * a.dx, s * a.dy};
}

// Caller guarantees a.value > 0 (the derivative is unbounded at 0).
inline Dual sqrt(Dual a) {
  const double r = std::sqrt(a.value);
  const double k = 0.5 / r;
  return {r, k * a.dx, k * a.dy};
}

/// sign(v) * dv with sign(0) = 0.
inline Dual abs(Dual a) {
  const double s = a.value > 0.0 ? 1.0 : (a.value < 0.0 ? -1.0 : 0.0);
  return {std::abs(a.value), s * a.dx, s * a.dy};
}

/// Clamp with zero derivative where the bound is active.
inline Dual clamp(Dual a, double lo, double hi) {
  if (a.value <= lo) return Dual{lo};
  if (a.value >= hi) return Dual{hi};
  return a;
}

inline double clamp(double a, double lo, double hi) { return a < lo ? lo : (a > hi ? hi : a); }

}  // namespace invol
