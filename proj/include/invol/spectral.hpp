#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invol/involution.hpp"
#include "invol/linalg2.hpp"
#include "invol/planar_map.hpp"
#include "invol/region.hpp"

namespace invol {

struct SpectrumSample {
  Point point;
  Spectrum spectrum;
  /// Trace(Dphi(base) * Dphi(point)).
  double trace_product = 0.0;
};

/// Fixed point whose linear part anchors the spectral checks and the
/// standard map.
struct BasePoint {
  Point location;
  Mat2 linear_part;
};

/// The origin when |phi(0)| <= 1e-9, else the first FixMinus point of
/// `fixed_points`. Throws ConfigurationError if neither exists.
BasePoint select_base_point(const PlanarMap& map, const std::vector<FixedPoint>& fixed_points = {});

std::vector<SpectrumSample> sample_spectrum(const PlanarMap& map, const Region& region, const BasePoint& base);
std::vector<SpectrumSample> sample_spectrum(const PlanarMap& map, const Region& region);

enum class Condition { A_a, A_b, A_c, B_trace };

std::string to_string(Condition c);

/// Outcome of one hypothesis on the sampled window. `margin` is positive
/// when the condition holds and measures how far the samples are from
/// violating it; negative margins measure the depth of the violation.
/// `witness` is the worst sample and is always present when holds is false.
struct ConditionVerdict {
  Condition condition = Condition::A_a;
  bool holds_on_window = false;
  std::optional<SpectrumSample> witness;
  double margin = 0.0;
};

struct ConditionA {
  ConditionVerdict a;
  ConditionVerdict b;
  ConditionVerdict c;
};

constexpr double kDefaultEpsilon = 0.1;
constexpr double kDefaultImagTol = 1e-9;

/// (a) every eigenvalue equals 1 within 1e-9;
/// (b) no eigenvalue with |Im| <= im_tol has real part in [1, 1 + epsilon);
/// (c) every eigenvalue has |Im| <= im_tol.
ConditionA check_condition_A(const std::vector<SpectrumSample>& samples, double epsilon = kDefaultEpsilon,
                             double im_tol = kDefaultImagTol);

/// Holds iff min trace_product > -1; margin = min trace_product + 1.
ConditionVerdict check_condition_B(const std::vector<SpectrumSample>& samples);

struct TheoremVerdict {
  Orientation orientation = Orientation::Preserving;
  std::vector<ConditionVerdict> conditions;
  bool linearizable_on_window = false;
  /// "A" or "B" when a hypothesis holds, empty otherwise.
  std::string theorem;
  /// Condition used for the positive verdict, or the one reported violated.
  std::optional<Condition> deciding;
  std::string text;
};

/// Orientation-preserving maps are decided by A(a), then A(c), then A(b);
/// orientation-reversing maps by the trace condition. The text is always
/// qualified by the window.
TheoremVerdict theorem_verdict(const PlanarMap& map, const Region& region, double epsilon = kDefaultEpsilon,
                               double im_tol = kDefaultImagTol);
TheoremVerdict theorem_verdict(Orientation orientation, const std::vector<SpectrumSample>& samples,
                               const Region& region, double epsilon = kDefaultEpsilon,
                               double im_tol = kDefaultImagTol);

std::string describe_window(const Region& region);

}  // namespace invol
