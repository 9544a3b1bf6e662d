#include "invol/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "invol/errors.hpp"

namespace invol {

namespace {

constexpr double kUnitTol = 1e-9;
constexpr double kBaseTol = 1e-9;

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return num(z.real());
  std::ostringstream os;
  os.precision(6);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

std::string format_spectrum(const Spectrum& s) {
  return "{" + format_complex(s.lambda1) + ", " + format_complex(s.lambda2) + "}";
}

std::string format_point(Point p) { return "(" + num(p.x) + ", " + num(p.y) + ")"; }

/// Signed distance of one eigenvalue to the forbidden set of condition (b).
double margin_b(std::complex<double> z, double epsilon, double im_tol) {
  const double lo = 1.0;
  const double hi = 1.0 + epsilon;
  if (std::abs(z.imag()) <= im_tol) {
    const double re = z.real();
    if (re < lo) return lo - re;
    return re - hi;  // negative inside [1, 1 + eps)
  }
  const double re = std::clamp(z.real(), lo, hi);
  return std::abs(z - std::complex<double>(re, 0.0));
}

template <class Score>
ConditionVerdict reduce(Condition which, const std::vector<SpectrumSample>& samples, Score score,
                        bool (*holds)(double)) {
  ConditionVerdict v;
  v.condition = which;
  v.margin = INFINITY;
  bool all_hold = true;
  for (const auto& s : samples) {
    const double m = score(s);
    if (!holds(m)) all_hold = false;
    if (m < v.margin) {
      v.margin = m;
      v.witness = s;
    }
  }
  v.holds_on_window = all_hold;
  if (samples.empty()) v.margin = 0.0;
  return v;
}

}  // namespace

std::string to_string(Condition c) {
  switch (c) {
    case Condition::A_a: return "A-a";
    case Condition::A_b: return "A-b";
    case Condition::A_c: return "A-c";
    case Condition::B_trace: return "B-trace";
  }
  return "";
}

std::string describe_window(const Region& r) {
  std::ostringstream os;
  os << "window [" << r.x_min << ", " << r.x_max << "] x [" << r.y_min << ", " << r.y_max << "] (" << r.grid_n
     << "x" << r.grid_n << " grid)";
  return os.str();
}

BasePoint select_base_point(const PlanarMap& map, const std::vector<FixedPoint>& fixed_points) {
  const Jet origin = map.evaluate_with_jacobian({0.0, 0.0});
  if (norm(origin.value) <= kBaseTol) return {{0.0, 0.0}, origin.jacobian};
  for (const auto& fp : fixed_points) {
    if (fp.classification == FixClass::FixMinus) return {fp.location, map.evaluate_with_jacobian(fp.location).jacobian};
  }
  throw ConfigurationError("no base fixed point: phi(0) != 0 and no Fix- point was found; recenter the map");
}

std::vector<SpectrumSample> sample_spectrum(const PlanarMap& map, const Region& region, const BasePoint& base) {
  region.validate();
  std::vector<SpectrumSample> out;
  out.reserve(region.node_count());
  for (int k = 0; k < region.node_count(); ++k) {
    const Point p = region.node(k);
    const Mat2 j = map.evaluate_with_jacobian(p).jacobian;
    out.push_back({p, eigenvalues(j), (base.linear_part * j).trace()});
  }
  return out;
}

std::vector<SpectrumSample> sample_spectrum(const PlanarMap& map, const Region& region) {
  return sample_spectrum(map, region, select_base_point(map));
}

ConditionA check_condition_A(const std::vector<SpectrumSample>& samples, double epsilon, double im_tol) {
  if (!(epsilon > 0.0) || !(im_tol > 0.0)) throw ConfigurationError("epsilon and im_tol must be positive");
  ConditionA out;
  out.a = reduce(
      Condition::A_a, samples,
      [](const SpectrumSample& s) {
        const double dev = std::max(std::abs(s.spectrum.lambda1 - 1.0), std::abs(s.spectrum.lambda2 - 1.0));
        return kUnitTol - dev;
      },
      [](double m) { return m >= 0.0; });
  out.b = reduce(
      Condition::A_b, samples,
      [&](const SpectrumSample& s) {
        return std::min(margin_b(s.spectrum.lambda1, epsilon, im_tol), margin_b(s.spectrum.lambda2, epsilon, im_tol));
      },
      [](double m) { return m >= 0.0; });
  out.c = reduce(
      Condition::A_c, samples,
      [&](const SpectrumSample& s) {
        const double im = std::max(std::abs(s.spectrum.lambda1.imag()), std::abs(s.spectrum.lambda2.imag()));
        if (im <= im_tol) return std::abs(s.spectrum.lambda2.real() - s.spectrum.lambda1.real());
        return -2.0 * im;
      },
      [](double m) { return m >= 0.0; });
  return out;
}

ConditionVerdict check_condition_B(const std::vector<SpectrumSample>& samples) {
  return reduce(
      Condition::B_trace, samples, [](const SpectrumSample& s) { return s.trace_product + 1.0; },
      [](double m) { return m > 0.0; });
}

TheoremVerdict theorem_verdict(Orientation orientation, const std::vector<SpectrumSample>& samples,
                               const Region& region, double epsilon, double im_tol) {
  TheoremVerdict v;
  v.orientation = orientation;
  const std::string where = " on " + describe_window(region);
  if (orientation == Orientation::Preserving) {
    const ConditionA a = check_condition_A(samples, epsilon, im_tol);
    v.conditions = {a.a, a.b, a.c};
    if (a.a.holds_on_window) {
      v.linearizable_on_window = true;
      v.theorem = "A";
      v.deciding = Condition::A_a;
      v.text = "Theorem A(a): φ = I" + where;
    } else if (a.c.holds_on_window) {
      v.linearizable_on_window = true;
      v.theorem = "A";
      v.deciding = Condition::A_c;
      v.text = "Theorem A(c) applies (Spc ⊂ ℝ)" + where;
    } else if (a.b.holds_on_window) {
      v.linearizable_on_window = true;
      v.theorem = "A";
      v.deciding = Condition::A_b;
      v.text = "Theorem A(b) applies (Spc ∩ [1, 1+ε) = ∅ for ε = " + num(epsilon) + ", margin " + num(a.b.margin) +
               ")" + where;
    } else {
      v.deciding = Condition::A_b;
      v.text = "no hypothesis verified; Theorem A(b) violated at witness " + format_point(a.b.witness->point) +
               " with spectrum " + format_spectrum(a.b.witness->spectrum) + where;
    }
  } else {
    const ConditionVerdict b = check_condition_B(samples);
    v.conditions = {b};
    v.deciding = Condition::B_trace;
    if (b.holds_on_window) {
      v.linearizable_on_window = true;
      v.theorem = "B";
      v.text = "Theorem B applies (trace condition, margin " + num(b.margin) + ")" + where;
    } else {
      v.text = "no hypothesis verified; Theorem B trace condition violated at witness " +
               format_point(b.witness->point) + " (trace " + num(b.witness->trace_product) + ")" + where;
    }
  }
  return v;
}

TheoremVerdict theorem_verdict(const PlanarMap& map, const Region& region, double epsilon, double im_tol) {
  const OrientationClass o = orientation(map, region);
  const BasePoint base = select_base_point(map, [&] {
    if (norm(map({0.0, 0.0})) <= kBaseTol) return FixedPointSet{};
    return find_fixed_points(map, region);
  }().points);
  return theorem_verdict(o.kind, sample_spectrum(map, region, base), region, epsilon, im_tol);
}

}  // namespace invol
