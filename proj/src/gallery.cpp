#include "invol/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "invol/errors.hpp"
#include "invol/expr.hpp"

namespace invol::gallery {

namespace {

constexpr double kCenter = 3.0;

template <class T>
T smoothstep(T u) {
  return u * u * (T(3.0) - T(2.0) * u);
}

template <class T>
T eta(T t) {
  using std::abs;
  return std::numbers::pi * smoothstep(clamp(T(2.0) - abs(t), 0.0, 1.0));
}

/// Angle field: +pi near (3,3), -pi near (-3,-3), 0 elsewhere. Odd in p.
template <class T>
T angle(T x, T y) {
  const T ax = x - kCenter, ay = y - kCenter;
  const T bx = x + kCenter, by = y + kCenter;
  return eta(ax * ax + ay * ay) - eta(bx * bx + by * by);
}

/// Blend weight: 1 on {x + y >= 3} (contains the 2-ball about (3,3)), 0 on
/// {x + y <= -3}. Only varies where the angle field vanishes.
template <class T>
T blend(T x, T y) {
  return smoothstep(clamp((x + y + T(3.0)) / T(6.0), 0.0, 1.0));
}

template <class T>
std::pair<T, T> rho(T x, T y) {
  using std::cos, std::sin;
  const T th = angle(x, y);
  const T c = cos(th), s = sin(th);
  // R_th (v) = (c vx + s vy, -s vx + c vy), about (3,3) and about (-3,-3).
  const T px = x - kCenter, py = y - kCenter;
  const T plus_x = T(kCenter) + (c * px + s * py);
  const T plus_y = T(kCenter) + (c * py - s * px);
  const T mx = x + kCenter, my = y + kCenter;
  const T minus_x = T(-kCenter) + (c * mx + s * my);
  const T minus_y = T(-kCenter) + (c * my - s * mx);
  const T w = blend(x, y);
  return {w * plus_x + (T(1.0) - w) * minus_x, w * plus_y + (T(1.0) - w) * minus_y};
}

std::string pow_text(const std::string& base, int k) { return base + "^" + std::to_string(k); }

Region window(double half) { return {-half, half, -half, half, 41}; }

const std::vector<std::string> kNames = {"A1", "A2", "A3", "A4", "B", "C", "identity", "minus-identity", "flip-y"};

}  // namespace

double example_c_eta(double t) { return eta(t); }

PlanarMap example_c_map() {
  return make_native("example-c", {{"center", kCenter}}, [](auto x, auto y) { return rho(-x, -y); });
}

std::vector<std::string> list_entries() { return kNames; }

bool takes_parameter(const std::string& name) {
  return name == "A1" || name == "A2" || name == "A3" || name == "A4";
}

Entry get(const std::string& name, std::optional<int> n) {
  if (std::find(kNames.begin(), kNames.end(), name) == kNames.end()) {
    std::string msg = "unknown gallery entry '" + name + "'";
    if (name == "D")
      msg += " (example D is not provided: its involution is only known to exist and has no closed form)";
    throw UnknownEntryError(msg);
  }
  if (takes_parameter(name)) {
    if (!n) n = 1;
    if (*n < 0) throw ConfigurationError("gallery parameter n must be non-negative");
  } else if (n) {
    throw ConfigurationError("gallery entry '" + name + "' takes no parameter");
  }

  Entry e;
  e.name = name;
  e.n = n;
  e.default_window = window(5.0);
  const int odd = n ? 2 * *n + 1 : 0;
  const int even = n ? 2 * *n : 0;
  const std::string s = "((x + y)/2)";

  if (name == "A1") {
    e.formula = "(x - " + pow_text("y", odd) + ", -y)";
    e.map = parse(e.formula);
    e.expected = {Orientation::Reversing, "(x - " + pow_text("y", odd) + "/2, y)",
                  "2x - " + pow_text("y", odd) + " = const", "Theorem B"};
    e.example_tag = "A(i)";
  } else if (name == "A2") {
    e.formula = "(-x + " + pow_text("y", even) + ", -y)";
    e.map = parse(e.formula);
    e.expected = {Orientation::Preserving, "(x - " + pow_text("y", even) + "/2, y)", "radial", "Theorem A(c)"};
    e.example_tag = "A(ii)";
  } else if (name == "A3") {
    e.formula = "(-y - " + pow_text(s, odd) + ", -x + " + pow_text(s, odd) + ")";
    e.map = parse(e.formula);
    e.expected = {Orientation::Reversing, std::nullopt, "vertical", "Theorem B"};
    e.example_tag = "A(iii)";
  } else if (name == "A4") {
    e.formula = "(-x + " + pow_text(s, even) + ", -y - " + pow_text(s, even) + ")";
    e.map = parse(e.formula);
    e.expected = {Orientation::Preserving, std::nullopt, "radial", "Theorem A(c)"};
    e.example_tag = "A(iv)";
  } else if (name == "B") {
    e.formula = "(asinh((sinh(x) + sinh(y))/2), asinh((3*sinh(x) - sinh(y))/2))";
    e.map = parse(e.formula);
    e.expected = {Orientation::Reversing, std::nullopt, "vertical", "Theorem B"};
    e.default_window = window(3.0);
    e.example_tag = "B";
  } else if (name == "C") {
    e.formula =
        "psi(p) = rho(-p), rho = xi rho+ + (1 - xi) rho-, rho+-(q) = +-(3,3) + R_theta(q) (q -+ (3,3)), "
        "theta(q) = eta(|q - (3,3)|^2) - eta(|q + (3,3)|^2)";
    e.map = example_c_map();
    e.expected = {Orientation::Preserving, std::nullopt, "radial (degenerate)", "no hypothesis verified"};
    e.default_window = window(6.0);
    e.example_tag = "C";
    e.notes = "Dpsi = I and h = (3,3) on the unit ball about (3,3): the standard map is not injective";
  } else if (name == "identity") {
    e.formula = "(x, y)";
    e.map = parse(e.formula);
    e.expected = {Orientation::Preserving, "(x, y)", std::nullopt, "Theorem A(a)"};
  } else if (name == "minus-identity") {
    e.formula = "(-x, -y)";
    e.map = parse(e.formula);
    e.expected = {Orientation::Preserving, "(x, y)", "radial", "Theorem A(c)"};
  } else {
    e.formula = "(x, -y)";
    e.map = parse(e.formula);
    e.expected = {Orientation::Reversing, "(x, y)", "vertical", "Theorem B"};
  }

  // With n = 0 the even powers are constants and the fixed point leaves the
  // origin; conjugate it back by a translation.
  if ((name == "A2" || name == "A4") && *n == 0) {
    const Point fixed = name == "A2" ? Point{0.5, 0.0} : Point{0.5, -0.5};
    e.map = recentered(e.map, fixed);
    e.expected.known_h = "(x, y)";
    e.notes = "recentered at its fixed point (" + std::to_string(fixed.x) + ", " + std::to_string(fixed.y) + ")";
  }
  return e;
}

Entry get_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return get(spec);
  const std::string name = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(rest, &used);
  } catch (const std::exception&) {
    throw ConfigurationError("invalid gallery parameter '" + rest + "'");
  }
  if (used != rest.size()) throw ConfigurationError("invalid gallery parameter '" + rest + "'");
  return get(name, n);
}

}  // namespace invol::gallery
