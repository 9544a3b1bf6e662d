#include "invol/linearize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "invol/errors.hpp"

namespace invol {

namespace {

constexpr double kBaseTol = 1e-9;

PlanarMap build_as_map(const PlanarMap& phi, const Mat2& l) {
  if (const auto* e = phi.expression()) {
    using N = ExprNode;
    const auto c = [](double v) { return N::constant(v); };
    N h1 = c(0.5) * (N::var_x() + (c(l.a11) * e->first + c(l.a12) * e->second));
    N h2 = c(0.5) * (N::var_y() + (c(l.a21) * e->first + c(l.a22) * e->second));
    return PlanarMap::from_expressions(std::move(h1), std::move(h2));
  }
  return make_native("standard-map", {}, [phi, l](auto x, auto y) {
    const auto [u, v] = evaluate_pair(phi, x, y);
    return std::pair{0.5 * (x + (l.a11 * u + l.a12 * v)), 0.5 * (y + (l.a21 * u + l.a22 * v))};
  });
}

}  // namespace

std::string to_string(InjectivityStatus s) {
  return s == InjectivityStatus::Collision ? "collision" : "no_collision_found";
}

StandardMap::StandardMap(PlanarMap involution) : phi_(involution), as_map_(involution) {
  const Jet origin = phi_.evaluate_with_jacobian({0.0, 0.0});
  if (norm(origin.value) > kBaseTol)
    throw PreconditionError("the standard map needs phi(0) = 0; recenter the map at a fixed point first");
  linear_ = origin.jacobian;
  as_map_ = build_as_map(phi_, linear_);
}

Point StandardMap::operator()(Point p) const { return 0.5 * (p + linear_ * phi_(p)); }

Jet StandardMap::evaluate_with_jacobian(Point p) const {
  const Jet j = phi_.evaluate_with_jacobian(p);
  return {0.5 * (p + linear_ * j.value), 0.5 * (Mat2::identity() + linear_ * j.jacobian)};
}

PlanarMap auxiliary_map(const StandardMap& h) {
  const PlanarMap phi = h.involution();
  const Mat2 l = h.linear_part();
  if (const auto* e = phi.expression()) {
    using N = ExprNode;
    const auto c = [](double v) { return N::constant(v); };
    return PlanarMap::from_expressions((c(l.a11) * N::var_x() + c(l.a12) * N::var_y()) + e->first,
                                       (c(l.a21) * N::var_x() + c(l.a22) * N::var_y()) + e->second);
  }
  return make_native("auxiliary-map", {}, [phi, l](auto x, auto y) {
    const auto [u, v] = evaluate_pair(phi, x, y);
    return std::pair{(l.a11 * x + l.a12 * y) + u, (l.a21 * x + l.a22 * y) + v};
  });
}

double conjugacy_residual(const StandardMap& h, Point p) {
  const Point lhs = h(h.involution()(p));
  const Point rhs = h.linear_part() * h(p);
  return norm(lhs - rhs) / (1.0 + norm(p));
}

InjectivityCertificate injectivity_scan(const PlanarMap& map, const Region& region, int scan_n, double collision_tol,
                                        double separation_min) {
  if (scan_n < 2) throw ConfigurationError("scan grid must have at least 2 samples per axis");
  if (!(collision_tol > 0.0)) throw ConfigurationError("collision tolerance must be positive");
  const Region grid = region.with_grid(scan_n);
  grid.validate();

  struct Key {
    std::int64_t i;
    std::int64_t j;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      const auto a = static_cast<std::uint64_t>(k.i);
      const auto b = static_cast<std::uint64_t>(k.j);
      return static_cast<std::size_t>(a * 0x9E3779B97F4A7C15ULL ^ (b + 0x7F4A7C159E3779B9ULL + (a << 6) + (a >> 2)));
    }
  };
  auto cell = [collision_tol](double v) {
    const double c = std::floor(v / collision_tol);
    if (!(std::abs(c) < 4.0e18)) throw EvaluationError({v, v}, "image out of range for the spatial hash");
    return static_cast<std::int64_t>(c);
  };

  std::unordered_map<Key, std::vector<int>, KeyHash> buckets;
  std::vector<Point> pre;
  std::vector<Point> img;
  pre.reserve(grid.node_count());
  img.reserve(grid.node_count());

  InjectivityCertificate cert;
  for (int k = 0; k < grid.node_count(); ++k) {
    const Point p = grid.node(k);
    const Point hp = map(p);
    const Key key{cell(hp.x), cell(hp.y)};
    for (std::int64_t di = -1; di <= 1; ++di) {
      for (std::int64_t dj = -1; dj <= 1; ++dj) {
        ++cert.cells_checked;
        const auto it = buckets.find({key.i + di, key.j + dj});
        if (it == buckets.end()) continue;
        for (int idx : it->second) {
          if (norm(img[idx] - hp) <= collision_tol && norm(pre[idx] - p) >= separation_min) {
            cert.status = InjectivityStatus::Collision;
            cert.witness = std::pair{pre[idx], p};
            return cert;
          }
        }
      }
    }
    buckets[key].push_back(static_cast<int>(pre.size()));
    pre.push_back(p);
    img.push_back(hp);
  }
  return cert;
}

InjectivityCertificate injectivity_scan(const StandardMap& h, const Region& region, int scan_n, double collision_tol,
                                        std::optional<double> separation_min) {
  return injectivity_scan(h.as_map(), region, scan_n, collision_tol,
                          separation_min.value_or(1e-3 * region.diameter()));
}

double spectrum_shift_check(const PlanarMap& map, const Region& region) {
  region.validate();
  const Mat2 base = map.evaluate_with_jacobian({0.0, 0.0}).jacobian;
  if (max_abs(base + Mat2::identity()) > 1e-9)
    throw NotApplicableError("spectrum shift check needs Dphi(0) = -I");
  double worst = 0.0;
  for (int k = 0; k < region.node_count(); ++k) {
    const Mat2 j = map.evaluate_with_jacobian(region.node(k)).jacobian;
    const Spectrum g = eigenvalues(j - Mat2::identity());
    const Spectrum phi = shifted(eigenvalues(j), -1.0);
    worst = std::max(worst, set_distance(g, phi));
  }
  return worst;
}

JacobianBounds theorem_B_jacobian_check(const StandardMap& h, const Region& region) {
  region.validate();
  JacobianBounds b{INFINITY, INFINITY};
  for (int k = 0; k < region.node_count(); ++k) {
    const Mat2 d = h.evaluate_with_jacobian(region.node(k)).jacobian;
    b.min_trace = std::min(b.min_trace, d.trace());
    b.min_det = std::min(b.min_det, d.det());
  }
  return b;
}

}  // namespace invol
