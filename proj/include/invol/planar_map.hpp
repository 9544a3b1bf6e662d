#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "invol/dual.hpp"
#include "invol/expr.hpp"
#include "invol/linalg2.hpp"

namespace invol {

/// Value and Jacobian of a planar map at one point.
struct Jet {
  Point value;
  Mat2 jacobian;
};

/// Built-in map evaluated in C++ rather than from text. Implementations must
/// be immutable after construction; evaluation may happen from many threads.
class NativeMap {
 public:
  virtual ~NativeMap() = default;
  virtual std::string name() const = 0;
  virtual std::map<std::string, double> parameters() const { return {}; }
  virtual Point eval(Point p) const = 0;
  virtual Jet eval_jet(Point p) const = 0;
};

struct ExpressionSource {
  ExprNode first;
  ExprNode second;
};

/// A differentiable map R^2 -> R^2 backed either by an expression pair or by
/// a NativeMap. Cheap to copy; copies share the immutable implementation.
class PlanarMap {
 public:
  /// The identity map (x, y).
  PlanarMap();
  static PlanarMap from_expressions(ExprNode first, ExprNode second);
  static PlanarMap from_native(std::shared_ptr<const NativeMap> impl);

  Point evaluate(Point p) const;
  Point operator()(Point p) const { return evaluate(p); }
  Jet evaluate_with_jacobian(Point p) const;

  bool is_expression() const { return expression_ != nullptr; }
  /// Null for native maps.
  const ExpressionSource* expression() const { return expression_.get(); }
  /// Null for expression maps.
  const NativeMap* native() const { return native_.get(); }

  /// "(f1, f2)" for expression maps, "native:NAME{k=v,...}" otherwise.
  std::string describe() const;

 private:
  std::shared_ptr<const ExpressionSource> expression_;
  std::shared_ptr<const NativeMap> native_;
};

inline Point evaluate(const PlanarMap& map, Point p) { return map.evaluate(p); }
inline Jet evaluate_with_jacobian(const PlanarMap& map, Point p) { return map.evaluate_with_jacobian(p); }

/// Component-wise evaluation for use inside generic native lambdas. The Dual
/// overload propagates the caller's seeds through the map (chain rule).
std::pair<double, double> evaluate_pair(const PlanarMap& map, double x, double y);
std::pair<Dual, Dual> evaluate_pair(const PlanarMap& map, const Dual& x, const Dual& y);

namespace detail {

/// NativeMap over a generic callable `f(T x, T y) -> std::pair<T, T>` that is
/// instantiated for both double and Dual.
template <class F>
class LambdaNative final : public NativeMap {
 public:
  LambdaNative(std::string name, std::map<std::string, double> params, F f)
      : name_(std::move(name)), params_(std::move(params)), f_(std::move(f)) {}

  std::string name() const override { return name_; }
  std::map<std::string, double> parameters() const override { return params_; }

  Point eval(Point p) const override {
    const auto [u, v] = f_(p.x, p.y);
    return {u, v};
  }

  Jet eval_jet(Point p) const override {
    const auto [u, v] = f_(Dual::seed_x(p.x), Dual::seed_y(p.y));
    return {{u.value, v.value}, {u.dx, u.dy, v.dx, v.dy}};
  }

 private:
  std::string name_;
  std::map<std::string, double> params_;
  F f_;
};

}  // namespace detail

template <class F>
PlanarMap make_native(std::string name, std::map<std::string, double> params, F f) {
  return PlanarMap::from_native(
      std::make_shared<detail::LambdaNative<F>>(std::move(name), std::move(params), std::move(f)));
}

/// Conjugate by the translation to `center`: q -> map(q + center) - center.
/// Expression maps stay expression-backed (the translation is substituted
/// into the tree).
PlanarMap recentered(const PlanarMap& map, Point center);

}  // namespace invol
