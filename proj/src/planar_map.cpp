#include "invol/planar_map.hpp"

#include <sstream>

#include "invol/errors.hpp"

namespace invol {

PlanarMap::PlanarMap()
    : expression_(std::make_shared<const ExpressionSource>(ExpressionSource{ExprNode::var_x(), ExprNode::var_y()})) {}

PlanarMap PlanarMap::from_expressions(ExprNode first, ExprNode second) {
  PlanarMap m;
  m.expression_ = std::make_shared<const ExpressionSource>(ExpressionSource{std::move(first), std::move(second)});
  return m;
}

PlanarMap PlanarMap::from_native(std::shared_ptr<const NativeMap> impl) {
  if (!impl) throw Error("null native map");
  PlanarMap m;
  m.expression_.reset();
  m.native_ = std::move(impl);
  return m;
}

Point PlanarMap::evaluate(Point p) const {
  if (expression_) return {invol::evaluate(expression_->first, p.x, p.y), invol::evaluate(expression_->second, p.x, p.y)};
  return native_->eval(p);
}

Jet PlanarMap::evaluate_with_jacobian(Point p) const {
  if (expression_) {
    const Dual x = Dual::seed_x(p.x);
    const Dual y = Dual::seed_y(p.y);
    const Dual u = invol::evaluate(expression_->first, x, y);
    const Dual v = invol::evaluate(expression_->second, x, y);
    return {{u.value, v.value}, {u.dx, u.dy, v.dx, v.dy}};
  }
  return native_->eval_jet(p);
}

std::string PlanarMap::describe() const {
  if (expression_) return "(" + to_string(expression_->first) + ", " + to_string(expression_->second) + ")";
  std::ostringstream os;
  os.precision(17);
  os << "native:" << native_->name();
  const auto params = native_->parameters();
  if (!params.empty()) {
    os << "{";
    bool first = true;
    for (const auto& [k, v] : params) {
      if (!first) os << ",";
      first = false;
      os << k << "=" << v;
    }
    os << "}";
  }
  return os.str();
}

std::pair<double, double> evaluate_pair(const PlanarMap& map, double x, double y) {
  const Point q = map.evaluate({x, y});
  return {q.x, q.y};
}

std::pair<Dual, Dual> evaluate_pair(const PlanarMap& map, const Dual& x, const Dual& y) {
  if (const auto* e = map.expression()) return {evaluate(e->first, x, y), evaluate(e->second, x, y)};
  const Jet j = map.evaluate_with_jacobian({x.value, y.value});
  const Mat2& d = j.jacobian;
  return {Dual{j.value.x, d.a11 * x.dx + d.a12 * y.dx, d.a11 * x.dy + d.a12 * y.dy},
          Dual{j.value.y, d.a21 * x.dx + d.a22 * y.dx, d.a21 * x.dy + d.a22 * y.dy}};
}

PlanarMap recentered(const PlanarMap& map, Point center) {
  if (const auto* e = map.expression()) {
    const ExprNode sx = ExprNode::var_x() + ExprNode::constant(center.x);
    const ExprNode sy = ExprNode::var_y() + ExprNode::constant(center.y);
    return PlanarMap::from_expressions(substitute(e->first, sx, sy) - ExprNode::constant(center.x),
                                       substitute(e->second, sx, sy) - ExprNode::constant(center.y));
  }
  return make_native("recentered", {{"cx", center.x}, {"cy", center.y}}, [base = map, center](auto x, auto y) {
    const auto [u, v] = evaluate_pair(base, x + center.x, y + center.y);
    return std::pair{u - center.x, v - center.y};
  });
}

}  // namespace invol
