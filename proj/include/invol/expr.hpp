#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "invol/dual.hpp"
#include "invol/linalg2.hpp"

namespace invol {

class PlanarMap;

enum class NodeKind {
  Constant,
  VarX,
  VarY,
  Add,
  Sub,
  Mul,
  Div,
  PowInt,
  Neg,
  Sinh,
  Cosh,
  Asinh,
  Sqrt,
  Abs,
};

/// Number of children a node of this kind carries.
int arity(NodeKind kind);

/// Expression tree over the variables x and y. Leaves carry no children,
/// unary kinds one, binary kinds two. `value` is meaningful for constants,
/// `exponent` (>= 0) for PowInt.
struct ExprNode {
  NodeKind kind = NodeKind::Constant;
  std::vector<ExprNode> children;
  double value = 0.0;
  int exponent = 0;

  static ExprNode constant(double v);
  static ExprNode var_x();
  static ExprNode var_y();
  static ExprNode unary(NodeKind kind, ExprNode operand);
  static ExprNode binary(NodeKind kind, ExprNode lhs, ExprNode rhs);
  static ExprNode pow(ExprNode base, int exponent);

  friend bool operator==(const ExprNode&, const ExprNode&) = default;
};

ExprNode operator+(ExprNode a, ExprNode b);
ExprNode operator-(ExprNode a, ExprNode b);
ExprNode operator*(ExprNode a, ExprNode b);
ExprNode operator/(ExprNode a, ExprNode b);
ExprNode operator-(ExprNode a);

/// Parse a single scalar expression. Throws ParseError.
ExprNode parse_expression(std::string_view source);

/// Parse "(f1, f2)" into an expression-backed map. Throws ParseError.
PlanarMap parse(std::string_view source);

/// Fully parenthesized text that parses back to an identically-evaluating
/// tree (constants are printed with 17 significant digits).
std::string to_string(const ExprNode& node);

/// Evaluate at (x, y). Throws EvaluationError on division by zero or sqrt
/// outside its domain.
double evaluate(const ExprNode& node, double x, double y);
Dual evaluate(const ExprNode& node, const Dual& x, const Dual& y);

/// Replace every x by `x_repl` and every y by `y_repl`.
ExprNode substitute(const ExprNode& node, const ExprNode& x_repl, const ExprNode& y_repl);

}  // namespace invol
