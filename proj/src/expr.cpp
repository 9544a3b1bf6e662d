#include "invol/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <type_traits>
#include <utility>

#include "invol/errors.hpp"
#include "invol/planar_map.hpp"

namespace invol {

int arity(NodeKind kind) {
  switch (kind) {
    case NodeKind::Constant:
    case NodeKind::VarX:
    case NodeKind::VarY:
      return 0;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div:
      return 2;
    case NodeKind::PowInt:
    case NodeKind::Neg:
    case NodeKind::Sinh:
    case NodeKind::Cosh:
    case NodeKind::Asinh:
    case NodeKind::Sqrt:
    case NodeKind::Abs:
      return 1;
  }
  return 0;
}

ExprNode ExprNode::constant(double v) {
  ExprNode n;
  n.kind = NodeKind::Constant;
  n.value = v;
  return n;
}

ExprNode ExprNode::var_x() {
  ExprNode n;
  n.kind = NodeKind::VarX;
  return n;
}

ExprNode ExprNode::var_y() {
  ExprNode n;
  n.kind = NodeKind::VarY;
  return n;
}

ExprNode ExprNode::unary(NodeKind kind, ExprNode operand) {
  ExprNode n;
  n.kind = kind;
  n.children.push_back(std::move(operand));
  return n;
}

ExprNode ExprNode::binary(NodeKind kind, ExprNode lhs, ExprNode rhs) {
  ExprNode n;
  n.kind = kind;
  n.children.reserve(2);
  n.children.push_back(std::move(lhs));
  n.children.push_back(std::move(rhs));
  return n;
}

ExprNode ExprNode::pow(ExprNode base, int exponent) {
  if (exponent < 0) throw Error("pow-integer exponent must be non-negative");
  ExprNode n = unary(NodeKind::PowInt, std::move(base));
  n.exponent = exponent;
  return n;
}

ExprNode operator+(ExprNode a, ExprNode b) { return ExprNode::binary(NodeKind::Add, std::move(a), std::move(b)); }
ExprNode operator-(ExprNode a, ExprNode b) { return ExprNode::binary(NodeKind::Sub, std::move(a), std::move(b)); }
ExprNode operator*(ExprNode a, ExprNode b) { return ExprNode::binary(NodeKind::Mul, std::move(a), std::move(b)); }
ExprNode operator/(ExprNode a, ExprNode b) { return ExprNode::binary(NodeKind::Div, std::move(a), std::move(b)); }
ExprNode operator-(ExprNode a) { return ExprNode::unary(NodeKind::Neg, std::move(a)); }

namespace {

constexpr int kMaxExponent = 4096;

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind = Tok::End;
  std::size_t offset = 0;
  std::string_view text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    current_.offset = pos_;
    if (pos_ >= src_.size()) {
      current_.kind = Tok::End;
      current_.text = {};
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      lex_number();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      current_.kind = Tok::Ident;
      current_.text = src_.substr(start, pos_ - start);
      return;
    }
    switch (c) {
      case '+': current_.kind = Tok::Plus; break;
      case '-': current_.kind = Tok::Minus; break;
      case '*': current_.kind = Tok::Star; break;
      case '/': current_.kind = Tok::Slash; break;
      case '^': current_.kind = Tok::Caret; break;
      case '(': current_.kind = Tok::LParen; break;
      case ')': current_.kind = Tok::RParen; break;
      case ',': current_.kind = Tok::Comma; break;
      default:
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }
    current_.text = src_.substr(pos_, 1);
    ++pos_;
  }

  void lex_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) throw ParseError(start, "malformed number");
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      const std::size_t save = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) {
        pos_ = save;
        throw ParseError(save, "malformed number exponent");
      }
    }
    current_.kind = Tok::Number;
    current_.text = src_.substr(start, pos_ - start);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token current_;
};

bool starts_operand(Tok t) {
  return t == Tok::Number || t == Tok::Ident || t == Tok::LParen || t == Tok::Minus;
}

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  ExprNode parse_single() {
    ExprNode e = expr();
    expect_end();
    return e;
  }

  std::pair<ExprNode, ExprNode> parse_pair() {
    expect(Tok::LParen, "'(' opening the map");
    ExprNode first = expr();
    expect(Tok::Comma, "',' between the two components");
    ExprNode second = expr();
    expect(Tok::RParen, "')' closing the map");
    expect_end();
    return {std::move(first), std::move(second)};
  }

 private:
  void expect(Tok kind, const char* what) {
    const Token& t = lex_.peek();
    if (t.kind != kind) throw ParseError(t.offset, std::string("expected ") + what + ", found " + describe(t));
    lex_.take();
  }

  void expect_end() {
    const Token& t = lex_.peek();
    if (t.kind != Tok::End) throw ParseError(t.offset, "unexpected trailing input " + describe(t));
  }

  void require_operand_after(const Token& op) {
    if (!starts_operand(lex_.peek().kind))
      throw ParseError(op.offset, "missing operand after '" + std::string(op.text) + "'");
  }

  ExprNode expr() {
    ExprNode lhs = term();
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      const Token op = lex_.take();
      require_operand_after(op);
      ExprNode rhs = term();
      lhs = ExprNode::binary(op.kind == Tok::Plus ? NodeKind::Add : NodeKind::Sub, std::move(lhs),
                             std::move(rhs));
    }
    return lhs;
  }

  ExprNode term() {
    ExprNode lhs = factor();
    while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
      const Token op = lex_.take();
      require_operand_after(op);
      ExprNode rhs = factor();
      lhs = ExprNode::binary(op.kind == Tok::Star ? NodeKind::Mul : NodeKind::Div, std::move(lhs),
                             std::move(rhs));
    }
    return lhs;
  }

  ExprNode factor() {
    ExprNode base = unary();
    if (lex_.peek().kind != Tok::Caret) return base;
    const Token caret = lex_.take();
    const Token& t = lex_.peek();
    if (t.kind == Tok::Minus) throw ParseError(t.offset, "malformed exponent: negative exponents are not supported");
    if (t.kind != Tok::Number) throw ParseError(t.offset, "malformed exponent: expected a non-negative integer after '^'");
    for (char c : t.text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError(t.offset, "malformed exponent: '" + std::string(t.text) + "' is not an integer");
    }
    int n = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
    if (ec != std::errc() || n > kMaxExponent)
      throw ParseError(t.offset, "malformed exponent: '" + std::string(t.text) + "' is too large");
    (void)ptr;
    (void)caret;
    lex_.take();
    return ExprNode::pow(std::move(base), n);
  }

  ExprNode unary() {
    if (lex_.peek().kind == Tok::Minus) {
      const Token op = lex_.take();
      require_operand_after(op);
      return -unary();
    }
    return atom();
  }

  ExprNode atom() {
    const Token t = lex_.peek();
    switch (t.kind) {
      case Tok::Number: {
        lex_.take();
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size() || !std::isfinite(v))
          throw ParseError(t.offset, "number out of range '" + std::string(t.text) + "'");
        return ExprNode::constant(v);
      }
      case Tok::Ident: {
        lex_.take();
        if (t.text == "x") return ExprNode::var_x();
        if (t.text == "y") return ExprNode::var_y();
        NodeKind fn;
        if (t.text == "sinh") fn = NodeKind::Sinh;
        else if (t.text == "cosh") fn = NodeKind::Cosh;
        else if (t.text == "asinh") fn = NodeKind::Asinh;
        else if (t.text == "sqrt") fn = NodeKind::Sqrt;
        else if (t.text == "abs") fn = NodeKind::Abs;
        else throw ParseError(t.offset, "unknown identifier '" + std::string(t.text) + "'");
        expect(Tok::LParen, "'(' after function name");
        ExprNode arg = expr();
        expect(Tok::RParen, "')' closing function argument");
        return ExprNode::unary(fn, std::move(arg));
      }
      case Tok::LParen: {
        lex_.take();
        ExprNode inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError(t.offset, "expected an operand, found " + describe(t));
    }
  }

  Lexer lex_;
};

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* function_name(NodeKind k) {
  switch (k) {
    case NodeKind::Sinh: return "sinh";
    case NodeKind::Cosh: return "cosh";
    case NodeKind::Asinh: return "asinh";
    case NodeKind::Sqrt: return "sqrt";
    case NodeKind::Abs: return "abs";
    default: return "";
  }
}

void print(const ExprNode& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::Constant:
      if (std::signbit(n.value)) {
        out += "(-";
        out += format_number(-n.value);
        out += ")";
      } else {
        out += format_number(n.value);
      }
      return;
    case NodeKind::VarX: out += "x"; return;
    case NodeKind::VarY: out += "y"; return;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div: {
      static constexpr char ops[] = {'+', '-', '*', '/'};
      const char op = ops[static_cast<int>(n.kind) - static_cast<int>(NodeKind::Add)];
      out += "(";
      print(n.children[0], out);
      out += " ";
      out += op;
      out += " ";
      print(n.children[1], out);
      out += ")";
      return;
    }
    case NodeKind::PowInt:
      out += "(";
      print(n.children[0], out);
      out += ")^";
      out += std::to_string(n.exponent);
      return;
    case NodeKind::Neg:
      out += "(-";
      print(n.children[0], out);
      out += ")";
      return;
    case NodeKind::Sinh:
    case NodeKind::Cosh:
    case NodeKind::Asinh:
    case NodeKind::Sqrt:
    case NodeKind::Abs:
      out += function_name(n.kind);
      out += "(";
      print(n.children[0], out);
      out += ")";
      return;
  }
}

template <class T>
struct Evaluator {
  T x;
  T y;

  [[noreturn]] void fail(const std::string& msg) const {
    throw EvaluationError({value_of(x), value_of(y)}, msg);
  }

  T operator()(const ExprNode& n) const {
    using std::abs, std::asinh, std::cosh, std::sinh, std::sqrt;
    switch (n.kind) {
      case NodeKind::Constant: return T(n.value);
      case NodeKind::VarX: return x;
      case NodeKind::VarY: return y;
      case NodeKind::Add: return (*this)(n.children[0]) + (*this)(n.children[1]);
      case NodeKind::Sub: return (*this)(n.children[0]) - (*this)(n.children[1]);
      case NodeKind::Mul: return (*this)(n.children[0]) * (*this)(n.children[1]);
      case NodeKind::Div: {
        const T num = (*this)(n.children[0]);
        const T den = (*this)(n.children[1]);
        if (value_of(den) == 0.0) fail("division by zero");
        return num / den;
      }
      case NodeKind::PowInt: {
        const T base = (*this)(n.children[0]);
        T acc = T(1.0);
        for (int i = 0; i < n.exponent; ++i) acc = acc * base;
        return acc;
      }
      case NodeKind::Neg: return -(*this)(n.children[0]);
      case NodeKind::Sinh: return sinh((*this)(n.children[0]));
      case NodeKind::Cosh: return cosh((*this)(n.children[0]));
      case NodeKind::Asinh: return asinh((*this)(n.children[0]));
      case NodeKind::Sqrt: {
        const T arg = (*this)(n.children[0]);
        if (value_of(arg) < 0.0) fail("sqrt of a negative number");
        if constexpr (std::is_same_v<T, Dual>) {
          if (arg.value == 0.0 && (arg.dx != 0.0 || arg.dy != 0.0)) fail("sqrt is not differentiable at 0");
          if (arg.value == 0.0) return Dual{0.0};
        }
        return sqrt(arg);
      }
      case NodeKind::Abs: return abs((*this)(n.children[0]));
    }
    fail("corrupt expression node");
  }
};

}  // namespace

ExprNode parse_expression(std::string_view source) { return Parser(source).parse_single(); }

PlanarMap parse(std::string_view source) {
  auto [first, second] = Parser(source).parse_pair();
  return PlanarMap::from_expressions(std::move(first), std::move(second));
}

std::string to_string(const ExprNode& node) {
  std::string out;
  print(node, out);
  return out;
}

double evaluate(const ExprNode& node, double x, double y) { return Evaluator<double>{x, y}(node); }

Dual evaluate(const ExprNode& node, const Dual& x, const Dual& y) { return Evaluator<Dual>{x, y}(node); }

ExprNode substitute(const ExprNode& node, const ExprNode& x_repl, const ExprNode& y_repl) {
  if (node.kind == NodeKind::VarX) return x_repl;
  if (node.kind == NodeKind::VarY) return y_repl;
  ExprNode out = node;
  for (auto& child : out.children) child = substitute(child, x_repl, y_repl);
  return out;
}

}  // namespace invol
