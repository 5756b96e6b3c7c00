#include "jumpdet/expression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "jumpdet/errors.hpp"
#include "jumpdet/format.hpp"

namespace jumpdet {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double sign_of(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

double apply(UnaryFunction fn, double v) {
  switch (fn) {
    case UnaryFunction::sin: return std::sin(v);
    case UnaryFunction::cos: return std::cos(v);
    case UnaryFunction::exp: return std::exp(v);
    case UnaryFunction::abs: return std::fabs(v);
    case UnaryFunction::sign: return sign_of(v);
    case UnaryFunction::sqrt: return std::sqrt(v);
  }
  return 0.0;
}

double apply(BinaryOp op, double a, double b) {
  switch (op) {
    case BinaryOp::add: return a + b;
    case BinaryOp::subtract: return a - b;
    case BinaryOp::multiply: return a * b;
    case BinaryOp::divide: return a / b;
    case BinaryOp::power: return std::pow(a, b);
  }
  return 0.0;
}

// Value and derivative along t, where the variable moves as x0 + side * t.
struct Jet {
  double v;
  double d;
};

// Sign of the argument just off x0 when its value at x0 is zero. Falls back to
// probing nearby points when the first-order term vanishes too.
double one_sided_sign(const Expression& arg, const Jet& j, double x0, int side) {
  if (j.v != 0.0) return sign_of(j.v);
  if (std::isfinite(j.d) && j.d != 0.0) return sign_of(j.d);
  if (std::isinf(j.d)) return sign_of(j.d);
  const double scale = std::max(1.0, std::fabs(x0));
  for (double h : {1e-6, 1e-9, 1e-12}) {
    const double probe = arg.evaluate(x0 + side * h * scale);
    if (probe != 0.0 && std::isfinite(probe)) return sign_of(probe);
  }
  return 0.0;
}

Jet jet(const Expression& e, double x0, int side) {
  return std::visit(
      Overloaded{
          [](const Expression::Number& n) { return Jet{n.value, 0.0}; },
          [](const Expression::Pi&) { return Jet{std::numbers::pi, 0.0}; },
          [x0, side](const Expression::Variable&) { return Jet{x0, static_cast<double>(side)}; },
          [&](const Expression::Negate& n) {
            const Jet a = jet(n.operand, x0, side);
            return Jet{-a.v, -a.d};
          },
          [&](const Expression::Binary& b) {
            const Jet l = jet(b.lhs, x0, side);
            const Jet r = jet(b.rhs, x0, side);
            switch (b.op) {
              case BinaryOp::add: return Jet{l.v + r.v, l.d + r.d};
              case BinaryOp::subtract: return Jet{l.v - r.v, l.d - r.d};
              case BinaryOp::multiply: return Jet{l.v * r.v, l.d * r.v + l.v * r.d};
              case BinaryOp::divide:
                return Jet{l.v / r.v, (l.d * r.v - l.v * r.d) / (r.v * r.v)};
              case BinaryOp::power: {
                const double n = r.v;
                return Jet{std::pow(l.v, n), n * std::pow(l.v, n - 1.0) * l.d};
              }
            }
            return Jet{0.0, 0.0};
          },
          [&](const Expression::Call& c) {
            const Jet a = jet(c.argument, x0, side);
            switch (c.fn) {
              case UnaryFunction::sin: return Jet{std::sin(a.v), std::cos(a.v) * a.d};
              case UnaryFunction::cos: return Jet{std::cos(a.v), -std::sin(a.v) * a.d};
              case UnaryFunction::exp: {
                const double ev = std::exp(a.v);
                return Jet{ev, ev * a.d};
              }
              case UnaryFunction::abs: {
                const double s = one_sided_sign(c.argument, a, x0, side);
                return Jet{std::fabs(a.v), s * a.d};
              }
              case UnaryFunction::sign: {
                return Jet{one_sided_sign(c.argument, a, x0, side), 0.0};
              }
              case UnaryFunction::sqrt: {
                const double root = std::sqrt(a.v);
                if (root == 0.0) {
                  return Jet{0.0, a.d > 0 ? std::numeric_limits<double>::infinity() : 0.0};
                }
                return Jet{root, a.d / (2.0 * root)};
              }
            }
            return Jet{0.0, 0.0};
          },
      },
      e.node().value);
}

using Poly = std::vector<double>;

Poly poly_add(const Poly& a, const Poly& b, double sign) {
  Poly out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += sign * b[i];
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0.0) p.pop_back();
}

std::optional<Poly> to_poly(const Expression& e) {
  if (!e.depends_on_variable()) return Poly{e.evaluate(0.0)};
  return std::visit(
      Overloaded{
          [](const Expression::Number& n) -> std::optional<Poly> { return Poly{n.value}; },
          [](const Expression::Pi&) -> std::optional<Poly> { return Poly{std::numbers::pi}; },
          [](const Expression::Variable&) -> std::optional<Poly> { return Poly{0.0, 1.0}; },
          [](const Expression::Negate& n) -> std::optional<Poly> {
            auto p = to_poly(n.operand);
            if (!p) return std::nullopt;
            for (double& c : *p) c = -c;
            return p;
          },
          [](const Expression::Binary& b) -> std::optional<Poly> {
            auto l = to_poly(b.lhs);
            if (!l) return std::nullopt;
            if (b.op == BinaryOp::power) {
              if (b.rhs.depends_on_variable()) return std::nullopt;
              const double n = b.rhs.evaluate(0.0);
              if (n < 0 || n != std::floor(n) || n > 64) return std::nullopt;
              Poly out{1.0};
              for (int i = 0; i < static_cast<int>(n); ++i) out = poly_mul(out, *l);
              return out;
            }
            auto r = to_poly(b.rhs);
            if (!r) return std::nullopt;
            switch (b.op) {
              case BinaryOp::add: return poly_add(*l, *r, 1.0);
              case BinaryOp::subtract: return poly_add(*l, *r, -1.0);
              case BinaryOp::multiply: return poly_mul(*l, *r);
              case BinaryOp::divide: {
                trim(*r);
                if (r->size() != 1 || (*r)[0] == 0.0) return std::nullopt;
                for (double& c : *l) c /= (*r)[0];
                return l;
              }
              case BinaryOp::power: break;
            }
            return std::nullopt;
          },
          [](const Expression::Call&) -> std::optional<Poly> { return std::nullopt; },
      },
      e.node().value);
}

// Precedence levels used by the printer: 1 additive, 2 multiplicative,
// 3 unary minus, 4 power, 5 atoms and calls.
int precedence(const Expression& e) {
  return std::visit(Overloaded{
                        [](const Expression::Negate&) { return 3; },
                        [](const Expression::Binary& b) {
                          switch (b.op) {
                            case BinaryOp::add:
                            case BinaryOp::subtract: return 1;
                            case BinaryOp::multiply:
                            case BinaryOp::divide: return 2;
                            case BinaryOp::power: return 4;
                          }
                          return 0;
                        },
                        [](const auto&) { return 5; },
                    },
                    e.node().value);
}

std::string wrap(const Expression& e, bool parens) {
  return parens ? "(" + e.to_string() + ")" : e.to_string();
}

}  // namespace

const char* function_name(UnaryFunction fn) noexcept {
  switch (fn) {
    case UnaryFunction::sin: return "sin";
    case UnaryFunction::cos: return "cos";
    case UnaryFunction::exp: return "exp";
    case UnaryFunction::abs: return "abs";
    case UnaryFunction::sign: return "sign";
    case UnaryFunction::sqrt: return "sqrt";
  }
  return "?";
}

std::optional<UnaryFunction> function_from_name(std::string_view name) noexcept {
  for (auto fn : {UnaryFunction::sin, UnaryFunction::cos, UnaryFunction::exp, UnaryFunction::abs,
                  UnaryFunction::sign, UnaryFunction::sqrt}) {
    if (name == function_name(fn)) return fn;
  }
  return std::nullopt;
}

Expression Expression::number(double value) {
  return Expression(std::make_shared<const ExpressionNode>(ExpressionNode{Number{value}}));
}
Expression Expression::variable() {
  return Expression(std::make_shared<const ExpressionNode>(ExpressionNode{Variable{}}));
}
Expression Expression::pi() {
  return Expression(std::make_shared<const ExpressionNode>(ExpressionNode{Pi{}}));
}
Expression Expression::negate(Expression operand) {
  return Expression(
      std::make_shared<const ExpressionNode>(ExpressionNode{Negate{std::move(operand)}}));
}
Expression Expression::binary(BinaryOp op, Expression lhs, Expression rhs) {
  return Expression(std::make_shared<const ExpressionNode>(
      ExpressionNode{Binary{op, std::move(lhs), std::move(rhs)}}));
}
Expression Expression::call(UnaryFunction fn, Expression argument) {
  return Expression(
      std::make_shared<const ExpressionNode>(ExpressionNode{Call{fn, std::move(argument)}}));
}

double Expression::evaluate(double x) const {
  return std::visit(Overloaded{
                        [](const Number& n) { return n.value; },
                        [](const Pi&) { return std::numbers::pi; },
                        [x](const Variable&) { return x; },
                        [x](const Negate& n) { return -n.operand.evaluate(x); },
                        [x](const Binary& b) {
                          return apply(b.op, b.lhs.evaluate(x), b.rhs.evaluate(x));
                        },
                        [x](const Call& c) { return apply(c.fn, c.argument.evaluate(x)); },
                    },
                    node_->value);
}

double Expression::limit(double x, int side) const {
  if (side == 0) return evaluate(x);
  return jet(*this, x, side > 0 ? 1 : -1).v;
}

bool Expression::depends_on_variable() const {
  return std::visit(Overloaded{
                        [](const Variable&) { return true; },
                        [](const Negate& n) { return n.operand.depends_on_variable(); },
                        [](const Binary& b) {
                          return b.lhs.depends_on_variable() || b.rhs.depends_on_variable();
                        },
                        [](const Call& c) { return c.argument.depends_on_variable(); },
                        [](const auto&) { return false; },
                    },
                    node_->value);
}

std::optional<std::vector<double>> Expression::as_polynomial() const {
  auto p = to_poly(*this);
  if (p) trim(*p);
  return p;
}

Expression Expression::substitute(const Expression& inner) const {
  return std::visit(Overloaded{
                        [&](const Variable&) { return inner; },
                        [&](const Negate& n) { return negate(n.operand.substitute(inner)); },
                        [&](const Binary& b) {
                          return binary(b.op, b.lhs.substitute(inner), b.rhs.substitute(inner));
                        },
                        [&](const Call& c) { return call(c.fn, c.argument.substitute(inner)); },
                        [this](const auto&) { return *this; },
                    },
                    node_->value);
}

std::string Expression::to_string() const {
  return std::visit(
      Overloaded{
          [](const Number& n) {
            const std::string text = format_double(n.value);
            return n.value < 0 ? "(0-" + format_double(-n.value) + ")" : text;
          },
          [](const Pi&) { return std::string("pi"); },
          [](const Variable&) { return std::string("x"); },
          [](const Negate& n) { return "-" + wrap(n.operand, precedence(n.operand) < 3); },
          [](const Binary& b) {
            switch (b.op) {
              case BinaryOp::add:
                return wrap(b.lhs, false) + "+" + wrap(b.rhs, precedence(b.rhs) <= 1);
              case BinaryOp::subtract:
                return wrap(b.lhs, false) + "-" + wrap(b.rhs, precedence(b.rhs) <= 1);
              case BinaryOp::multiply:
                return wrap(b.lhs, precedence(b.lhs) < 2) + "*" +
                       wrap(b.rhs, precedence(b.rhs) <= 2);
              case BinaryOp::divide:
                return wrap(b.lhs, precedence(b.lhs) < 2) + "/" +
                       wrap(b.rhs, precedence(b.rhs) <= 2);
              case BinaryOp::power:
                return wrap(b.lhs, precedence(b.lhs) < 5) + "^" +
                       wrap(b.rhs, precedence(b.rhs) < 3);
            }
            return std::string();
          },
          [](const Call& c) {
            return std::string(function_name(c.fn)) + "(" + c.argument.to_string() + ")";
          },
      },
      node_->value);
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.node_ == b.node_) return true;
  return std::visit(
      Overloaded{
          [](const Expression::Number& x, const Expression::Number& y) {
            return x.value == y.value || (std::isnan(x.value) && std::isnan(y.value));
          },
          [](const Expression::Pi&, const Expression::Pi&) { return true; },
          [](const Expression::Variable&, const Expression::Variable&) { return true; },
          [](const Expression::Negate& x, const Expression::Negate& y) {
            return x.operand == y.operand;
          },
          [](const Expression::Binary& x, const Expression::Binary& y) {
            return x.op == y.op && x.lhs == y.lhs && x.rhs == y.rhs;
          },
          [](const Expression::Call& x, const Expression::Call& y) {
            return x.fn == y.fn && x.argument == y.argument;
          },
          [](const auto&, const auto&) { return false; },
      },
      a.node_->value, b.node_->value);
}

}  // namespace jumpdet
