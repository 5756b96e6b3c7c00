#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace jumpdet {

enum class BinaryOp { add, subtract, multiply, divide, power };
enum class UnaryFunction { sin, cos, exp, abs, sign, sqrt };

const char* function_name(UnaryFunction fn) noexcept;
std::optional<UnaryFunction> function_from_name(std::string_view name) noexcept;

struct ExpressionNode;

/// Immutable arithmetic expression in one real variable `x`.
///
/// Nodes are shared, so copies are cheap and an Expression can be read from
/// several threads at once. Trees are built by the function-spec parser or by
/// the static factories below.
class Expression {
 public:
  struct Number {
    double value;
  };
  struct Variable {};
  struct Pi {};
  struct Negate;
  struct Binary;
  struct Call;

  static Expression number(double value);
  static Expression variable();
  static Expression pi();
  static Expression negate(Expression operand);
  static Expression binary(BinaryOp op, Expression lhs, Expression rhs);
  static Expression call(UnaryFunction fn, Expression argument);

  const ExpressionNode& node() const noexcept { return *node_; }

  /// Pointwise value; sign(0) is 0.
  double evaluate(double x) const;

  /// Limit of the expression as the variable approaches `x` from the left
  /// (side < 0) or from the right (side > 0).
  ///
  /// Continuous operations pass the point value through; sign() of an
  /// argument that vanishes at `x` takes the sign of its one-sided slope,
  /// which is how an expression such as sign(x) reports -1 / +1 at 0.
  double limit(double x, int side) const;

  bool depends_on_variable() const;

  /// Coefficients c_0..c_d of the expression as a polynomial in x, or nullopt
  /// when it is not one (any function call, division by a non-constant,
  /// negative powers of x).
  std::optional<std::vector<double>> as_polynomial() const;

  /// Copy of this tree with every occurrence of `x` replaced by `inner`.
  Expression substitute(const Expression& inner) const;

  /// Text that parses back to a structurally identical tree.
  std::string to_string() const;

  friend bool operator==(const Expression& a, const Expression& b);

 private:
  explicit Expression(std::shared_ptr<const ExpressionNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ExpressionNode> node_;
};

struct Expression::Negate {
  Expression operand;
};
struct Expression::Binary {
  BinaryOp op;
  Expression lhs;
  Expression rhs;
};
struct Expression::Call {
  UnaryFunction fn;
  Expression argument;
};

struct ExpressionNode {
  std::variant<Expression::Number, Expression::Variable, Expression::Pi, Expression::Negate,
               Expression::Binary, Expression::Call>
      value;
};

/// Parses a bare expression (no piece/domain syntax).
Expression parse_expression(std::string_view text);

}  // namespace jumpdet
