#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jumpdet/expression.hpp"

namespace jumpdet {

struct Interval {
  double lo;
  double hi;

  double length() const noexcept { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Location and size f(x+0) - f(x-0) of one discontinuity.
struct JumpMark {
  double location;
  double magnitude;

  friend bool operator==(const JumpMark&, const JumpMark&) = default;
};

struct OneSidedLimits {
  double left;   ///< f(x-0)
  double right;  ///< f(x+0)
};

/// Piecewise-defined test function on a closed interval.
///
/// One expression per open subinterval between consecutive breakpoints. At a
/// breakpoint the value is always the midpoint of the one-sided limits, which
/// overrides whatever the neighbouring piece formulas give there. A periodic
/// function is extended with period hi - lo and its domain endpoints behave as
/// one more breakpoint (the seam).
class PiecewiseFunction {
 public:
  /// Validates and builds; throws DomainError when breakpoints are not
  /// strictly increasing and interior, when the piece count does not match,
  /// or when a piece has a non-finite one-sided limit at one of its ends.
  PiecewiseFunction(Interval domain, std::vector<double> breakpoints,
                    std::vector<Expression> pieces, bool periodic,
                    std::optional<std::vector<JumpMark>> declared_jumps = std::nullopt);

  const Interval& domain() const noexcept { return domain_; }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<Expression>& pieces() const noexcept { return pieces_; }
  bool periodic() const noexcept { return periodic_; }
  const std::optional<std::vector<JumpMark>>& declared_jumps() const noexcept {
    return declared_jumps_;
  }

  /// Open interval of piece i.
  Interval piece_interval(std::size_t i) const;

  double evaluate(double x) const;
  OneSidedLimits one_sided_limits(double x) const;
  double true_jump(double x) const;

  /// Every breakpoint (and the seam of a periodic function) with a nonzero
  /// jump, computed from the piece formulas.
  std::vector<JumpMark> jumps() const;

  /// Function-spec text that parses back to an equal function.
  std::string to_string() const;

  friend bool operator==(const PiecewiseFunction& a, const PiecewiseFunction& b);

 private:
  // Reduces x into [lo, hi) for periodic functions; throws DomainError for
  // x outside the domain otherwise.
  double reduce(double x) const;
  std::size_t piece_containing(double x) const;

  Interval domain_;
  std::vector<double> breakpoints_;
  std::vector<Expression> pieces_;
  bool periodic_;
  std::optional<std::vector<JumpMark>> declared_jumps_;
};

/// Parses the function-spec grammar:
///
///     spec        := [domain_decl ";"] piece_decl {";" piece_decl} [";" jumps_decl] [";"]
///     domain_decl := "domain" "[" const "," const "]" ["periodic"]
///     piece_decl  := "piece" expr ["on" interval]
///     interval    := ("[" | "(") const "," const (")" | "]")
///     jumps_decl  := "jumps" "{" const ":" const {"," const ":" const} "}"
///
/// `const` is any expression free of x (so `-pi/2` is a valid bound). The
/// domain may be omitted when the piece intervals cover it; the interval may be
/// omitted for a single piece spanning the declared domain. `#` starts a
/// comment running to the end of the line.
///
/// Throws ParseError (with line and column) for syntax errors, ArityError for
/// unknown functions, DomainError for inconsistent intervals.
PiecewiseFunction parse_function_spec(std::string_view text);

/// g(theta) = f(cos theta) on [-pi, pi], periodic. Breakpoints x_m of f map to
/// +-arccos(x_m). `f` must live on [-1, 1].
PiecewiseFunction compose_with_cosine(const PiecewiseFunction& f);

}  // namespace jumpdet
