#include "jumpdet/funcspec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jumpdet/errors.hpp"
#include "jumpdet/format.hpp"

namespace jumpdet {

PiecewiseFunction::PiecewiseFunction(Interval domain, std::vector<double> breakpoints,
                                     std::vector<Expression> pieces, bool periodic,
                                     std::optional<std::vector<JumpMark>> declared_jumps)
    : domain_(domain),
      breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      periodic_(periodic),
      declared_jumps_(std::move(declared_jumps)) {
  if (!(std::isfinite(domain_.lo) && std::isfinite(domain_.hi) && domain_.lo < domain_.hi)) {
    throw DomainError("domain must be a finite interval with lo < hi");
  }
  if (pieces_.size() != breakpoints_.size() + 1) {
    throw DomainError("expected " + std::to_string(breakpoints_.size() + 1) + " pieces, got " +
                      std::to_string(pieces_.size()));
  }
  double prev = domain_.lo;
  for (double b : breakpoints_) {
    if (!(b > prev) || !(b < domain_.hi)) {
      throw DomainError("breakpoint " + format_double(b) +
                        " is not strictly increasing and interior to the domain");
    }
    prev = b;
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Interval iv = piece_interval(i);
    const double left = pieces_[i].limit(iv.lo, +1);
    const double right = pieces_[i].limit(iv.hi, -1);
    const double mid = pieces_[i].evaluate(0.5 * (iv.lo + iv.hi));
    if (!std::isfinite(left) || !std::isfinite(right) || !std::isfinite(mid)) {
      throw DomainError("piece " + std::to_string(i) + " (" + pieces_[i].to_string() +
                        ") is not finite on [" + format_double(iv.lo) + ", " +
                        format_double(iv.hi) + "]");
    }
  }
}

Interval PiecewiseFunction::piece_interval(std::size_t i) const {
  const double lo = i == 0 ? domain_.lo : breakpoints_[i - 1];
  const double hi = i == breakpoints_.size() ? domain_.hi : breakpoints_[i];
  return Interval{lo, hi};
}

double PiecewiseFunction::reduce(double x) const {
  if (!std::isfinite(x)) throw DomainError("point is not finite");
  if (!periodic_) {
    if (x < domain_.lo || x > domain_.hi) {
      throw DomainError("x = " + format_double(x) + " lies outside [" + format_double(domain_.lo) +
                        ", " + format_double(domain_.hi) + "]");
    }
    return x;
  }
  if (x >= domain_.lo && x < domain_.hi) return x;
  const double period = domain_.length();
  double r = std::fmod(x - domain_.lo, period);
  if (r < 0) r += period;
  const double y = domain_.lo + r;
  return y >= domain_.hi ? domain_.lo : y;
}

std::size_t PiecewiseFunction::piece_containing(double x) const {
  return static_cast<std::size_t>(std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x) -
                                  breakpoints_.begin());
}

OneSidedLimits PiecewiseFunction::one_sided_limits(double x) const {
  const double y = reduce(x);
  if (y == domain_.lo || y == domain_.hi) {
    if (!periodic_) {
      throw DomainError("one-sided limits need an interior point of a non-periodic function");
    }
    return OneSidedLimits{pieces_.back().limit(domain_.hi, -1), pieces_.front().limit(domain_.lo, +1)};
  }
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), y);
  if (it != breakpoints_.end() && *it == y) {
    const auto i = static_cast<std::size_t>(it - breakpoints_.begin());
    return OneSidedLimits{pieces_[i].limit(y, -1), pieces_[i + 1].limit(y, +1)};
  }
  const Expression& piece = pieces_[piece_containing(y)];
  return OneSidedLimits{piece.limit(y, -1), piece.limit(y, +1)};
}

double PiecewiseFunction::evaluate(double x) const {
  const double y = reduce(x);
  if (y == domain_.lo || y == domain_.hi) {
    if (!periodic_) {
      return y == domain_.lo ? pieces_.front().limit(y, +1) : pieces_.back().limit(y, -1);
    }
    const auto lim = one_sided_limits(y);
    return 0.5 * (lim.left + lim.right);
  }
  if (std::binary_search(breakpoints_.begin(), breakpoints_.end(), y)) {
    const auto lim = one_sided_limits(y);
    return 0.5 * (lim.left + lim.right);
  }
  return pieces_[piece_containing(y)].evaluate(y);
}

double PiecewiseFunction::true_jump(double x) const {
  const auto lim = one_sided_limits(x);
  return lim.right - lim.left;
}

std::vector<JumpMark> PiecewiseFunction::jumps() const {
  std::vector<JumpMark> out;
  if (periodic_) {
    const double j = true_jump(domain_.lo);
    if (j != 0.0) out.push_back(JumpMark{domain_.lo, j});
  }
  for (double b : breakpoints_) {
    const double j = true_jump(b);
    if (j != 0.0) out.push_back(JumpMark{b, j});
  }
  return out;
}

std::string PiecewiseFunction::to_string() const {
  std::string out = "domain [" + format_double(domain_.lo) + ", " + format_double(domain_.hi) + "]";
  if (periodic_) out += " periodic";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Interval iv = piece_interval(i);
    out += ";\npiece " + pieces_[i].to_string() + " on (" + format_double(iv.lo) + ", " +
           format_double(iv.hi) + ")";
  }
  if (declared_jumps_ && !declared_jumps_->empty()) {
    out += ";\njumps {";
    for (std::size_t i = 0; i < declared_jumps_->size(); ++i) {
      const auto& j = (*declared_jumps_)[i];
      if (i > 0) out += ", ";
      out += format_double(j.location) + ": " + format_double(j.magnitude);
    }
    out += "}";
  }
  return out + "\n";
}

bool operator==(const PiecewiseFunction& a, const PiecewiseFunction& b) {
  return a.domain_ == b.domain_ && a.breakpoints_ == b.breakpoints_ && a.pieces_ == b.pieces_ &&
         a.periodic_ == b.periodic_ && a.declared_jumps_ == b.declared_jumps_;
}

PiecewiseFunction compose_with_cosine(const PiecewiseFunction& f) {
  if (f.domain().lo != -1.0 || f.domain().hi != 1.0) {
    throw DomainError("compose_with_cosine needs a function on [-1, 1]");
  }
  const Expression cos_theta = Expression::call(UnaryFunction::cos, Expression::variable());
  const auto& bps = f.breakpoints();
  const auto& pieces = f.pieces();
  const std::size_t m = bps.size();

  std::vector<double> theta_bps;
  std::vector<Expression> theta_pieces;
  // theta in (-pi, 0): x = cos(theta) increases from -1 to 1.
  for (std::size_t i = 0; i < m; ++i) {
    theta_pieces.push_back(pieces[i].substitute(cos_theta));
    theta_bps.push_back(-std::acos(bps[i]));
  }
  // The last piece of f straddles theta = 0 (x = 1).
  theta_pieces.push_back(pieces[m].substitute(cos_theta));
  for (std::size_t i = m; i-- > 0;) {
    theta_bps.push_back(std::acos(bps[i]));
    theta_pieces.push_back(pieces[i].substitute(cos_theta));
  }
  return PiecewiseFunction(Interval{-std::numbers::pi, std::numbers::pi}, std::move(theta_bps),
                           std::move(theta_pieces), true);
}

}  // namespace jumpdet
