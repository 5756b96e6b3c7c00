#include "jumpdet/tails.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "jumpdet/errors.hpp"
#include "jumpdet/summation.hpp"

namespace jumpdet {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t resolve_cap(const FourierSeries& series, std::size_t n, const TailSumConfig& cfg) {
  const std::size_t cap = cfg.K_cap == 0 ? series.K() : cfg.K_cap;
  if (n < 1) throw IndexError("tail start n must be >= 1");
  if (cap > series.K()) {
    throw IndexError("K_cap = " + std::to_string(cap) + " exceeds K = " + std::to_string(series.K()));
  }
  // n > cap is an empty tail: value 0, remainder bound still reported.
  return cap;
}

// max k*rho_k over cap/2 < k <= cap.
double decay_constant(const FourierSeries& series, std::size_t cap) {
  double c = 0.0;
  for (std::size_t k = cap / 2 + 1; k <= cap; ++k) {
    c = std::max(c, static_cast<double>(k) * std::hypot(series.a[k - 1], series.b[k - 1]));
  }
  return c;
}

double int_pow(double base, int e) {
  double out = 1.0;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// (-1)^r sum_{k=n}^{cap} A_k / k^power, descending.
TailSum weighted_tail(const FourierSeries& series, double x0, int r, int power, std::size_t n,
                      const TailSumConfig& cfg) {
  const std::size_t cap = resolve_cap(series, n, cfg);
  CompensatedSum sum;
  for (std::size_t k = cap; k >= n; --k) {
    const double kd = static_cast<double>(k);
    const double kx = kd * x0;
    const double ak = series.a[k - 1] * std::sin(kx) - series.b[k - 1] * std::cos(kx);
    sum.add(ak / int_pow(kd, power));
    if (k == n) break;
  }
  TailSum out;
  out.K_cap = cap;
  out.value = (r % 2 == 0 ? 1.0 : -1.0) * sum.value();
  // sum_{k>cap} C k^-(power+1) <= C / (power cap^power)
  out.remainder_bound =
      decay_constant(series, cap) / (static_cast<double>(power) * int_pow(static_cast<double>(cap), power));
  out.precision_warning = out.remainder_bound > 0.01 * std::fabs(out.value);
  return out;
}

JumpEstimate scaled(Method m, double x0, int r, std::size_t n, const TailSum& t, double factor) {
  JumpEstimate e;
  e.method = m;
  e.x0 = x0;
  e.n = n;
  e.r = r;
  e.value = factor * t.value;
  e.remainder_bound = std::fabs(factor) * t.remainder_bound;
  e.precision_warning = t.precision_warning;
  return e;
}

}  // namespace

TailSum integrated_tail(const FourierSeries& series, double x0, int r, std::size_t n,
                        const TailSumConfig& cfg) {
  if (r < 0) throw ArgumentError("integrated tail order r must be >= 0");
  return weighted_tail(series, x0, r, 2 * r + 1, n, cfg);
}

JumpEstimate jump_from_integrated(const FourierSeries& series, double x0, int r, std::size_t n,
                                  const TailSumConfig& cfg) {
  const TailSum t = integrated_tail(series, x0, r, n, cfg);
  const double sign = r % 2 == 0 ? -1.0 : 1.0;
  const double factor =
      sign * (2.0 * r + 1.0) * kPi * int_pow(static_cast<double>(n), 2 * r + 1);
  return scaled(Method::integrated_tail, x0, r, n, t, factor);
}

TailSum conjugate_tail(const FourierSeries& series, double x0, int r, std::size_t n,
                       const TailSumConfig& cfg) {
  if (r < 1) throw ArgumentError("conjugate tail order r must be >= 1 (r = 0 is undefined)");
  return weighted_tail(series, x0, r, 2 * r, n, cfg);
}

JumpEstimate jump_from_conjugate(const FourierSeries& series, double x0, int r, std::size_t n,
                                 const TailSumConfig& cfg) {
  const TailSum t = conjugate_tail(series, x0, r, n, cfg);
  const double sign = r % 2 == 0 ? -1.0 : 1.0;
  const double factor = sign * 2.0 * r * kPi * int_pow(static_cast<double>(n), 2 * r);
  return scaled(Method::conjugate_tail, x0, r, n, t, factor);
}

double s_n_diagnostic(const FourierSeries& series, double x0, std::size_t n) {
  if (n < 1 || n > series.K()) {
    throw IndexError("n = " + std::to_string(n) + " outside 1..K = " + std::to_string(series.K()));
  }
  DoubleDouble sum;
  for (std::size_t k = 1; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double kx = kd * x0;
    sum += DoubleDouble::two_prod(kd, series.a[k - 1]) * std::sin(kx);
    sum += DoubleDouble::two_prod(-kd, series.b[k - 1]) * std::cos(kx);
  }
  return -(sum / static_cast<double>(n)).value();
}

V2Diagnostic v2_tail_diagnostic(const FourierSeries& series,
                                const std::vector<std::size_t>& n_values) {
  const std::size_t K = series.K();
  V2Diagnostic out;
  out.n_values = n_values;
  for (std::size_t n : n_values) {
    if (n < 1 || n > K) throw IndexError("n = " + std::to_string(n) + " outside 1..K");
  }
  const double c = decay_constant(series, K);
  double min_u = std::numeric_limits<double>::infinity();
  for (std::size_t n : n_values) {
    CompensatedSum sum;
    for (std::size_t k = K; k >= n; --k) {
      const double a = series.a[k - 1];
      const double b = series.b[k - 1];
      sum.add(a * a + b * b);
      if (k == n) break;
    }
    const double nd = static_cast<double>(n);
    out.u.push_back(nd * sum.value());
    // sum_{k>K} C^2/k^2 <= C^2/K
    out.dropped.push_back(nd * c * c / static_cast<double>(K));
    min_u = std::min(min_u, out.u.back());
  }
  for (double d : out.dropped) {
    if (d > 0.01 * min_u) out.precision_warning = true;
  }
  // Growth exponent over the positive entries.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (out.u[i] <= 0.0) continue;
    const double lx = std::log(static_cast<double>(n_values[i]));
    const double ly = std::log(out.u[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  const double md = static_cast<double>(m);
  const double denom = md * sxx - sx * sx;
  out.growth_exponent = (m >= 2 && denom > 0.0) ? (md * sxy - sx * sy) / denom : 0.0;
  out.bounded = out.growth_exponent <= kV2GrowthTolerance;
  return out;
}

ParsevalCheck parseval_increment_check(const PiecewiseFunction& f, const FourierSeries& series,
                                       std::size_t n, const QuadratureConfig& quad) {
  if (n < 1) throw ArgumentError("shift divisor n must be >= 1");
  if (!f.periodic()) throw DomainError("Parseval increment check needs a periodic function");
  const double lo = f.domain().lo;
  const double hi = f.domain().hi;
  const double period = hi - lo;
  const double h = kPi / static_cast<double>(n);

  // Split at every point where f(x) or f(x+h) can jump or kink.
  std::vector<double> splits;
  for (double b : f.breakpoints()) {
    splits.push_back(b);
    double s = std::fmod(b - h - lo, period);
    if (s < 0) s += period;
    splits.push_back(lo + s);
  }
  {
    double s = std::fmod(hi - h - lo, period);
    if (s < 0) s += period;
    splits.push_back(lo + s);
  }
  const auto integrand = [&](double x) {
    const double d = f.evaluate(x + h) - f.evaluate(x);
    return d * d;
  };
  const QuadratureResult q = integrate_piecewise(integrand, lo, hi, splits, quad);

  ParsevalCheck out;
  out.lhs = q.value / kPi;
  out.lhs_error = q.error_estimate / kPi;

  const std::size_t K = series.K();
  CompensatedSum sum;
  for (std::size_t m = K; m >= 1; --m) {
    const double a = series.a[m - 1];
    const double b = series.b[m - 1];
    const double s = std::sin(static_cast<double>(m) * kPi / (2.0 * static_cast<double>(n)));
    sum.add(4.0 * (a * a + b * b) * s * s);
  }
  CompensatedSum c2;
  for (std::size_t m = K / 2 + 1; m <= K; ++m) {
    const double a = series.a[m - 1];
    const double b = series.b[m - 1];
    const double md = static_cast<double>(m);
    c2.add(md * md * (a * a + b * b));
  }
  const double mean_c2 = c2.value() / static_cast<double>(K - K / 2);
  // sum_{m>K} 4 * (1/2) * C2/m^2 ~ 2 C2 / K
  out.rhs_tail = 2.0 * mean_c2 / static_cast<double>(K);
  out.rhs = sum.value() + out.rhs_tail;
  return out;
}

}  // namespace jumpdet
