#include "jumpdet/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "jumpdet/errors.hpp"
#include "jumpdet/format.hpp"
#include "jumpdet/kernels.hpp"
#include "jumpdet/summation.hpp"

namespace jumpdet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

std::size_t resolve_cap(const ChebyshevSeries& series, const ChebyshevTailConfig& cfg) {
  const std::size_t cap = cfg.K_cap == 0 ? series.K() : cfg.K_cap;
  if (cfg.n < 1) throw IndexError("tail start n must be >= 1");
  if (cap > series.K()) {
    throw IndexError("K_cap = " + std::to_string(cap) + " exceeds K = " + std::to_string(series.K()));
  }
  // n > cap is an empty tail: value 0, remainder bound still reported.
  return cap;
}

void check_open_interval(double x) {
  if (!(std::fabs(x) < 1.0)) throw DomainError("x = " + format_double(x) + " is not in (-1, 1)");
}

double decay_constant(const ChebyshevSeries& series, std::size_t cap) {
  double c = 0.0;
  for (std::size_t k = cap / 2 + 1; k <= cap; ++k) {
    c = std::max(c, static_cast<double>(k) * std::fabs(series.c[k]));
  }
  return c;
}

double abs_sum(const ChebyshevSeries& series, std::size_t n, std::size_t cap) {
  double s = 0.0;
  for (std::size_t k = n; k <= cap; ++k) s += std::fabs(series.c[k]);
  return s;
}

// int_eta^pi R(theta) cos(theta) d theta with R(theta) = sum_{k=n}^{cap} s_k sin(k theta).
QuadratureResult theta_integral(const std::vector<double>& zeros, const std::vector<double>& s,
                                std::size_t n, std::size_t cap, double eta,
                                const QuadratureConfig& quad) {
  const GaussLegendreRule& rule = gauss_legendre(quad.nodes_per_panel);
  const std::size_t m = rule.nodes.size();
  const double lo = eta;
  const double hi = kPi;
  const auto pass = [&](std::size_t panels) {
    std::vector<double> t(panels * m);
    std::vector<double> w(panels * m);
    const double h = (hi - lo) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
      const double a = lo + h * static_cast<double>(p);
      const double b = p + 1 == panels ? hi : lo + h * static_cast<double>(p + 1);
      for (std::size_t i = 0; i < m; ++i) {
        t[p * m + i] = 0.5 * (a + b) + 0.5 * (b - a) * rule.nodes[i];
        w[p * m + i] = 0.5 * (b - a) * rule.weights[i];
      }
    }
    std::vector<double> r(t.size());
    kernels::active().trig_series(zeros.data(), s.data(), n, cap + 1, t.data(), t.size(), r.data());
    CompensatedSum sum;
    for (std::size_t j = 0; j < t.size(); ++j) sum.add(w[j] * r[j] * std::cos(t[j]));
    return sum.value();
  };
  if (hi - lo <= 0.0) return {};
  std::size_t panels = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil((hi - lo) * static_cast<double>(cap) / 4.0)));
  double coarse = pass(panels);
  double diff = 0.0;
  for (int d = 0; d <= quad.max_doublings; ++d) {
    panels *= 2;
    const double fine = pass(panels);
    diff = std::fabs(fine - coarse);
    if (diff <= quad.tolerance) return QuadratureResult{fine, diff, panels};
    coarse = fine;
  }
  throw AccuracyError("theta-domain quadrature did not settle: last doubling changed the integral by " +
                      format_double(diff));
}

}  // namespace

ChebyshevTail chebyshev_tail(const ChebyshevSeries& series, double x,
                             const ChebyshevTailConfig& cfg) {
  check_open_interval(x);
  const std::size_t cap = resolve_cap(series, cfg);
  ChebyshevTail out;
  out.K_cap = cap;
  kernels::active().chebyshev_series(series.c.data(), cfg.n, cap + 1, &x, 1, &out.value);
  out.remainder_bound =
      decay_constant(series, cap) / (static_cast<double>(cap) * std::sqrt(1.0 - x * x));
  out.precision_warning = out.remainder_bound > 0.01 * std::fabs(out.value);
  return out;
}

IntegratedChebyshevTail integrated_chebyshev_tail(const ChebyshevSeries& series, double x,
                                                  const ChebyshevTailConfig& cfg) {
  check_open_interval(x);
  const std::size_t cap = resolve_cap(series, cfg);
  const std::size_t n = cfg.n;
  IntegratedChebyshevTail out;
  out.K_cap = cap;
  const double magnitude = abs_sum(series, n, cap);

  if (cfg.path != ChebyshevPath::theta_domain) {
    double v = 0.0;
    kernels::active().chebyshev_integral_series(series.c.data(), n, cap + 1, &x, 1, &v);
    out.x_domain = v;
    out.x_error = 64.0 * kEps * magnitude;
  }
  if (cfg.path != ChebyshevPath::x_domain) {
    // g(theta) = sum c_k cos k theta; its tail integrates to sum c_k sin(k theta)/k.
    std::vector<double> zeros(cap + 1, 0.0);
    std::vector<double> s(cap + 1, 0.0);
    for (std::size_t k = n; k <= cap; ++k) s[k] = series.c[k] / static_cast<double>(k);
    const double eta = std::acos(x);
    double r_eta = 0.0;
    kernels::active().trig_series(zeros.data(), s.data(), n, cap + 1, &eta, 1, &r_eta);
    const QuadratureResult q = theta_integral(zeros, s, n, cap, eta, cfg.quad);
    out.theta_domain = -std::sin(eta) * r_eta - q.value;
    out.theta_error = q.error_estimate + 64.0 * kEps * magnitude * (1.0 + kPi - eta);
  }
  out.value = out.x_domain ? *out.x_domain : *out.theta_domain;
  if (out.x_domain && out.theta_domain) {
    const double gap = std::fabs(*out.x_domain - *out.theta_domain);
    if (gap > out.x_error + out.theta_error) {
      throw PathDisagreementError("integrated Chebyshev tail at x = " + format_double(x) +
                                  ": x path " + format_double(*out.x_domain) + " vs theta path " +
                                  format_double(*out.theta_domain));
    }
  }
  out.remainder_bound = 2.0 * decay_constant(series, cap) / static_cast<double>(cap);
  out.precision_warning = out.remainder_bound > 0.01 * std::fabs(out.value);
  return out;
}

JumpEstimate jump_from_chebyshev(const ChebyshevSeries& series, double x,
                                 const ChebyshevTailConfig& cfg) {
  if (!(std::fabs(x) < 1.0 - kChebyshevEndpointGuard)) {
    throw SingularityError("Chebyshev jump estimate undefined at x = " + format_double(x) +
                           " (|x| must be below 1 - 1e-8)");
  }
  const IntegratedChebyshevTail t = integrated_chebyshev_tail(series, x, cfg);
  const double factor = -kPi * static_cast<double>(cfg.n) / std::sqrt(1.0 - x * x);
  JumpEstimate e;
  e.method = Method::chebyshev_tail;
  e.x0 = x;
  e.n = cfg.n;
  e.r = 0;
  e.value = factor * t.value;
  e.remainder_bound = std::fabs(factor) * t.remainder_bound;
  e.precision_warning = t.precision_warning;
  return e;
}

namespace {

// sum_{k>=1} cos(k theta)/k^2 for theta in [-pi, pi].
double clausen_like(double theta) {
  const double a = std::fabs(theta);
  return kPi * kPi / 6.0 - kPi * a / 2.0 + theta * theta / 4.0;
}

double wrap_angle(double theta) {
  double r = std::fmod(theta + kPi, 2.0 * kPi);
  if (r < 0) r += 2.0 * kPi;
  return r - kPi;
}

}  // namespace

double sawtooth_integrated_tail(std::size_t n, double theta) {
  if (n < 1) throw ArgumentError("n must be >= 1");
  const double t = wrap_angle(theta);
  std::vector<double> coef(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) coef[k] = 1.0 / (static_cast<double>(k) * static_cast<double>(k));
  double head = 0.0;
  kernels::active().trig_series(coef.data(), nullptr, 1, n, &t, 1, &head);
  return -static_cast<double>(n) * (clausen_like(t) - head);
}

std::vector<double> sawtooth_tail_bound_check(const std::vector<std::size_t>& n_values,
                                              std::size_t grid_points) {
  if (grid_points < 1) throw ArgumentError("grid must have at least one point");
  std::vector<double> theta(grid_points);
  for (std::size_t j = 0; j < grid_points; ++j) {
    theta[j] = -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(grid_points);
  }
  std::vector<double> out;
  std::vector<double> head(grid_points);
  for (std::size_t n : n_values) {
    if (n < 1) throw ArgumentError("n must be >= 1");
    std::vector<double> coef(n, 0.0);
    for (std::size_t k = 1; k < n; ++k) coef[k] = 1.0 / (static_cast<double>(k) * static_cast<double>(k));
    kernels::active().trig_series(coef.data(), nullptr, 1, n, theta.data(), grid_points, head.data());
    double sup = 0.0;
    for (std::size_t j = 0; j < grid_points; ++j) {
      const double v = static_cast<double>(n) * (clausen_like(theta[j]) - head[j]);
      sup = std::max(sup, std::fabs(v));
    }
    out.push_back(sup);
  }
  return out;
}

}  // namespace jumpdet
