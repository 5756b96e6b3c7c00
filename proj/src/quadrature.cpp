#include "jumpdet/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "jumpdet/errors.hpp"
#include "jumpdet/format.hpp"
#include "jumpdet/summation.hpp"

namespace jumpdet {

namespace {

GaussLegendreRule build_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi's initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1 || n > 256) throw ArgumentError("Gauss-Legendre order must be in 1..256");
  static std::mutex mutex;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

double composite_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                std::size_t panels, int nodes_per_panel) {
  const GaussLegendreRule& rule = gauss_legendre(nodes_per_panel);
  const double h = (b - a) / static_cast<double>(panels);
  CompensatedSum total;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + h * static_cast<double>(p);
    const double hi = p + 1 == panels ? b : a + h * static_cast<double>(p + 1);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    CompensatedSum panel;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel.add(rule.weights[i] * f(mid + half * rule.nodes[i]));
    }
    total.add(half * panel.value());
  }
  return total.value();
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg, std::size_t initial_panels) {
  if (!(a <= b)) throw ArgumentError("integration bounds must satisfy a <= b");
  if (a == b) return QuadratureResult{0.0, 0.0, 0};
  std::size_t panels = std::max<std::size_t>(initial_panels, 1);
  double coarse = composite_gauss_legendre(f, a, b, panels, cfg.nodes_per_panel);
  double diff = 0.0;
  for (int d = 0; d <= cfg.max_doublings; ++d) {
    panels *= 2;
    const double fine = composite_gauss_legendre(f, a, b, panels, cfg.nodes_per_panel);
    diff = std::fabs(fine - coarse);
    if (diff <= cfg.tolerance) return QuadratureResult{fine, diff, panels};
    coarse = fine;
  }
  throw AccuracyError("quadrature on [" + format_double(a) + ", " + format_double(b) +
                      "] did not settle: last doubling changed the integral by " +
                      format_double(diff));
}

QuadratureResult integrate_piecewise(const std::function<double(double)>& f, double a, double b,
                                     std::span<const double> splits, const QuadratureConfig& cfg) {
  std::vector<double> pts{a};
  for (double s : splits) {
    if (s > a && s < b) pts.push_back(s);
  }
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  QuadratureResult out;
  CompensatedSum total;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const QuadratureResult r = integrate(f, pts[i], pts[i + 1], cfg);
    total.add(r.value);
    out.error_estimate += r.error_estimate;
    out.panels += r.panels;
  }
  out.value = total.value();
  return out;
}

}  // namespace jumpdet
