#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace jumpdet {

/// Composite Gauss-Legendre settings shared by every integral in the library.
struct QuadratureConfig {
  int nodes_per_panel = 16;
  /// Absolute tolerance of the a-posteriori doubling test.
  double tolerance = 1e-12;
  /// Panel count may be doubled this many times before AccuracyError.
  int max_doublings = 10;
  /// Use exact integration-by-parts formulas for polynomial pieces.
  bool closed_forms = true;
};

/// Nodes and weights on [-1, 1], ascending nodes.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule, computed once by Newton iteration on P_n and cached.
const GaussLegendreRule& gauss_legendre(int n);

/// Result of an adaptive composite integration.
struct QuadratureResult {
  double value = 0.0;
  /// |I(2P) - I(P)| of the last doubling step.
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

/// Composite rule with `panels` equal panels on [a, b].
double composite_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                std::size_t panels, int nodes_per_panel);

/// Doubles the panel count (starting at `initial_panels`) until two successive
/// results differ by at most cfg.tolerance; throws AccuracyError otherwise.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg = {}, std::size_t initial_panels = 1);

/// Integral over [a, b] split at the given interior points (sorted or not,
/// points outside (a, b) ignored) so no panel straddles a kink or jump.
QuadratureResult integrate_piecewise(const std::function<double(double)>& f, double a, double b,
                                     std::span<const double> splits,
                                     const QuadratureConfig& cfg = {});

}  // namespace jumpdet
