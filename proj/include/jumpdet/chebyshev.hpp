#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jumpdet/coefficients.hpp"
#include "jumpdet/estimate.hpp"
#include "jumpdet/quadrature.hpp"

namespace jumpdet {

enum class ChebyshevPath { x_domain, theta_domain, both };

struct ChebyshevTailConfig {
  std::size_t n = 1;
  /// Last index summed; 0 means series.K().
  std::size_t K_cap = 0;
  ChebyshevPath path = ChebyshevPath::x_domain;
  /// Quadrature for the theta-domain integral.
  QuadratureConfig quad;
};

struct ChebyshevTail {
  double value = 0.0;
  /// Estimated truncation error beyond K_cap (see the functions below).
  double remainder_bound = 0.0;
  std::size_t K_cap = 0;
  bool precision_warning = false;
};

/// sum_{k=n}^{K_cap} c_k T_k(x), |x| < 1. The remainder is an estimate,
/// C / (K_cap sin(arccos x)) with C = max k|c_k| over K_cap/2 < k <= K_cap
/// (Abel summation with bounded cosine partial sums).
ChebyshevTail chebyshev_tail(const ChebyshevSeries& series, double x,
                             const ChebyshevTailConfig& cfg);

struct IntegratedChebyshevTail {
  double value = 0.0;  ///< x-domain value when computed, else theta-domain
  std::optional<double> x_domain;
  std::optional<double> theta_domain;
  /// Quadrature doubling estimate plus evaluation rounding of the theta path.
  double theta_error = 0.0;
  /// Rounding allowance of the x path.
  double x_error = 0.0;
  /// Tail beyond K_cap: with |c_k| <= C/k and |I_k| <= 2/(k-1), at most 2C/K_cap.
  double remainder_bound = 0.0;
  std::size_t K_cap = 0;
  bool precision_warning = false;
};

/// int_{-1}^{x} sum_{k=n}^{K_cap} c_k T_k(y) dy.
///
/// x path: sum c_k I_k(x) with the antiderivatives of T_k fixed by I_k(-1) = 0.
/// theta path: with g(theta) = f(cos theta), eta = arccos x and
/// R(theta) = sum c_k sin(k theta)/k, the value
/// -sin(eta) R(eta) - int_eta^pi R(theta) cos(theta) d theta, the integral by
/// composite Gauss-Legendre. The theta path costs O(K_cap^2).
/// With path == both, throws PathDisagreementError when the two differ by
/// more than x_error + theta_error.
IntegratedChebyshevTail integrated_chebyshev_tail(const ChebyshevSeries& series, double x,
                                                  const ChebyshevTailConfig& cfg);

/// -pi n integrated_chebyshev_tail / sqrt(1 - x^2). SingularityError for
/// |x| >= 1 - 1e-8.
JumpEstimate jump_from_chebyshev(const ChebyshevSeries& series, double x,
                                 const ChebyshevTailConfig& cfg);

/// Points closer than this to +-1 are rejected by jump_from_chebyshev.
inline constexpr double kChebyshevEndpointGuard = 1e-8;

/// For each n: max over a grid of `grid_points` angles in [-pi, pi) of
/// |n R_n^(-1)(G; theta)|, with R_n^(-1)(G; theta) = -sum_{k>=n} cos(k theta)/k^2
/// evaluated exactly through the closed form of the full series.
std::vector<double> sawtooth_tail_bound_check(const std::vector<std::size_t>& n_values,
                                              std::size_t grid_points = 4096);

/// n R_n^(-1)(G; theta) at one angle (same evaluation as above).
double sawtooth_integrated_tail(std::size_t n, double theta);

}  // namespace jumpdet
