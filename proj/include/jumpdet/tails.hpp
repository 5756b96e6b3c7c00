#pragma once

#include <cstddef>
#include <vector>

#include "jumpdet/coefficients.hpp"
#include "jumpdet/estimate.hpp"
#include "jumpdet/funcspec.hpp"
#include "jumpdet/quadrature.hpp"

namespace jumpdet {

struct TailSumConfig {
  /// Last index summed; 0 means series.K().
  std::size_t K_cap = 0;
};

/// A truncated tail sum with a bound on what the truncation dropped.
///
/// The bound assumes rho_k <= C/k beyond K_cap with C = max k*rho_k over
/// K_cap/2 < k <= K_cap, then sums C * k^-(s+1) for k > K_cap by the integral
/// test (s = power of k in the denominator).
struct TailSum {
  double value = 0.0;
  double remainder_bound = 0.0;
  std::size_t K_cap = 0;
  bool precision_warning = false;  ///< remainder_bound > 1% of |value|
};

/// (-1)^r sum_{k=n}^{K_cap} A_k / k^(2r+1), summed from K_cap down to n with
/// compensation.
TailSum integrated_tail(const FourierSeries& series, double x0, int r, std::size_t n,
                        const TailSumConfig& cfg = {});

/// (-1)^(r+1) (2r+1) pi n^(2r+1) integrated_tail.
JumpEstimate jump_from_integrated(const FourierSeries& series, double x0, int r, std::size_t n,
                                  const TailSumConfig& cfg = {});

/// (-1)^r sum_{k=n}^{K_cap} A_k / k^(2r), r >= 1 (ArgumentError for r = 0).
TailSum conjugate_tail(const FourierSeries& series, double x0, int r, std::size_t n,
                       const TailSumConfig& cfg = {});

/// (-1)^(r+1) 2r pi n^(2r) conjugate_tail.
JumpEstimate jump_from_conjugate(const FourierSeries& series, double x0, int r, std::size_t n,
                                 const TailSumConfig& cfg = {});

/// -(1/n) sum_{k=1}^{n} k A_k, in double-double; tends to the jump over pi.
double s_n_diagnostic(const FourierSeries& series, double x0, std::size_t n);

struct V2Diagnostic {
  std::vector<std::size_t> n_values;
  std::vector<double> u;        ///< u_n = n sum_{k=n}^{K} rho_k^2
  std::vector<double> dropped;  ///< bound on n sum_{k>K} rho_k^2 for each n
  double growth_exponent = 0.0; ///< least-squares slope of log u_n against log n
  bool bounded = true;          ///< growth_exponent <= kV2GrowthTolerance
  bool precision_warning = false;
};

/// Slope above which u_n counts as growing.
inline constexpr double kV2GrowthTolerance = 0.1;

V2Diagnostic v2_tail_diagnostic(const FourierSeries& series, const std::vector<std::size_t>& n_values);

struct ParsevalCheck {
  double lhs = 0.0;       ///< (1/pi) int_{period} [f(x+pi/n) - f(x)]^2 dx by quadrature
  double rhs = 0.0;       ///< 4 sum rho_m^2 sin^2(m pi/(2n)) plus tail correction
  double rhs_tail = 0.0;  ///< the tail correction included in rhs
  double lhs_error = 0.0; ///< quadrature doubling estimate
};

/// Both sides of the shifted-difference Parseval identity. The tail beyond K
/// is modelled as rho_m^2 ~ C2/m^2 with C2 the mean of m^2 rho_m^2 over
/// K/2 < m <= K and sin^2 averaging 1/2.
ParsevalCheck parseval_increment_check(const PiecewiseFunction& f, const FourierSeries& series,
                                       std::size_t n, const QuadratureConfig& quad = {});

}  // namespace jumpdet
