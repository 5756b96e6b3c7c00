#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jumpdet/funcspec.hpp"
#include "jumpdet/quadrature.hpp"

namespace jumpdet {

/// Where a coefficient array came from.
enum class Provenance { closed_form, quadrature, supplied };

const char* provenance_name(Provenance p) noexcept;

/// Quadrature parameters recorded with computed coefficients.
struct QuadratureInfo {
  int nodes_per_panel = 0;
  std::size_t panels = 0;        ///< total panels of the accepted (finer) pass
  double error_estimate = 0.0;   ///< max |change| of any coefficient under doubling
};

/// f ~ a0_half + sum_{k=1}^{K} a_k cos kx + b_k sin kx on [-pi, pi].
/// Arrays are stored 0-based: a[k-1] holds a_k.
struct FourierSeries {
  double a0_half = 0.0;
  std::vector<double> a;
  std::vector<double> b;
  Provenance provenance = Provenance::supplied;
  QuadratureInfo quadrature;

  FourierSeries() = default;
  /// Throws ArgumentError unless a and b have equal nonzero length and all
  /// entries are finite.
  FourierSeries(double a0_half, std::vector<double> a, std::vector<double> b,
                Provenance provenance = Provenance::supplied);

  std::size_t K() const noexcept { return a.size(); }
  double a_k(std::size_t k) const;  ///< 1 <= k <= K, else IndexError
  double b_k(std::size_t k) const;
};

/// f ~ sum_{k=0}^{K} c_k T_k(x) on [-1, 1]; c[k] holds c_k.
struct ChebyshevSeries {
  std::vector<double> c;
  Provenance provenance = Provenance::supplied;
  QuadratureInfo quadrature;

  ChebyshevSeries() = default;
  /// Throws ArgumentError unless c has at least two finite entries.
  explicit ChebyshevSeries(std::vector<double> c, Provenance provenance = Provenance::supplied);

  std::size_t K() const noexcept { return c.size() - 1; }
};

/// Fourier coefficients of a periodic function on [-pi, pi] by composite
/// Gauss-Legendre per piece (exact formulas for polynomial pieces of degree
/// <= 3 when cfg.closed_forms). Throws DomainError for a non-periodic input or
/// a domain other than [-pi, pi], AccuracyError when the doubling test fails.
FourierSeries fourier_coefficients(const PiecewiseFunction& f, std::size_t K,
                                   const QuadratureConfig& cfg = {});

/// Chebyshev coefficients of f on [-1, 1] through g(theta) = f(cos theta):
/// c_0 = (1/pi) int_0^pi g, c_k = (2/pi) int_0^pi g cos k theta.
ChebyshevSeries chebyshev_coefficients(const PiecewiseFunction& f, std::size_t K,
                                       const QuadratureConfig& cfg = {});

/// a_k sin k x0 - b_k cos k x0.
double A_k(const FourierSeries& s, double x0, std::size_t k);
/// sqrt(a_k^2 + b_k^2).
double rho(const FourierSeries& s, std::size_t k);
/// a0_half + sum_{k=1}^{n} a_k cos kx + b_k sin kx.
double partial_sum(const FourierSeries& s, double x, std::size_t n);
/// sum_{k=0}^{n} c_k T_k(x).
double partial_sum(const ChebyshevSeries& s, double x, std::size_t n);

// Closed-form series used as exact references.

/// G(theta) = (pi - theta)/2 on (0, 2pi): b_k = 1/k, jump pi at 0.
FourierSeries sawtooth_series(std::size_t K);
/// sign(theta) on (-pi, pi): b_k = 4/(pi k) for odd k.
FourierSeries square_wave_series(std::size_t K);
/// sum_m (J_m/pi) G(theta - theta_m): jump J_m at theta_m and nowhere else.
FourierSeries sawtooth_combination(std::size_t K, const std::vector<JumpMark>& jumps);
/// sign(x) on [-1, 1]: c_{2j+1} = (4/pi)(-1)^j/(2j+1).
ChebyshevSeries chebyshev_sign_series(std::size_t K);

// JSON form: {"kind":"fourier","K":..,"a0_half":..,"a":[..],"b":[..]} or
// {"kind":"chebyshev","K":..,"c":[..]}. Doubles print in shortest round-trip
// form, so reading back is bit-exact.
std::string to_json(const FourierSeries& s);
std::string to_json(const ChebyshevSeries& s);

/// Either series kind, as read from JSON.
struct SeriesFile {
  bool is_chebyshev = false;
  FourierSeries fourier;
  ChebyshevSeries chebyshev;
};

/// Throws ParseError for malformed JSON or a missing/invalid field.
SeriesFile series_from_json(const std::string& text);

}  // namespace jumpdet
