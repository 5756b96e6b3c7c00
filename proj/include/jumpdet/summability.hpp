#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jumpdet/coefficients.hpp"
#include "jumpdet/estimate.hpp"

namespace jumpdet {

/// Weights of the (C, alpha) mean of s_0..s_n:
/// sigma_n = sum_i binom(n-i+alpha-1, n-i) s_i / binom(n+alpha, n).
/// Binomials come from the product recurrence binom(m+beta, m) =
/// binom(m-1+beta, m-1) * (beta+m) / m, multiplied before dividing so that
/// alpha = 1 gives exactly 1 and n+1.
class CesaroWeights {
 public:
  /// Throws ArgumentError unless alpha > -1.
  CesaroWeights(double alpha, std::size_t n);

  double alpha() const noexcept { return alpha_; }
  std::size_t n() const noexcept { return weights_.size() - 1; }
  /// binom(m+alpha-1, m), the weight of s_{n-m}.
  double weight(std::size_t m) const { return weights_.at(m); }
  /// binom(n+alpha, n).
  double normalizer() const noexcept { return normalizer_; }

 private:
  double alpha_;
  std::vector<double> weights_;
  double normalizer_;
};

/// sigma_n^(alpha) of s_0..s_n, summed left to right (so alpha = 1 is the
/// arithmetic mean bit for bit). Weights are cached per (alpha, n).
double cesaro_mean(std::span<const double> s, double alpha);

/// Plain left-to-right arithmetic mean.
double arithmetic_mean(std::span<const double> s);

/// k b_k cos kx - k a_k sin kx for k = 1..n.
std::vector<double> diff_series_terms(const FourierSeries& series, double x, std::size_t n);

/// pi * S'_n(x) / n, accumulated in double-double and rounded once.
JumpEstimate fejer_jump(const FourierSeries& series, double x, std::size_t n);

/// pi * cesaro_mean(term_1..term_n, alpha). The mean runs over the n terms
/// (s_0 = term_1), so alpha = 1 divides by n like fejer_jump.
JumpEstimate cesaro_jump(const FourierSeries& series, double x, double alpha, std::size_t n);

}  // namespace jumpdet
