#include "jumpdet/summability.hpp"

#include <cmath>
#include <deque>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "jumpdet/errors.hpp"
#include "jumpdet/summation.hpp"

namespace jumpdet {

const char* method_name(Method m) noexcept {
  switch (m) {
    case Method::fejer:
      return "fejer";
    case Method::cesaro:
      return "cesaro";
    case Method::integrated_tail:
      return "integrated";
    case Method::conjugate_tail:
      return "conjugate";
    case Method::chebyshev_tail:
      return "chebyshev";
  }
  return "unknown";
}

CesaroWeights::CesaroWeights(double alpha, std::size_t n) : alpha_(alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw ArgumentError("Cesaro order alpha must be finite and > -1");
  }
  weights_.resize(n + 1);
  weights_[0] = 1.0;
  double norm = 1.0;
  for (std::size_t m = 1; m <= n; ++m) {
    const double md = static_cast<double>(m);
    weights_[m] = (weights_[m - 1] * (alpha - 1.0 + md)) / md;
    norm = (norm * (alpha + md)) / md;
  }
  normalizer_ = norm;
}

namespace {

std::shared_ptr<const CesaroWeights> cached_weights(double alpha, std::size_t n) {
  static std::mutex mutex;
  static std::deque<std::shared_ptr<const CesaroWeights>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  for (const auto& w : cache) {
    if (w->alpha() == alpha && w->n() == n) return w;
  }
  auto w = std::make_shared<const CesaroWeights>(alpha, n);
  cache.push_front(w);
  if (cache.size() > 16) cache.pop_back();
  return w;
}

void check_n(const FourierSeries& series, std::size_t n) {
  if (n < 1 || n > series.K()) {
    throw IndexError("n = " + std::to_string(n) + " outside 1..K = " + std::to_string(series.K()));
  }
}

}  // namespace

double arithmetic_mean(std::span<const double> s) {
  if (s.empty()) throw ArgumentError("mean of an empty sequence");
  double sum = 0.0;
  for (double v : s) sum += v;
  return sum / static_cast<double>(s.size());
}

double cesaro_mean(std::span<const double> s, double alpha) {
  if (s.empty()) throw ArgumentError("Cesaro mean of an empty sequence");
  const std::size_t n = s.size() - 1;
  const auto w = cached_weights(alpha, n);
  double sum = 0.0;
  for (std::size_t i = 0; i <= n; ++i) sum += w->weight(n - i) * s[i];
  return sum / w->normalizer();
}

std::vector<double> diff_series_terms(const FourierSeries& series, double x, std::size_t n) {
  check_n(series, n);
  std::vector<double> out(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    out[k - 1] = kd * series.b[k - 1] * std::cos(kd * x) - kd * series.a[k - 1] * std::sin(kd * x);
  }
  return out;
}

JumpEstimate fejer_jump(const FourierSeries& series, double x, std::size_t n) {
  check_n(series, n);
  DoubleDouble sum;
  for (std::size_t k = 1; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    sum += DoubleDouble::two_prod(kd, series.b[k - 1]) * std::cos(kd * x);
    sum += DoubleDouble::two_prod(-kd, series.a[k - 1]) * std::sin(kd * x);
  }
  JumpEstimate e;
  e.method = Method::fejer;
  e.x0 = x;
  e.n = n;
  e.value = ((sum * std::numbers::pi) / static_cast<double>(n)).value();
  return e;
}

JumpEstimate cesaro_jump(const FourierSeries& series, double x, double alpha, std::size_t n) {
  const auto terms = diff_series_terms(series, x, n);
  JumpEstimate e;
  e.method = Method::cesaro;
  e.x0 = x;
  e.n = n;
  e.alpha = alpha;
  e.value = std::numbers::pi * cesaro_mean(terms, alpha);
  return e;
}

}  // namespace jumpdet
