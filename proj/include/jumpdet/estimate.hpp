#pragma once

#include <cstddef>
#include <optional>

namespace jumpdet {

enum class Method { fejer, cesaro, integrated_tail, conjugate_tail, chebyshev_tail };

const char* method_name(Method m) noexcept;

/// One estimate of f(x0+0) - f(x0-0).
struct JumpEstimate {
  Method method = Method::fejer;
  double x0 = 0.0;
  std::size_t n = 0;
  std::optional<int> r;
  std::optional<double> alpha;
  double value = 0.0;
  /// Bound on the part of `value` lost by truncating an infinite tail at
  /// K_cap, already scaled like `value`. Zero for finite-sum estimators.
  double remainder_bound = 0.0;
  /// Set when remainder_bound exceeds 1% of |value|.
  bool precision_warning = false;
};

}  // namespace jumpdet
