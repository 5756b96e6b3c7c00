// Per-point scalar routines shared by every backend. SIMD variants call these
// for the points left over after the last full vector, so the remainder is
// bit-identical to the scalar table. Internal linkage on purpose: each backend
// translation unit gets its own copy compiled with its own target flags.
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>

namespace jumpdet::kernels::ref {

// Plain Kahan step; branch-free so vector lanes can mirror it exactly.
static inline void kahan_add(double& sum, double& comp, double term) {
  const double y = term - comp;
  const double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

static inline double trig_point(const double* cc, const double* sc, std::size_t k_begin,
                                std::size_t k_end, double theta, std::size_t reseed) {
  const double c1 = std::cos(theta);
  const double s1 = std::sin(theta);
  double c = 1.0;
  double s = 0.0;
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t k = k_begin; k < k_end; ++k) {
    if ((k - k_begin) % reseed == 0) {
      const double kt = static_cast<double>(k) * theta;
      c = std::cos(kt);
      s = std::sin(kt);
    }
    double term = cc[k] * c;
    if (sc != nullptr) term = term + sc[k] * s;
    kahan_add(sum, comp, term);
    const double cn = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = cn;
  }
  return sum;
}

static inline double chebyshev_point(const double* coef, std::size_t k_begin, std::size_t k_end,
                                     double x, std::size_t reseed) {
  const double theta = std::acos(x);
  const double two_x = 2.0 * x;
  double t_cur = 0.0;
  double t_next = 0.0;
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t k = k_begin; k < k_end; ++k) {
    if ((k - k_begin) % reseed == 0) {
      t_cur = std::cos(static_cast<double>(k) * theta);
      t_next = std::cos(static_cast<double>(k + 1) * theta);
    }
    kahan_add(sum, comp, coef[k] * t_cur);
    const double t_after = two_x * t_next - t_cur;
    t_cur = t_next;
    t_next = t_after;
  }
  return sum;
}

// integral_{-1}^{x} T_k for k >= 2 given T_{k-1}(x) and T_{k+1}(x).
static inline double chebyshev_antiderivative(std::size_t k, double t_prev, double t_next) {
  const double kd = static_cast<double>(k);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return (t_next / (2.0 * (kd + 1.0)) - t_prev / (2.0 * (kd - 1.0))) - sign / (kd * kd - 1.0);
}

static inline double chebyshev_integral_point(const double* coef, std::size_t k_begin,
                                              std::size_t k_end, double x, std::size_t reseed) {
  double sum = 0.0;
  double comp = 0.0;
  std::size_t k = k_begin;
  // k = 0, 1 have their own antiderivatives.
  for (; k < k_end && k < 2; ++k) {
    const double integral = k == 0 ? x + 1.0 : (x * x - 1.0) / 2.0;
    kahan_add(sum, comp, coef[k] * integral);
  }
  if (k >= k_end) return sum;
  const double theta = std::acos(x);
  const double two_x = 2.0 * x;
  const std::size_t start = k;
  double t_prev = 0.0;
  double t_cur = 0.0;
  for (; k < k_end; ++k) {
    if ((k - start) % reseed == 0) {
      t_prev = std::cos(static_cast<double>(k - 1) * theta);
      t_cur = std::cos(static_cast<double>(k) * theta);
    }
    const double t_next = two_x * t_cur - t_prev;
    kahan_add(sum, comp, coef[k] * chebyshev_antiderivative(k, t_prev, t_next));
    t_prev = t_cur;
    t_cur = t_next;
  }
  return sum;
}

static inline void harmonics_node(double w, double t, double* a, double* b, std::size_t n,
                                  std::size_t reseed) {
  const double c1 = std::cos(t);
  const double s1 = std::sin(t);
  double c = 1.0;
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k % reseed == 0) {
      const double kt = static_cast<double>(k) * t;
      c = std::cos(kt);
      s = std::sin(kt);
    }
    a[k] += w * c;
    if (b != nullptr) b[k] += w * s;
    const double cn = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = cn;
  }
}

static inline double max_plus_distance(const double* prev, const double* values, std::size_t count,
                                       double v, int power) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < count; ++i) {
    const double d = v - values[i];
    const double cand = prev[i] + (power == 1 ? std::fabs(d) : d * d);
    if (cand > best) best = cand;
  }
  return best;
}

}  // namespace jumpdet::kernels::ref
