// Lane-parallel versions of the reference loops, generic over a small vector
// traits type V:
//   V::reg, V::width, load, store, set1, add, sub, mul, div, max, abs.
// Lanes are independent points; every lane replays the reference arithmetic.
// Include only from a backend translation unit, with V defined in an
// anonymous namespace there.
#pragma once

#include <cstddef>
#include <limits>

#include "reference.hpp"

namespace jumpdet::kernels::simd {

template <class V>
inline void kahan_add(typename V::reg& sum, typename V::reg& comp, typename V::reg term) {
  const auto y = V::sub(term, comp);
  const auto t = V::add(sum, y);
  comp = V::sub(V::sub(t, sum), y);
  sum = t;
}

template <class V>
void trig_series(const double* cc, const double* sc, std::size_t k_begin, std::size_t k_end,
                 const double* theta, std::size_t n_points, double* out) {
  constexpr std::size_t W = V::width;
  std::size_t j = 0;
  for (; j + W <= n_points; j += W) {
    alignas(64) double buf_c[W];
    alignas(64) double buf_s[W];
    for (std::size_t l = 0; l < W; ++l) {
      buf_c[l] = std::cos(theta[j + l]);
      buf_s[l] = std::sin(theta[j + l]);
    }
    const auto c1 = V::load(buf_c);
    const auto s1 = V::load(buf_s);
    auto c = V::set1(1.0);
    auto s = V::set1(0.0);
    auto sum = V::set1(0.0);
    auto comp = V::set1(0.0);
    for (std::size_t k = k_begin; k < k_end; ++k) {
      if ((k - k_begin) % kTrigReseed == 0) {
        for (std::size_t l = 0; l < W; ++l) {
          const double kt = static_cast<double>(k) * theta[j + l];
          buf_c[l] = std::cos(kt);
          buf_s[l] = std::sin(kt);
        }
        c = V::load(buf_c);
        s = V::load(buf_s);
      }
      auto term = V::mul(V::set1(cc[k]), c);
      if (sc != nullptr) term = V::add(term, V::mul(V::set1(sc[k]), s));
      kahan_add<V>(sum, comp, term);
      const auto cn = V::sub(V::mul(c, c1), V::mul(s, s1));
      s = V::add(V::mul(s, c1), V::mul(c, s1));
      c = cn;
    }
    V::store(out + j, sum);
  }
  for (; j < n_points; ++j) out[j] = ref::trig_point(cc, sc, k_begin, k_end, theta[j], kTrigReseed);
}

template <class V>
void chebyshev_series(const double* coef, std::size_t k_begin, std::size_t k_end, const double* x,
                      std::size_t n_points, double* out) {
  constexpr std::size_t W = V::width;
  std::size_t j = 0;
  for (; j + W <= n_points; j += W) {
    alignas(64) double theta[W];
    alignas(64) double buf_a[W];
    alignas(64) double buf_b[W];
    for (std::size_t l = 0; l < W; ++l) theta[l] = std::acos(x[j + l]);
    const auto two_x = V::mul(V::set1(2.0), V::load(x + j));
    auto t_cur = V::set1(0.0);
    auto t_next = V::set1(0.0);
    auto sum = V::set1(0.0);
    auto comp = V::set1(0.0);
    for (std::size_t k = k_begin; k < k_end; ++k) {
      if ((k - k_begin) % kChebyshevReseed == 0) {
        for (std::size_t l = 0; l < W; ++l) {
          buf_a[l] = std::cos(static_cast<double>(k) * theta[l]);
          buf_b[l] = std::cos(static_cast<double>(k + 1) * theta[l]);
        }
        t_cur = V::load(buf_a);
        t_next = V::load(buf_b);
      }
      kahan_add<V>(sum, comp, V::mul(V::set1(coef[k]), t_cur));
      const auto t_after = V::sub(V::mul(two_x, t_next), t_cur);
      t_cur = t_next;
      t_next = t_after;
    }
    V::store(out + j, sum);
  }
  for (; j < n_points; ++j) {
    out[j] = ref::chebyshev_point(coef, k_begin, k_end, x[j], kChebyshevReseed);
  }
}

template <class V>
void chebyshev_integral_series(const double* coef, std::size_t k_begin, std::size_t k_end,
                               const double* x, std::size_t n_points, double* out) {
  constexpr std::size_t W = V::width;
  std::size_t j = 0;
  for (; j + W <= n_points; j += W) {
    alignas(64) double theta[W];
    alignas(64) double buf_a[W];
    alignas(64) double buf_b[W];
    const auto xv = V::load(x + j);
    const auto one = V::set1(1.0);
    const auto two = V::set1(2.0);
    auto sum = V::set1(0.0);
    auto comp = V::set1(0.0);
    std::size_t k = k_begin;
    for (; k < k_end && k < 2; ++k) {
      const auto integral =
          k == 0 ? V::add(xv, one) : V::div(V::sub(V::mul(xv, xv), one), two);
      kahan_add<V>(sum, comp, V::mul(V::set1(coef[k]), integral));
    }
    if (k < k_end) {
      for (std::size_t l = 0; l < W; ++l) theta[l] = std::acos(x[j + l]);
      const auto two_x = V::mul(two, xv);
      const std::size_t start = k;
      auto t_prev = V::set1(0.0);
      auto t_cur = V::set1(0.0);
      for (; k < k_end; ++k) {
        if ((k - start) % kChebyshevReseed == 0) {
          for (std::size_t l = 0; l < W; ++l) {
            buf_a[l] = std::cos(static_cast<double>(k - 1) * theta[l]);
            buf_b[l] = std::cos(static_cast<double>(k) * theta[l]);
          }
          t_prev = V::load(buf_a);
          t_cur = V::load(buf_b);
        }
        const auto t_next = V::sub(V::mul(two_x, t_cur), t_prev);
        const double kd = static_cast<double>(k);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const auto up = V::div(t_next, V::set1(2.0 * (kd + 1.0)));
        const auto down = V::div(t_prev, V::set1(2.0 * (kd - 1.0)));
        const auto integral = V::sub(V::sub(up, down), V::set1(sign / (kd * kd - 1.0)));
        kahan_add<V>(sum, comp, V::mul(V::set1(coef[k]), integral));
        t_prev = t_cur;
        t_cur = t_next;
      }
    }
    V::store(out + j, sum);
  }
  for (; j < n_points; ++j) {
    out[j] = ref::chebyshev_integral_point(coef, k_begin, k_end, x[j], kChebyshevReseed);
  }
}

template <class V>
void accumulate_harmonics(const double* w, const double* t, std::size_t n_nodes, double* a,
                          double* b, std::size_t n) {
  constexpr std::size_t W = V::width;
  std::size_t j = 0;
  for (; j + W <= n_nodes; j += W) {
    alignas(64) double buf_c[W];
    alignas(64) double buf_s[W];
    for (std::size_t l = 0; l < W; ++l) {
      buf_c[l] = std::cos(t[j + l]);
      buf_s[l] = std::sin(t[j + l]);
    }
    const auto wv = V::load(w + j);
    const auto c1 = V::load(buf_c);
    const auto s1 = V::load(buf_s);
    auto c = V::set1(1.0);
    auto s = V::set1(0.0);
    for (std::size_t k = 0; k < n; ++k) {
      if (k % kTrigReseed == 0) {
        for (std::size_t l = 0; l < W; ++l) {
          const double kt = static_cast<double>(k) * t[j + l];
          buf_c[l] = std::cos(kt);
          buf_s[l] = std::sin(kt);
        }
        c = V::load(buf_c);
        s = V::load(buf_s);
      }
      // Reduce lanes in node order so the sums match the scalar loop.
      V::store(buf_c, V::mul(wv, c));
      for (std::size_t l = 0; l < W; ++l) a[k] += buf_c[l];
      if (b != nullptr) {
        V::store(buf_s, V::mul(wv, s));
        for (std::size_t l = 0; l < W; ++l) b[k] += buf_s[l];
      }
      const auto cn = V::sub(V::mul(c, c1), V::mul(s, s1));
      s = V::add(V::mul(s, c1), V::mul(c, s1));
      c = cn;
    }
  }
  for (; j < n_nodes; ++j) ref::harmonics_node(w[j], t[j], a, b, n, kTrigReseed);
}

template <class V>
double max_plus_distance(const double* prev, const double* values, std::size_t count, double v,
                         int power) {
  constexpr std::size_t W = V::width;
  double best = -std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  if (count >= W) {
    const auto vv = V::set1(v);
    auto acc = V::set1(best);
    for (; i + W <= count; i += W) {
      const auto d = V::sub(vv, V::load(values + i));
      const auto dist = power == 1 ? V::abs(d) : V::mul(d, d);
      acc = V::max(acc, V::add(V::load(prev + i), dist));
    }
    alignas(64) double lanes[W];
    V::store(lanes, acc);
    for (std::size_t l = 0; l < W; ++l) best = lanes[l] > best ? lanes[l] : best;
  }
  const double rest = ref::max_plus_distance(prev + i, values + i, count - i, v, power);
  return rest > best ? rest : best;
}

}  // namespace jumpdet::kernels::simd
