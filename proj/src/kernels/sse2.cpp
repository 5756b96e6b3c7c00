#include <emmintrin.h>

#include "jumpdet/kernels.hpp"
#include "simd_impl.hpp"

namespace jumpdet::kernels {

namespace {

struct Sse2 {
  using reg = __m128d;
  static constexpr std::size_t width = 2;
  static reg load(const double* p) { return _mm_loadu_pd(p); }
  static void store(double* p, reg v) { _mm_storeu_pd(p, v); }
  static reg set1(double v) { return _mm_set1_pd(v); }
  static reg add(reg a, reg b) { return _mm_add_pd(a, b); }
  static reg sub(reg a, reg b) { return _mm_sub_pd(a, b); }
  static reg mul(reg a, reg b) { return _mm_mul_pd(a, b); }
  static reg div(reg a, reg b) { return _mm_div_pd(a, b); }
  static reg max(reg a, reg b) { return _mm_max_pd(a, b); }
  static reg abs(reg a) { return _mm_andnot_pd(_mm_set1_pd(-0.0), a); }
};

}  // namespace

extern const KernelTable kSse2Table;
const KernelTable kSse2Table{Backend::sse2,
                             simd::trig_series<Sse2>,
                             simd::chebyshev_series<Sse2>,
                             simd::chebyshev_integral_series<Sse2>,
                             simd::accumulate_harmonics<Sse2>,
                             simd::max_plus_distance<Sse2>};

}  // namespace jumpdet::kernels
