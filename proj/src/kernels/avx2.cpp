// Built with -mavx2 (and without -mfma). Nothing here may instantiate a shared
// inline template, or the linker could pick this AVX2 copy for other callers.
#include <immintrin.h>

#include "jumpdet/kernels.hpp"
#include "simd_impl.hpp"

namespace jumpdet::kernels {

namespace {

struct Avx2 {
  using reg = __m256d;
  static constexpr std::size_t width = 4;
  static reg load(const double* p) { return _mm256_loadu_pd(p); }
  static void store(double* p, reg v) { _mm256_storeu_pd(p, v); }
  static reg set1(double v) { return _mm256_set1_pd(v); }
  static reg add(reg a, reg b) { return _mm256_add_pd(a, b); }
  static reg sub(reg a, reg b) { return _mm256_sub_pd(a, b); }
  static reg mul(reg a, reg b) { return _mm256_mul_pd(a, b); }
  static reg div(reg a, reg b) { return _mm256_div_pd(a, b); }
  static reg max(reg a, reg b) { return _mm256_max_pd(a, b); }
  static reg abs(reg a) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), a); }
};

}  // namespace

extern const KernelTable kAvx2Table;
const KernelTable kAvx2Table{Backend::avx2,
                             simd::trig_series<Avx2>,
                             simd::chebyshev_series<Avx2>,
                             simd::chebyshev_integral_series<Avx2>,
                             simd::accumulate_harmonics<Avx2>,
                             simd::max_plus_distance<Avx2>};

}  // namespace jumpdet::kernels
