#pragma once

#include <cstddef>
#include <span>
#include <vector>

/// Data-parallel inner loops with one scalar reference and SIMD variants.
///
/// Every variant performs, per lane, exactly the floating-point operations of
/// the scalar reference in the same order (no FMA contraction, lane-wise
/// compensated sums, horizontal reductions in index order), so all backends
/// produce bit-identical results. SIMD lanes run over independent evaluation
/// points, never over the summation index of a single sum.
namespace jumpdet::kernels {

enum class Backend { scalar, sse2, avx2 };

const char* backend_name(Backend b) noexcept;
bool backend_supported(Backend b) noexcept;
std::vector<Backend> supported_backends();

/// Harmonics are re-seeded from libm cos/sin every this many steps of the
/// rotation recurrence.
inline constexpr std::size_t kTrigReseed = 32;
/// Chebyshev T_k values are re-seeded from cos(k arccos x) this often.
inline constexpr std::size_t kChebyshevReseed = 64;

struct KernelTable {
  Backend backend;

  /// out[j] = sum_{k=k_begin}^{k_end-1} cos_coef[k] cos(k theta_j) + sin_coef[k] sin(k theta_j).
  /// `sin_coef` may be null (treated as zero). Coefficient arrays are indexed by k.
  void (*trig_series)(const double* cos_coef, const double* sin_coef, std::size_t k_begin,
                      std::size_t k_end, const double* theta, std::size_t n_points, double* out);

  /// out[j] = sum_{k=k_begin}^{k_end-1} c[k] T_k(x_j), |x_j| <= 1.
  void (*chebyshev_series)(const double* c, std::size_t k_begin, std::size_t k_end,
                           const double* x, std::size_t n_points, double* out);

  /// out[j] = sum_{k=k_begin}^{k_end-1} c[k] * integral_{-1}^{x_j} T_k(y) dy.
  void (*chebyshev_integral_series)(const double* c, std::size_t k_begin, std::size_t k_end,
                                    const double* x, std::size_t n_points, double* out);

  /// a[k] += sum_j w[j] cos(k t_j), b[k] += sum_j w[j] sin(k t_j) for k < n_harmonics,
  /// accumulated in ascending j. `b` may be null.
  void (*accumulate_harmonics)(const double* w, const double* t, std::size_t n_nodes, double* a,
                               double* b, std::size_t n_harmonics);

  /// max_i prev[i] + |v - values[i]|^power over i < count, power 1 or 2;
  /// -infinity when count == 0.
  double (*max_plus_distance)(const double* prev, const double* values, std::size_t count,
                              double v, int power);
};

/// Table for a specific backend; throws std::invalid_argument if the CPU lacks it.
const KernelTable& table(Backend b);

/// Widest supported backend, chosen once at first use. The environment
/// variable JUMPDET_KERNELS=scalar|sse2|avx2 forces a (supported) choice.
const KernelTable& active();

// Convenience wrappers over active().
void trig_series(std::span<const double> cos_coef, std::span<const double> sin_coef,
                 std::size_t k_begin, std::size_t k_end, std::span<const double> theta,
                 std::span<double> out);
void chebyshev_series(std::span<const double> c, std::size_t k_begin, std::size_t k_end,
                      std::span<const double> x, std::span<double> out);
void chebyshev_integral_series(std::span<const double> c, std::size_t k_begin, std::size_t k_end,
                               std::span<const double> x, std::span<double> out);

}  // namespace jumpdet::kernels
