#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jumpdet/kernels.hpp"

namespace jumpdet::kernels {

extern const KernelTable kScalarTable;
#if defined(__x86_64__)
extern const KernelTable kSse2Table;
extern const KernelTable kAvx2Table;
#endif

const char* backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::sse2:
      return "sse2";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_supported(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return true;
#if defined(__x86_64__)
    case Backend::sse2:
      return true;
    case Backend::avx2:
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2");
#else
    default:
      return false;
#endif
  }
  return false;
}

std::vector<Backend> supported_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::scalar, Backend::sse2, Backend::avx2}) {
    if (backend_supported(b)) out.push_back(b);
  }
  return out;
}

const KernelTable& table(Backend b) {
  if (!backend_supported(b)) {
    throw std::invalid_argument(std::string("kernel backend not supported on this CPU: ") +
                                backend_name(b));
  }
  switch (b) {
#if defined(__x86_64__)
    case Backend::sse2:
      return kSse2Table;
    case Backend::avx2:
      return kAvx2Table;
#endif
    default:
      return kScalarTable;
  }
}

namespace {

const KernelTable& choose() {
  if (const char* env = std::getenv("JUMPDET_KERNELS")) {
    const std::string_view want(env);
    for (Backend b : {Backend::scalar, Backend::sse2, Backend::avx2}) {
      if (want == backend_name(b) && backend_supported(b)) return table(b);
    }
  }
  const auto all = supported_backends();
  return table(all.back());
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& t = choose();
  return t;
}

void trig_series(std::span<const double> cos_coef, std::span<const double> sin_coef,
                 std::size_t k_begin, std::size_t k_end, std::span<const double> theta,
                 std::span<double> out) {
  if (cos_coef.size() < k_end || (!sin_coef.empty() && sin_coef.size() < k_end) ||
      out.size() < theta.size()) {
    throw std::invalid_argument("trig_series: coefficient or output span too short");
  }
  active().trig_series(cos_coef.data(), sin_coef.empty() ? nullptr : sin_coef.data(), k_begin,
                       k_end, theta.data(), theta.size(), out.data());
}

void chebyshev_series(std::span<const double> c, std::size_t k_begin, std::size_t k_end,
                      std::span<const double> x, std::span<double> out) {
  if (c.size() < k_end || out.size() < x.size()) {
    throw std::invalid_argument("chebyshev_series: coefficient or output span too short");
  }
  active().chebyshev_series(c.data(), k_begin, k_end, x.data(), x.size(), out.data());
}

void chebyshev_integral_series(std::span<const double> c, std::size_t k_begin, std::size_t k_end,
                               std::span<const double> x, std::span<double> out) {
  if (c.size() < k_end || out.size() < x.size()) {
    throw std::invalid_argument("chebyshev_integral_series: coefficient or output span too short");
  }
  active().chebyshev_integral_series(c.data(), k_begin, k_end, x.data(), x.size(), out.data());
}

}  // namespace jumpdet::kernels
