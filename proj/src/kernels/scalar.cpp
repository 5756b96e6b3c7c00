#include "jumpdet/kernels.hpp"
#include "reference.hpp"

namespace jumpdet::kernels {

namespace {

void trig_series(const double* cc, const double* sc, std::size_t k_begin, std::size_t k_end,
                 const double* theta, std::size_t n_points, double* out) {
  for (std::size_t j = 0; j < n_points; ++j) {
    out[j] = ref::trig_point(cc, sc, k_begin, k_end, theta[j], kTrigReseed);
  }
}

void chebyshev_series(const double* c, std::size_t k_begin, std::size_t k_end, const double* x,
                      std::size_t n_points, double* out) {
  for (std::size_t j = 0; j < n_points; ++j) {
    out[j] = ref::chebyshev_point(c, k_begin, k_end, x[j], kChebyshevReseed);
  }
}

void chebyshev_integral_series(const double* c, std::size_t k_begin, std::size_t k_end,
                               const double* x, std::size_t n_points, double* out) {
  for (std::size_t j = 0; j < n_points; ++j) {
    out[j] = ref::chebyshev_integral_point(c, k_begin, k_end, x[j], kChebyshevReseed);
  }
}

void accumulate_harmonics(const double* w, const double* t, std::size_t n_nodes, double* a,
                          double* b, std::size_t n) {
  for (std::size_t j = 0; j < n_nodes; ++j) ref::harmonics_node(w[j], t[j], a, b, n, kTrigReseed);
}

}  // namespace

extern const KernelTable kScalarTable;
const KernelTable kScalarTable{Backend::scalar,          trig_series,
                               chebyshev_series,         chebyshev_integral_series,
                               accumulate_harmonics,     ref::max_plus_distance};

}  // namespace jumpdet::kernels
