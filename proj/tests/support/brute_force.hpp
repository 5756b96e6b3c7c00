// Exhaustive reference implementations of the variation functionals, for
// sequences short enough to enumerate.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace brute {

// max over all subsequences of sum |delta|^p.
inline double p_variation_power(const std::vector<double>& v, double p) {
  const std::size_t n = v.size();
  double best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    double s = 0;
    int last = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      if (last >= 0) s += std::pow(std::fabs(v[i] - v[last]), p);
      last = static_cast<int>(i);
    }
    best = std::max(best, s);
  }
  return best;
}

struct Families {
  std::vector<double> nu;  // nu[m]: best sum over at most m intervals
  double lambda_best = 0;  // best sum of sorted oscillations / lambda_j
};

namespace detail {

inline void enumerate(const std::vector<double>& v, std::size_t start, std::vector<double>& osc,
                      const std::function<double(std::size_t)>& lambda, Families& out) {
  const std::size_t m = osc.size();
  double sum = 0;
  for (double o : osc) sum += o;
  if (out.nu.size() <= m) out.nu.resize(m + 1, 0.0);
  out.nu[m] = std::max(out.nu[m], sum);
  if (lambda) {
    std::vector<double> sorted(osc);
    std::sort(sorted.rbegin(), sorted.rend());
    double s = 0;
    for (std::size_t j = 0; j < sorted.size(); ++j) s += sorted[j] / lambda(j + 1);
    out.lambda_best = std::max(out.lambda_best, s);
  }
  for (std::size_t a = start; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      osc.push_back(std::fabs(v[b] - v[a]));
      enumerate(v, b, osc, lambda, out);
      osc.pop_back();
    }
  }
}

}  // namespace detail

// Every family of index intervals [a, b], a < b, that may share endpoints.
inline Families interval_families(const std::vector<double>& v,
                                  const std::function<double(std::size_t)>& lambda = {}) {
  Families f;
  std::vector<double> osc;
  detail::enumerate(v, 0, osc, lambda, f);
  for (std::size_t m = 1; m < f.nu.size(); ++m) f.nu[m] = std::max(f.nu[m], f.nu[m - 1]);
  return f;
}

}  // namespace brute
