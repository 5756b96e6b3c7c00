#include "jumpdet/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "jumpdet/errors.hpp"
#include "jumpdet/kernels.hpp"
#include "jumpdet/summation.hpp"

namespace jumpdet {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(const std::vector<double>& v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw ArgumentError(std::string(what) + " contains a non-finite entry");
  }
}

// Integrals I_c[k] = int cos(kt) g(t) dt and I_s[k] = int sin(kt) g(t) dt over
// [lo, hi] for k = 0..K, by panel doubling on the harmonic kernel.
struct HarmonicIntegrals {
  std::vector<double> cos_part;
  std::vector<double> sin_part;
  QuadratureInfo info;
};

HarmonicIntegrals harmonic_quadrature(const Expression& g, double lo, double hi, std::size_t K,
                                      bool want_sin, double scale, const QuadratureConfig& cfg) {
  const GaussLegendreRule& rule = gauss_legendre(cfg.nodes_per_panel);
  const std::size_t m = rule.nodes.size();
  const auto pass = [&](std::size_t panels) {
    std::vector<double> t(panels * m);
    std::vector<double> w(panels * m);
    const double h = (hi - lo) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
      const double a = lo + h * static_cast<double>(p);
      const double b = p + 1 == panels ? hi : lo + h * static_cast<double>(p + 1);
      const double mid = 0.5 * (a + b);
      const double half = 0.5 * (b - a);
      for (std::size_t i = 0; i < m; ++i) {
        const double x = mid + half * rule.nodes[i];
        t[p * m + i] = x;
        w[p * m + i] = half * rule.weights[i] * g.evaluate(x);
      }
    }
    HarmonicIntegrals out;
    out.cos_part.assign(K + 1, 0.0);
    if (want_sin) out.sin_part.assign(K + 1, 0.0);
    kernels::active().accumulate_harmonics(w.data(), t.data(), w.size(), out.cos_part.data(),
                                           want_sin ? out.sin_part.data() : nullptr, K + 1);
    return out;
  };
  // Panels short enough that K * h <= 4.
  std::size_t panels = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil((hi - lo) * static_cast<double>(K) / 4.0)));
  HarmonicIntegrals coarse = pass(panels);
  double diff = 0.0;
  for (int d = 0; d <= cfg.max_doublings; ++d) {
    panels *= 2;
    HarmonicIntegrals fine = pass(panels);
    diff = 0.0;
    for (std::size_t k = 0; k <= K; ++k) {
      diff = std::max(diff, std::fabs(fine.cos_part[k] - coarse.cos_part[k]) * scale);
      if (want_sin) diff = std::max(diff, std::fabs(fine.sin_part[k] - coarse.sin_part[k]) * scale);
    }
    if (diff <= cfg.tolerance) {
      fine.info = QuadratureInfo{cfg.nodes_per_panel, panels, diff};
      return fine;
    }
    coarse = std::move(fine);
  }
  throw AccuracyError("coefficient quadrature on (" + std::to_string(lo) + ", " +
                      std::to_string(hi) + ") did not settle: doubling changed a coefficient by " +
                      std::to_string(diff));
}

// Exact int_lo^hi p(t) e^{ikt} dt for a polynomial of degree <= 3, by
// repeated integration by parts.
// exp(i k t), exact at t = 0 and t = +-pi (the common piece ends).
std::complex<double> unit_phase(std::size_t k, double t) {
  if (t == 0.0) return {1.0, 0.0};
  if (t == kPi || t == -kPi) return {k % 2 == 0 ? 1.0 : -1.0, 0.0};
  const double kt = static_cast<double>(k) * t;
  return {std::cos(kt), std::sin(kt)};
}

std::complex<double> polynomial_harmonic(const std::vector<double>& p, double lo, double hi,
                                         std::size_t k) {
  if (k == 0) {
    double total = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      const double e = static_cast<double>(j + 1);
      total += p[j] * (std::pow(hi, e) - std::pow(lo, e)) / e;
    }
    return {total, 0.0};
  }
  // Derivatives p, p', p'', p''' as coefficient lists.
  std::vector<std::vector<double>> deriv{p};
  while (deriv.back().size() > 1) {
    const auto& q = deriv.back();
    std::vector<double> d(q.size() - 1);
    for (std::size_t j = 1; j < q.size(); ++j) d[j - 1] = q[j] * static_cast<double>(j);
    deriv.push_back(std::move(d));
  }
  const auto horner = [](const std::vector<double>& q, double t) {
    double v = 0.0;
    for (std::size_t j = q.size(); j-- > 0;) v = v * t + q[j];
    return v;
  };
  const std::complex<double> ik(0.0, static_cast<double>(k));
  const auto antiderivative = [&](double t) {
    std::complex<double> acc(0.0, 0.0);
    std::complex<double> denom = ik;
    double sign = 1.0;
    for (const auto& q : deriv) {
      acc += sign * horner(q, t) / denom;
      denom *= ik;
      sign = -sign;
    }
    return unit_phase(k, t) * acc;
  };
  return antiderivative(hi) - antiderivative(lo);
}

std::optional<std::vector<double>> low_degree_polynomial(const Expression& e) {
  auto p = e.as_polynomial();
  if (p && p->size() <= 4) return p;
  return std::nullopt;
}

}  // namespace

const char* provenance_name(Provenance p) noexcept {
  switch (p) {
    case Provenance::closed_form:
      return "closed_form";
    case Provenance::quadrature:
      return "quadrature";
    case Provenance::supplied:
      return "supplied";
  }
  return "unknown";
}

FourierSeries::FourierSeries(double a0_half_, std::vector<double> a_, std::vector<double> b_,
                             Provenance provenance_)
    : a0_half(a0_half_), a(std::move(a_)), b(std::move(b_)), provenance(provenance_) {
  if (a.empty() || a.size() != b.size()) {
    throw ArgumentError("Fourier series needs len(a) == len(b) >= 1");
  }
  if (!std::isfinite(a0_half)) throw ArgumentError("a0_half is not finite");
  require_finite(a, "a");
  require_finite(b, "b");
}

double FourierSeries::a_k(std::size_t k) const {
  if (k < 1 || k > K()) throw IndexError("k = " + std::to_string(k) + " outside 1.." + std::to_string(K()));
  return a[k - 1];
}

double FourierSeries::b_k(std::size_t k) const {
  if (k < 1 || k > K()) throw IndexError("k = " + std::to_string(k) + " outside 1.." + std::to_string(K()));
  return b[k - 1];
}

ChebyshevSeries::ChebyshevSeries(std::vector<double> c_, Provenance provenance_)
    : c(std::move(c_)), provenance(provenance_) {
  if (c.size() < 2) throw ArgumentError("Chebyshev series needs c_0..c_K with K >= 1");
  require_finite(c, "c");
}

FourierSeries fourier_coefficients(const PiecewiseFunction& f, std::size_t K,
                                   const QuadratureConfig& cfg) {
  if (K < 1) throw ArgumentError("K must be positive");
  if (!f.periodic() || f.domain().lo != -kPi || f.domain().hi != kPi) {
    throw DomainError("Fourier coefficients need a periodic function on [-pi, pi]");
  }
  std::vector<double> cos_int(K + 1, 0.0);
  std::vector<double> sin_int(K + 1, 0.0);
  bool all_closed = true;
  QuadratureInfo info{cfg.nodes_per_panel, 0, 0.0};
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    const Interval iv = f.piece_interval(i);
    const Expression& e = f.pieces()[i];
    const auto poly = cfg.closed_forms ? low_degree_polynomial(e) : std::nullopt;
    if (poly) {
      for (std::size_t k = 0; k <= K; ++k) {
        const auto v = polynomial_harmonic(*poly, iv.lo, iv.hi, k);
        cos_int[k] += v.real();
        sin_int[k] += v.imag();
      }
      continue;
    }
    all_closed = false;
    const auto q = harmonic_quadrature(e, iv.lo, iv.hi, K, true, 1.0 / kPi, cfg);
    for (std::size_t k = 0; k <= K; ++k) {
      cos_int[k] += q.cos_part[k];
      sin_int[k] += q.sin_part[k];
    }
    info.panels += q.info.panels;
    info.error_estimate = std::max(info.error_estimate, q.info.error_estimate);
  }
  std::vector<double> a(K);
  std::vector<double> b(K);
  for (std::size_t k = 1; k <= K; ++k) {
    a[k - 1] = cos_int[k] / kPi;
    b[k - 1] = sin_int[k] / kPi;
  }
  FourierSeries s(cos_int[0] / (2.0 * kPi), std::move(a), std::move(b),
                  all_closed ? Provenance::closed_form : Provenance::quadrature);
  if (!all_closed) s.quadrature = info;
  return s;
}

ChebyshevSeries chebyshev_coefficients(const PiecewiseFunction& f, std::size_t K,
                                       const QuadratureConfig& cfg) {
  if (K < 1) throw ArgumentError("K must be positive");
  if (f.domain().lo != -1.0 || f.domain().hi != 1.0) {
    throw DomainError("Chebyshev coefficients need a function on [-1, 1]");
  }
  const Expression cos_theta = Expression::call(UnaryFunction::cos, Expression::variable());
  std::vector<double> cos_int(K + 1, 0.0);
  bool all_closed = true;
  QuadratureInfo info{cfg.nodes_per_panel, 0, 0.0};
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    const Interval iv = f.piece_interval(i);
    // x in (lo, hi) <=> theta in (acos hi, acos lo).
    const double t_lo = std::acos(iv.hi);
    const double t_hi = std::acos(iv.lo);
    const Expression& e = f.pieces()[i];
    const auto poly = cfg.closed_forms ? e.as_polynomial() : std::nullopt;
    if (poly && poly->size() == 1) {
      const double v = (*poly)[0];
      cos_int[0] += v * (t_hi - t_lo);
      for (std::size_t k = 1; k <= K; ++k) {
        const double kd = static_cast<double>(k);
        cos_int[k] += v * (std::sin(kd * t_hi) - std::sin(kd * t_lo)) / kd;
      }
      continue;
    }
    all_closed = false;
    const auto q = harmonic_quadrature(e.substitute(cos_theta), t_lo, t_hi, K, false,
                                       2.0 / kPi, cfg);
    for (std::size_t k = 0; k <= K; ++k) cos_int[k] += q.cos_part[k];
    info.panels += q.info.panels;
    info.error_estimate = std::max(info.error_estimate, q.info.error_estimate);
  }
  std::vector<double> c(K + 1);
  c[0] = cos_int[0] / kPi;
  for (std::size_t k = 1; k <= K; ++k) c[k] = 2.0 * cos_int[k] / kPi;
  ChebyshevSeries s(std::move(c), all_closed ? Provenance::closed_form : Provenance::quadrature);
  if (!all_closed) s.quadrature = info;
  return s;
}

double A_k(const FourierSeries& s, double x0, std::size_t k) {
  const double kx = static_cast<double>(k) * x0;
  return s.a_k(k) * std::sin(kx) - s.b_k(k) * std::cos(kx);
}

double rho(const FourierSeries& s, std::size_t k) { return std::hypot(s.a_k(k), s.b_k(k)); }

double partial_sum(const FourierSeries& s, double x, std::size_t n) {
  if (n > s.K()) throw IndexError("n = " + std::to_string(n) + " exceeds K = " + std::to_string(s.K()));
  CompensatedSum sum;
  sum.add(s.a0_half);
  for (std::size_t k = 1; k <= n; ++k) {
    const double kx = static_cast<double>(k) * x;
    sum.add(s.a[k - 1] * std::cos(kx));
    sum.add(s.b[k - 1] * std::sin(kx));
  }
  return sum.value();
}

double partial_sum(const ChebyshevSeries& s, double x, std::size_t n) {
  if (n > s.K()) throw IndexError("n = " + std::to_string(n) + " exceeds K = " + std::to_string(s.K()));
  if (!(std::fabs(x) <= 1.0)) throw DomainError("Chebyshev series needs |x| <= 1");
  double out = 0.0;
  kernels::active().chebyshev_series(s.c.data(), 0, n + 1, &x, 1, &out);
  return out;
}

FourierSeries sawtooth_series(std::size_t K) {
  if (K < 1) throw ArgumentError("K must be positive");
  std::vector<double> b(K);
  for (std::size_t k = 1; k <= K; ++k) b[k - 1] = 1.0 / static_cast<double>(k);
  return FourierSeries(0.0, std::vector<double>(K, 0.0), std::move(b), Provenance::closed_form);
}

FourierSeries square_wave_series(std::size_t K) {
  if (K < 1) throw ArgumentError("K must be positive");
  std::vector<double> b(K, 0.0);
  for (std::size_t k = 1; k <= K; k += 2) b[k - 1] = 4.0 / (kPi * static_cast<double>(k));
  return FourierSeries(0.0, std::vector<double>(K, 0.0), std::move(b), Provenance::closed_form);
}

FourierSeries sawtooth_combination(std::size_t K, const std::vector<JumpMark>& jumps) {
  if (K < 1) throw ArgumentError("K must be positive");
  std::vector<double> a(K, 0.0);
  std::vector<double> b(K, 0.0);
  for (std::size_t k = 1; k <= K; ++k) {
    const double kd = static_cast<double>(k);
    CompensatedSum sa;
    CompensatedSum sb;
    for (const auto& j : jumps) {
      const double scale = j.magnitude / kPi;
      sa.add(-scale * std::sin(kd * j.location) / kd);
      sb.add(scale * std::cos(kd * j.location) / kd);
    }
    a[k - 1] = sa.value();
    b[k - 1] = sb.value();
  }
  return FourierSeries(0.0, std::move(a), std::move(b), Provenance::closed_form);
}

ChebyshevSeries chebyshev_sign_series(std::size_t K) {
  if (K < 1) throw ArgumentError("K must be positive");
  std::vector<double> c(K + 1, 0.0);
  for (std::size_t k = 1; k <= K; k += 2) {
    const std::size_t j = (k - 1) / 2;
    c[k] = (j % 2 == 0 ? 4.0 : -4.0) / (kPi * static_cast<double>(k));
  }
  return ChebyshevSeries(std::move(c), Provenance::closed_form);
}

}  // namespace jumpdet
