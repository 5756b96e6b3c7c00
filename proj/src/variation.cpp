#include "jumpdet/variation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "jumpdet/errors.hpp"
#include "jumpdet/format.hpp"
#include "jumpdet/kernels.hpp"

namespace jumpdet {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Least-squares slope and R^2 of y against x.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  LineFit f;
  const std::size_t m = x.size();
  if (m < 2) return f;
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(m);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(m);
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) return f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

// Forward table F[c][j]: best total |delta| with at most c intervals ending by j.
std::vector<std::vector<double>> modulus_table(const std::vector<double>& v, std::size_t t_max) {
  const std::size_t n = v.size();
  const auto& k = kernels::active();
  std::vector<std::vector<double>> F(t_max + 1, std::vector<double>(n, 0.0));
  for (std::size_t c = 1; c <= t_max; ++c) {
    const auto& prev = F[c - 1];
    auto& cur = F[c];
    for (std::size_t j = 1; j < n; ++j) {
      double best = std::max(cur[j - 1], prev[j]);
      best = std::max(best, k.max_plus_distance(prev.data(), v.data(), j, v[j], 1));
      cur[j] = best;
    }
  }
  return F;
}

// Oscillations of an optimal family for nu(t), recovered from the table.
std::vector<double> modulus_family(const std::vector<std::vector<double>>& F,
                                   const std::vector<double>& v, std::size_t t) {
  std::vector<double> osc;
  std::size_t c = t;
  std::size_t j = v.size() - 1;
  while (c > 0 && j > 0) {
    const double here = F[c][j];
    if (here == F[c][j - 1]) {
      --j;
    } else if (here == F[c - 1][j]) {
      --c;
    } else {
      std::size_t found = j;
      for (std::size_t i = 0; i < j; ++i) {
        if (F[c - 1][i] + std::fabs(v[j] - v[i]) == here) {
          found = i;
          break;
        }
      }
      if (found == j) break;  // unreachable: the table value came from some i
      osc.push_back(std::fabs(v[j] - v[found]));
      j = found;
      --c;
    }
  }
  return osc;
}

double sorted_value(std::vector<double> osc, const std::vector<double>& inv_lambda) {
  std::sort(osc.begin(), osc.end(), std::greater<>());
  double total = 0.0;
  for (std::size_t i = 0; i < osc.size() && i + 1 < inv_lambda.size(); ++i) {
    total += osc[i] * inv_lambda[i + 1];
  }
  return total;
}

class FamilySearch {
 public:
  FamilySearch(const std::vector<double>& v, const std::vector<double>& inv_lambda,
               const std::vector<double>& suffix_bound, std::size_t t_max, double incumbent,
               std::size_t budget)
      : v_(v),
        inv_lambda_(inv_lambda),
        suffix_bound_(suffix_bound),
        t_max_(t_max),
        best_(incumbent),
        budget_(budget) {}

  void run() { visit(0, 0.0); }
  double best() const noexcept { return best_; }
  bool complete() const noexcept { return !exhausted_; }
  std::size_t nodes() const noexcept { return nodes_; }

 private:
  double value() const {
    double total = 0.0;
    for (std::size_t i = 0; i < chosen_.size() && i < t_max_; ++i) {
      total += chosen_[i] * inv_lambda_[i + 1];
    }
    return total;
  }

  void visit(std::size_t start, double current) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    best_ = std::max(best_, current);
    if (chosen_.size() >= t_max_ || start + 1 >= v_.size()) return;
    if (current + suffix_bound_[start] <= best_ * (1.0 + 1e-13)) return;
    for (std::size_t a = start; a + 1 < v_.size(); ++a) {
      for (std::size_t b = a + 1; b < v_.size(); ++b) {
        const double o = std::fabs(v_[b] - v_[a]);
        if (o == 0.0) continue;
        const auto pos = std::upper_bound(chosen_.begin(), chosen_.end(), o, std::greater<>());
        const auto idx = pos - chosen_.begin();
        chosen_.insert(pos, o);
        visit(b, value());
        chosen_.erase(chosen_.begin() + idx);
        if (exhausted_) return;
      }
    }
  }

  const std::vector<double>& v_;
  const std::vector<double>& inv_lambda_;
  const std::vector<double>& suffix_bound_;
  std::size_t t_max_;
  double best_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<double> chosen_;  // descending
};

}  // namespace

SampleSequence::SampleSequence(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw ArgumentError("sample sequence must not be empty");
  for (double v : values_) {
    if (!std::isfinite(v)) throw ArgumentError("sample sequence contains a non-finite value");
  }
}

std::vector<double> turning_points(std::span<const double> values) {
  std::vector<double> dedup;
  for (double v : values) {
    if (dedup.empty() || dedup.back() != v) dedup.push_back(v);
  }
  if (dedup.size() <= 2) return dedup;
  std::vector<double> out{dedup.front()};
  for (std::size_t i = 1; i + 1 < dedup.size(); ++i) {
    const double l = dedup[i - 1];
    const double m = dedup[i];
    const double r = dedup[i + 1];
    if ((m > l && m > r) || (m < l && m < r)) out.push_back(m);
  }
  out.push_back(dedup.back());
  return out;
}

double p_variation_power(const SampleSequence& s, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw ArgumentError("p-variation needs finite p >= 1");
  const std::vector<double> v = turning_points(s.values());
  const std::size_t n = v.size();
  std::vector<double> best(n, 0.0);
  const auto& k = kernels::active();
  double overall = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    double b = 0.0;
    if (p == 1.0 || p == 2.0) {
      b = k.max_plus_distance(best.data(), v.data(), j, v[j], p == 1.0 ? 1 : 2);
    } else {
      for (std::size_t i = 0; i < j; ++i) {
        b = std::max(b, best[i] + std::pow(std::fabs(v[j] - v[i]), p));
      }
    }
    best[j] = std::max(0.0, b);
    overall = std::max(overall, best[j]);
  }
  return overall;
}

double p_variation(const SampleSequence& s, double p) {
  const double power_sum = p_variation_power(s, p);
  return p == 1.0 ? power_sum : std::pow(power_sum, 1.0 / p);
}

double phi_variation(const SampleSequence& s, const std::function<double(double)>& phi) {
  if (phi(0.0) != 0.0) throw ArgumentError("phi-variation needs phi(0) = 0");
  const auto& v = s.values();
  const std::size_t n = v.size();
  std::vector<double> best(n, 0.0);
  double overall = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    double b = 0.0;
    for (std::size_t i = 0; i < j; ++i) {
      const double term = phi(std::fabs(v[j] - v[i]));
      if (!(term >= 0.0) || !std::isfinite(term)) {
        throw ArgumentError("phi must be finite and nonnegative");
      }
      b = std::max(b, best[i] + term);
    }
    best[j] = b;
    overall = std::max(overall, b);
  }
  return overall;
}

std::vector<double> modulus_of_variation(const SampleSequence& s, std::size_t n_max) {
  if (n_max < 1) throw ArgumentError("modulus of variation needs n_max >= 1");
  const std::vector<double> v = turning_points(s.values());
  // More intervals than turning-point gaps cannot help.
  const std::size_t useful = std::min(n_max, v.size() > 1 ? v.size() - 1 : std::size_t{0});
  std::vector<double> out(n_max, 0.0);
  if (useful == 0) return out;
  const auto F = modulus_table(v, useful);
  for (std::size_t c = 1; c <= n_max; ++c) out[c - 1] = F[std::min(c, useful)][v.size() - 1];
  return out;
}

LambdaSequence LambdaSequence::harmonic() {
  return LambdaSequence("harmonic", [](std::size_t i) { return static_cast<double>(i); },
                        std::nullopt);
}

LambdaSequence LambdaSequence::power(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw ArgumentError("Lambda = {n^beta} needs 0 <= beta <= 1 (nondecreasing, divergent sum)");
  }
  if (beta == 1.0) return harmonic();
  return LambdaSequence("n^" + format_double(beta),
                        [beta](std::size_t i) { return std::pow(static_cast<double>(i), beta); },
                        std::nullopt);
}

LambdaSequence LambdaSequence::constant(std::optional<std::size_t> max_intervals) {
  if (max_intervals && *max_intervals == 0) throw ArgumentError("max_intervals must be >= 1");
  return LambdaSequence("constant", [](std::size_t) { return 1.0; }, max_intervals);
}

LambdaSequence LambdaSequence::custom(std::string name, std::function<double(std::size_t)> lambda,
                                      std::optional<std::size_t> max_intervals) {
  if (!lambda) throw ArgumentError("Lambda generator is empty");
  if (max_intervals && *max_intervals == 0) throw ArgumentError("max_intervals must be >= 1");
  return LambdaSequence(std::move(name), std::move(lambda), max_intervals);
}

LambdaVariationResult lambda_variation_bounds(const SampleSequence& s, const LambdaSequence& lambda,
                                              const LambdaOptions& options) {
  const std::vector<double> v = turning_points(s.values());
  LambdaVariationResult out;
  if (v.size() < 2) {
    out.exact = true;
    return out;
  }
  const std::size_t n = v.size();
  std::size_t t_max = n - 1;
  if (lambda.max_intervals()) t_max = std::min(t_max, *lambda.max_intervals());

  // inv_lambda[t] = 1/lambda_t for t = 1..t_max, inv_lambda[t_max+1] = 0.
  std::vector<double> inv_lambda(t_max + 2, 0.0);
  double prev = 0.0;
  for (std::size_t t = 1; t <= t_max; ++t) {
    const double l = lambda(t);
    if (!(l > 0.0) || !std::isfinite(l) || l < prev) {
      throw ArgumentError("Lambda sequence '" + lambda.name() +
                          "' must be positive and nondecreasing (fails at index " +
                          std::to_string(t) + ")");
    }
    prev = l;
    inv_lambda[t] = 1.0 / l;
  }
  std::vector<double> weight(t_max + 1, 0.0);
  for (std::size_t t = 1; t <= t_max; ++t) weight[t] = inv_lambda[t] - inv_lambda[t + 1];

  const double cells = static_cast<double>(t_max) * static_cast<double>(n) * static_cast<double>(n);
  if (cells > static_cast<double>(options.dp_budget)) {
    // Too large for the tables: consecutive turning points as the candidate,
    // nu(t) <= min(total variation, t * range) for the bound.
    std::vector<double> osc;
    double tv = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
      osc.push_back(std::fabs(v[i] - v[i - 1]));
      tv += osc.back();
    }
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    const double range = *hi - *lo;
    out.value = sorted_value(osc, inv_lambda);
    for (std::size_t t = 1; t <= t_max; ++t) {
      out.upper_bound += weight[t] * std::min(tv, static_cast<double>(t) * range);
    }
    out.exact = out.upper_bound - out.value <= 1e-12 * out.upper_bound;
    return out;
  }

  const auto F = modulus_table(v, t_max);
  for (std::size_t t = 1; t <= t_max; ++t) {
    out.upper_bound += weight[t] * F[t][n - 1];
    out.value = std::max(out.value, sorted_value(modulus_family(F, v, t), inv_lambda));
  }
  if (out.upper_bound - out.value <= 1e-12 * out.upper_bound) {
    out.exact = true;
    return out;
  }

  // Backward table G[c][i]: modulus of the suffix starting at i.
  std::vector<std::vector<double>> G(t_max + 1, std::vector<double>(n, 0.0));
  for (std::size_t c = 1; c <= t_max; ++c) {
    for (std::size_t i = n - 1; i-- > 0;) {
      double best = std::max(G[c][i + 1], G[c - 1][i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        best = std::max(best, G[c - 1][j] + std::fabs(v[j] - v[i]));
      }
      G[c][i] = best;
    }
  }
  std::vector<double> suffix_bound(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 1; t <= t_max; ++t) suffix_bound[i] += weight[t] * G[t][i];
  }
  FamilySearch search(v, inv_lambda, suffix_bound, t_max, out.value, options.node_budget);
  search.run();
  out.nodes = search.nodes();
  out.value = search.best();
  out.exact = search.complete();
  if (out.exact) out.upper_bound = out.value;
  return out;
}

double lambda_variation(const SampleSequence& s, const LambdaSequence& lambda) {
  return lambda_variation_bounds(s, lambda).value;
}

const char* class_name(VariationClass c) noexcept {
  switch (c) {
    case VariationClass::BV:
      return "BV";
    case VariationClass::V_p:
      return "V_p";
    case VariationClass::V_n_alpha:
      return "V[n^alpha]";
    case VariationClass::HBV:
      return "HBV";
    case VariationClass::W:
      return "W";
    case VariationClass::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

VariationReport variation_report(const std::vector<std::pair<std::size_t, SampleSequence>>& grids,
                                 const ReportOptions& options) {
  if (grids.empty()) throw ArgumentError("variation report needs at least one grid");
  auto sorted = grids;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  VariationReport report;
  for (const auto& [density, samples] : sorted) {
    RefinementLevel level;
    level.density = density;
    level.samples = samples.size();
    level.total_variation = p_variation(samples, 1.0);
    for (double p : options.p_values) level.p_variation[p] = p_variation(samples, p);
    const auto h = lambda_variation_bounds(samples, LambdaSequence::harmonic(), options.lambda_options);
    level.harmonic_variation = h.value;
    level.harmonic_exact = h.exact;
    report.levels.push_back(std::move(level));
  }
  const SampleSequence& finest = sorted.back().second;
  report.p_variation = report.levels.back().p_variation;
  report.p_variation[1.0] = report.levels.back().total_variation;
  report.harmonic_variation = report.levels.back().harmonic_variation;
  for (const auto& lambda : options.lambdas) {
    report.lambda_variation[lambda.name()] =
        lambda_variation_bounds(finest, lambda, options.lambda_options).value;
  }
  report.modulus = modulus_of_variation(finest, options.modulus_n_max);
  report.suggested = classify(report);
  return report;
}

SuggestedClass classify(const VariationReport& report, const ClassifyThresholds& th) {
  SuggestedClass out;
  const auto& levels = report.levels;
  std::vector<double> log_d;
  for (const auto& l : levels) log_d.push_back(std::log(static_cast<double>(l.density)));

  // Growth slope of a positive functional across levels; 0 for identically zero.
  const auto growth = [&](auto get) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const double y = get(levels[i]);
      if (y > 0.0) {
        xs.push_back(log_d[i]);
        ys.push_back(std::log(y));
      }
    }
    return fit_line(xs, ys);
  };

  if (levels.size() >= 2) {
    const LineFit tv = growth([](const RefinementLevel& l) { return l.total_variation; });
    if (tv.slope <= th.bounded_slope) {
      out.kind = VariationClass::BV;
      out.r_squared = 1.0;
      return out;
    }
    // g(p) = growth exponent of the increments of V_p^p between levels. It is
    // affine in p for power-type oscillation and negative once V_p^p
    // converges, so its root is the critical p. Increments are used rather
    // than values because values near the critical p grow like log N.
    const auto increment_growth = [&](auto get) -> std::optional<double> {
      std::vector<double> xs;
      std::vector<double> ys;
      for (std::size_t i = 1; i < levels.size(); ++i) {
        const double inc = get(levels[i]) - get(levels[i - 1]);
        if (inc > 0.0) {
          xs.push_back(log_d[i]);
          ys.push_back(std::log(inc));
        }
      }
      if (xs.size() < 2) return std::nullopt;
      return fit_line(xs, ys).slope;
    };
    std::vector<double> ps;
    std::vector<double> gs;
    bool some_bounded = false;
    const auto add = [&](double p, std::optional<double> g) {
      if (!g || *g < 0.0) some_bounded = true;
      if (g) {
        ps.push_back(p);
        gs.push_back(*g);
      }
    };
    add(1.0, increment_growth([](const RefinementLevel& l) { return l.total_variation; }));
    for (const auto& [p, unused] : levels.front().p_variation) {
      const double pp = p;
      add(p, increment_growth([pp](const RefinementLevel& l) { return std::pow(l.p_variation.at(pp), pp); }));
    }
    if (some_bounded && ps.size() >= 2) {
      const LineFit g = fit_line(ps, gs);
      if (g.slope < 0.0 && g.r_squared >= th.r_squared_min) {
        out.kind = VariationClass::V_p;
        out.parameter = -g.intercept / g.slope;
        out.r_squared = g.r_squared;
        return out;
      }
    }
  }

  if (report.modulus.size() >= 2 && report.modulus.front() > 0.0) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < report.modulus.size(); ++i) {
      xs.push_back(std::log(static_cast<double>(i + 1)));
      ys.push_back(std::log(report.modulus[i]));
    }
    const LineFit m = fit_line(xs, ys);
    if (m.slope < th.linear_alpha && m.r_squared >= th.r_squared_min) {
      out.kind = VariationClass::V_n_alpha;
      out.parameter = m.slope;
      out.r_squared = m.r_squared;
      return out;
    }
  }

  if (levels.size() >= 2) {
    const LineFit h = growth([](const RefinementLevel& l) { return l.harmonic_variation; });
    if (h.slope <= th.bounded_slope) {
      out.kind = VariationClass::HBV;
      out.r_squared = 1.0;
      return out;
    }
  }

  if (!report.modulus.empty() && report.modulus.front() > 0.0) {
    const double n_max = static_cast<double>(report.modulus.size());
    if (report.modulus.back() / n_max <= 0.5 * report.modulus.front()) {
      out.kind = VariationClass::W;
      out.r_squared = 1.0;
      return out;
    }
  }
  return out;
}

}  // namespace jumpdet
