#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jumpdet {

/// Samples of a function at increasing points; a jump appears as two
/// adjacent entries (left limit, right limit).
class SampleSequence {
 public:
  /// Throws ArgumentError for an empty sequence or non-finite entries.
  explicit SampleSequence(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> values_;
};

/// Removes repeated neighbours and every point strictly inside a monotone run,
/// keeping both ends. Interval functionals whose terms are convex in each
/// endpoint value (p-variation, p >= 1; modulus; Lambda-variation) attain their
/// maxima on this subsequence.
std::vector<double> turning_points(std::span<const double> values);

/// max over subsequences of sum |v_{i_{j+1}} - v_{i_j}|^p (no root taken).
double p_variation_power(const SampleSequence& s, double p);

/// (p_variation_power)^(1/p). ArgumentError if p < 1.
double p_variation(const SampleSequence& s, double p);

/// max over subsequences of sum phi(|delta|). Exact on the grid for any phi
/// with phi(0) = 0 and phi >= 0 (disjoint families are sub-chains). O(N^2).
/// ArgumentError if phi(0) != 0 or phi returns a negative or non-finite value.
double phi_variation(const SampleSequence& s, const std::function<double(double)>& phi);

/// nu(1..n_max): max total |f(b) - f(a)| over at most n disjoint index intervals.
std::vector<double> modulus_of_variation(const SampleSequence& s, std::size_t n_max);

/// lambda_1 <= lambda_2 <= ... with divergent sum 1/lambda_i.
class LambdaSequence {
 public:
  /// lambda_i = i.
  static LambdaSequence harmonic();
  /// lambda_i = i^beta, 0 <= beta <= 1 (ArgumentError otherwise).
  static LambdaSequence power(double beta);
  /// lambda_i = 1, optionally limited to `max_intervals` intervals.
  static LambdaSequence constant(std::optional<std::size_t> max_intervals = std::nullopt);
  /// Caller-supplied sequence; monotonicity and positivity are checked on
  /// the indices actually used, divergence is the caller's claim.
  static LambdaSequence custom(std::string name, std::function<double(std::size_t)> lambda,
                               std::optional<std::size_t> max_intervals = std::nullopt);

  double operator()(std::size_t i) const { return fn_(i); }
  const std::string& name() const noexcept { return name_; }
  std::optional<std::size_t> max_intervals() const noexcept { return max_intervals_; }

 private:
  LambdaSequence(std::string name, std::function<double(std::size_t)> fn,
                 std::optional<std::size_t> max_intervals)
      : name_(std::move(name)), fn_(std::move(fn)), max_intervals_(max_intervals) {}

  std::string name_;
  std::function<double(std::size_t)> fn_;
  std::optional<std::size_t> max_intervals_;
};

struct LambdaOptions {
  /// Branch-and-bound nodes before giving up on a certificate.
  std::size_t node_budget = 2'000'000;
  /// Largest (interval count) x N^2 for which the modulus tables are built.
  std::size_t dp_budget = 200'000'000;
};

struct LambdaVariationResult {
  double value = 0.0;        ///< best family found (a lower bound)
  double upper_bound = 0.0;  ///< sum_t (1/lambda_t - 1/lambda_{t+1}) nu(t)
  bool exact = false;        ///< value is the maximum (to 1e-12 relative)
  std::size_t nodes = 0;     ///< branch-and-bound nodes visited
};

/// sup over disjoint index-interval families of sum |f(I_(j))| / lambda_j with
/// oscillations sorted descending. Candidates come from the optimal families
/// of nu(t); the upper bound is the Abel-summed modulus. When they differ an
/// exact branch-and-bound over families runs on the turning points.
LambdaVariationResult lambda_variation_bounds(const SampleSequence& s, const LambdaSequence& lambda,
                                              const LambdaOptions& options = {});

/// lambda_variation_bounds(...).value.
double lambda_variation(const SampleSequence& s, const LambdaSequence& lambda);

enum class VariationClass { BV, V_p, V_n_alpha, HBV, W, inconclusive };

const char* class_name(VariationClass c) noexcept;

struct SuggestedClass {
  VariationClass kind = VariationClass::inconclusive;
  double parameter = 0.0;  ///< p for V_p, alpha for V[n^alpha]
  double r_squared = 0.0;  ///< fit quality behind the verdict (1 when not fitted)
};

/// Functionals of one grid of a refinement family.
struct RefinementLevel {
  std::size_t density = 0;
  std::size_t samples = 0;
  double total_variation = 0.0;
  std::map<double, double> p_variation;  ///< p -> V_p
  double harmonic_variation = 0.0;
  bool harmonic_exact = false;
};

struct VariationReport {
  /// Values on the finest grid.
  std::map<double, double> p_variation;
  double harmonic_variation = 0.0;
  std::map<std::string, double> lambda_variation;
  std::vector<double> modulus;
  std::vector<RefinementLevel> levels;  ///< ascending density
  SuggestedClass suggested;
};

struct ClassifyThresholds {
  /// log-log growth slope at or below which a functional counts as bounded.
  double bounded_slope = 0.05;
  double r_squared_min = 0.9;
  /// Modulus exponents at or above this count as linear growth (no V[n^alpha]).
  double linear_alpha = 0.95;
};

struct ReportOptions {
  std::vector<double> p_values{1.25, 1.5, 1.75, 2.0, 2.25, 2.5, 3.0, 4.0};
  std::size_t modulus_n_max = 32;
  std::vector<LambdaSequence> lambdas{LambdaSequence::power(0.5)};
  LambdaOptions lambda_options;
};

/// Computes every functional on each (density, samples) grid.
VariationReport variation_report(const std::vector<std::pair<std::size_t, SampleSequence>>& grids,
                                 const ReportOptions& options = {});

/// Smallest class of BV < V_p < V[n^alpha] < HBV < W whose functional stays
/// bounded over the refinement levels:
///  BV        total variation slope <= bounded_slope;
///  V_p       growth exponents g(p) of the level-to-level increments of
///            V_p^p (p = 1 from total variation) are fitted affinely; needs
///            some g(p) < 0, parameter = root of the fit (R^2 >= r_squared_min);
///  V[n^a]    modulus on the finest grid fits n^a with a < linear_alpha;
///  HBV       harmonic variation slope <= bounded_slope;
///  W         nu(n_max)/n_max at most half of nu(1);
///  else inconclusive. Heuristic by nature.
SuggestedClass classify(const VariationReport& report, const ClassifyThresholds& thresholds = {});

}  // namespace jumpdet
