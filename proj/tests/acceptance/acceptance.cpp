// Acceptance criteria AC1-AC10: one PASS/FAIL line each, nonzero exit on any
// failure. Reference values are frozen from tests/oracles/oracles.py.
#include <chrono>
#include <cstring>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jumpdet/chebyshev.hpp"
#include "jumpdet/cli.hpp"
#include "jumpdet/coefficients.hpp"
#include "jumpdet/errors.hpp"
#include "jumpdet/format.hpp"
#include "jumpdet/funcspec.hpp"
#include "jumpdet/summability.hpp"
#include "jumpdet/tails.hpp"
#include "jumpdet/variation.hpp"
#include "support/brute_force.hpp"

using namespace jumpdet;

namespace {

constexpr double kPi = std::numbers::pi;

constexpr const char* kSawtooth =
    "domain [-pi, pi] periodic; piece (-pi - x)/2 on (-pi, 0); piece (pi - x)/2 on (0, pi)";
constexpr const char* kSquareWave = "domain [-pi, pi] periodic; piece -1 on (-pi, 0); piece 1 on (0, pi)";
constexpr const char* kSign = "domain [-1, 1]; piece -1 on [-1, 0); piece 1 on (0, 1]";

// Default coefficient count for closed-form inputs: max(10^6, 100 n).
constexpr std::size_t kClosedFormK = 1'000'000;

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }
std::string num(double v) { return format_double(v); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
    if (!ok) {
      pass = false;
      detail += " [FAILED]";
    }
  }
};

const FourierSeries& sawtooth_coeffs() {
  static const FourierSeries s = fourier_coefficients(parse_function_spec(kSawtooth), kClosedFormK);
  return s;
}

Outcome ac1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto f = parse_function_spec(kSawtooth);
  const FourierSeries s = fourier_coefficients(f, kClosedFormK);
  const double e100 = jump_from_integrated(s, 0.0, 0, 100).value;
  const double e200 = jump_from_integrated(s, 0.0, 0, 200).value;
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double truth = f.true_jump(0.0);
  o.require(rel(e100, truth) <= 0.01, "n=100 rel err " + num(rel(e100, truth)) + " <= 0.01");
  o.require(rel(e200, truth) <= 0.005, "n=200 rel err " + num(rel(e200, truth)) + " <= 0.005");
  o.require(rel(e100, 3.1570388165798999) <= 1e-13 && rel(e200, 3.1488314069111502) <= 1e-13,
            "matches direct-summation oracle");
  o.require(seconds < 1.0, "runtime " + num(std::round(seconds * 1000) / 1000) + " s < 1 s");
  return o;
}

Outcome ac2() {
  Outcome o;
  const double oracle[] = {3.1488314069111502, 3.1652331373012087, 3.1810589067192711};
  double lo = INFINITY, hi = -INFINITY;
  for (int r : {0, 1, 2}) {
    const double v = jump_from_integrated(sawtooth_coeffs(), 0.0, r, 200).value;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    o.require(rel(v, kPi) <= 0.02 && rel(v, oracle[r]) <= 1e-13,
              "r=" + std::to_string(r) + " rel err " + num(rel(v, kPi)));
  }
  o.require((hi - lo) / kPi <= 0.02, "spread " + num((hi - lo) / kPi));
  return o;
}

Outcome ac3() {
  Outcome o;
  const double v = jump_from_conjugate(sawtooth_coeffs(), 0.0, 1, 100).value;
  o.require(rel(v, kPi) <= 0.015, "conjugate r=1 n=100 rel err " + num(rel(v, kPi)) + " <= 0.015");
  const double c = 1e8 * conjugate_tail(sawtooth_coeffs(), 0.0, 1, 10000).value;
  o.require(rel(c, 0.5) <= 1e-3, "n^2 sum_{k>=n} k^-3 at n=1e4 = " + num(c) + " (1/2 within 1e-3)");
  return o;
}

Outcome ac4() {
  Outcome o;
  const std::size_t K = 2048;
  const FourierSeries sq = fourier_coefficients(parse_function_spec(kSquareWave), K);
  const FourierSeries saw = fourier_coefficients(parse_function_spec(kSawtooth), K);
  std::size_t bad_sign = 0, bad_saw = 0;
  for (std::size_t n = 1; n <= K; ++n) {
    if (n % 2 == 0 && fejer_jump(sq, 0.0, n).value != 2.0) ++bad_sign;
    if (fejer_jump(saw, 0.0, n).value != kPi) ++bad_saw;
  }
  o.require(bad_sign == 0, "sign: exactly 2 for all even n <= 2048 (" + std::to_string(bad_sign) + " misses)");
  o.require(bad_saw == 0, "sawtooth: exactly pi for all n <= 2048 (" + std::to_string(bad_saw) + " misses)");
  return o;
}

Outcome ac5() {
  Outcome o;
  const std::size_t n = 1024;
  std::vector<JumpMark> jumps;
  for (int m = 1; m <= 50; ++m) jumps.push_back({1.0 / m, 1.0 / m});
  const FourierSeries s = sawtooth_combination(n, jumps);
  // A jump is resolvable at this n when no other jump lies within 5 pi/n.
  std::string sampled;
  double worst = 0;
  for (int m = 1; m <= 50; ++m) {
    double gap = INFINITY;
    for (int q = 1; q <= 50; ++q) {
      if (q != m) gap = std::min(gap, std::fabs(1.0 / m - 1.0 / q));
    }
    if (gap < 5 * kPi / n) continue;
    const double est = cesaro_jump(s, 1.0 / m, 1.0, n).value;
    worst = std::max(worst, rel(est, 1.0 / m));
    sampled += (sampled.empty() ? "" : ",") + std::to_string(m);
  }
  o.require(!sampled.empty() && worst <= 0.05, "(C,1) n=1024 at x=1/m, m in {" + sampled +
                                                   "}: worst rel err " + num(worst) + " <= 0.05");
  return o;
}

Outcome ac6() {
  Outcome o;
  const auto f = parse_function_spec(kSign);
  ChebyshevTailConfig cfg;
  for (auto [n, tol] : {std::pair<std::size_t, double>{128, 0.05}, {256, 0.025}}) {
    const ChebyshevSeries s = chebyshev_coefficients(f, std::max(kClosedFormK, 100 * n));
    cfg.n = n;
    const double v = jump_from_chebyshev(s, 0.0, cfg).value;
    o.require(rel(v, 2.0) <= tol, "n=" + std::to_string(n) + " rel err " + num(rel(v, 2.0)) + " <= " + num(tol));
  }
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(-1, 1);
  int agree = 0;
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t K = 8 + rng() % 160;
    std::vector<double> c(K + 1);
    for (std::size_t k = 0; k <= K; ++k) c[k] = u(rng) / (1.0 + static_cast<double>(k));
    ChebyshevTailConfig both;
    both.n = 1 + rng() % K;
    both.path = ChebyshevPath::both;
    const double x = 0.98 * u(rng);
    try {
      const auto r = integrated_chebyshev_tail(ChebyshevSeries(c), x, both);
      const double gap = std::fabs(*r.x_domain - *r.theta_domain);
      worst = std::max(worst, gap / (r.x_error + r.theta_error));
      if (gap <= r.x_error + r.theta_error) ++agree;
    } catch (const Error&) {
    }
  }
  o.require(agree == 100, "dual path agrees on " + std::to_string(agree) + "/100 random inputs (worst gap/bound " +
                              num(worst) + ")");
  return o;
}

Outcome ac7() {
  Outcome o;
  const auto d = v2_tail_diagnostic(sawtooth_coeffs(), {10, 100, 1000});
  bool in_band = true;
  std::string us;
  for (double u : d.u) {
    in_band = in_band && u >= 0.9 && u <= 1.2;
    us += (us.empty() ? "" : ",") + num(u);
  }
  o.require(in_band, "u_n = {" + us + "} in [0.9, 1.2]");
  const auto saw = parse_function_spec(kSawtooth);
  const auto sq = parse_function_spec(kSquareWave);
  const FourierSeries sq_coeffs = fourier_coefficients(sq, kClosedFormK);
  double worst = 0;
  for (std::size_t n : {2u, 4u, 8u}) {
    for (const auto* pair : {&saw, &sq}) {
      const auto c = parseval_increment_check(*pair, pair == &saw ? sawtooth_coeffs() : sq_coeffs, n);
      worst = std::max(worst, rel(c.rhs, c.lhs));
    }
  }
  o.require(worst <= 1e-4, "Parseval lhs/rhs worst rel gap " + num(worst) + " <= 1e-4");
  return o;
}

Outcome ac8() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> val(-20, 20);
  int mismatches = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> v(1 + rng() % 12);
    for (auto& x : v) x = val(rng);
    const SampleSequence s(v);
    for (double p : {1.0, 2.0}) mismatches += p_variation_power(s, p) != brute::p_variation_power(v, p);
    const auto fam = brute::interval_families(v, [](std::size_t i) { return static_cast<double>(i); });
    const auto nu = modulus_of_variation(s, 8);
    for (std::size_t m = 1; m <= 8; ++m) mismatches += nu[m - 1] != fam.nu[std::min(m, fam.nu.size() - 1)];
    const auto lv = lambda_variation_bounds(s, LambdaSequence::harmonic());
    mismatches += !lv.exact || std::fabs(lv.value - fam.lambda_best) > 1e-12 * std::max(1.0, fam.lambda_best);
  }
  o.require(mismatches == 0, "p-variation, modulus and harmonic Lambda-variation equal brute force on 500 "
                             "sequences (" + std::to_string(mismatches) + " mismatches)");
  int violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> v(2 + rng() % 60);
    for (auto& x : v) x = val(rng);
    const auto nu = modulus_of_variation(SampleSequence(v), 20);
    for (std::size_t m = 1; m < nu.size(); ++m) violations += nu[m] < nu[m - 1];
    for (std::size_t m = 2; m < nu.size(); ++m) violations += nu[m] - nu[m - 1] > nu[m - 1] - nu[m - 2];
  }
  o.require(violations == 0, "modulus nondecreasing and concave on 1000 sequences (" +
                                 std::to_string(violations) + " violations)");
  return o;
}

Outcome ac9() {
  Outcome o;
  double worst = 0;
  for (double alpha : {-0.5, 0.5, 1.0, 2.0}) {
    for (std::size_t n = 0; n <= 1000; ++n) {
      const CesaroWeights w(alpha, n);
      double s = 0;
      for (std::size_t m = 0; m <= n; ++m) s += w.weight(m);
      worst = std::max(worst, rel(s, w.normalizer()));
    }
  }
  o.require(worst <= 1e-12, "Vandermonde worst rel err " + num(worst) + " <= 1e-12");
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  int differ = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> s(1 + rng() % 1000);
    for (auto& x : s) x = u(rng);
    const double a = cesaro_mean(s, 1.0), b = arithmetic_mean(s);
    differ += std::memcmp(&a, &b, sizeof a) != 0;
  }
  o.require(differ == 0, "alpha=1 equals arithmetic mean bit for bit on 1000 inputs (" +
                             std::to_string(differ) + " differ)");
  return o;
}

int run_cli(std::vector<std::string> args, std::string& out) {
  args.insert(args.begin(), "jumpdet");
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  out = o.str();
  return code;
}

std::vector<std::string> diverging_column(const std::string& csv) {
  std::vector<std::string> col;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) col.push_back(line.substr(line.rfind(',') + 1));
  return col;
}

Outcome ac10() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "jumpdet_acceptance";
  std::filesystem::create_directories(dir);
  const std::string spec = (dir / "saw.spec").string();
  std::ofstream(spec) << kSawtooth;
  std::string out;
  const int rejected = run_cli({"detect", "-i", spec, "--method", "conjugate", "--r", "0"}, out);
  o.require(rejected == cli::kExitValidation && out.empty(), "conjugate r=0 rejected with exit " + std::to_string(rejected));

  // A_k(0) = (1 + log k)/k, so sum_{k<=n} k A_k = n log n + O(n): not o(n).
  const std::size_t K = 8192;
  std::vector<double> b(K);
  for (std::size_t k = 1; k <= K; ++k) b[k - 1] = -(1.0 + std::log(static_cast<double>(k))) / k;
  const FourierSeries bad(0.0, std::vector<double>(K, 0.0), b);
  const double growth = s_n_diagnostic(bad, 0.0, K) / s_n_diagnostic(bad, 0.0, K / 16);
  const std::string path = (dir / "nlogn.json").string();
  std::ofstream(path) << to_json(bad);
  bool flagged = true;
  for (const char* method : {"fejer", "cesaro"}) {
    run_cli({"detect", "-i", path, "--method", method, "--points", "0", "--n0", "64", "--nmax", "1024"}, out);
    for (const auto& f : diverging_column(out)) flagged = flagged && f == "1";
  }
  const int strict = run_cli({"detect", "-i", path, "--method", "fejer", "--points", "0", "--n0", "64",
                              "--nmax", "1024", "--strict"}, out);
  o.require(flagged && strict == cli::kExitPrecision,
            "n log n sequence (s_n ratio over 16x n: " + num(growth) + ") flagged diverging, --strict exit " +
                std::to_string(strict));
  bool clean = true;
  for (const char* method : {"fejer", "cesaro", "integrated"}) {
    run_cli({"detect", "-i", spec, "--method", method, "--points", "0", "--n0", "64", "--nmax", "1024"}, out);
    for (const auto& f : diverging_column(out)) clean = clean && f == "0";
  }
  o.require(clean, "sawtooth control not flagged");
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}};
  int failed = 0;
  for (const auto& [id, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%-4s %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
