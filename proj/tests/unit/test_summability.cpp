#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "common.hpp"
#include "jumpdet/coefficients.hpp"
#include "jumpdet/errors.hpp"
#include "jumpdet/summability.hpp"

using namespace jumpdet;
using testing_util::same_bits;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(CesaroWeights, VandermondeNormalization) {
  for (double alpha : {-0.5, 0.5, 1.0, 2.0}) {
    for (std::size_t n = 0; n <= 1000; ++n) {
      const CesaroWeights w(alpha, n);
      double s = 0;
      for (std::size_t m = 0; m <= n; ++m) s += w.weight(m);
      ASSERT_NEAR(s / w.normalizer(), 1.0, 1e-12) << alpha << " " << n;
    }
  }
  const CesaroWeights one(1.0, 10);
  EXPECT_EQ(one.weight(7), 1.0);
  EXPECT_EQ(one.normalizer(), 11.0);
  EXPECT_THROW(CesaroWeights(-1.0, 3), ArgumentError);
}

TEST(CesaroMean, AlphaOneIsArithmeticMeanBitForBit) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> s(1 + rng() % 700);
    for (auto& v : s) v = u(rng);
    EXPECT_TRUE(same_bits(cesaro_mean(s, 1.0), arithmetic_mean(s)));
  }
}

TEST(CesaroMean, Examples) {
  const std::vector<double> c(40, 2.5);
  for (double alpha : {-0.5, 0.5, 1.0, 2.0, 3.5}) EXPECT_NEAR(cesaro_mean(c, alpha), 2.5, 1e-13);
  const std::vector<double> s{1.0, 2.0, 6.0};
  EXPECT_EQ(cesaro_mean(s, 1.0), 3.0);
  std::vector<double> alt(100);
  for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = i % 2 == 0 ? 1.0 : -1.0;
  EXPECT_EQ(cesaro_mean(alt, 1.0), 0.0);
}

TEST(CesaroMean, RegularOnConvergentInput) {
  for (double alpha : {0.5, 1.0, 2.0}) {
    double prev = INFINITY;
    for (std::size_t n = 16; n <= 4096; n *= 2) {
      std::vector<double> s(n + 1);
      for (std::size_t i = 0; i <= n; ++i) s[i] = 1.0 + std::pow(0.5, static_cast<double>(i));
      const double err = std::fabs(cesaro_mean(s, alpha) - 1.0);
      EXPECT_LT(err, prev);
      prev = err;
    }
    EXPECT_LT(prev, 1e-3);
  }
}

TEST(DiffSeriesTerms, Examples) {
  const auto saw = diff_series_terms(sawtooth_series(50), 0.0, 50);
  for (double t : saw) EXPECT_NEAR(t, 1.0, 1e-15);
  const auto sq = diff_series_terms(square_wave_series(50), 0.0, 50);
  for (std::size_t k = 1; k <= 50; ++k) EXPECT_NEAR(sq[k - 1], k % 2 == 1 ? 4 / kPi : 0.0, 1e-15);
  const FourierSeries zero(0.0, std::vector<double>(8, 0.0), std::vector<double>(8, 0.0));
  for (double t : diff_series_terms(zero, 1.0, 8)) EXPECT_EQ(t, 0.0);
}

TEST(FejerJump, ExactValues) {
  const auto saw = sawtooth_series(1000);
  const auto sq = square_wave_series(1000);
  for (std::size_t n = 1; n <= 1000; n += 37) EXPECT_EQ(fejer_jump(saw, 0.0, n).value, kPi) << n;
  for (std::size_t n = 2; n <= 1000; n += 38) EXPECT_EQ(fejer_jump(sq, 0.0, n).value, 2.0) << n;
  EXPECT_EQ(fejer_jump(sq, 0.0, 100).value, 2.0);
}

TEST(FejerJump, SmoothFunctionVanishes) {
  const auto s = fourier_coefficients(parse_function_spec("domain [-pi, pi] periodic; piece sin(x)"), 64);
  EXPECT_LE(std::fabs(fejer_jump(s, 0.0, 64).value), 0.05);
}

TEST(CesaroJump, Examples) {
  const auto saw = sawtooth_series(200);
  EXPECT_NEAR(cesaro_jump(saw, 0.0, 1.0, 200).value, kPi, 1e-12);
  const auto sq = square_wave_series(512);
  const double v = cesaro_jump(sq, 0.0, 0.5, 512).value;
  EXPECT_NEAR(v, 2.0, 0.06);
  EXPECT_NEAR(v, 1.945574331864535, 1e-12);
}

TEST(CesaroJump, FejerRelation) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> a(300), b(300);
  for (std::size_t k = 0; k < 300; ++k) {
    a[k] = u(rng) / (k + 1);
    b[k] = u(rng) / (k + 1);
  }
  const FourierSeries s(0.0, a, b);
  for (std::size_t n : {10u, 99u, 300u}) {
    const double x = u(rng) * 3;
    const double fejer = fejer_jump(s, x, n).value;
    EXPECT_NEAR(cesaro_jump(s, x, 1.0, n).value, fejer, 1e-12);
    // (C,1) mean of s_0 = 0, s_k = term_k divides by n + 1 instead of n.
    auto terms = diff_series_terms(s, x, n);
    terms.insert(terms.begin(), 0.0);
    EXPECT_NEAR(kPi * cesaro_mean(terms, 1.0) * (n + 1) / n, fejer, 1e-12);
  }
}
