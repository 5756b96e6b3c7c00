#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "common.hpp"
#include "support/brute_force.hpp"
#include "jumpdet/errors.hpp"
#include "jumpdet/sampling.hpp"
#include "jumpdet/variation.hpp"

using namespace jumpdet;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<double> kZigzag{0, 1, 0, 1};

std::vector<double> random_integers(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> u(-20, 20);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST(PVariation, Examples) {
  EXPECT_EQ(p_variation(SampleSequence({0, 0.3, 0.7, 1}), 2.0), 1.0);
  EXPECT_NEAR(p_variation(SampleSequence(kZigzag), 2.0), std::sqrt(3.0), 1e-15);
  EXPECT_EQ(p_variation(SampleSequence({0, 2, -1, 3, 3, 1}), 1.0), 2 + 3 + 4 + 2);
  EXPECT_THROW(p_variation(SampleSequence(kZigzag), 0.5), ArgumentError);
  EXPECT_THROW(SampleSequence({}), ArgumentError);
  EXPECT_THROW(SampleSequence({1.0, NAN}), ArgumentError);
}

TEST(PhiVariation, Examples) {
  const SampleSequence z(kZigzag);
  EXPECT_EQ(phi_variation(z, [](double u) { return u * u; }), 3.0);
  EXPECT_EQ(phi_variation(z, [](double u) { return u; }), p_variation(z, 1.0));
  EXPECT_EQ(phi_variation(SampleSequence({0, 1}), [](double u) { return std::exp(u) - 1; }), std::exp(1.0) - 1);
  EXPECT_THROW(phi_variation(z, [](double u) { return u + 1; }), ArgumentError);
}

TEST(LambdaVariation, Examples) {
  const SampleSequence z(kZigzag);
  EXPECT_NEAR(lambda_variation(z, LambdaSequence::harmonic()), 11.0 / 6.0, 1e-15);
  EXPECT_NEAR(lambda_variation(z, LambdaSequence::power(0.5)), 1 + 1 / std::sqrt(2.0) + 1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(lambda_variation(z, LambdaSequence::power(0.5)), 2.284457050376173, 1e-15);
  EXPECT_EQ(lambda_variation(SampleSequence({0, 1}), LambdaSequence::power(0.5)), 1.0);
  const auto l3 = LambdaSequence::custom("three", [](std::size_t i) { return 3.0 * i; });
  EXPECT_EQ(lambda_variation(SampleSequence({0, 1}), l3), 1.0 / 3.0);
  EXPECT_THROW(LambdaSequence::power(1.5), ArgumentError);
}

TEST(Modulus, Examples) {
  EXPECT_EQ(modulus_of_variation(SampleSequence(kZigzag), 3), (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(modulus_of_variation(SampleSequence({0, 1}), 4), (std::vector<double>{1, 1, 1, 1}));
  EXPECT_EQ(modulus_of_variation(SampleSequence({2, 2, 2}), 3), (std::vector<double>{0, 0, 0}));
}

TEST(VariationProperty, MatchesBruteForce) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto v = random_integers(rng, n);
    const SampleSequence s(v);
    for (double p : {1.0, 2.0}) ASSERT_EQ(p_variation_power(s, p), brute::p_variation_power(v, p)) << trial;
    for (double p : {1.5, 3.0}) {
      const double bf = brute::p_variation_power(v, p);
      ASSERT_NEAR(p_variation_power(s, p), bf, 1e-12 * std::max(1.0, bf)) << trial;
    }
    const auto fam = brute::interval_families(v, [](std::size_t i) { return static_cast<double>(i); });
    const auto nu = modulus_of_variation(s, 6);
    for (std::size_t m = 1; m <= 6; ++m) {
      const double want = fam.nu[std::min(m, fam.nu.size() - 1)];
      ASSERT_EQ(nu[m - 1], want) << trial << " m=" << m;
    }
    const auto lv = lambda_variation_bounds(s, LambdaSequence::harmonic());
    ASSERT_TRUE(lv.exact);
    ASSERT_NEAR(lv.value, fam.lambda_best, 1e-12 * std::max(1.0, fam.lambda_best)) << trial;
    ASSERT_LE(lv.value, lv.upper_bound * (1 + 1e-12));
    const auto sq = brute::interval_families(v, [](std::size_t i) { return std::sqrt(static_cast<double>(i)); });
    ASSERT_NEAR(lambda_variation(s, LambdaSequence::power(0.5)), sq.lambda_best,
                1e-12 * std::max(1.0, sq.lambda_best));
  }
}

TEST(VariationProperty, ModulusConcave) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto v = random_integers(rng, 2 + rng() % 60);
    const auto nu = modulus_of_variation(SampleSequence(v), 20);
    for (std::size_t m = 1; m < nu.size(); ++m) ASSERT_GE(nu[m], nu[m - 1]) << trial;
    for (std::size_t m = 2; m < nu.size(); ++m) {
      ASSERT_LE(nu[m] - nu[m - 1], nu[m - 1] - nu[m - 2]) << trial << " m=" << m;
    }
  }
}

TEST(VariationProperty, OrderingAndMonotonicity) {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> v(2 + rng() % 40);
    for (auto& x : v) x = u(rng);
    const SampleSequence s(v);
    const double tv = p_variation(s, 1.0);
    for (double p : {1.5, 2.0, 4.0}) EXPECT_LE(p_variation(s, p), tv * (1 + 1e-14));
    EXPECT_EQ(lambda_variation(s, LambdaSequence::constant(1)), modulus_of_variation(s, 1)[0]);

    auto w = v;
    w.push_back(u(rng));
    const SampleSequence t(w);
    EXPECT_GE(p_variation(t, 1.0), tv);
    EXPECT_GE(p_variation(t, 2.0), p_variation(s, 2.0));
    EXPECT_GE(lambda_variation(t, LambdaSequence::harmonic()), lambda_variation(s, LambdaSequence::harmonic()) * (1 - 1e-14));
    const auto a = modulus_of_variation(s, 5), b = modulus_of_variation(t, 5);
    for (std::size_t m = 0; m < 5; ++m) EXPECT_GE(b[m], a[m]);
  }
}

TEST(TurningPoints, KeepsExtrema) {
  const std::vector<double> v{0, 1, 2, 2, 1, 3, 3, 3, 5, 4};
  EXPECT_EQ(turning_points(v), (std::vector<double>{0, 2, 1, 5, 4}));
}

TEST(Sampling, Construction) {
  const auto s = sample_for_variation(testing_util::sign(), 4);
  EXPECT_EQ(s.values(), (std::vector<double>{-1, -1, -1, 1, 1, 1}));
  const auto saw = sample_for_variation(testing_util::sawtooth(), 10).values();
  bool pair = false;
  for (std::size_t i = 0; i + 1 < saw.size(); ++i) pair = pair || (saw[i] == -kPi / 2 && saw[i + 1] == kPi / 2);
  EXPECT_TRUE(pair);
  const auto mono = sample_for_variation(parse_function_spec("domain [0, 2]; piece exp(x)"), 50).values();
  EXPECT_TRUE(std::is_sorted(mono.begin(), mono.end()));
  EXPECT_THROW(sample_for_variation(testing_util::sign(), 1), ArgumentError);
}

TEST(Sampling, FindsInteriorExtrema) {
  const auto s = sample_for_variation(parse_function_spec("domain [0, 1]; piece sin(7*x)"), 8);
  const auto& v = s.values();
  EXPECT_NEAR(*std::max_element(v.begin(), v.end()), 1.0, 1e-12);
  EXPECT_NEAR(p_variation(s, 1.0), 1 + 2 + (1 + std::sin(7.0)), 1e-9);
}

TEST(Classify, Sawtooth) {
  std::vector<std::pair<std::size_t, SampleSequence>> grids;
  for (std::size_t d : {64u, 128u, 256u, 512u}) grids.emplace_back(d, sample_for_variation(testing_util::sawtooth(), d));
  const auto rep = variation_report(grids);
  EXPECT_EQ(rep.suggested.kind, VariationClass::BV);
  EXPECT_NEAR(rep.levels.back().total_variation, 2 * kPi, 1e-12);
}

TEST(Classify, CriticalPVariation) {
  // sqrt(x) sin(pi/x) on (0, 1]: increments of V_p^p scale like N^((2-p)/4) on
  // N-point grids, so p = 2 is critical.
  std::vector<std::pair<std::size_t, SampleSequence>> grids;
  for (std::size_t d : {1024u, 2048u, 4096u, 8192u, 16384u, 32768u}) {
    std::vector<double> v;
    for (std::size_t i = 1; i <= d; ++i) {
      const double x = static_cast<double>(i) / d;
      v.push_back(std::sqrt(x) * std::sin(kPi / x));
    }
    grids.emplace_back(d, SampleSequence(v));
  }
  const auto rep = variation_report(grids);
  ASSERT_EQ(rep.suggested.kind, VariationClass::V_p) << class_name(rep.suggested.kind);
  EXPECT_NEAR(rep.suggested.parameter, 2.0, 0.25);
}

TEST(Classify, Noise) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<std::pair<std::size_t, SampleSequence>> grids;
  for (std::size_t d : {128u, 256u, 512u, 1024u}) {
    std::vector<double> v(d);
    for (auto& x : v) x = u(rng);
    grids.emplace_back(d, SampleSequence(v));
  }
  const auto kind = variation_report(grids).suggested.kind;
  EXPECT_TRUE(kind == VariationClass::inconclusive || kind == VariationClass::W) << class_name(kind);
}
