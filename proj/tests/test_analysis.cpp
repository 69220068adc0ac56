#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "crand/analysis.hpp"
#include "test_util.hpp"

namespace {

using crand::Errc;
using crand::GeneratorKind;

// Direct long-double evaluation of the sample ACF.
std::vector<long double> acf_oracle(const std::vector<double>& x, std::size_t max_lag) {
  long double mean = 0;
  for (double v : x) mean += v;
  mean /= x.size();
  long double den = 0;
  for (double v : x) den += (v - mean) * (v - mean);
  std::vector<long double> r;
  for (std::size_t k = 1; k <= max_lag; ++k) {
    long double num = 0;
    for (std::size_t i = k; i < x.size(); ++i) num += (x[i] - mean) * (x[i - k] - mean);
    r.push_back(num / den);
  }
  return r;
}

TEST(Acf, AlternatingSeries) {
  const std::vector<double> x = {1, -1, 1, -1};
  auto r = crand::acf(x, 1);
  ASSERT_TRUE(r.has_value());
  ASSERT_EQ(r->values.size(), 1u);
  EXPECT_DOUBLE_EQ(r->values[0], -0.75);
}

TEST(Acf, LinearRamp) {
  const std::vector<double> x = {1, 2, 3, 4, 5};
  auto r = crand::acf(x, 1);
  ASSERT_TRUE(r.has_value());
  EXPECT_DOUBLE_EQ(r->values[0], 0.4);
}

TEST(Acf, Errors) {
  const std::vector<double> constant(100, 0.25);
  EXPECT_EQ(crand::acf(constant, 5).error(), Errc::zero_variance);
  const std::vector<double> tenth(50, 0.1);
  EXPECT_EQ(crand::acf(tenth, 5).error(), Errc::zero_variance);
  const std::vector<double> short_series = {1, 2, 3};
  EXPECT_EQ(crand::acf(short_series, 2).error(), Errc::too_short);
  EXPECT_TRUE(crand::acf(short_series, 1).has_value());
}

TEST(Acf, MatchesOracle) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x(50 + trial * 13);
    for (auto& v : x) v = u(rng);
    const auto r = crand::acf(x, 20).value();
    const auto ref = acf_oracle(x, 20);
    for (std::size_t k = 0; k < 20; ++k) EXPECT_NEAR(r.values[k], static_cast<double>(ref[k]), 1e-12);
  }
}

TEST(Acf, ShiftInvariantAndBounded) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(40);
    for (auto& v : x) v = u(rng);
    if (trial % 5 == 0) {
      // Strongly structured input: periodic and trending.
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = (i % 3) + 0.01 * i;
    }
    std::vector<double> shifted = x;
    for (auto& v : shifted) v += 1000.0;
    const auto a = crand::acf(x, 38).value();
    const auto b = crand::acf(shifted, 38).value();
    for (std::size_t k = 0; k < 38; ++k) {
      EXPECT_LE(std::abs(a.values[k]), 1.0);
      EXPECT_NEAR(a.values[k], b.values[k], 1e-9);
    }
  }
}

TEST(LagPairs, Windows) {
  const std::vector<double> x = {0.1, 0.2, 0.3};
  auto one = crand::lag_pairs(x, 1).value();
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0], std::make_pair(0.1, 0.2));
  EXPECT_EQ(one[1], std::make_pair(0.2, 0.3));
  auto two = crand::lag_pairs(x, 2).value();
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0], std::make_pair(0.1, 0.3));
  auto zero = crand::lag_pairs(x, 0).value();
  ASSERT_EQ(zero.size(), 3u);
  for (const auto& [a, b] : zero) EXPECT_EQ(a, b);
  EXPECT_EQ(crand::lag_pairs(x, 3).error(), Errc::too_short);
}

TEST(GammaQ, MatchesBoost) {
  for (double a : {0.5, 1.0, 1.5, 3.0, 7.5, 31.5, 127.5, 511.5}) {
    for (double f : {0.0, 0.01, 0.2, 0.5, 0.9, 1.0, 1.1, 1.5, 2.0, 4.0}) {
      const double x = f * a + (f > 0 ? 0.3 : 0.0);
      EXPECT_NEAR(crand::gamma_q(a, x), boost::math::gamma_q(a, x), 1e-8)
          << "a=" << a << " x=" << x;
    }
  }
}

TEST(GammaQ, ChiSquareKnownQuantiles) {
  // Upper 5% point of chi-square with 1 and 255 dof.
  EXPECT_NEAR(crand::chi_square_sf(3.841458820694124, 1), 0.05, 1e-9);
  EXPECT_NEAR(crand::chi_square_sf(293.2478399, 255), 0.05, 1e-6);
}

TEST(ChiSquare, EqualCountsAndSingleBin) {
  std::vector<std::uint64_t> even;
  for (std::uint64_t b = 0; b < 16; ++b) {
    for (int i = 0; i < 10; ++i) even.push_back(b << 60 | static_cast<std::uint64_t>(i));
  }
  auto r = crand::chi_square_uniform(even, 16).value();
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.p_value, 1.0);
  EXPECT_EQ(r.bins, 16u);

  const std::vector<std::uint64_t> low(100, 0);
  auto one = crand::chi_square_uniform(low, 2).value();
  EXPECT_DOUBLE_EQ(one.statistic, 100.0);
  EXPECT_LT(one.p_value, 1e-20);
}

TEST(ChiSquare, BinsByTopBitsOfWidth) {
  // 32-bit words all in the upper half: two bins of width 32 see imbalance.
  const std::vector<std::uint64_t> upper(100, 0x80000000u);
  EXPECT_DOUBLE_EQ(crand::chi_square_uniform(upper, 2, 32).value().statistic, 100.0);
  // The same values read as 64-bit words fall in the lower bin.
  EXPECT_DOUBLE_EQ(crand::chi_square_uniform(upper, 2, 64).value().statistic, 100.0);
  std::vector<std::uint64_t> split(100);
  for (std::size_t i = 0; i < split.size(); ++i) split[i] = i % 2 ? 0x80000000u : 0u;
  EXPECT_EQ(crand::chi_square_uniform(split, 2, 32).value().statistic, 0.0);
}

TEST(ChiSquare, Errors) {
  const std::vector<std::uint64_t> w(1000, 1);
  for (std::size_t bins : {0u, 1u, 3u, 12u}) {
    EXPECT_EQ(crand::chi_square_uniform(w, bins).error(), Errc::bad_bin_count);
  }
  EXPECT_EQ(crand::chi_square_uniform(w, 128).error(), Errc::too_short);
  EXPECT_EQ(crand::chi_square_uniform(w, 1ull << 40, 32).error(), Errc::bad_bin_count);
}

TEST(ChiSquare, PermutationInvariant) {
  std::mt19937_64 rng(23);
  std::vector<std::uint64_t> w(4096);
  for (auto& v : w) v = rng() & 0xF0FFFFFFFFFFFFFFull;  // skew the counts
  const auto base = crand::chi_square_uniform(w, 16).value();
  std::array<std::uint64_t, 16> perm;
  for (std::uint64_t i = 0; i < 16; ++i) perm[i] = i;
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::uint64_t> relabeled = w;
    for (auto& v : relabeled) v = (perm[v >> 60] << 60) | (v & ((1ull << 60) - 1));
    const auto r = crand::chi_square_uniform(relabeled, 16).value();
    EXPECT_NEAR(r.statistic, base.statistic, 1e-9);
    EXPECT_NEAR(r.p_value, base.p_value, 1e-12);
  }
}

TEST(Monobit, Extremes) {
  const std::vector<std::uint64_t> ones(200, ~std::uint64_t{0});
  EXPECT_DOUBLE_EQ(crand::monobit(ones).value(), std::sqrt(200.0 * 64));
  std::vector<std::uint64_t> alt(200);
  for (std::size_t i = 0; i < alt.size(); ++i) {
    alt[i] = i % 2 ? 0xAAAAAAAAAAAAAAAAull : 0x5555555555555555ull;
  }
  EXPECT_EQ(crand::monobit(alt).value(), 0.0);
  const std::vector<std::uint64_t> ones32(400, 0xFFFFFFFFu);
  EXPECT_DOUBLE_EQ(crand::monobit(ones32, 32).value(), std::sqrt(400.0 * 32));
  EXPECT_EQ(crand::monobit(std::vector<std::uint64_t>(100, 0)).error(), Errc::too_short);
}

TEST(Monobit, MatchesDirectCount) {
  std::mt19937_64 rng(24);
  std::vector<std::uint64_t> w(5000);
  for (auto& v : w) v = rng();
  std::uint64_t ones = 0;
  for (auto v : w) {
    for (int b = 0; b < 64; ++b) ones += (v >> b) & 1u;
  }
  const double bits = 5000.0 * 64;
  EXPECT_NEAR(crand::monobit(w).value(), (ones - bits / 2) / std::sqrt(bits / 4), 1e-12);
}

TEST(Bench, Bookkeeping) {
  auto r = crand::bench_throughput(GeneratorKind::xorshift64, 1000, 3, 5);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->reps, 3u);
  EXPECT_EQ(r->n, 1000u);
  EXPECT_EQ(r->loops, 5u);
  EXPECT_GE(r->stddev_us, 0.0);
  EXPECT_GT(r->mean_us, 0.0);
  EXPECT_TRUE(r->checksum_stable);
  EXPECT_EQ(crand::bench_throughput(GeneratorKind::xorshift64, 1000, 1).error(), Errc::bad_reps);
}

TEST(Bench, ChecksumCoversEveryOutput) {
  auto start = crand::new_state(GeneratorKind::pcg32, {42, 54}).value();
  auto r = crand::bench_throughput(start, 257, 2, 3).value();
  const auto all = crand::fill(start, 257 * 3).value().first;
  std::uint64_t sum = 0;
  for (auto w : all) sum = std::rotl(sum, 1) ^ w;
  EXPECT_EQ(r.checksum, sum);
}

}  // namespace
