#pragma once

// Desk-scale randomness diagnostics and fill throughput timing.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "crand/generator.hpp"
#include "crand/result.hpp"

namespace crand {

struct AcfSeries {
  std::size_t max_lag = 0;
  std::vector<double> values;  // values[k - 1] is r_k
};

// Sample autocorrelation r_k = sum_{i<n-k} d_i d_{i+k} / sum_i d_i^2 with
// d_i = x_i - mean, for k = 1..max_lag.
inline Result<AcfSeries> acf(std::span<const double> series, std::size_t max_lag) {
  const std::size_t n = series.size();
  if (n < max_lag + 2) return Errc::too_short;
  if (std::all_of(series.begin(), series.end(),
                  [&](double x) { return x == series.front(); })) {
    return Errc::zero_variance;
  }
  double mean = 0.0;
  for (double x : series) mean += x;
  mean /= static_cast<double>(n);

  std::vector<double> dev(n);
  double denom = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    dev[i] = series[i] - mean;
    denom += dev[i] * dev[i];
  }
  if (!(denom > 0.0)) return Errc::zero_variance;

  AcfSeries out{max_lag, std::vector<double>(max_lag)};
  for (std::size_t k = 1; k <= max_lag; ++k) {
    double num = 0.0;
    for (std::size_t i = 0; i + k < n; ++i) num += dev[i] * dev[i + k];
    out.values[k - 1] = num / denom;
  }
  return out;
}

// (x_i, x_{i+k}) for i = 0 .. n-k-1.
inline Result<std::vector<std::pair<double, double>>> lag_pairs(std::span<const double> series,
                                                                std::size_t k) {
  if (series.size() <= k) return Errc::too_short;
  std::vector<std::pair<double, double>> out;
  out.reserve(series.size() - k);
  for (std::size_t i = 0; i + k < series.size(); ++i) out.emplace_back(series[i], series[i + k]);
  return out;
}

namespace detail {

// Regularized lower incomplete gamma P(a, x) by its power series; converges
// quickly for x < a + 1.
inline double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double term = sum;
  for (int i = 0; i < 100000; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a, x) by Lentz's continued fraction;
// used for x >= a + 1.
inline double gamma_q_fraction(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace detail

// Regularized upper incomplete gamma Q(a, x), a > 0, x >= 0.
inline double gamma_q(double a, double x) {
  if (x <= 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
  return detail::gamma_q_fraction(a, x);
}

// Chi-square survival function with `dof` degrees of freedom.
inline double chi_square_sf(double statistic, double dof) {
  return gamma_q(0.5 * dof, 0.5 * statistic);
}

struct UniformityResult {
  std::size_t bins = 0;
  double statistic = 0.0;
  double p_value = 1.0;
};

// Pearson chi-square over equal-width bins chosen by the top log2(bins) bits
// of each `bits`-wide word.
inline Result<UniformityResult> chi_square_uniform(std::span<const std::uint64_t> words,
                                                   std::size_t bins, unsigned bits = 64) {
  if (bins < 2 || !std::has_single_bit(bins)) return Errc::bad_bin_count;
  const auto bin_bits = static_cast<unsigned>(std::countr_zero(bins));
  if (bin_bits > bits) return Errc::bad_bin_count;
  if (words.size() < 10 * bins) return Errc::too_short;

  std::vector<std::uint64_t> counts(bins);
  const unsigned shift = bits - bin_bits;
  const std::uint64_t mask = bins - 1;
  for (auto w : words) ++counts[(w >> shift) & mask];

  const double expected = static_cast<double>(words.size()) / static_cast<double>(bins);
  double stat = 0.0;
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return UniformityResult{bins, stat, chi_square_sf(stat, static_cast<double>(bins - 1))};
}

// z = (ones - total/2) / sqrt(total/4) over the low `bits` bits of each word.
inline Result<double> monobit(std::span<const std::uint64_t> words, unsigned bits = 64) {
  const double total = static_cast<double>(words.size()) * bits;
  if (total < 1e4) return Errc::too_short;
  const std::uint64_t mask =
      bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  std::uint64_t ones = 0;
  for (auto w : words) ones += static_cast<std::uint64_t>(std::popcount(w & mask));
  return (static_cast<double>(ones) - total / 2.0) / std::sqrt(total / 4.0);
}

struct BenchReport {
  GeneratorKind kind{};
  std::size_t n = 0;
  std::size_t reps = 0;
  std::size_t loops = 0;
  double mean_us = 0.0;    // per fill(n)
  double stddev_us = 0.0;  // across reps, Bessel-corrected
  std::uint64_t checksum = 0;
  bool checksum_stable = true;
};

// Times fill(n) on a monotonic clock. Each of `reps` runs restarts from
// `start` and performs `loops` consecutive fills; the run's per-fill time is
// one sample. Every filled buffer is folded into a checksum outside the
// timed region, and each run must reproduce the same checksum.
inline Result<BenchReport> bench_throughput(const GeneratorState& start, std::size_t n,
                                            std::size_t reps, std::size_t loops = 1) {
  if (reps < 2) return Errc::bad_reps;
  loops = std::max<std::size_t>(loops, 1);
  std::vector<std::uint64_t> buf;
  try {
    buf.resize(n);
  } catch (const std::bad_alloc&) {
    return Errc::allocation_failure;
  }

  BenchReport report{start.kind(), n, reps, loops};
  {
    GeneratorState warm = start;
    warm.fill_into(buf);
  }

  using clock = std::chrono::steady_clock;
  std::vector<double> samples;
  samples.reserve(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    GeneratorState state = start;
    std::uint64_t sum = 0;
    clock::duration elapsed{};
    for (std::size_t l = 0; l < loops; ++l) {
      const auto t0 = clock::now();
      state.fill_into(buf);
      elapsed += clock::now() - t0;
      for (auto w : buf) sum = std::rotl(sum, 1) ^ w;
    }
    if (r == 0) {
      report.checksum = sum;
    } else if (sum != report.checksum) {
      report.checksum_stable = false;
    }
    samples.push_back(std::chrono::duration<double, std::micro>(elapsed).count() /
                      static_cast<double>(loops));
  }

  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= static_cast<double>(reps);
  double var = 0.0;
  for (double s : samples) var += (s - mean) * (s - mean);
  var /= static_cast<double>(reps - 1);
  report.mean_us = mean;
  report.stddev_us = std::sqrt(var);
  return report;
}

// Fixed-seed convenience form: the start state comes from auto_seed_words(kind, 0).
inline Result<BenchReport> bench_throughput(GeneratorKind kind, std::size_t n = 10000,
                                            std::size_t reps = 7, std::size_t loops = 1) {
  auto state = new_state(kind, auto_seed_words(kind, 0));
  if (!state) return state.error();
  return bench_throughput(*state, n, reps, loops);
}

}  // namespace crand
