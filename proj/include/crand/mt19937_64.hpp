#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>

#include "crand/kind.hpp"

namespace crand {

// 64-bit Mersenne Twister with the standard parameter set.
// State words: the 312-word vector followed by the read index.
class Mt19937_64 {
 public:
  using result_type = std::uint64_t;
  static constexpr GeneratorKind kind = GeneratorKind::mt19937_64;
  static constexpr std::size_t n = 312;
  static constexpr std::size_t m = 156;
  static constexpr std::size_t seed_words = 1;
  static constexpr std::size_t state_words = n + 1;
  static constexpr unsigned output_bits = 64;
  static constexpr std::uint64_t default_seed = 5489;

  static void seed(std::span<const std::uint64_t> user,
                   std::span<std::uint64_t> state) noexcept {
    state[0] = user[0];
    for (std::size_t i = 1; i < n; ++i) {
      state[i] = 6364136223846793005ULL * (state[i - 1] ^ (state[i - 1] >> 62)) + i;
    }
    state[n] = n;
  }
  static bool valid(std::span<const std::uint64_t> state) noexcept {
    if (state[n] > n) return false;
    // Only the top bit of word 0 takes part in the recurrence.
    std::uint64_t any = state[0] & upper_mask;
    for (std::size_t i = 1; i < n; ++i) any |= state[i];
    return any != 0;
  }

  explicit Mt19937_64(std::span<const std::uint64_t> state) noexcept
      : index_(static_cast<std::size_t>(state[n])) {
    for (std::size_t i = 0; i < n; ++i) mt_[i] = state[i];
  }
  void save(std::span<std::uint64_t> state) const noexcept {
    for (std::size_t i = 0; i < n; ++i) state[i] = mt_[i];
    state[n] = index_;
  }

  result_type operator()() noexcept {
    if (index_ >= n) twist();
    std::uint64_t x = mt_[index_++];
    x ^= (x >> 29) & 0x5555555555555555ULL;
    x ^= (x << 17) & 0x71D67FFFEDA60000ULL;
    x ^= (x << 37) & 0xFFF7EEE000000000ULL;
    x ^= x >> 43;
    return x;
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

 private:
  static constexpr std::uint64_t matrix_a = 0xB5026F5AA96619E9ULL;
  static constexpr std::uint64_t upper_mask = 0xFFFFFFFF80000000ULL;
  static constexpr std::uint64_t lower_mask = 0x7FFFFFFFULL;

  static constexpr std::uint64_t mix(std::uint64_t hi, std::uint64_t lo) noexcept {
    const std::uint64_t x = (hi & upper_mask) | (lo & lower_mask);
    return (x >> 1) ^ ((x & 1u) ? matrix_a : 0u);
  }

  void twist() noexcept {
    std::size_t i = 0;
    for (; i < n - m; ++i) mt_[i] = mt_[i + m] ^ mix(mt_[i], mt_[i + 1]);
    for (; i < n - 1; ++i) mt_[i] = mt_[i + m - n] ^ mix(mt_[i], mt_[i + 1]);
    mt_[n - 1] = mt_[m - 1] ^ mix(mt_[n - 1], mt_[0]);
    index_ = 0;
  }

  std::array<std::uint64_t, n> mt_;
  std::size_t index_;
};

}  // namespace crand
