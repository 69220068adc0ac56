#pragma once

#include <cstdint>
#include <limits>
#include <span>

#include "crand/kind.hpp"

namespace crand {

class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  static constexpr GeneratorKind kind = GeneratorKind::splitmix64;
  static constexpr std::size_t seed_words = 1;
  static constexpr std::size_t state_words = 1;
  static constexpr unsigned output_bits = 64;
  static constexpr std::uint64_t gamma = 0x9E3779B97F4A7C15ULL;

  static void seed(std::span<const std::uint64_t> user,
                   std::span<std::uint64_t> state) noexcept {
    state[0] = user[0];
  }
  // Every 64-bit state is on the single full-period cycle.
  static bool valid(std::span<const std::uint64_t>) noexcept { return true; }

  explicit SplitMix64(std::span<const std::uint64_t> state) noexcept
      : x_(state[0]) {}
  explicit SplitMix64(std::uint64_t state) noexcept : x_(state) {}
  void save(std::span<std::uint64_t> state) const noexcept { state[0] = x_; }

  result_type operator()() noexcept {
    std::uint64_t z = (x_ += gamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

 private:
  std::uint64_t x_;
};

}  // namespace crand
