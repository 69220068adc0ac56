#pragma once

#include <cstdint>
#include <limits>
#include <span>

#include "crand/kind.hpp"

namespace crand {

// PCG-XSH-RR 64/32. User seed is (initstate, initseq); stored state is
// [state, inc] with inc always odd.
class Pcg32 {
 public:
  using result_type = std::uint32_t;
  static constexpr GeneratorKind kind = GeneratorKind::pcg32;
  static constexpr std::size_t seed_words = 2;
  static constexpr std::size_t state_words = 2;
  static constexpr unsigned output_bits = 32;
  static constexpr std::uint64_t multiplier = 6364136223846793005ULL;

  static void seed(std::span<const std::uint64_t> user,
                   std::span<std::uint64_t> state) noexcept {
    const std::uint64_t inc = (user[1] << 1) | 1u;
    std::uint64_t s = 0;
    s = s * multiplier + inc;
    s += user[0];
    s = s * multiplier + inc;
    state[0] = s;
    state[1] = inc;
  }
  static bool valid(std::span<const std::uint64_t> state) noexcept {
    return (state[1] & 1u) != 0;
  }

  explicit Pcg32(std::span<const std::uint64_t> state) noexcept
      : state_(state[0]), inc_(state[1]) {}
  void save(std::span<std::uint64_t> state) const noexcept {
    state[0] = state_;
    state[1] = inc_;
  }

  result_type operator()() noexcept {
    const std::uint64_t old = state_;
    state_ = old * multiplier + inc_;
    const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

 private:
  std::uint64_t state_, inc_;
};

}  // namespace crand
