#pragma once

#include <cstdint>
#include <limits>
#include <span>

#include "crand/kind.hpp"

namespace crand {

// 32-bit KISS: (MWC ^ CONG) + SHR3.
//   MWC  : two 16-bit multiply-with-carry lanes, multipliers 36969 and 18000
//   CONG : x = 69069 x + 12345
//   SHR3 : xorshift with shifts (13, 17, 5)
// State words, one 32-bit lane each: [mwc_z, mwc_w, cong, shr3].
class Kiss {
 public:
  using result_type = std::uint32_t;
  static constexpr GeneratorKind kind = GeneratorKind::kiss;
  static constexpr std::size_t seed_words = 4;
  static constexpr std::size_t state_words = 4;
  static constexpr unsigned output_bits = 32;

  static void seed(std::span<const std::uint64_t> user,
                   std::span<std::uint64_t> state) noexcept {
    for (std::size_t i = 0; i < state_words; ++i) state[i] = user[i] & 0xFFFFFFFFu;
  }
  // SHR3 must be nonzero; every lane must be canonical (high half clear).
  static bool valid(std::span<const std::uint64_t> state) noexcept {
    for (std::size_t i = 0; i < state_words; ++i) {
      if ((state[i] >> 32) != 0) return false;
    }
    return state[3] != 0;
  }

  explicit Kiss(std::span<const std::uint64_t> state) noexcept
      : z_(static_cast<std::uint32_t>(state[0])),
        w_(static_cast<std::uint32_t>(state[1])),
        cong_(static_cast<std::uint32_t>(state[2])),
        shr3_(static_cast<std::uint32_t>(state[3])) {}
  void save(std::span<std::uint64_t> state) const noexcept {
    state[0] = z_;
    state[1] = w_;
    state[2] = cong_;
    state[3] = shr3_;
  }

  result_type operator()() noexcept {
    z_ = 36969u * (z_ & 65535u) + (z_ >> 16);
    w_ = 18000u * (w_ & 65535u) + (w_ >> 16);
    const std::uint32_t mwc = (z_ << 16) + w_;
    cong_ = 69069u * cong_ + 12345u;
    shr3_ ^= shr3_ << 13;
    shr3_ ^= shr3_ >> 17;
    shr3_ ^= shr3_ << 5;
    return (mwc ^ cong_) + shr3_;
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

 private:
  std::uint32_t z_, w_, cong_, shr3_;
};

}  // namespace crand
