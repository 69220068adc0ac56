#pragma once

// Marsaglia xorshift generators and Vigna's xorshift128+.
//
// All engines share one storage convention: state lives in an array of
// 64-bit words. 32-bit lanes occupy the low half of a word (xorshift32) or
// are packed two per word, low lane first (xorshift128).

#include <cstdint>
#include <limits>
#include <span>

#include "crand/kind.hpp"

namespace crand {

class Xorshift32 {
 public:
  using result_type = std::uint32_t;
  static constexpr GeneratorKind kind = GeneratorKind::xorshift32;
  static constexpr std::size_t seed_words = 1;
  static constexpr std::size_t state_words = 1;
  static constexpr unsigned output_bits = 32;

  static void seed(std::span<const std::uint64_t> user,
                   std::span<std::uint64_t> state) noexcept {
    state[0] = user[0] & 0xFFFFFFFFu;
  }
  static bool valid(std::span<const std::uint64_t> state) noexcept {
    return state[0] != 0 && (state[0] >> 32) == 0;
  }

  explicit Xorshift32(std::span<const std::uint64_t> state) noexcept
      : x_(static_cast<std::uint32_t>(state[0])) {}
  void save(std::span<std::uint64_t> state) const noexcept { state[0] = x_; }

  result_type operator()() noexcept {
    x_ ^= x_ << 13;
    x_ ^= x_ >> 17;
    x_ ^= x_ << 5;
    return x_;
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

 private:
  std::uint32_t x_;
};

class Xorshift64 {
 public:
  using result_type = std::uint64_t;
  static constexpr GeneratorKind kind = GeneratorKind::xorshift64;
  static constexpr std::size_t seed_words = 1;
  static constexpr std::size_t state_words = 1;
  static constexpr unsigned output_bits = 64;

  static void seed(std::span<const std::uint64_t> user,
                   std::span<std::uint64_t> state) noexcept {
    state[0] = user[0];
  }
  static bool valid(std::span<const std::uint64_t> state) noexcept {
    return state[0] != 0;
  }

  explicit Xorshift64(std::span<const std::uint64_t> state) noexcept
      : x_(state[0]) {}
  void save(std::span<std::uint64_t> state) const noexcept { state[0] = x_; }

  result_type operator()() noexcept {
    x_ ^= x_ << 13;
    x_ ^= x_ >> 7;
    x_ ^= x_ << 17;
    return x_;
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

 private:
  std::uint64_t x_;
};

// xor128: four 32-bit lanes x, y, z, w with shift triple (11, 8, 19).
// Packed as word0 = x | y << 32, word1 = z | w << 32.
class Xorshift128 {
 public:
  using result_type = std::uint32_t;
  static constexpr GeneratorKind kind = GeneratorKind::xorshift128;
  static constexpr std::size_t seed_words = 2;
  static constexpr std::size_t state_words = 2;
  static constexpr unsigned output_bits = 32;

  static void seed(std::span<const std::uint64_t> user,
                   std::span<std::uint64_t> state) noexcept {
    state[0] = user[0];
    state[1] = user[1];
  }
  static bool valid(std::span<const std::uint64_t> state) noexcept {
    return (state[0] | state[1]) != 0;
  }

  explicit Xorshift128(std::span<const std::uint64_t> state) noexcept
      : x_(static_cast<std::uint32_t>(state[0])),
        y_(static_cast<std::uint32_t>(state[0] >> 32)),
        z_(static_cast<std::uint32_t>(state[1])),
        w_(static_cast<std::uint32_t>(state[1] >> 32)) {}
  void save(std::span<std::uint64_t> state) const noexcept {
    state[0] = std::uint64_t{x_} | (std::uint64_t{y_} << 32);
    state[1] = std::uint64_t{z_} | (std::uint64_t{w_} << 32);
  }

  result_type operator()() noexcept {
    const std::uint32_t t = x_ ^ (x_ << 11);
    x_ = y_;
    y_ = z_;
    z_ = w_;
    w_ = w_ ^ (w_ >> 19) ^ (t ^ (t >> 8));
    return w_;
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

 private:
  std::uint32_t x_, y_, z_, w_;
};

// xorshift128+ with the (23, 17, 26) triple; output is the sum of the two
// state words after the update.
class Xorshift128Plus {
 public:
  using result_type = std::uint64_t;
  static constexpr GeneratorKind kind = GeneratorKind::xorshift128plus;
  static constexpr std::size_t seed_words = 2;
  static constexpr std::size_t state_words = 2;
  static constexpr unsigned output_bits = 64;

  static void seed(std::span<const std::uint64_t> user,
                   std::span<std::uint64_t> state) noexcept {
    state[0] = user[0];
    state[1] = user[1];
  }
  static bool valid(std::span<const std::uint64_t> state) noexcept {
    return (state[0] | state[1]) != 0;
  }

  explicit Xorshift128Plus(std::span<const std::uint64_t> state) noexcept
      : s0_(state[0]), s1_(state[1]) {}
  void save(std::span<std::uint64_t> state) const noexcept {
    state[0] = s0_;
    state[1] = s1_;
  }

  result_type operator()() noexcept {
    std::uint64_t a = s0_;
    const std::uint64_t b = s1_;
    s0_ = b;
    a ^= a << 23;
    s1_ = a ^ b ^ (a >> 17) ^ (b >> 26);
    return s1_ + b;
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

 private:
  std::uint64_t s0_, s1_;
};

}  // namespace crand
