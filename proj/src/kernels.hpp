#pragma once

#include <cstdint>
#include <span>

#include "crand/generator.hpp"

namespace crand::abi {

using StateSpan = std::span<std::uint64_t>;
using ConstStateSpan = std::span<const std::uint64_t>;

struct KindOps {
  std::size_t seed_words;
  std::size_t state_words;
  void (*seed)(ConstStateSpan, StateSpan) noexcept;
  bool (*valid)(ConstStateSpan) noexcept;
  void (*fill)(StateSpan, std::span<std::uint64_t>) noexcept;
  void (*fill_unit)(StateSpan, std::span<double>) noexcept;
};

template <Engine E>
constexpr KindOps make_ops() noexcept {
  return KindOps{
      E::seed_words,
      E::state_words,
      [](ConstStateSpan user, StateSpan state) noexcept { E::seed(user, state); },
      [](ConstStateSpan state) noexcept { return E::valid(state); },
      &fill_words<E>,
      &fill_unit_words<E>,
  };
}

extern const KindOps xorshift32_ops;
extern const KindOps xorshift64_ops;
extern const KindOps xorshift128_ops;
extern const KindOps xorshift128plus_ops;
extern const KindOps pcg32_ops;
extern const KindOps kiss_ops;
extern const KindOps splitmix64_ops;
extern const KindOps mt19937_64_ops;

}  // namespace crand::abi
