#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace crand {

// Values are the stable KindId numbers published in crand.h.
enum class GeneratorKind : std::uint8_t {
  xorshift32 = 0,
  xorshift64 = 1,
  xorshift128 = 2,
  xorshift128plus = 3,
  pcg32 = 4,
  kiss = 5,
  splitmix64 = 6,
  mt19937_64 = 7,
};

inline constexpr std::size_t kind_count = 8;

inline constexpr std::array<GeneratorKind, kind_count> all_kinds = {
    GeneratorKind::xorshift32,      GeneratorKind::xorshift64,
    GeneratorKind::xorshift128,     GeneratorKind::xorshift128plus,
    GeneratorKind::pcg32,           GeneratorKind::kiss,
    GeneratorKind::splitmix64,      GeneratorKind::mt19937_64,
};

constexpr std::string_view name(GeneratorKind k) noexcept {
  switch (k) {
    case GeneratorKind::xorshift32: return "xorshift32";
    case GeneratorKind::xorshift64: return "xorshift64";
    case GeneratorKind::xorshift128: return "xorshift128";
    case GeneratorKind::xorshift128plus: return "xorshift128plus";
    case GeneratorKind::pcg32: return "pcg32";
    case GeneratorKind::kiss: return "kiss";
    case GeneratorKind::splitmix64: return "splitmix64";
    case GeneratorKind::mt19937_64: return "mt19937_64";
  }
  return {};
}

constexpr std::optional<GeneratorKind> kind_from_name(std::string_view s) noexcept {
  for (auto k : all_kinds) {
    if (name(k) == s) return k;
  }
  return std::nullopt;
}

constexpr std::optional<GeneratorKind> kind_from_id(std::uint32_t id) noexcept {
  if (id >= kind_count) return std::nullopt;
  return static_cast<GeneratorKind>(id);
}

}  // namespace crand
