#pragma once

// Generator state, construction, stepping, bulk fill and normalization.
//
// GeneratorState is a value: next() and fill() return the successor state
// instead of mutating their argument. The *_into variants advance a state
// the caller owns and write into a caller buffer; they never allocate.

#include <algorithm>
#include <cstdint>
#include <new>
#include <span>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "crand/kind.hpp"
#include "crand/kiss.hpp"
#include "crand/mt19937_64.hpp"
#include "crand/pcg32.hpp"
#include "crand/result.hpp"
#include "crand/splitmix64.hpp"
#include "crand/xorshift.hpp"

namespace crand {

template <typename E>
concept Engine = requires(E e, std::span<const std::uint64_t> in,
                          std::span<std::uint64_t> out) {
  typename E::result_type;
  { E::kind } -> std::convertible_to<GeneratorKind>;
  { E::seed_words } -> std::convertible_to<std::size_t>;
  { E::state_words } -> std::convertible_to<std::size_t>;
  { E::output_bits } -> std::convertible_to<unsigned>;
  E::seed(in, out);
  { E::valid(in) } -> std::same_as<bool>;
  E{in};
  e.save(out);
  { e() } -> std::same_as<typename E::result_type>;
};

// Calls f(std::type_identity<EngineType>{}) for the engine implementing k.
template <typename F>
constexpr decltype(auto) visit_kind(GeneratorKind k, F&& f) {
  switch (k) {
    case GeneratorKind::xorshift32: return f(std::type_identity<Xorshift32>{});
    case GeneratorKind::xorshift64: return f(std::type_identity<Xorshift64>{});
    case GeneratorKind::xorshift128: return f(std::type_identity<Xorshift128>{});
    case GeneratorKind::xorshift128plus: return f(std::type_identity<Xorshift128Plus>{});
    case GeneratorKind::pcg32: return f(std::type_identity<Pcg32>{});
    case GeneratorKind::kiss: return f(std::type_identity<Kiss>{});
    case GeneratorKind::splitmix64: return f(std::type_identity<SplitMix64>{});
    case GeneratorKind::mt19937_64: break;
  }
  return f(std::type_identity<Mt19937_64>{});
}

struct KindTraits {
  GeneratorKind kind;
  std::string_view name;
  std::size_t seed_words;   // user-facing initialization words
  std::size_t state_words;  // internal state array length
  unsigned output_bits;
};

constexpr KindTraits traits(GeneratorKind k) {
  return visit_kind(k, []<typename E>(std::type_identity<E>) {
    static_assert(Engine<E>);
    return KindTraits{E::kind, name(E::kind), E::seed_words, E::state_words,
                      E::output_bits};
  });
}

constexpr std::size_t required_seed_words(GeneratorKind k) { return traits(k).seed_words; }
constexpr std::size_t state_word_count(GeneratorKind k) { return traits(k).state_words; }
constexpr unsigned output_bits(GeneratorKind k) { return traits(k).output_bits; }

struct OutputWord {
  std::uint64_t value;
  unsigned bits;
  friend bool operator==(const OutputWord&, const OutputWord&) = default;
};

struct UnitSample {
  double value;
};

// Half-open [0, 1) mapping: top 53 bits for 64-bit words, exact scaling for
// 32-bit words.
template <unsigned Bits>
constexpr double to_unit(std::uint64_t v) noexcept {
  static_assert(Bits == 32 || Bits == 64);
  if constexpr (Bits == 64) {
    return static_cast<double>(v >> 11) * 0x1.0p-53;
  } else {
    return static_cast<double>(v) * 0x1.0p-32;
  }
}

constexpr UnitSample normalize(OutputWord w) noexcept {
  return {w.bits == 64 ? to_unit<64>(w.value) : to_unit<32>(w.value)};
}

// Raw kernels over a state array of E::state_words words. The state must
// already satisfy E::valid.
template <Engine E>
void fill_words(std::span<std::uint64_t> state, std::span<std::uint64_t> out) noexcept {
  E engine{std::span<const std::uint64_t>(state)};
  for (auto& o : out) o = engine();
  engine.save(state);
}

template <Engine E>
void fill_unit_words(std::span<std::uint64_t> state, std::span<double> out) noexcept {
  E engine{std::span<const std::uint64_t>(state)};
  for (auto& o : out) o = to_unit<E::output_bits>(engine());
  engine.save(state);
}

class GeneratorState {
 public:
  // Restores a state from its internal word array; rejects arrays of the
  // wrong length or states the engine cannot run from.
  static Result<GeneratorState> from_words(GeneratorKind kind,
                                           std::span<const std::uint64_t> words) {
    if (words.size() != state_word_count(kind)) return Errc::wrong_seed_count;
    const bool ok = visit_kind(kind, [&]<typename E>(std::type_identity<E>) {
      return E::valid(words);
    });
    if (!ok) return Errc::degenerate_seed;
    try {
      return GeneratorState(kind, std::vector<std::uint64_t>(words.begin(), words.end()));
    } catch (const std::bad_alloc&) {
      return Errc::allocation_failure;
    }
  }

  GeneratorKind kind() const noexcept { return kind_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const GeneratorState&, const GeneratorState&) = default;

  // Advances this state in place, writing out.size() raw outputs.
  void fill_into(std::span<std::uint64_t> out) noexcept {
    visit_kind(kind_, [&]<typename E>(std::type_identity<E>) {
      fill_words<E>(words_, out);
    });
  }

  void fill_unit_into(std::span<double> out) noexcept {
    visit_kind(kind_, [&]<typename E>(std::type_identity<E>) {
      fill_unit_words<E>(words_, out);
    });
  }

 private:
  GeneratorState(GeneratorKind kind, std::vector<std::uint64_t> words)
      : kind_(kind), words_(std::move(words)) {}

  friend Result<GeneratorState> new_state(GeneratorKind, std::span<const std::uint64_t>);

  GeneratorKind kind_;
  std::vector<std::uint64_t> words_;
};

inline Result<GeneratorState> new_state(GeneratorKind kind,
                                        std::span<const std::uint64_t> user_words) {
  if (user_words.size() != required_seed_words(kind)) return Errc::wrong_seed_count;
  try {
    std::vector<std::uint64_t> words(state_word_count(kind));
    const bool ok = visit_kind(kind, [&]<typename E>(std::type_identity<E>) {
      E::seed(user_words, words);
      return E::valid(words);
    });
    if (!ok) return Errc::degenerate_seed;
    return GeneratorState(kind, std::move(words));
  } catch (const std::bad_alloc&) {
    return Errc::allocation_failure;
  }
}

inline Result<GeneratorState> new_state(GeneratorKind kind,
                                        std::initializer_list<std::uint64_t> user_words) {
  return new_state(kind, std::span<const std::uint64_t>(user_words.begin(), user_words.size()));
}

inline std::pair<OutputWord, GeneratorState> next(const GeneratorState& state) {
  GeneratorState succ = state;
  std::uint64_t out = 0;
  succ.fill_into(std::span<std::uint64_t>(&out, 1));
  return {OutputWord{out, output_bits(state.kind())}, std::move(succ)};
}

inline Result<std::pair<std::vector<std::uint64_t>, GeneratorState>> fill(
    const GeneratorState& state, std::size_t n) {
  try {
    std::vector<std::uint64_t> out(n);
    GeneratorState succ = state;
    succ.fill_into(out);
    return std::pair{std::move(out), std::move(succ)};
  } catch (const std::bad_alloc&) {
    return Errc::allocation_failure;
  } catch (const std::length_error&) {
    return Errc::allocation_failure;
  }
}

// `count` successive splitmix64 outputs starting from `seed`. An all-zero
// result is retried from seed + gamma.
inline std::vector<std::uint64_t> seed_expand(std::uint64_t seed, std::size_t count) {
  std::vector<std::uint64_t> out(count);
  for (;;) {
    SplitMix64 sm(seed);
    for (auto& w : out) w = sm();
    if (std::any_of(out.begin(), out.end(), [](std::uint64_t w) { return w != 0; })) {
      return out;
    }
    seed += SplitMix64::gamma;
  }
}

// User seed words for `kind` derived from one entropy word. The result is
// always accepted by new_state; 32-bit lane kinds get masked words so the
// echoed seed is canonical.
inline std::vector<std::uint64_t> auto_seed_words(GeneratorKind kind, std::uint64_t entropy) {
  const auto t = traits(kind);
  for (;;) {
    auto words = seed_expand(entropy, t.seed_words);
    if (kind == GeneratorKind::xorshift32 || kind == GeneratorKind::kiss) {
      for (auto& w : words) w &= 0xFFFFFFFFu;
    }
    if (new_state(kind, words)) return words;
    entropy += SplitMix64::gamma;
  }
}

}  // namespace crand
