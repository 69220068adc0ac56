#include "crand.h"

#include <algorithm>
#include <array>

#include "kernels.hpp"

namespace crand::abi {
namespace {

constexpr std::array<const KindOps*, kind_count> kTable = {
    &xorshift32_ops, &xorshift64_ops, &xorshift128_ops, &xorshift128plus_ops,
    &pcg32_ops,      &kiss_ops,       &splitmix64_ops,  &mt19937_64_ops,
};

const KindOps* lookup(std::uint32_t kind) noexcept {
  return kind < kTable.size() ? kTable[kind] : nullptr;
}

template <typename T, typename FillFn>
std::int32_t checked_fill(std::uint32_t kind, std::uint64_t* seed, std::size_t seed_len,
                          T* out, std::size_t n, FillFn fill) noexcept {
  const KindOps* ops = lookup(kind);
  if (ops == nullptr) return CRAND_BAD_KIND;
  if (seed == nullptr || (out == nullptr && n > 0)) return CRAND_NULL_ARGUMENT;
  if (seed_len != ops->state_words) return CRAND_BAD_SEED;
  StateSpan state(seed, seed_len);
  if (!ops->valid(state)) return CRAND_BAD_SEED;
  if (n > 0) fill(*ops, state, std::span<T>(out, n));
  return CRAND_OK;
}

}  // namespace
}  // namespace crand::abi

using namespace crand::abi;

extern "C" {

uint32_t crand_kind_count(void) { return static_cast<uint32_t>(kTable.size()); }

size_t crand_seed_words(uint32_t kind) {
  const KindOps* ops = lookup(kind);
  return ops ? ops->seed_words : 0;
}

size_t crand_state_words(uint32_t kind) {
  const KindOps* ops = lookup(kind);
  return ops ? ops->state_words : 0;
}

int32_t crand_init(uint32_t kind, const uint64_t* seed, size_t seed_len, uint64_t* state,
                   size_t state_len) {
  const KindOps* ops = lookup(kind);
  if (ops == nullptr) return CRAND_BAD_KIND;
  if (seed == nullptr || state == nullptr) return CRAND_NULL_ARGUMENT;
  if (seed_len != ops->seed_words || state_len != ops->state_words) return CRAND_BAD_SEED;

  // Build into scratch so a rejected seed leaves `state` untouched.
  std::array<std::uint64_t, crand::Mt19937_64::state_words> scratch{};
  StateSpan tmp(scratch.data(), ops->state_words);
  ops->seed(ConstStateSpan(seed, seed_len), tmp);
  if (!ops->valid(tmp)) return CRAND_BAD_SEED;
  std::copy(tmp.begin(), tmp.end(), state);
  return CRAND_OK;
}

int32_t crand_fill(uint32_t kind, uint64_t* seed, size_t seed_len, uint64_t* out, size_t n) {
  return checked_fill(kind, seed, seed_len, out, n,
                      [](const KindOps& ops, StateSpan s, std::span<uint64_t> o) {
                        ops.fill(s, o);
                      });
}

int32_t crand_fill_unit(uint32_t kind, uint64_t* seed, size_t seed_len, double* out, size_t n) {
  return checked_fill(kind, seed, seed_len, out, n,
                      [](const KindOps& ops, StateSpan s, std::span<double> o) {
                        ops.fill_unit(s, o);
                      });
}

}  // extern "C"
