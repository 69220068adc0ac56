#pragma once

// Reference recurrences written straight from the published C listings,
// independent of the engine classes under test. Each oracle works on its own
// plain-array state so a shared bug cannot hide behind shared code.

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

// Marsaglia xorshift32, triple (13, 17, 5).
inline std::uint32_t xorshift32(std::uint32_t* y) {
  *y ^= (*y << 13);
  *y ^= (*y >> 17);
  *y ^= (*y << 5);
  return *y;
}

// xorshift64 traced one operation at a time, triple (13, 7, 17).
inline std::uint64_t xorshift64(std::uint64_t* x) {
  const std::uint64_t a = *x ^ (*x << 13);
  const std::uint64_t b = a ^ (a >> 7);
  const std::uint64_t c = b ^ (b << 17);
  *x = c;
  return c;
}

// Marsaglia xor128.
struct Xor128 {
  std::uint32_t x, y, z, w;
  std::uint32_t operator()() {
    std::uint32_t t;
    t = (x ^ (x << 11));
    x = y;
    y = z;
    z = w;
    return (w = (w ^ (w >> 19)) ^ (t ^ (t >> 8)));
  }
};

// Vigna's xorshift128+ listing, s[2] array form.
inline std::uint64_t xorshift128plus(std::uint64_t s[2]) {
  std::uint64_t s1 = s[0];
  const std::uint64_t s0 = s[1];
  s[0] = s0;
  s1 ^= s1 << 23;
  s[1] = s1 ^ s0 ^ (s1 >> 17) ^ (s0 >> 26);
  return s[1] + s0;
}

// pcg32 minimal C: pcg32_srandom_r / pcg32_random_r.
struct Pcg32Random {
  std::uint64_t state;
  std::uint64_t inc;
};

inline std::uint32_t pcg32_random_r(Pcg32Random* rng) {
  std::uint64_t oldstate = rng->state;
  rng->state = oldstate * 6364136223846793005ULL + rng->inc;
  std::uint32_t xorshifted = static_cast<std::uint32_t>(((oldstate >> 18u) ^ oldstate) >> 27u);
  std::uint32_t rot = static_cast<std::uint32_t>(oldstate >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((-rot) & 31));
}

inline void pcg32_srandom_r(Pcg32Random* rng, std::uint64_t initstate, std::uint64_t initseq) {
  rng->state = 0U;
  rng->inc = (initseq << 1u) | 1u;
  pcg32_random_r(rng);
  rng->state += initstate;
  pcg32_random_r(rng);
}

// Vigna's splitmix64 listing.
inline std::uint64_t splitmix64(std::uint64_t* x) {
  std::uint64_t z = (*x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// KISS in Marsaglia's macro style with the LCG (69069, 12345) and SHR3
// (13, 17, 5) parameterization.
struct KissMacro {
  std::uint32_t z, w, jcong, jsr;
  std::uint32_t operator()() {
#define ZNEW (z = 36969u * (z & 65535u) + (z >> 16))
#define WNEW (w = 18000u * (w & 65535u) + (w >> 16))
#define MWC ((ZNEW << 16) + WNEW)
#define SHR3 (jsr ^= (jsr << 13), jsr ^= (jsr >> 17), jsr ^= (jsr << 5))
#define CONG (jcong = 69069u * jcong + 12345u)
    const std::uint32_t mwc = MWC;
    const std::uint32_t cong = CONG;
    const std::uint32_t shr3 = SHR3;
    return (mwc ^ cong) + shr3;
#undef ZNEW
#undef WNEW
#undef MWC
#undef SHR3
#undef CONG
  }
};

// mt19937_64: the standard library engine is the independent reference.
using Mt64 = std::mt19937_64;

// First n outputs for `kind` (by id) from user seed words, computed only with
// the oracles above. 32-bit outputs are zero-extended.
inline std::vector<std::uint64_t> outputs(int kind, const std::vector<std::uint64_t>& seed,
                                          std::size_t n) {
  std::vector<std::uint64_t> out(n);
  switch (kind) {
    case 0: {
      auto s = static_cast<std::uint32_t>(seed[0]);
      for (auto& o : out) o = xorshift32(&s);
      break;
    }
    case 1: {
      auto s = seed[0];
      for (auto& o : out) o = xorshift64(&s);
      break;
    }
    case 2: {
      Xor128 g{static_cast<std::uint32_t>(seed[0]), static_cast<std::uint32_t>(seed[0] >> 32),
               static_cast<std::uint32_t>(seed[1]), static_cast<std::uint32_t>(seed[1] >> 32)};
      for (auto& o : out) o = g();
      break;
    }
    case 3: {
      std::uint64_t s[2] = {seed[0], seed[1]};
      for (auto& o : out) o = xorshift128plus(s);
      break;
    }
    case 4: {
      Pcg32Random rng;
      pcg32_srandom_r(&rng, seed[0], seed[1]);
      for (auto& o : out) o = pcg32_random_r(&rng);
      break;
    }
    case 5: {
      KissMacro g{static_cast<std::uint32_t>(seed[0]), static_cast<std::uint32_t>(seed[1]),
                  static_cast<std::uint32_t>(seed[2]), static_cast<std::uint32_t>(seed[3])};
      for (auto& o : out) o = g();
      break;
    }
    case 6: {
      auto s = seed[0];
      for (auto& o : out) o = splitmix64(&s);
      break;
    }
    case 7: {
      Mt64 g(seed[0]);
      for (auto& o : out) o = g();
      break;
    }
  }
  return out;
}

}  // namespace oracle
