/*
 * libcrand: pseudorandom generators behind a plain C ABI.
 *
 * Every generator is driven through a caller-owned array of 64-bit state
 * words that is updated in place, so the state survives between calls.
 * Entry points touch only the buffers passed to them and are reentrant;
 * sharing one state array between concurrent calls is a caller error.
 */
#ifndef CRAND_H
#define CRAND_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#  if defined(CRAND_BUILDING_SHARED)
#    define CRAND_API __declspec(dllexport)
#  elif defined(CRAND_USING_SHARED)
#    define CRAND_API __declspec(dllimport)
#  else
#    define CRAND_API
#  endif
#else
#  define CRAND_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Generator ids. Values are stable across releases.
 *
 *   id  name             seed words  state words  output bits
 *   0   xorshift32       1           1            32
 *   1   xorshift64       1           1            64
 *   2   xorshift128      2           2            32
 *   3   xorshift128plus  2           2            64
 *   4   pcg32            2           2            32
 *   5   kiss             4           4            32
 *   6   splitmix64       1           1            64
 *   7   mt19937_64       1           313          64
 *
 * 32-bit outputs are zero-extended into 64-bit output slots.
 */
typedef enum crand_kind {
  CRAND_XORSHIFT32 = 0,
  CRAND_XORSHIFT64 = 1,
  CRAND_XORSHIFT128 = 2,
  CRAND_XORSHIFT128PLUS = 3,
  CRAND_PCG32 = 4,
  CRAND_KISS = 5,
  CRAND_SPLITMIX64 = 6,
  CRAND_MT19937_64 = 7
} crand_kind;

typedef enum crand_status {
  CRAND_OK = 0,
  CRAND_BAD_KIND = 1,
  CRAND_BAD_SEED = 2,
  CRAND_NULL_ARGUMENT = 3
} crand_status;

/* Number of generator ids; valid ids are 0 .. count-1. */
CRAND_API uint32_t crand_kind_count(void);

/* User-facing seed word count for crand_init; 0 for an unknown id. */
CRAND_API size_t crand_seed_words(uint32_t kind);

/* State array length expected by crand_fill; 0 for an unknown id. */
CRAND_API size_t crand_state_words(uint32_t kind);

/* Builds the state array from user seed words. Rejects wrong lengths and
 * seeds the generator cannot run from (e.g. all-zero xorshift) with
 * CRAND_BAD_SEED. `state` is written only on success. */
CRAND_API int32_t crand_init(uint32_t kind, const uint64_t* seed, size_t seed_len,
                             uint64_t* state, size_t state_len);

/* Writes n raw outputs to `out` and advances `seed` (a state array of
 * crand_state_words(kind) words) in place. On any error neither buffer is
 * written. */
CRAND_API int32_t crand_fill(uint32_t kind, uint64_t* seed, size_t seed_len,
                             uint64_t* out, size_t n);

/* As crand_fill, with each output mapped into [0, 1). */
CRAND_API int32_t crand_fill_unit(uint32_t kind, uint64_t* seed, size_t seed_len,
                                  double* out, size_t n);

/* Boundary smoke functions: scalar in/out, by-reference write, array in-out. */
CRAND_API uint64_t uint64_var(uint64_t var);
CRAND_API int32_t change_var(double* var);
CRAND_API double avg_value(int64_t* array, size_t len);

#ifdef __cplusplus
}
#endif

#endif /* CRAND_H */
