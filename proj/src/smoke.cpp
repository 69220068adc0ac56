// Minimal functions for checking each calling pattern across a foreign
// function boundary: scalar argument and return, a by-reference write, and
// an array read-modify-write.

#include "crand.h"

extern "C" {

uint64_t uint64_var(uint64_t /*var*/) { return 9223372036854775807ULL; }

int32_t change_var(double* var) {
  if (var == nullptr) return CRAND_NULL_ARGUMENT;
  *var = 2.0;
  return CRAND_OK;
}

double avg_value(int64_t* array, size_t len) {
  if (array == nullptr || len == 0) return 0.0;
  double avg = 0.0;
  for (size_t i = 0; i < len; ++i) {
    avg += static_cast<double>(array[i]) / static_cast<double>(len);
    array[i] = 0;
  }
  return avg;
}

}  // extern "C"
