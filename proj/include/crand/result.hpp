#pragma once

#include <string_view>
#include <utility>
#include <variant>

namespace crand {

enum class Errc {
  wrong_seed_count,
  degenerate_seed,
  allocation_failure,
  unknown_kind,
  too_short,
  zero_variance,
  bad_bin_count,
  bad_reps,
};

constexpr std::string_view message(Errc e) noexcept {
  switch (e) {
    case Errc::wrong_seed_count: return "wrong seed count";
    case Errc::degenerate_seed: return "degenerate seed";
    case Errc::allocation_failure: return "allocation failure";
    case Errc::unknown_kind: return "unknown generator kind";
    case Errc::too_short: return "series too short";
    case Errc::zero_variance: return "zero variance";
    case Errc::bad_bin_count: return "bin count must be a power of two >= 2";
    case Errc::bad_reps: return "reps must be >= 2";
  }
  return "unknown error";
}

// Value-or-error return. Accessing the wrong alternative throws
// std::bad_variant_access.
template <typename T>
class Result {
 public:
  Result(T value) : v_(std::in_place_index<0>, std::move(value)) {}
  Result(Errc e) : v_(std::in_place_index<1>, e) {}

  bool has_value() const noexcept { return v_.index() == 0; }
  explicit operator bool() const noexcept { return has_value(); }

  T& value() & { return std::get<0>(v_); }
  const T& value() const& { return std::get<0>(v_); }
  T&& value() && { return std::get<0>(std::move(v_)); }

  T* operator->() { return &value(); }
  const T* operator->() const { return &value(); }
  T& operator*() & { return value(); }
  const T& operator*() const& { return value(); }

  Errc error() const { return std::get<1>(v_); }

 private:
  std::variant<T, Errc> v_;
};

}  // namespace crand
