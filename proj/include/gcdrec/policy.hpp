#pragma once

#include "gcdrec/int128.hpp"

namespace gcdrec {

// Arithmetic envelope for an evolution.
//
// fixed128 keeps every value in unsigned 128-bit storage and raises
// OverflowError once a value would exceed `bound`. The default bound is
// 2^80: comfortably above the deepest workloads this project targets
// (indices near 2^60) while keeping every derived quantity inside the
// range where the primality test is deterministic (see factorization.hpp).
//
// unbounded switches the ops that support it (naive stepping and the lcm
// variant) to arbitrary-precision storage.
struct IntegerPolicy {
  enum class Width { fixed128, unbounded };

  Width width = Width::fixed128;
  u128 bound = default_bound();

  static constexpr u128 default_bound() { return static_cast<u128>(1) << 80; }

  bool fixed() const { return width == Width::fixed128; }
};

inline void enforce_bound(u128 value, const IntegerPolicy& policy, u128 at_index) {
  if (policy.fixed() && value > policy.bound)
    throw OverflowError("value " + to_string_u128(value) + " exceeds the configured bound at n=" +
                            to_string_u128(at_index),
                        static_cast<unsigned long long>(at_index));
}

}  // namespace gcdrec
