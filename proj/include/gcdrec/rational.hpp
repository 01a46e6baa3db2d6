#pragma once

#include "gcdrec/int128.hpp"

namespace gcdrec {

// Exact nonnegative fraction in lowest terms.
struct Ratio {
  u128 num = 0;
  u128 den = 1;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

inline Ratio make_ratio(u128 num, u128 den) {
  if (den == 0) throw PreconditionError("ratio with zero denominator");
  u128 g = gcd_u128(num, den);
  if (g == 0) g = 1;
  return Ratio{num / g, den / g};
}

}  // namespace gcdrec
