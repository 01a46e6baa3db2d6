#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gcdrec/errors.hpp"

namespace gcdrec {

using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr u128 u128_max() { return ~static_cast<u128>(0); }

inline u128 checked_add(u128 x, u128 y) {
  u128 s = x + y;
  if (s < x) throw OverflowError("128-bit addition wrapped");
  return s;
}

inline u128 checked_mul(u128 x, u128 y) {
  if (x != 0 && y > u128_max() / x) throw OverflowError("128-bit multiplication wrapped");
  return x * y;
}

inline int countr_zero_u128(u128 x) {
  if (x == 0) return 128;
  auto lo = static_cast<std::uint64_t>(x);
  if (lo != 0) return __builtin_ctzll(lo);
  return 64 + __builtin_ctzll(static_cast<std::uint64_t>(x >> 64));
}

inline int bit_width_u128(u128 x) {
  auto hi = static_cast<std::uint64_t>(x >> 64);
  if (hi != 0) return 128 - __builtin_clzll(hi);
  auto lo = static_cast<std::uint64_t>(x);
  return lo == 0 ? 0 : 64 - __builtin_clzll(lo);
}

// Binary gcd. Dispatches to hardware 64-bit operations when both arguments
// fit, which is the common case on long evolutions.
inline std::uint64_t gcd_u64(std::uint64_t x, std::uint64_t y) {
  if (x == 0) return y;
  if (y == 0) return x;
  int sx = __builtin_ctzll(x);
  int sy = __builtin_ctzll(y);
  int shift = sx < sy ? sx : sy;
  x >>= sx;
  while (y != 0) {
    y >>= __builtin_ctzll(y);
    if (x > y) {
      std::uint64_t t = x;
      x = y;
      y = t;
    }
    y -= x;
  }
  return x << shift;
}

inline u128 gcd_u128(u128 x, u128 y) {
  constexpr u128 kLow = ~static_cast<std::uint64_t>(0);
  if (x <= kLow && y <= kLow)
    return gcd_u64(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y));
  if (x == 0) return y;
  if (y == 0) return x;
  int sx = countr_zero_u128(x);
  int sy = countr_zero_u128(y);
  int shift = sx < sy ? sx : sy;
  x >>= sx;
  while (y != 0) {
    y >>= countr_zero_u128(y);
    if (x > y) {
      u128 t = x;
      x = y;
      y = t;
    }
    y -= x;
  }
  return x << shift;
}

inline std::string to_string_u128(u128 v) {
  if (v == 0) return "0";
  char buf[40];
  int pos = 0;
  while (v > 0) {
    buf[pos++] = static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  std::string out;
  out.reserve(pos);
  while (pos > 0) out.push_back(buf[--pos]);
  return out;
}

inline std::string to_string_i128(i128 v) {
  if (v >= 0) return to_string_u128(static_cast<u128>(v));
  return "-" + to_string_u128(static_cast<u128>(-(v + 1)) + 1);
}

inline std::optional<u128> parse_u128(std::string_view text) {
  if (text.empty()) return std::nullopt;
  u128 v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    u128 d = static_cast<u128>(c - '0');
    if (v > (u128_max() - d) / 10) return std::nullopt;
    v = v * 10 + d;
  }
  return v;
}

}  // namespace gcdrec
