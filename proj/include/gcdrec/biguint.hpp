#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gcdrec/int128.hpp"

namespace gcdrec {

// Arbitrary-precision unsigned integer backing the unbounded policy.
//
// Deliberately minimal: the unbounded code paths (naive stepping from
// extreme seeds, the lcm variant) only ever combine a big accumulator with
// machine-sized operands, so the op set is add/sub/mul/mod against uint64
// plus decimal conversion. Limbs are little-endian with no trailing zeros.
class BigUint {
 public:
  BigUint() = default;

  explicit BigUint(u128 v) {
    if (v != 0) limbs_.push_back(static_cast<std::uint64_t>(v));
    if (v >> 64) limbs_.push_back(static_cast<std::uint64_t>(v >> 64));
  }

  static BigUint from_decimal(std::string_view text) {
    if (text.empty()) throw PreconditionError("empty integer literal");
    BigUint out;
    for (char c : text) {
      if (c < '0' || c > '9')
        throw PreconditionError("invalid integer literal: " + std::string(text));
      out.mul_u64(10);
      out.add_u64(static_cast<std::uint64_t>(c - '0'));
    }
    return out;
  }

  bool is_zero() const { return limbs_.empty(); }

  bool fits_u128() const { return limbs_.size() <= 2; }

  u128 as_u128() const {
    u128 v = 0;
    if (limbs_.size() > 1) v = static_cast<u128>(limbs_[1]) << 64;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
  }

  void add_u64(std::uint64_t v) {
    u128 carry = v;
    for (std::size_t i = 0; carry != 0 && i < limbs_.size(); ++i) {
      carry += limbs_[i];
      limbs_[i] = static_cast<std::uint64_t>(carry);
      carry >>= 64;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
  }

  // Requires *this >= v.
  void sub_u64(std::uint64_t v) {
    if (is_zero()) {
      if (v != 0) throw PreconditionError("BigUint subtraction underflow");
      return;
    }
    std::uint64_t borrow = v;
    for (std::size_t i = 0; borrow != 0; ++i) {
      if (i >= limbs_.size()) throw PreconditionError("BigUint subtraction underflow");
      std::uint64_t cur = limbs_[i];
      limbs_[i] = cur - borrow;
      borrow = cur < borrow ? 1 : 0;
    }
    trim();
  }

  void mul_u64(std::uint64_t v) {
    if (v == 0) {
      limbs_.clear();
      return;
    }
    u128 carry = 0;
    for (auto& limb : limbs_) {
      carry += static_cast<u128>(limb) * v;
      limb = static_cast<std::uint64_t>(carry);
      carry >>= 64;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
  }

  std::uint64_t mod_u64(std::uint64_t m) const {
    if (m == 0) throw PreconditionError("modulo by zero");
    u128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      rem = ((rem << 64) | limbs_[i]) % m;
    }
    return static_cast<std::uint64_t>(rem);
  }

  // Divides in place, returning the remainder.
  std::uint64_t divmod_u64(std::uint64_t m) {
    if (m == 0) throw PreconditionError("division by zero");
    u128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      u128 cur = (rem << 64) | limbs_[i];
      limbs_[i] = static_cast<std::uint64_t>(cur / m);
      rem = cur % m;
    }
    trim();
    return static_cast<std::uint64_t>(rem);
  }

  int compare_u128(u128 v) const {
    u128 hi = limbs_.size() > 2 ? 1 : 0;
    if (hi != 0) return 1;
    u128 self = as_u128();
    if (self < v) return -1;
    return self > v ? 1 : 0;
  }

  std::string to_decimal() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
      std::uint64_t chunk = tmp.divmod_u64(10000000000000000000ull);  // 10^19
      std::string part = std::to_string(chunk);
      if (tmp.is_zero()) {
        out.insert(0, part);
      } else {
        out.insert(0, std::string(19 - part.size(), '0') + part);
      }
    }
    return out;
  }

  std::size_t limb_count() const { return limbs_.size(); }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint64_t> limbs_;
};

}  // namespace gcdrec
