#pragma once

#include <string>

#include "gcdrec/biguint.hpp"
#include "gcdrec/rational.hpp"

namespace gcdrec::cli {

// num/den rendered to 6 significant digits with trailing fractional zeros
// stripped: 19/7 -> "2.71429", 5/2 -> "2.5", 201/99 -> "2.0303", 3/1 -> "3".
std::string sig6(u128 num, u128 den);

// Same, but always keeps a decimal point: 3/1 -> "3.0".
std::string sig6_point(u128 num, u128 den);

std::string sig6(const Ratio& r);

// Reduced fraction as text: "3" or "19/7".
std::string exact_ratio(const Ratio& r);

// a/n to 6 significant digits for an arbitrary-precision numerator.
std::string sig6_big(const BigUint& num, std::uint64_t den);

}  // namespace gcdrec::cli
