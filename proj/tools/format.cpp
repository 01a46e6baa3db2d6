#include "format.hpp"

#include <functional>
#include <utility>

#include "gcdrec/errors.hpp"
#include "gcdrec/int128.hpp"

namespace gcdrec::cli {
namespace {

constexpr int kSigDigits = 6;

// Digit source abstraction so the u128 and BigUint paths share the
// rounding and layout logic. Produces the decimal digits of num/den.
struct DigitStream {
  std::string integer_digits;                 // decimal expansion of floor(num/den), "" if zero
  std::function<int()> next_fraction_digit;   // successive digits after the point
};

// Renders from a digit stream: collects 7 significant digits, rounds to 6
// (half up), lays out the decimal point, strips trailing fractional zeros.
std::string render(DigitStream stream, bool keep_point) {
  std::string sig;
  // exp = power of ten of the leading significant digit.
  long long exp = 0;
  if (!stream.integer_digits.empty()) {
    exp = static_cast<long long>(stream.integer_digits.size()) - 1;
    sig = stream.integer_digits;
    while (sig.size() < kSigDigits + 1) sig.push_back(static_cast<char>('0' + stream.next_fraction_digit()));
  } else {
    exp = -1;
    int d = stream.next_fraction_digit();
    while (d == 0) {
      --exp;
      d = stream.next_fraction_digit();
    }
    sig.push_back(static_cast<char>('0' + d));
    while (sig.size() < kSigDigits + 1) sig.push_back(static_cast<char>('0' + stream.next_fraction_digit()));
  }

  bool carry = sig[kSigDigits] >= '5';
  sig.resize(kSigDigits);
  if (carry) {
    int i = kSigDigits - 1;
    while (i >= 0) {
      if (sig[i] != '9') {
        ++sig[i];
        break;
      }
      sig[i] = '0';
      --i;
    }
    if (i < 0) {
      sig.insert(sig.begin(), '1');
      sig.resize(kSigDigits);
      ++exp;
    }
  }

  std::string out;
  if (exp >= kSigDigits) {
    // Value >= 10^6: significant digits padded with zeros, no fraction.
    out = sig + std::string(static_cast<std::size_t>(exp) - kSigDigits + 1, '0');
  } else if (exp >= 0) {
    out = sig.substr(0, static_cast<std::size_t>(exp) + 1);
    std::string frac = sig.substr(static_cast<std::size_t>(exp) + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else {
    std::string frac = std::string(static_cast<std::size_t>(-exp) - 1, '0') + sig;
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = "0." + frac;
  }
  if (keep_point && out.find('.') == std::string::npos) out += ".0";
  return out;
}

}  // namespace

std::string sig6(u128 num, u128 den) {
  if (den == 0) throw PreconditionError("ratio with zero denominator");
  if (num == 0) return "0";
  if (den > u128_max() / 10) throw PreconditionError("denominator too large to render");
  u128 rem = num % den;
  u128 ip = num / den;
  DigitStream stream;
  if (ip != 0) stream.integer_digits = to_string_u128(ip);
  stream.next_fraction_digit = [rem, den]() mutable {
    rem *= 10;
    int d = static_cast<int>(rem / den);
    rem %= den;
    return d;
  };
  return render(std::move(stream), false);
}

std::string sig6_point(u128 num, u128 den) {
  if (den == 0) throw PreconditionError("ratio with zero denominator");
  if (num == 0) return "0.0";
  if (den > u128_max() / 10) throw PreconditionError("denominator too large to render");
  u128 rem = num % den;
  u128 ip = num / den;
  DigitStream stream;
  if (ip != 0) stream.integer_digits = to_string_u128(ip);
  stream.next_fraction_digit = [rem, den]() mutable {
    rem *= 10;
    int d = static_cast<int>(rem / den);
    rem %= den;
    return d;
  };
  return render(std::move(stream), true);
}

std::string sig6(const Ratio& r) { return sig6(r.num, r.den); }

std::string exact_ratio(const Ratio& r) {
  if (r.den == 1) return to_string_u128(r.num);
  return to_string_u128(r.num) + "/" + to_string_u128(r.den);
}

std::string sig6_big(const BigUint& num, std::uint64_t den) {
  if (den == 0) throw PreconditionError("ratio with zero denominator");
  if (num.is_zero()) return "0";
  BigUint q = num;
  std::uint64_t rem = q.divmod_u64(den);
  DigitStream stream;
  if (!q.is_zero()) stream.integer_digits = q.to_decimal();
  stream.next_fraction_digit = [rem, den]() mutable {
    u128 cur = static_cast<u128>(rem) * 10;
    int d = static_cast<int>(cur / den);
    rem = static_cast<std::uint64_t>(cur % den);
    return d;
  };
  return render(std::move(stream), false);
}

}  // namespace gcdrec::cli
