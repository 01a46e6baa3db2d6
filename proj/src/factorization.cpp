#include "gcdrec/factorization.hpp"

#include <algorithm>
#include <mutex>

namespace gcdrec {
namespace {

constexpr std::uint32_t kTrialLimit = 1u << 16;

std::vector<std::uint32_t> sieve_small_primes() {
  std::vector<bool> composite(kTrialLimit, false);
  std::vector<std::uint32_t> primes;
  primes.reserve(6600);
  for (std::uint32_t i = 2; i < kTrialLimit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < kTrialLimit; j += i)
      composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

// (x * y) % m for m possibly above 2^64. The wide path is shift-and-add;
// it only runs for operands past 64 bits, which the workloads here reach
// rarely (deltas stay below 2^64 up to indices near 2^63).
u128 mulmod(u128 x, u128 y, u128 m) {
  if (m <= ~static_cast<std::uint64_t>(0)) {
    return static_cast<u128>((x % m) * (y % m)) % m;
  }
  x %= m;
  y %= m;
  if (x == 0 || y == 0) return 0;
  if (y > x) {
    u128 t = x;
    x = y;
    y = t;
  }
  u128 acc = 0;
  while (y != 0) {
    if (y & 1) {
      acc += x;
      if (acc >= m) acc -= m;
    }
    y >>= 1;
    if (y != 0) {
      x += x;
      if (x >= m) x -= m;
    }
  }
  return acc;
}

u128 powmod(u128 base, u128 exp, u128 m) {
  u128 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_composite(u128 m, u128 witness, u128 odd_part, int twos) {
  u128 x = powmod(witness, odd_part, m);
  if (x == 1 || x == m - 1) return false;
  for (int i = 1; i < twos; ++i) {
    x = mulmod(x, x, m);
    if (x == m - 1) return false;
  }
  return true;
}

// splitmix64, used to derive rho polynomial constants deterministically.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

u128 rho_poly(u128 x, u128 c, u128 m) { return (mulmod(x, x, m) + c) % m; }

// One Brent cycle search for the given polynomial constant. Returns a
// nontrivial factor or 0; `budget` is decremented as iterations are spent.
u128 brent_attempt(u128 m, u128 c, std::uint64_t& budget) {
  u128 y = 2;
  u128 g = 1;
  u128 q = 1;
  u128 x = 0;
  u128 ys = 0;
  const std::uint64_t batch = 128;
  std::uint64_t r = 1;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = rho_poly(y, c, m);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      if (budget == 0) return 0;
      std::uint64_t chunk = std::min(batch, r - k);
      if (chunk > budget) chunk = budget;
      ys = y;
      for (std::uint64_t i = 0; i < chunk; ++i) {
        y = rho_poly(y, c, m);
        u128 diff = x > y ? x - y : y - x;
        q = mulmod(q, diff, m);
      }
      budget -= chunk;
      g = gcd_u128(q, m);
      k += chunk;
    }
    r <<= 1;
  }
  if (g == m) {
    // The whole batch collapsed; replay one multiplication at a time.
    g = 1;
    while (g == 1) {
      ys = rho_poly(ys, c, m);
      u128 diff = x > ys ? x - ys : ys - x;
      g = gcd_u128(diff, m);
    }
  }
  return g == m ? 0 : g;
}

// Nontrivial factor of an odd composite m with no divisor below 2^16.
u128 rho_factor(u128 m, const FactorConfig& config, std::uint64_t& budget) {
  std::uint64_t stream = config.rho_seed ^ mix64(static_cast<std::uint64_t>(m)) ^
                         mix64(static_cast<std::uint64_t>(m >> 64));
  while (budget > 0) {
    stream = mix64(stream);
    u128 c = static_cast<u128>(stream) % (m - 3) + 1;
    u128 f = brent_attempt(m, c, budget);
    if (f != 0) return f;
  }
  throw FactorEffortError("factor search exceeded the configured effort cap on " +
                          to_string_u128(m));
}

u128 spf_recursive(u128 m, const FactorConfig& config, std::uint64_t& budget) {
  for (std::uint32_t p : small_primes()) {
    u128 p128 = p;
    if (p128 * p128 > m) return m;
    if (m % p128 == 0) return p128;
  }
  if (is_prime(m)) return m;
  u128 f = rho_factor(m, config, budget);
  u128 lhs = spf_recursive(f, config, budget);
  u128 rhs = spf_recursive(m / f, config, budget);
  return lhs < rhs ? lhs : rhs;
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = sieve_small_primes();
  return primes;
}

u128 primality_limit() {
  return (static_cast<u128>(0x2be69ull) << 64) | 0x51adc5b22410a5fdull;
}

bool is_prime(u128 m) {
  if (m < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
    if (m == p) return true;
    if (m % p == 0) return false;
  }
  if (m < 43ull * 43ull) return true;
  if (m >= primality_limit())
    throw OverflowError("primality test input " + to_string_u128(m) +
                        " is beyond the deterministic range");
  int twos = countr_zero_u128(m - 1);
  u128 odd_part = (m - 1) >> twos;
  for (std::uint32_t w : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
    if (miller_rabin_composite(m, w, odd_part, twos)) return false;
  }
  return true;
}

u128 smallest_prime_factor(u128 m, const FactorConfig& config) {
  if (m < 2) throw PreconditionError("smallest_prime_factor requires m >= 2");
  std::uint64_t budget = config.rho_max_iterations;
  return spf_recursive(m, config, budget);
}

std::vector<u128> distinct_prime_divisors(u128 m, const FactorConfig& config) {
  if (m < 2) throw PreconditionError("distinct_prime_divisors requires m >= 2");
  std::vector<u128> out;
  std::uint64_t budget = config.rho_max_iterations;
  while (m > 1) {
    u128 p = spf_recursive(m, config, budget);
    out.push_back(p);
    while (m % p == 0) m /= p;
  }
  return out;
}

Factorization factorize_distinct(u128 m, const FactorConfig& config) {
  Factorization f;
  f.value = m;
  f.distinct_primes = distinct_prime_divisors(m, config);
  f.smallest_prime = f.distinct_primes.front();
  return f;
}

}  // namespace gcdrec
