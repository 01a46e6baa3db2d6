#pragma once

#include <cstdint>
#include <vector>

#include "gcdrec/int128.hpp"

namespace gcdrec {

// Knobs for the factor search behind smallest_prime_factor.
//
// Trial division covers every prime below 2^16 (so any input below 2^32 is
// resolved without ever reaching the rho stage). The rho stage is Brent's
// variant with batched gcds and a seeded polynomial constant; the iteration
// cap turns pathological inputs (composites whose factors are all huge)
// into a FactorEffortError instead of an unbounded search.
struct FactorConfig {
  std::uint64_t rho_seed = 0x9e3779b97f4a7c15ull;
  std::uint64_t rho_max_iterations = 1ull << 26;
};

// Largest value (exclusive) for which the Miller-Rabin base set used here
// is a proven deterministic primality test: 3,317,044,064,679,887,385,961,981
// (about 2^81.4, bases 2..41). Inputs at or above it raise OverflowError
// rather than returning a probabilistic answer.
u128 primality_limit();

// Deterministic for all m below primality_limit().
bool is_prime(u128 m);

// Least prime dividing m (m >= 2). Trial division by all primes < 2^16,
// then the deterministic primality test, then Brent rho with recursive
// minimization over both cofactors.
u128 smallest_prime_factor(u128 m, const FactorConfig& config = {});

// Exactly { p prime : p | m }, ascending.
std::vector<u128> distinct_prime_divisors(u128 m, const FactorConfig& config = {});

struct Factorization {
  u128 value = 0;
  u128 smallest_prime = 0;
  std::vector<u128> distinct_primes;
};

Factorization factorize_distinct(u128 m, const FactorConfig& config = {});

// Primes below 2^16 in ascending order (shared trial-division table).
const std::vector<std::uint32_t>& small_primes();

}  // namespace gcdrec
