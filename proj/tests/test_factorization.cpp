#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gcdrec/factorization.hpp"
#include "oracles.hpp"

using namespace gcdrec;

TEST_CASE("primality anchors") {
  CHECK(is_prime(2));
  CHECK(is_prime(587));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(1ull << 40));
  // Known strong-pseudoprime trouble spots for small base sets.
  CHECK_FALSE(is_prime(3215031751ull));
  CHECK_FALSE(is_prime(341550071728321ull));
  CHECK(is_prime(18446744073709551557ull));               // largest 64-bit prime
  CHECK(is_prime((static_cast<u128>(1) << 61) - 1));      // Mersenne prime 2^61 - 1
  CHECK(is_prime((static_cast<u128>(1) << 81) + 17));     // 81-bit prime inside the envelope
  CHECK_FALSE(is_prime((static_cast<u128>(1) << 81) + 1));
}

TEST_CASE("primality beyond the deterministic envelope is refused") {
  CHECK_THROWS_AS(is_prime(primality_limit()), OverflowError);
  // +6 keeps the value coprime to the witness primes so it is not resolved
  // by trial division before the envelope check.
  CHECK_THROWS_AS(is_prime(primality_limit() + 6), OverflowError);
  // Inputs the trial stage settles stay answerable at any size.
  CHECK_FALSE(is_prime(primality_limit() + 1));
  CHECK_NOTHROW(is_prime(primality_limit() - 2));
}

TEST_CASE("smallest prime factor anchors") {
  CHECK(smallest_prime_factor(45) == 3);
  CHECK(smallest_prime_factor(95) == 5);
  CHECK(smallest_prime_factor(101) == 101);
  CHECK_THROWS_AS(smallest_prime_factor(1), PreconditionError);
  CHECK_THROWS_AS(smallest_prime_factor(0), PreconditionError);
}

TEST_CASE("distinct prime divisors anchors") {
  CHECK(distinct_prime_divisors(95) == std::vector<u128>{5, 19});
  CHECK(distinct_prime_divisors(8) == std::vector<u128>{2});
  CHECK(distinct_prime_divisors(203) == std::vector<u128>{7, 29});
  CHECK_THROWS_AS(distinct_prime_divisors(1), PreconditionError);
}

TEST_CASE("oracle agreement over a dense small range") {
  for (u128 m = 2; m <= 100000; ++m) {
    REQUIRE(is_prime(m) == oracles::trial_is_prime(m));
    REQUIRE(smallest_prime_factor(m) == oracles::trial_spf(m));
  }
  for (u128 m = 2; m <= 5000; ++m) {
    REQUIRE(distinct_prime_divisors(m) == oracles::trial_distinct_primes(m));
  }
}

TEST_CASE("spf(m) = m exactly for primes") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 2000; ++i) {
    u128 m = rng() % 1000000 + 2;
    CHECK((smallest_prime_factor(m) == m) == is_prime(m));
  }
}

TEST_CASE("factorization reconstructs the value from maximal prime powers") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    u128 m = rng() % 100000000 + 2;
    Factorization f = factorize_distinct(m);
    CHECK(f.smallest_prime == f.distinct_primes.front());
    u128 product = 1;
    for (u128 p : f.distinct_primes) {
      CHECK(m % p == 0);
      u128 power = 1;
      while (m % (power * p) == 0) power *= p;
      product *= power;
    }
    CHECK(product == m);
    for (std::size_t i2 = 1; i2 < f.distinct_primes.size(); ++i2)
      CHECK(f.distinct_primes[i2 - 1] < f.distinct_primes[i2]);
  }
}

TEST_CASE("rho cracks semiprimes with large factors") {
  // 1000003 * 1000033 and a pair of 40-bit primes.
  CHECK(smallest_prime_factor(u128(1000003) * 1000033) == 1000003);
  u128 p40 = 1099511627791ull;  // 2^40 + 15
  u128 q40 = 1099511627873ull;
  REQUIRE(is_prime(p40));
  REQUIRE(is_prime(q40));
  CHECK(smallest_prime_factor(p40 * q40) == p40);
  CHECK(distinct_prime_divisors(p40 * q40) == std::vector<u128>{p40, q40});
}

TEST_CASE("rho is deterministic for a fixed seed and capped by effort") {
  FactorConfig a;
  FactorConfig b;
  u128 m = u128(1000003) * 1000033 * 999983;
  CHECK(distinct_prime_divisors(m, a) == distinct_prime_divisors(m, b));

  FactorConfig starved;
  starved.rho_max_iterations = 4;
  u128 p40 = 1099511627791ull;
  CHECK_THROWS_AS(smallest_prime_factor(p40 * p40, starved), FactorEffortError);
}

TEST_CASE("random 64-bit values: completeness of the distinct-prime split") {
  std::mt19937_64 rng(20240817);
  for (int i = 0; i < 300; ++i) {
    u128 m = (static_cast<u128>(rng()) % ((static_cast<u128>(1) << 44))) + 2;
    auto primes = distinct_prime_divisors(m);
    u128 rebuilt = 1;
    for (u128 p : primes) {
      CHECK(is_prime(p));
      u128 power = 1;
      while (m % (power * p) == 0) power *= p;
      rebuilt *= power;
    }
    CHECK(rebuilt == m);
  }
}
