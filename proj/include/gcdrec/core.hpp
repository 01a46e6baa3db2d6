#pragma once

#include <cstdint>
#include <vector>

#include "gcdrec/biguint.hpp"
#include "gcdrec/int128.hpp"
#include "gcdrec/policy.hpp"
#include "gcdrec/rational.hpp"

namespace gcdrec {

// One point (n, a(n)) of the dynamical system a(n) = a(n-1) + gcd(n, a(n-1)).
struct State {
  u128 n = 1;
  u128 a = 1;

  friend bool operator==(const State&, const State&) = default;
};

inline void validate(const State& s) {
  if (s.n < 1 || s.a < 1) throw PreconditionError("state requires n >= 1 and a >= 1");
}

// Full record of one step landing on index n:
//   g     = gcd(n, a(n-1))
//   a     = a(n)
//   delta = a(n-1) - n  (signed; negative only for seeds with a below n)
//   ratio = a(n)/n in lowest terms
struct StepRecord {
  u128 n = 0;
  u128 g = 0;
  u128 a = 0;
  i128 delta = 0;
  Ratio ratio;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

inline StepRecord step(const State& s, const IntegerPolicy& policy = {}) {
  validate(s);
  u128 n1 = checked_add(s.n, 1);
  enforce_bound(n1, policy, n1);
  u128 g = gcd_u128(n1, s.a);
  u128 a1 = checked_add(s.a, g);
  enforce_bound(a1, policy, n1);
  StepRecord rec;
  rec.n = n1;
  rec.g = g;
  rec.a = a1;
  rec.delta = static_cast<i128>(s.a) - static_cast<i128>(n1);
  rec.ratio = make_ratio(a1, n1);
  return rec;
}

// Streams the records for indices s0.n+1 .. n_max to the visitor, O(1) memory.
template <typename Visitor>
void evolve(State s, u128 n_max, Visitor&& visit, const IntegerPolicy& policy = {}) {
  validate(s);
  while (s.n < n_max) {
    StepRecord rec = step(s, policy);
    s = State{rec.n, rec.a};
    visit(rec);
  }
}

std::vector<StepRecord> evolve_records(const State& s0, u128 n_max,
                                       const IntegerPolicy& policy = {});

// First `count` values of g starting at index s0.n + 1. Seed (1, 7) yields
// the A132199 prefix.
std::vector<u128> difference_sequence(const State& s0, u128 count,
                                      const IntegerPolicy& policy = {});

// b(n) = b(n-1) + lcm(n, b(n-1)) with b(1) = 1; returns the first `count`
// values of b(n)/b(n-1) - 1 (A135506). Each emitted term equals
// n / gcd(n, b(n-1)) and so stays machine-sized even though b(n) explodes;
// fixed-width policy can produce 51 terms before b(n) leaves 128 bits.
std::vector<u128> lcm_variant_sequence(u128 count, const IntegerPolicy& policy = {});

// Unbounded-policy stepping for seeds whose a-value does not fit the fixed
// envelope. Indices stay machine-sized (a naive run past 2^64 steps is not
// a realistic workload); only the a-value is arbitrary precision.
struct BigState {
  std::uint64_t n = 1;
  BigUint a;
};

// visit(n, g, a_after) per step.
template <typename Visitor>
void evolve_big(BigState s, std::uint64_t n_max, Visitor&& visit) {
  if (s.n < 1 || s.a.is_zero()) throw PreconditionError("state requires n >= 1 and a >= 1");
  while (s.n < n_max) {
    std::uint64_t n1 = s.n + 1;
    std::uint64_t g = gcd_u64(n1, s.a.mod_u64(n1));
    s.a.add_u64(g);
    s.n = n1;
    visit(n1, g, s.a);
  }
}

}  // namespace gcdrec
