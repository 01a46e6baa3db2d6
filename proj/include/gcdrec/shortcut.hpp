#pragma once

#include <optional>
#include <vector>

#include "gcdrec/core.hpp"
#include "gcdrec/factorization.hpp"

namespace gcdrec {

// Result of jumping from a state to the next nontrivial-gcd event.
//   n2           landing index
//   p            gcd at the landing (prime for ratio jumps, any divisor > 1
//                for general jumps)
//   a2           a(n2)
//   ones_skipped number of intermediate g = 1 steps (= n2 - n1 - 1)
//   rule         which jump produced the landing
struct JumpOutcome {
  u128 n2 = 0;
  u128 p = 0;
  u128 a2 = 0;
  u128 ones_skipped = 0;
  enum class Rule { ratio, general, immediate } rule = Rule::general;

  friend bool operator==(const JumpOutcome&, const JumpOutcome&) = default;
};

// The unique x with x ≡ a (mod b) and j <= x < j + b. Correct for negative a.
i128 mod_window(i128 a, i128 b, i128 j);

// Minimal k >= j with gcd(n + k, n + delta + k) != 1, computed as the
// minimum of mod_window(-n, p, j) over the distinct primes p dividing delta.
// Requires delta >= 2 and j >= 0.
u128 jump_offset(u128 n, u128 delta, u128 j, const FactorConfig& config = {});

// Jump from a proportional state a = r*n with r in {2, 3}. Requires
// (r-1)*n >= 3 (this is what guarantees delta = (r-1)*n - 1 >= 2 and hence
// that the landing exists). The landing gcd is the smallest prime factor of
// delta, the landing is again proportional, and every skipped step has
// g = 1.
JumpOutcome ratio_jump(const State& s, unsigned r, const FactorConfig& config = {},
                       const IntegerPolicy& policy = {});

// Next nontrivial gcd from an arbitrary state.
//
// With d = a - (n + 1):
//   d >= 2   general jump on the distinct primes of d
//   d == 0   the very next step is the event (g(n+1) = n+1)
//   |d| == 1 throws NoNontrivialGcd: gcd(n+k, a-1+k) compares consecutive
//            integers forever
//   d <= -2  general jump on |d| (the landing gcd divides |d| by the same
//            linear-combination argument)
JumpOutcome next_event(const State& s, const FactorConfig& config = {},
                       const IntegerPolicy& policy = {});

// True when the proportional-jump rule applies from (n, a) onward: a = 3n
// with n >= 2 or a = 2n with n >= 3. From such a state every later event
// gcd is prime and every later event is again proportional.
bool in_ratio_regime(const State& s);

struct Event {
  u128 n = 0;
  u128 g = 0;
  u128 a = 0;
  u128 ones_before = 0;  // run-of-ones length since the previous event

  friend bool operator==(const Event&, const Event&) = default;
};

// Lazily enumerates the nontrivial-gcd events of one evolution. Uses the
// ratio jump whenever it applies and the general jump otherwise, so each
// event costs one smallest-prime-factor query (plus a full distinct-prime
// split pre-regime).
class EventStream {
 public:
  explicit EventStream(const State& s0, FactorConfig config = {}, IntegerPolicy policy = {});

  // Next event, or nullopt once the evolution can produce no further event.
  std::optional<Event> next();

  const State& state() const { return current_; }
  bool exhausted() const { return exhausted_; }

 private:
  State current_;
  FactorConfig config_;
  IntegerPolicy policy_;
  bool exhausted_ = false;
};

struct EventTrace {
  std::vector<Event> events;
  enum class End { horizon, exhausted } end = End::horizon;
  State final_state;  // state at the last emitted event (or the seed)
};

// All events with s0.n < n <= n_max, bit-identical to filtering the naive
// evolution to its nontrivial steps.
EventTrace collect_events(const State& s0, u128 n_max, const FactorConfig& config = {},
                          const IntegerPolicy& policy = {});

}  // namespace gcdrec
