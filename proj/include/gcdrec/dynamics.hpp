#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcdrec/shortcut.hpp"

namespace gcdrec {

// ---- transience (composite events are conjectured to die out) ----

struct TransienceReport {
  State seed;
  enum class Outcome {
    entered_ratio_regime,  // a/n reached {2, 3}; every later event gcd is prime
    fixed_ones,            // a(n) = n or |a - n - 1| = 1 tail: no further events
    budget_exhausted
  } outcome = Outcome::budget_exhausted;
  // Smallest N such that every observed event gcd beyond index N is 1 or
  // prime (the index of the last composite event, or the seed index).
  u128 threshold_n = 0;
  std::vector<std::pair<u128, u128>> non_prime_events;  // (n, g) with g composite
  std::optional<State> regime_entry;                    // where a/n in {2,3} first held
  u128 events_examined = 0;
};

// Advances via jumps, testing every landing gcd for primality and watching
// both landings and skipped runs for the first state with a/n in {2, 3}.
// The budget is counted in nontrivial events.
TransienceReport check_transience(const State& seed, u128 budget = 100000,
                                  const FactorConfig& config = {},
                                  const IntegerPolicy& policy = {});

// First proportional state inside the run of ones following `from`
// (states (n + i, a + i) for 1 <= i <= run_len), if any.
std::optional<State> ratio_crossing_in_run(const State& from, u128 run_len);

// ---- ratio bound propositions (theorems; harnesses are regression tripwires) ----

struct BoundCheck {
  bool ok = true;
  std::optional<StepRecord> first_violation;
  u128 ceiling = 0;  // the bound ceil(a1/n1) used by the upper check
};

// Verifies a(n)/n <= ceil(a(n1)/n1) along the naive evolution.
BoundCheck check_ceiling_bound(const State& seed, u128 n_max, const IntegerPolicy& policy = {});

// Verifies a(n)/n > 2 along the naive evolution. Requires a > 2n + 1.
BoundCheck check_lower_bound(const State& seed, u128 n_max, const IntegerPolicy& policy = {});

// One step from a state with a = 2n + 1 exactly; the landing ratio is
// exactly 2 (gcd(n+1, 2n+1) = 1, so a(n+1) = 2n + 2).
StepRecord crossing_step(const State& seed, const IntegerPolicy& policy = {});

// ---- doubled-speed emulation of a = 2n evolutions by a = 3n evolutions ----

// (n, a) -> (n/2, a - n/2) for even n. Maps ratio q to 2q - 1 exactly.
State emulate_state(const State& s);

// Checks a_ref(n') == a_r2(2n') - n' for all n' in [r2_seed.n/2 + 1,
// nprime_max]; returns the first mismatching n', or nullopt if the
// emulation is exact over the whole range.
std::optional<u128> first_emulation_mismatch(const State& r2_seed, const State& r3_seed,
                                             u128 nprime_max, const IntegerPolicy& policy = {});

// ---- cluster structure of the event sequence ----

struct ClusterReport {
  std::vector<Event> events;
  // Inclusive [first, last] index ranges into `events`; a new cluster starts
  // after an event whose following gap was maximal, which happens exactly
  // when (r-1)*n - 1 was prime at the preceding event.
  std::vector<std::pair<std::size_t, std::size_t>> clusters;
  std::vector<Ratio> gaps;  // start index of each cluster over end index of the previous
};

ClusterReport detect_clusters(std::vector<Event> events, unsigned r);

// ---- which primes occur as event gcds ----

struct CoverageReport {
  u128 events_requested = 0;
  std::map<u128, u128> prime_counts;  // keys are the primes seen, ascending
  u128 smallest_absent_odd_prime = 0;
};

CoverageReport prime_coverage(const State& seed, u128 num_events, const FactorConfig& config = {},
                              const IntegerPolicy& policy = {});

// ---- persistence of integer ratios r >= 4 ----

struct PersistenceRecord {
  u128 n1 = 0;
  unsigned r = 0;
  u128 repetitions = 0;  // event landings with a = r*n (the seed not counted)
  u128 last_n = 0;       // index of the last such landing (n1 if none)
};

struct PersistenceScanOptions {
  unsigned workers = 1;
  FactorConfig factor;
  IntegerPolicy policy;
};

// Follows the evolution from (n1, r*n1) until the ratio can no longer
// return to r (a <= (r-1)*n makes r unreachable by the ceiling bound).
PersistenceRecord persistence_for_seed(u128 n1, unsigned r, const FactorConfig& config = {},
                                       const IntegerPolicy& policy = {});

// Grid scan; records ordered by (n1, r).
std::vector<PersistenceRecord> scan_persistence(u128 n1_lo, u128 n1_hi, unsigned r_lo,
                                                unsigned r_hi,
                                                const PersistenceScanOptions& options = {});

// ---- equivalence classes of seeds ----

struct ClassMember {
  u128 seed = 0;
  // First state of this seed's walk already visited by a smaller seed of
  // the same class; empty for the class representative.
  std::optional<State> merge_state;
};

struct SeedClass {
  u128 representative = 0;
  std::vector<ClassMember> members;
};

struct ClassReport {
  u128 seed_lo = 0;
  u128 seed_hi = 0;
  u128 n_limit = 0;
  std::vector<SeedClass> classes;  // ordered by representative
};

struct ClassScanOptions {
  unsigned workers = 1;
  // When set, per-seed trajectory walks are appended here as they complete
  // and are reloaded on the next run, so a long scan can resume after an
  // interruption.
  std::string checkpoint_path;
  FactorConfig factor;
  IntegerPolicy policy;
};

// Seeds are a(1) values in [seed_lo, seed_hi]. Two seeds share a class iff
// their recorded trajectory states (event landings plus the regime-entry
// state) coincide somewhere at an index <= n_limit. Trajectories that
// interleave without sharing such a state stay distinct, which can be
// strictly finer than pointwise convergence detected one event later.
ClassReport equivalence_classes(u128 seed_lo, u128 seed_hi, u128 n_limit,
                                const ClassScanOptions& options = {});

// The recorded walk of one seed: the seed state, pre-regime event landings,
// the regime-entry state (possibly mid-run), then regime event landings,
// truncated to indices <= n_limit. Exposed for tests and the checkpoint
// format.
std::vector<State> class_walk(const State& seed, u128 n_limit, const FactorConfig& config = {},
                              const IntegerPolicy& policy = {});

}  // namespace gcdrec
