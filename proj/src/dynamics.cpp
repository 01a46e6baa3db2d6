#include "gcdrec/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <utility>

namespace gcdrec {
namespace {

constexpr u128 kPersistenceEventCap = 10000000;

void parallel_for_index(std::size_t count, unsigned workers,
                        const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&]() {
    while (!failed.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned spawn = workers < count ? workers : static_cast<unsigned>(count);
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct StateHash {
  std::size_t operator()(const State& s) const {
    auto mix = [](std::uint64_t x) {
      x += 0x9e3779b97f4a7c15ull;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
      return x ^ (x >> 31);
    };
    std::uint64_t h = mix(static_cast<std::uint64_t>(s.n));
    h ^= mix(static_cast<std::uint64_t>(s.n >> 64) + h);
    h ^= mix(static_cast<std::uint64_t>(s.a) + h);
    h ^= mix(static_cast<std::uint64_t>(s.a >> 64) + h);
    return static_cast<std::size_t>(h);
  }
};

JumpOutcome jump_from(const State& s, const FactorConfig& config, const IntegerPolicy& policy) {
  if (s.a == 3 * s.n && s.n >= 2) return ratio_jump(s, 3, config, policy);
  if (s.a == 2 * s.n && s.n >= 3) return ratio_jump(s, 2, config, policy);
  return next_event(s, config, policy);
}

}  // namespace

std::optional<State> ratio_crossing_in_run(const State& from, u128 run_len) {
  std::optional<u128> best;
  if (from.a > 3 * from.n) {
    u128 diff = from.a - 3 * from.n;
    if ((diff & 1) == 0) {
      u128 i = diff / 2;
      if (i >= 1 && i <= run_len && from.n + i >= 2) best = i;
    }
  }
  if (from.a > 2 * from.n) {
    u128 i = from.a - 2 * from.n;
    if (i >= 1 && i <= run_len && from.n + i >= 3 && (!best || i < *best)) best = i;
  }
  if (!best) return std::nullopt;
  return State{from.n + *best, from.a + *best};
}

TransienceReport check_transience(const State& seed, u128 budget, const FactorConfig& config,
                                  const IntegerPolicy& policy) {
  validate(seed);
  if (budget < 1) throw PreconditionError("check_transience requires budget >= 1");
  TransienceReport report;
  report.seed = seed;
  report.threshold_n = seed.n;
  if (in_ratio_regime(seed)) {
    report.outcome = TransienceReport::Outcome::entered_ratio_regime;
    report.regime_entry = seed;
    return report;
  }
  State cur = seed;
  while (report.events_examined < budget) {
    JumpOutcome jump;
    try {
      jump = jump_from(cur, config, policy);
    } catch (const NoNontrivialGcd&) {
      report.outcome = TransienceReport::Outcome::fixed_ones;
      return report;
    }
    if (auto entry = ratio_crossing_in_run(cur, jump.ones_skipped)) {
      report.outcome = TransienceReport::Outcome::entered_ratio_regime;
      report.regime_entry = entry;
      return report;
    }
    ++report.events_examined;
    if (!is_prime(jump.p)) {
      report.non_prime_events.emplace_back(jump.n2, jump.p);
      report.threshold_n = jump.n2;
    }
    cur = State{jump.n2, jump.a2};
    if (in_ratio_regime(cur)) {
      report.outcome = TransienceReport::Outcome::entered_ratio_regime;
      report.regime_entry = cur;
      return report;
    }
  }
  report.outcome = TransienceReport::Outcome::budget_exhausted;
  return report;
}

BoundCheck check_ceiling_bound(const State& seed, u128 n_max, const IntegerPolicy& policy) {
  validate(seed);
  BoundCheck result;
  result.ceiling = (seed.a + seed.n - 1) / seed.n;
  evolve(
      seed, n_max,
      [&](const StepRecord& rec) {
        if (result.ok && rec.a > checked_mul(result.ceiling, rec.n)) {
          result.ok = false;
          result.first_violation = rec;
        }
      },
      policy);
  return result;
}

BoundCheck check_lower_bound(const State& seed, u128 n_max, const IntegerPolicy& policy) {
  validate(seed);
  if (seed.a <= checked_add(checked_mul(2, seed.n), 1))
    throw PreconditionError("check_lower_bound requires a > 2n + 1");
  BoundCheck result;
  result.ceiling = 2;
  evolve(
      seed, n_max,
      [&](const StepRecord& rec) {
        if (result.ok && rec.a <= checked_mul(2, rec.n)) {
          result.ok = false;
          result.first_violation = rec;
        }
      },
      policy);
  return result;
}

StepRecord crossing_step(const State& seed, const IntegerPolicy& policy) {
  validate(seed);
  if (seed.a != checked_add(checked_mul(2, seed.n), 1))
    throw PreconditionError("crossing_step requires a = 2n + 1");
  return step(seed, policy);
}

State emulate_state(const State& s) {
  validate(s);
  if ((s.n & 1) != 0) throw PreconditionError("emulate_state requires an even index");
  u128 half = s.n / 2;
  if (s.a <= half) throw PreconditionError("emulate_state requires a > n/2");
  return State{half, s.a - half};
}

std::optional<u128> first_emulation_mismatch(const State& r2_seed, const State& r3_seed,
                                             u128 nprime_max, const IntegerPolicy& policy) {
  validate(r2_seed);
  validate(r3_seed);
  if ((r2_seed.n & 1) != 0) throw PreconditionError("emulation requires an even seed index");
  u128 start = r2_seed.n / 2 + 1;
  if (r3_seed.n >= start)
    throw PreconditionError("reference seed must start below the comparison range");

  State twice = r2_seed;
  State ref = r3_seed;
  auto advance = [&policy](State& s) {
    StepRecord rec = step(s, policy);
    s = State{rec.n, rec.a};
  };
  for (u128 np = start; np <= nprime_max; ++np) {
    while (ref.n < np) advance(ref);
    while (twice.n < 2 * np) advance(twice);
    if (twice.a - np != ref.a) return np;
  }
  return std::nullopt;
}

ClusterReport detect_clusters(std::vector<Event> events, unsigned r) {
  if (r != 2 && r != 3) throw PreconditionError("detect_clusters requires r in {2, 3}");
  ClusterReport report;
  report.events = std::move(events);
  if (report.events.empty()) return report;
  for (const Event& e : report.events) {
    if (e.a != checked_mul(static_cast<u128>(r), e.n))
      throw PreconditionError("detect_clusters requires a proportional (a = r*n) trace");
  }
  std::size_t cluster_start = 0;
  for (std::size_t i = 1; i < report.events.size(); ++i) {
    u128 prev_delta = static_cast<u128>(r - 1) * report.events[i - 1].n - 1;
    if (is_prime(prev_delta)) {
      report.clusters.emplace_back(cluster_start, i - 1);
      report.gaps.push_back(make_ratio(report.events[i].n, report.events[i - 1].n));
      cluster_start = i;
    }
  }
  report.clusters.emplace_back(cluster_start, report.events.size() - 1);
  return report;
}

CoverageReport prime_coverage(const State& seed, u128 num_events, const FactorConfig& config,
                              const IntegerPolicy& policy) {
  validate(seed);
  if (num_events < 1) throw PreconditionError("prime_coverage requires num_events >= 1");
  CoverageReport report;
  report.events_requested = num_events;
  EventStream stream(seed, config, policy);
  for (u128 i = 0; i < num_events; ++i) {
    auto ev = stream.next();
    if (!ev)
      throw NoNontrivialGcd("evolution produced no further events after " + to_string_u128(i));
    if (is_prime(ev->g)) ++report.prime_counts[ev->g];
  }
  for (u128 q = 3;; q += 2) {
    if (is_prime(q) && report.prime_counts.find(q) == report.prime_counts.end()) {
      report.smallest_absent_odd_prime = q;
      break;
    }
  }
  return report;
}

PersistenceRecord persistence_for_seed(u128 n1, unsigned r, const FactorConfig& config,
                                       const IntegerPolicy& policy) {
  if (r < 4) throw PreconditionError("persistence_for_seed requires r >= 4");
  if (n1 < 1) throw PreconditionError("persistence_for_seed requires n1 >= 1");
  PersistenceRecord record;
  record.n1 = n1;
  record.r = r;
  record.last_n = n1;
  State cur{n1, checked_mul(static_cast<u128>(r), n1)};
  EventStream stream(cur, config, policy);
  u128 examined = 0;
  while (auto ev = stream.next()) {
    if (++examined > kPersistenceEventCap)
      throw OverflowError("persistence scan exceeded its internal event cap");
    if (ev->a == static_cast<u128>(r) * ev->n) {
      ++record.repetitions;
      record.last_n = ev->n;
    }
    if (ev->a <= static_cast<u128>(r - 1) * ev->n) break;  // r is unreachable from here on
  }
  return record;
}

std::vector<PersistenceRecord> scan_persistence(u128 n1_lo, u128 n1_hi, unsigned r_lo,
                                                unsigned r_hi,
                                                const PersistenceScanOptions& options) {
  if (n1_lo < 1 || n1_hi < n1_lo) throw PreconditionError("bad n1 range");
  if (r_lo < 4 || r_hi < r_lo) throw PreconditionError("bad r range (need 4 <= r_lo <= r_hi)");
  std::size_t n_count = static_cast<std::size_t>(n1_hi - n1_lo + 1);
  std::size_t r_count = r_hi - r_lo + 1;
  std::vector<PersistenceRecord> records(n_count * r_count);
  parallel_for_index(records.size(), options.workers, [&](std::size_t idx) {
    u128 n1 = n1_lo + idx / r_count;
    unsigned r = r_lo + static_cast<unsigned>(idx % r_count);
    records[idx] = persistence_for_seed(n1, r, options.factor, options.policy);
  });
  return records;
}

std::vector<State> class_walk(const State& seed, u128 n_limit, const FactorConfig& config,
                              const IntegerPolicy& policy) {
  validate(seed);
  std::vector<State> walk;
  if (seed.n > n_limit) return walk;
  walk.push_back(seed);
  State cur = seed;
  bool regime = in_ratio_regime(cur);
  while (true) {
    JumpOutcome jump;
    try {
      jump = jump_from(cur, config, policy);
    } catch (const NoNontrivialGcd&) {
      break;
    }
    if (!regime) {
      if (auto entry = ratio_crossing_in_run(cur, jump.ones_skipped)) {
        if (entry->n > n_limit) break;
        walk.push_back(*entry);
        cur = *entry;
        regime = true;
        continue;  // rejump from the entry state (same landing, via the ratio rule)
      }
    }
    if (jump.n2 > n_limit) break;
    cur = State{jump.n2, jump.a2};
    walk.push_back(cur);
    if (!regime && in_ratio_regime(cur)) regime = true;
  }
  return walk;
}

namespace {

struct WalkStore {
  std::vector<std::vector<State>> walks;  // index = seed - lo
  std::vector<bool> present;
};

std::string encode_walk(u128 seed, const std::vector<State>& walk) {
  std::string line = to_string_u128(seed);
  line += ' ';
  line += std::to_string(walk.size());
  for (const State& s : walk) {
    line += ' ';
    line += to_string_u128(s.n);
    line += ' ';
    line += to_string_u128(s.a);
  }
  return line;
}

// Returns true when the file already carries a matching header. A missing
// or empty file reads as fresh; a header for a different scan is an error.
// A truncated trailing record (interrupted run) is dropped, not an error.
bool load_checkpoint(const std::string& path, u128 lo, u128 hi, u128 n_limit, WalkStore& store) {
  std::ifstream in(path);
  if (!in) return false;
  std::string header_tag;
  if (!(in >> header_tag)) return false;
  std::string lo_s, hi_s, limit_s;
  in >> lo_s >> hi_s >> limit_s;
  if (!in || header_tag != "gcdrec-classes-v1" || parse_u128(lo_s) != lo ||
      parse_u128(hi_s) != hi || parse_u128(limit_s) != n_limit)
    throw PreconditionError("checkpoint file does not match this scan: " + path);
  std::string seed_s;
  while (in >> seed_s) {
    auto seed = parse_u128(seed_s);
    std::size_t count = 0;
    if (!(in >> count)) break;
    if (!seed || *seed < lo || *seed > hi)
      throw PreconditionError("corrupt checkpoint line in " + path);
    std::vector<State> walk(count);
    bool complete = true;
    for (std::size_t i = 0; i < count; ++i) {
      std::string n_s, a_s;
      if (!(in >> n_s >> a_s)) {
        complete = false;
        break;
      }
      auto n = parse_u128(n_s);
      auto a = parse_u128(a_s);
      if (!n || !a) throw PreconditionError("corrupt checkpoint line in " + path);
      walk[i] = State{*n, *a};
    }
    if (!complete) break;
    std::size_t idx = static_cast<std::size_t>(*seed - lo);
    store.walks[idx] = std::move(walk);
    store.present[idx] = true;
  }
  return true;
}

}  // namespace

ClassReport equivalence_classes(u128 seed_lo, u128 seed_hi, u128 n_limit,
                                const ClassScanOptions& options) {
  if (seed_lo < 1 || seed_hi < seed_lo) throw PreconditionError("bad seed range");
  if (n_limit < 2) throw PreconditionError("equivalence_classes requires n_limit >= 2");
  std::size_t count = static_cast<std::size_t>(seed_hi - seed_lo + 1);

  WalkStore store;
  store.walks.resize(count);
  store.present.assign(count, false);
  std::ofstream checkpoint_out;
  if (!options.checkpoint_path.empty()) {
    bool has_header = load_checkpoint(options.checkpoint_path, seed_lo, seed_hi, n_limit, store);
    checkpoint_out.open(options.checkpoint_path, std::ios::app);
    if (!checkpoint_out)
      throw PreconditionError("cannot open checkpoint file: " + options.checkpoint_path);
    if (!has_header)
      checkpoint_out << "gcdrec-classes-v1 " << to_string_u128(seed_lo) << ' '
                     << to_string_u128(seed_hi) << ' ' << to_string_u128(n_limit) << '\n';
  }

  // Phase 1: per-seed walks, embarrassingly parallel, chunked so checkpoint
  // writes stay ordered.
  const std::size_t chunk_size = 256;
  for (std::size_t chunk_lo = 0; chunk_lo < count; chunk_lo += chunk_size) {
    std::size_t chunk_n = std::min(chunk_size, count - chunk_lo);
    parallel_for_index(chunk_n, options.workers, [&](std::size_t off) {
      std::size_t idx = chunk_lo + off;
      if (store.present[idx]) return;
      State seed{1, seed_lo + idx};
      store.walks[idx] = class_walk(seed, n_limit, options.factor, options.policy);
    });
    if (checkpoint_out) {
      for (std::size_t off = 0; off < chunk_n; ++off) {
        std::size_t idx = chunk_lo + off;
        if (store.present[idx]) continue;
        checkpoint_out << encode_walk(seed_lo + idx, store.walks[idx]) << '\n';
      }
      checkpoint_out.flush();
    }
  }

  // Phase 2: single-threaded deterministic reduction. Seeds are processed
  // ascending; each walk is scanned in trajectory order and stops at its
  // first state already owned by an earlier seed (everything downstream of
  // a shared state is shared, so later entries add no information).
  std::vector<std::size_t> parent(count);
  for (std::size_t i = 0; i < count; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](std::size_t x, std::size_t y) {
    std::size_t rx = find(x);
    std::size_t ry = find(y);
    if (rx == ry) return;
    if (ry < rx) std::swap(rx, ry);
    parent[ry] = rx;
  };

  std::unordered_map<State, std::uint32_t, StateHash> first_owner;
  first_owner.reserve(count * 8);
  std::vector<std::optional<State>> merge_state(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    for (const State& st : store.walks[idx]) {
      auto [it, inserted] = first_owner.emplace(st, static_cast<std::uint32_t>(idx));
      if (!inserted) {
        unite(idx, it->second);
        merge_state[idx] = st;
        break;
      }
    }
  }

  ClassReport report;
  report.seed_lo = seed_lo;
  report.seed_hi = seed_hi;
  report.n_limit = n_limit;
  std::map<std::size_t, SeedClass> grouped;
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t root = find(idx);
    SeedClass& cls = grouped[root];
    cls.representative = seed_lo + root;
    cls.members.push_back(ClassMember{seed_lo + idx, merge_state[idx]});
  }
  report.classes.reserve(grouped.size());
  for (auto& [root, cls] : grouped) report.classes.push_back(std::move(cls));
  return report;
}

}  // namespace gcdrec
