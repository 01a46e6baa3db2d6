// Acceptance suite: one check per numbered criterion, each printing a
// single [PASS]/[FAIL] line with its runtime. Run with no arguments for the
// whole suite or with a criterion number to run one check.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli_app.hpp"
#include "format.hpp"
#include "gcdrec/core.hpp"
#include "gcdrec/dynamics.hpp"
#include "gcdrec/factorization.hpp"
#include "gcdrec/shortcut.hpp"
#include "oracles.hpp"
#include "reference_data.hpp"

using namespace gcdrec;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string run_cli_capture(const std::vector<std::string>& args, int& code) {
  std::vector<const char*> argv;
  argv.push_back("gcdrec");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

// 1. Table reproduction through the CLI renderer, exact values and exact
//    6-significant-digit ratio strings.
Outcome criterion_table() {
  int code = 0;
  std::string text = run_cli_capture({"evolve", "--seed-n", "1", "--seed-a", "7", "--n-max",
                                      "106"},
                                     code);
  if (code != 0) return {false, "CLI exit code " + std::to_string(code)};
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  if (lines.size() != 107) return {false, "expected 107 output lines"};
  for (const auto& row : refdata::kTableRows) {
    std::istringstream ls(lines[row.n]);
    std::string n_s, delta_s, g_s, a_s, ratio_s;
    ls >> n_s >> delta_s >> g_s >> a_s >> ratio_s;
    std::string want_delta = row.delta < 0 ? "-" : std::to_string(row.delta);
    std::string want_g = row.g < 0 ? "-" : std::to_string(row.g);
    if (n_s != std::to_string(row.n) || delta_s != want_delta || g_s != want_g ||
        a_s != std::to_string(row.a) || ratio_s != row.ratio) {
      return {false, "row n=" + std::to_string(row.n) + " mismatch: got '" + lines[row.n] + "'"};
    }
  }
  return {true, "all 62 listed rows exact (values and ratio rendering)"};
}

// 2. Difference-sequence prefix, exact.
Outcome criterion_differences() {
  auto d = difference_sequence(State{1, 7}, refdata::kDifferencePrefix.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != refdata::kDifferencePrefix[i])
      return {false, "term " + std::to_string(i + 1) + " mismatch"};
  }
  if (d.size() < 446) return {false, "published prefix shorter than 446 terms"};
  if (d[45] != 47 || d[99] != 101 || d[232] != 233)
    return {false, "spot anchors (46->47, 100->101, 233->233) failed"};
  return {true, "all " + std::to_string(d.size()) + " published terms exact (contains the first 446)"};
}

// 3. Shortcut event prefix, exact, including the deep 996541661 anchor.
Outcome criterion_events() {
  EventStream stream(State{1, 7});
  std::vector<u128> gs;
  for (std::size_t i = 0; i < refdata::kEventPrefix.size(); ++i) {
    auto ev = stream.next();
    if (!ev) return {false, "stream ended early"};
    if (ev->g != refdata::kEventPrefix[i])
      return {false, "event " + std::to_string(i + 1) + " mismatch"};
    gs.push_back(ev->g);
  }
  if (gs[18] != 467) return {false, "position 19 is not 467"};
  bool deep = false;
  for (u128 g : gs)
    if (g == 996541661) deep = true;
  if (!deep) return {false, "996541661 missing from the prefix"};
  return {true, std::to_string(gs.size()) + " published events exact"};
}

// 4. Every event gcd up to n = 10^8 is prime.
Outcome criterion_theorem() {
  EventStream stream(State{1, 7});
  u128 events = 0;
  while (auto ev = stream.next()) {
    if (ev->n > 100000000) break;
    ++events;
    if (!is_prime(ev->g))
      return {false, "composite event g=" + to_string_u128(ev->g) + " at n=" +
                         to_string_u128(ev->n)};
  }
  return {true, to_string_u128(events) + " events to n=10^8, all prime"};
}

// 5. Accelerated events equal naive-filtered events for seeds 1..500.
Outcome criterion_oracle_equivalence() {
  for (u128 seed_a = 1; seed_a <= 500; ++seed_a) {
    auto fast = collect_events(State{1, seed_a}, 10000);
    auto slow = oracles::raw_events(State{1, seed_a}, 10000);
    if (fast.events.size() != slow.size())
      return {false, "seed " + to_string_u128(seed_a) + ": event count differs"};
    for (std::size_t i = 0; i < slow.size(); ++i) {
      if (!(fast.events[i] == slow[i]))
        return {false, "seed " + to_string_u128(seed_a) + ": event " + std::to_string(i) +
                           " differs"};
    }
  }
  return {true, "500 seeds, n_max 10^4, event-for-event equal"};
}

// 6. General jump equals the linear scan on the exhaustive grid.
Outcome criterion_jump_grid() {
  for (u128 n = 0; n <= 200; ++n) {
    for (u128 delta = 2; delta <= 200; ++delta) {
      for (u128 j : {u128(0), u128(1)}) {
        u128 fast = jump_offset(n, delta, j);
        u128 slow = oracles::scan_jump_offset(n, delta, j);
        if (fast != slow)
          return {false, "n=" + to_string_u128(n) + " delta=" + to_string_u128(delta) +
                             " j=" + to_string_u128(j)};
      }
    }
  }
  return {true, "exhaustive grid n<=200, 2<=delta<=200, j in {0,1}"};
}

// 7. Ratio bound propositions over random seeds, plus the crossing identity.
Outcome criterion_bounds() {
  std::mt19937_64 rng(0x60bd5);
  for (int i = 0; i < 1000; ++i) {
    u128 n1 = rng() % 50 + 1;
    u128 a1 = rng() % 1000000 + 1;
    BoundCheck up = check_ceiling_bound(State{n1, a1}, 10000);
    if (!up.ok)
      return {false, "ceiling violated for seed (" + to_string_u128(n1) + "," +
                         to_string_u128(a1) + ")"};
    if (a1 > 2 * n1 + 1) {
      BoundCheck low = check_lower_bound(State{n1, a1}, 10000);
      if (!low.ok)
        return {false, "lower bound violated for seed (" + to_string_u128(n1) + "," +
                           to_string_u128(a1) + ")"};
    }
  }
  for (u128 n = 1; n <= 1000; ++n) {
    StepRecord rec = crossing_step(State{n, 2 * n + 1});
    if (!(rec.ratio == Ratio{2, 1}))
      return {false, "crossing identity failed at n=" + to_string_u128(n)};
  }
  return {true, "10^3 random seeds to n=10^4, zero violations; crossing exact"};
}

// 8. The r = 7 persistence example.
Outcome criterion_persistence() {
  PersistenceRecord rec = persistence_for_seed(7727, 7);
  if (rec.repetitions != 11)
    return {false, "repetitions = " + to_string_u128(rec.repetitions) + ", want 11"};
  if (rec.last_n != 7885) return {false, "last = " + to_string_u128(rec.last_n) + ", want 7885"};
  return {true, "seed (7727, 54089): ratio 7 returns 11 times, last at n=7885"};
}

// 9. Coverage after 10^4 shortcut events. The trajectory leaves 128-bit
//    range near event 2800 and its deltas include composites whose smallest
//    factors are far beyond any in-process factor search, so this check
//    documents the honest failure rather than faking a pass; the attempt
//    runs under a bounded factor-search effort so it terminates.
Outcome criterion_coverage() {
  FactorConfig bounded;
  bounded.rho_max_iterations = 1ull << 22;
  try {
    CoverageReport report = prime_coverage(State{1, 7}, 10000, bounded);
    if (report.smallest_absent_odd_prime == 587)
      return {true, "smallest absent odd prime after 10^4 events: 587"};
    return {false, "smallest absent odd prime was " +
                       to_string_u128(report.smallest_absent_odd_prime) + ", want 587"};
  } catch (const FactorEffortError& e) {
    return {false,
            std::string("infeasible in-process: ") + e.what() +
                " (the 10^4-event trajectory reaches ~2^240 and contains composites whose "
                "smallest factors exceed any rho-reachable size; ~600 events reach 2^60, "
                "~2800 reach 2^128)"};
  } catch (const OverflowError& e) {
    return {false, std::string("infeasible in-process: ") + e.what()};
  }
}

// 10. Equivalence classes over [4, 8192] below 2^23.
Outcome criterion_classes() {
  ClassScanOptions opts;
  opts.workers = std::max(1u, std::thread::hardware_concurrency());
  ClassReport report = equivalence_classes(4, 8192, static_cast<u128>(1) << 23, opts);
  if (report.classes.size() != 203)
    return {false, std::to_string(report.classes.size()) + " classes, want 203"};
  for (const auto& cls : report.classes) {
    bool has4 = false;
    bool has7 = false;
    const ClassMember* m7 = nullptr;
    for (const auto& m : cls.members) {
      if (m.seed == 4) has4 = true;
      if (m.seed == 7) {
        has7 = true;
        m7 = &m;
      }
    }
    if (has4 != has7) return {false, "4 and 7 are in different classes"};
    if (has4 && has7) {
      if (!m7->merge_state || !(*m7->merge_state == State{3, 9}))
        return {false, "seed 7 did not merge at (3, 9)"};
    }
  }
  return {true, "203 classes; {4,7} merge at (3,9)"};
}

// 11. Large-gap structure on (1,7) to n = 10^6.
Outcome criterion_structure() {
  EventTrace trace = collect_events(State{1, 7}, 1000000);
  ClusterReport report = detect_clusters(trace.events, 3);
  for (const Event& e : trace.events) {
    if (e.g == 2) return {false, "g = 2 appeared at n=" + to_string_u128(e.n)};
  }
  for (std::size_t c = 1; c < report.clusters.size(); ++c) {
    const Event& start = report.events[report.clusters[c].first];
    if (start.g % 6 != 5)
      return {false, "cluster-start prime " + to_string_u128(start.g) + " is not 5 mod 6"};
    if (report.clusters[c].first + 1 >= report.events.size()) continue;
    const Event& next = report.events[report.clusters[c].first + 1];
    if (next.n != start.n + 1 || next.g != 3)
      return {false, "event after cluster start " + to_string_u128(start.n) +
                         " is not g=3 at the next index"};
  }
  return {true, std::to_string(report.clusters.size()) + " clusters to n=10^6, structure exact"};
}

// 12. Emulation fidelity to n' = 10^5.
Outcome criterion_emulation() {
  auto mismatch = first_emulation_mismatch(State{4, 8}, State{1, 7}, 100000);
  if (mismatch) return {false, "first mismatch at n'=" + to_string_u128(*mismatch)};
  return {true, "(4,8) transformed equals (1,7) for all 3 <= n' <= 10^5"};
}

// 13. Factorization oracle suite.
Outcome criterion_factorization() {
  for (u128 m = 2; m <= 1000000; ++m) {
    if (is_prime(m) != oracles::trial_is_prime(m))
      return {false, "is_prime mismatch at m=" + to_string_u128(m)};
    if (smallest_prime_factor(m) != oracles::trial_spf(m))
      return {false, "spf mismatch at m=" + to_string_u128(m)};
  }
  std::mt19937_64 rng(0xfac7);
  for (int i = 0; i < 10000; ++i) {
    u128 m = static_cast<u128>(rng());
    if (m < 2) m += 2;
    u128 p = smallest_prime_factor(m);
    bool prime = is_prime(m);
    if ((p == m) != prime) return {false, "spf/is_prime disagree at m=" + to_string_u128(m)};
    if (m % p != 0 || !is_prime(p))
      return {false, "spf returned a non-divisor or composite at m=" + to_string_u128(m)};
  }
  return {true, "trial-division agreement to 10^6; 10^4 random 64-bit cross-checks"};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> fn;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "table reproduction via cmd_evolve", criterion_table},
      {2, "difference sequence prefix (A132199)", criterion_differences},
      {3, "shortcut prime events prefix (A137613)", criterion_events},
      {4, "all event gcds prime to n=10^8", criterion_theorem},
      {5, "shortcut equals naive filter, seeds 1..500", criterion_oracle_equivalence},
      {6, "general jump equals linear scan (exhaustive grid)", criterion_jump_grid},
      {7, "ratio bound propositions + crossing identity", criterion_bounds},
      {8, "persistence example n1=7727, r=7", criterion_persistence},
      {9, "prime coverage after 10^4 events (587)", criterion_coverage},
      {10, "203 equivalence classes below 2^23", criterion_classes},
      {11, "large-gap structure to n=10^6", criterion_structure},
      {12, "emulation fidelity to n'=10^5", criterion_emulation},
      {13, "factorization oracle suite", criterion_factorization},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  int failures = 0;
  int executed = 0;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    ++executed;
    auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.fn();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("[%s] %02d %s (%lld ms): %s\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name,
                static_cast<long long>(ms), outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  if (executed == 0) {
    std::fprintf(stderr, "no criterion with id %d\n", only);
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
