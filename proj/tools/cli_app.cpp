#include "cli_app.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "format.hpp"
#include "gcdrec/core.hpp"
#include "gcdrec/dynamics.hpp"
#include "gcdrec/factorization.hpp"
#include "gcdrec/shortcut.hpp"

namespace gcdrec::cli {
namespace {

enum class Format { table, csv, bfile };
enum class Mode { shortcut, naive };

struct Options {
  std::string seed_n = "1";
  std::string seed_a = "7";
  std::string n_max;
  std::string events;
  std::string n_limit;
  Mode mode = Mode::shortcut;
  Format format = Format::table;
  std::string policy = "fixed";
  std::string bound;
  bool exact = false;
  std::string kind;      // plotdata
  std::string analysis;  // analyze
  std::string seed_range;
  std::string r_range = "4:20";
  unsigned workers = 1;
  std::string checkpoint;
  std::uint64_t rho_seed = FactorConfig{}.rho_seed;
  std::uint64_t rho_effort = FactorConfig{}.rho_max_iterations;
};

u128 parse_value(const std::string& text, const std::string& what) {
  auto v = parse_u128(text);
  if (!v) throw PreconditionError("invalid " + what + ": '" + text + "'");
  return *v;
}

std::pair<u128, u128> parse_range(const std::string& text, const std::string& what) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw PreconditionError(what + " must be 'lo:hi', got '" + text + "'");
  u128 lo = parse_value(text.substr(0, colon), what);
  u128 hi = parse_value(text.substr(colon + 1), what);
  if (hi < lo) throw PreconditionError(what + " has hi < lo");
  return {lo, hi};
}

IntegerPolicy make_policy(const Options& opt) {
  IntegerPolicy policy;
  if (opt.policy == "unbounded") {
    policy.width = IntegerPolicy::Width::unbounded;
  } else if (opt.policy != "fixed") {
    throw PreconditionError("--policy must be fixed or unbounded");
  }
  if (!opt.bound.empty()) policy.bound = parse_value(opt.bound, "--bound");
  return policy;
}

FactorConfig make_factor(const Options& opt) {
  FactorConfig fc;
  fc.rho_seed = opt.rho_seed;
  fc.rho_max_iterations = opt.rho_effort;
  return fc;
}

State make_seed(const Options& opt) {
  return State{parse_value(opt.seed_n, "--seed-n"), parse_value(opt.seed_a, "--seed-a")};
}

// ---- evolve ----

void print_table_row(std::ostream& out, const std::string& n, const std::string& delta,
                     const std::string& g, const std::string& a, const std::string& ratio) {
  out << std::setw(12) << n << std::setw(14) << delta << std::setw(12) << g << std::setw(18) << a
      << std::setw(14) << ratio << '\n';
}

int cmd_evolve(const Options& opt, std::ostream& out) {
  if (opt.n_max.empty()) throw PreconditionError("evolve requires --n-max");
  IntegerPolicy policy = make_policy(opt);
  u128 n_max = parse_value(opt.n_max, "--n-max");

  if (!policy.fixed()) {
    // Arbitrary-precision path for extreme seeds; indices stay machine-sized.
    u128 n0 = parse_value(opt.seed_n, "--seed-n");
    if (n0 == 0 || n0 > ~static_cast<std::uint64_t>(0) || n_max > ~static_cast<std::uint64_t>(0))
      throw PreconditionError("unbounded evolve requires machine-sized indices");
    BigState seed{static_cast<std::uint64_t>(n0), BigUint::from_decimal(opt.seed_a)};
    if (n_max < seed.n) throw PreconditionError("--n-max must be >= --seed-n");
    BigUint prev = seed.a;
    if (opt.format == Format::csv) {
      out << "n,delta,g,a,ratio\n";
      out << seed.n << ",,," << seed.a.to_decimal() << ',' << sig6_big(seed.a, seed.n) << '\n';
    } else if (opt.format == Format::table) {
      print_table_row(out, "n", "Delta", "g", "a", "a/n");
      print_table_row(out, std::to_string(seed.n), "-", "-", seed.a.to_decimal(),
                      sig6_big(seed.a, seed.n));
    } else {
      out << seed.n << ' ' << seed.a.to_decimal() << '\n';
    }
    evolve_big(seed, static_cast<std::uint64_t>(n_max),
               [&](std::uint64_t n, std::uint64_t g, const BigUint& a) {
                 BigUint delta = prev;  // a(n-1) - n; extreme seeds keep a above n
                 std::string delta_s;
                 if (delta.compare_u128(n) >= 0) {
                   delta.sub_u64(n);
                   delta_s = delta.to_decimal();
                 } else {
                   delta_s = "-" + to_string_u128(static_cast<u128>(n) - delta.as_u128());
                 }
                 if (opt.format == Format::csv) {
                   out << n << ',' << delta_s << ',' << g << ',' << a.to_decimal() << ','
                       << sig6_big(a, n) << '\n';
                 } else if (opt.format == Format::table) {
                   print_table_row(out, std::to_string(n), delta_s, std::to_string(g),
                                   a.to_decimal(), sig6_big(a, n));
                 } else {
                   out << n << ' ' << a.to_decimal() << '\n';
                 }
                 prev = a;
               });
    return 0;
  }

  State seed = make_seed(opt);
  if (n_max < seed.n) throw PreconditionError("--n-max must be >= --seed-n");
  auto ratio_text = [&](const Ratio& r) { return opt.exact ? exact_ratio(r) : sig6(r); };
  Ratio seed_ratio = make_ratio(seed.a, seed.n);
  switch (opt.format) {
    case Format::csv:
      out << "n,delta,g,a,ratio\n";
      out << to_string_u128(seed.n) << ",,," << to_string_u128(seed.a) << ','
          << ratio_text(seed_ratio) << '\n';
      break;
    case Format::table:
      print_table_row(out, "n", "Delta", "g", "a", "a/n");
      print_table_row(out, to_string_u128(seed.n), "-", "-", to_string_u128(seed.a),
                      ratio_text(seed_ratio));
      break;
    case Format::bfile:
      out << to_string_u128(seed.n) << ' ' << to_string_u128(seed.a) << '\n';
      break;
  }
  try {
    evolve(
        seed, n_max,
        [&](const StepRecord& rec) {
          switch (opt.format) {
            case Format::csv:
              out << to_string_u128(rec.n) << ',' << to_string_i128(rec.delta) << ','
                  << to_string_u128(rec.g) << ',' << to_string_u128(rec.a) << ','
                  << ratio_text(rec.ratio) << '\n';
              break;
            case Format::table:
              print_table_row(out, to_string_u128(rec.n), to_string_i128(rec.delta),
                              to_string_u128(rec.g), to_string_u128(rec.a),
                              ratio_text(rec.ratio));
              break;
            case Format::bfile:
              out << to_string_u128(rec.n) << ' ' << to_string_u128(rec.a) << '\n';
              break;
          }
        },
        policy);
  } catch (const OverflowError& e) {
    throw OverflowError(std::string(e.what()) + " (rows up to the overflow were emitted)",
                        e.index());
  }
  return 0;
}

// ---- primes / diffs ----

int cmd_primes(const Options& opt, std::ostream& out, std::ostream& err) {
  State seed = make_seed(opt);
  IntegerPolicy policy = make_policy(opt);
  FactorConfig fc = make_factor(opt);
  if (opt.events.empty() && opt.n_max.empty())
    throw PreconditionError("primes requires --events or --n-max");

  std::vector<Event> events;
  auto emit = [&](const Event& ev, u128 ordinal) {
    switch (opt.format) {
      case Format::table:
        out << to_string_u128(ev.g) << '\n';
        break;
      case Format::bfile:
        out << to_string_u128(ordinal) << ' ' << to_string_u128(ev.g) << '\n';
        break;
      case Format::csv:
        out << to_string_u128(ordinal) << ',' << to_string_u128(ev.n) << ','
            << to_string_u128(ev.g) << ',' << to_string_u128(ev.a) << '\n';
        break;
    }
  };
  if (opt.format == Format::csv) out << "j,n,g,a\n";

  u128 limit_events = opt.events.empty() ? 0 : parse_value(opt.events, "--events");
  u128 n_max = opt.n_max.empty() ? 0 : parse_value(opt.n_max, "--n-max");
  u128 ordinal = 0;

  if (opt.mode == Mode::shortcut) {
    EventStream stream(seed, fc, policy);
    while (true) {
      if (!opt.events.empty() && ordinal >= limit_events) break;
      auto ev = stream.next();
      if (!ev) {
        err << "note: evolution terminated after " << to_string_u128(ordinal)
            << " events (no further nontrivial gcds)\n";
        break;
      }
      if (!opt.n_max.empty() && ev->n > n_max) break;
      emit(*ev, ++ordinal);
    }
  } else {
    // Naive mode: filter the raw evolution; horizon defaults high enough to
    // find the requested number of events only when --n-max is given.
    if (opt.n_max.empty())
      throw PreconditionError("primes --mode naive requires --n-max (a stepping horizon)");
    State cur = seed;
    while (cur.n < n_max && (opt.events.empty() || ordinal < limit_events)) {
      StepRecord rec = step(cur, policy);
      cur = State{rec.n, rec.a};
      if (rec.g != 1) emit(Event{rec.n, rec.g, rec.a, 0}, ++ordinal);
    }
  }
  return 0;
}

int cmd_diffs(const Options& opt, std::ostream& out) {
  State seed = make_seed(opt);
  IntegerPolicy policy = make_policy(opt);
  u128 count = 0;
  if (!opt.events.empty()) {
    count = parse_value(opt.events, "--events");
  } else if (!opt.n_max.empty()) {
    u128 n_max = parse_value(opt.n_max, "--n-max");
    if (n_max < seed.n) throw PreconditionError("--n-max must be >= --seed-n");
    count = n_max - seed.n;
  } else {
    throw PreconditionError("diffs requires --events (term count) or --n-max");
  }
  if (opt.format == Format::csv) out << "n,g\n";
  if (count == 0) return 0;

  u128 n = seed.n;
  for (u128 g : difference_sequence(seed, count, policy)) {
    ++n;
    switch (opt.format) {
      case Format::table:
        out << to_string_u128(g) << '\n';
        break;
      case Format::bfile:
        out << to_string_u128(n) << ' ' << to_string_u128(g) << '\n';
        break;
      case Format::csv:
        out << to_string_u128(n) << ',' << to_string_u128(g) << '\n';
        break;
    }
  }
  return 0;
}

// ---- plotdata ----

int cmd_plotdata(const Options& opt, std::ostream& out, std::ostream& err) {
  State seed = make_seed(opt);
  IntegerPolicy policy = make_policy(opt);
  FactorConfig fc = make_factor(opt);
  if (opt.kind == "clusters") {
    out << "j,n\n";
    u128 limit_events = opt.events.empty() ? 0 : parse_value(opt.events, "--events");
    u128 n_max = opt.n_max.empty() ? 0 : parse_value(opt.n_max, "--n-max");
    if (opt.events.empty() && opt.n_max.empty())
      throw PreconditionError("plotdata --kind clusters requires --events or --n-max");
    u128 ordinal = 0;
    if (opt.mode == Mode::shortcut) {
      EventStream stream(seed, fc, policy);
      while (opt.events.empty() || ordinal < limit_events) {
        auto ev = stream.next();
        if (!ev) {
          err << "note: evolution terminated after " << to_string_u128(ordinal) << " events\n";
          break;
        }
        if (!opt.n_max.empty() && ev->n > n_max) break;
        out << to_string_u128(++ordinal) << ',' << to_string_u128(ev->n) << '\n';
      }
    } else {
      if (opt.n_max.empty()) throw PreconditionError("naive clusters requires --n-max");
      State cur = seed;
      while (cur.n < n_max && (opt.events.empty() || ordinal < limit_events)) {
        StepRecord rec = step(cur, policy);
        cur = State{rec.n, rec.a};
        if (rec.g != 1) out << to_string_u128(++ordinal) << ',' << to_string_u128(rec.n) << '\n';
      }
    }
    return 0;
  }
  if (opt.kind == "ratio") {
    if (opt.n_max.empty()) throw PreconditionError("plotdata --kind ratio requires --n-max");
    u128 n_max = parse_value(opt.n_max, "--n-max");
    out << "n,ratio\n";
    Ratio r0 = make_ratio(seed.a, seed.n);
    out << to_string_u128(seed.n) << ',' << sig6_point(r0.num, r0.den) << '\n';
    evolve(
        seed, n_max,
        [&](const StepRecord& rec) {
          out << to_string_u128(rec.n) << ',' << sig6_point(rec.ratio.num, rec.ratio.den) << '\n';
        },
        policy);
    return 0;
  }
  throw PreconditionError("--kind must be clusters or ratio");
}

// ---- analyze ----

const char* outcome_text(TransienceReport::Outcome o) {
  switch (o) {
    case TransienceReport::Outcome::entered_ratio_regime:
      return "entered-ratio-regime";
    case TransienceReport::Outcome::fixed_ones:
      return "fixed-ones";
    default:
      return "budget-exhausted";
  }
}

int analyze_transience(const Options& opt, std::ostream& out) {
  State seed = make_seed(opt);
  u128 budget = opt.events.empty() ? 100000 : parse_value(opt.events, "--events");
  TransienceReport report =
      check_transience(seed, budget, make_factor(opt), make_policy(opt));
  std::string non_prime;
  for (const auto& [n, g] : report.non_prime_events) {
    if (!non_prime.empty()) non_prime += ';';
    non_prime += to_string_u128(n) + ":" + to_string_u128(g);
  }
  if (opt.format == Format::csv) {
    out << "field,value\n";
    out << "outcome," << outcome_text(report.outcome) << '\n';
    out << "threshold_n," << to_string_u128(report.threshold_n) << '\n';
    out << "events_examined," << to_string_u128(report.events_examined) << '\n';
    out << "non_prime_events," << non_prime << '\n';
    if (report.regime_entry) {
      out << "regime_n," << to_string_u128(report.regime_entry->n) << '\n';
      out << "regime_a," << to_string_u128(report.regime_entry->a) << '\n';
    }
  } else {
    out << "seed (" << to_string_u128(seed.n) << ", " << to_string_u128(seed.a) << ")\n";
    out << "outcome: " << outcome_text(report.outcome) << '\n';
    out << "all event gcds beyond n=" << to_string_u128(report.threshold_n)
        << " observed 1 or prime\n";
    out << "composite events: " << (non_prime.empty() ? "none" : non_prime) << '\n';
    if (report.regime_entry)
      out << "ratio regime entered at (" << to_string_u128(report.regime_entry->n) << ", "
          << to_string_u128(report.regime_entry->a) << ")\n";
  }
  return 0;
}

int analyze_coverage(const Options& opt, std::ostream& out) {
  State seed = make_seed(opt);
  if (opt.events.empty()) throw PreconditionError("coverage requires --events");
  u128 events = parse_value(opt.events, "--events");
  CoverageReport report = prime_coverage(seed, events, make_factor(opt), make_policy(opt));
  if (opt.format == Format::csv) {
    out << "field,value\n";
    out << "events," << to_string_u128(report.events_requested) << '\n';
    out << "distinct_primes," << report.prime_counts.size() << '\n';
    out << "smallest_absent_odd_prime," << to_string_u128(report.smallest_absent_odd_prime)
        << '\n';
    std::string counts;
    for (const auto& [p, c] : report.prime_counts) {
      if (!counts.empty()) counts += ';';
      counts += to_string_u128(p) + ":" + to_string_u128(c);
    }
    out << "prime_counts," << counts << '\n';
  } else {
    out << "events: " << to_string_u128(report.events_requested) << '\n';
    out << "distinct primes seen: " << report.prime_counts.size() << '\n';
    out << "smallest absent odd prime: " << to_string_u128(report.smallest_absent_odd_prime)
        << '\n';
  }
  return 0;
}

int analyze_classes(const Options& opt, std::ostream& out) {
  auto [lo, hi] = parse_range(opt.seed_range.empty() ? "4:8192" : opt.seed_range, "--seed-range");
  u128 n_limit = opt.n_limit.empty() ? (static_cast<u128>(1) << 23)
                                     : parse_value(opt.n_limit, "--n-limit");
  ClassScanOptions scan;
  scan.workers = opt.workers;
  scan.checkpoint_path = opt.checkpoint;
  scan.factor = make_factor(opt);
  scan.policy = make_policy(opt);
  ClassReport report = equivalence_classes(lo, hi, n_limit, scan);
  if (opt.format == Format::csv) {
    out << "member,representative,merge_n,merge_a\n";
    for (const auto& cls : report.classes) {
      for (const auto& m : cls.members) {
        out << to_string_u128(m.seed) << ',' << to_string_u128(cls.representative) << ',';
        if (m.merge_state)
          out << to_string_u128(m.merge_state->n) << ',' << to_string_u128(m.merge_state->a);
        else
          out << ',';
        out << '\n';
      }
    }
  } else {
    out << "seeds " << to_string_u128(lo) << ".." << to_string_u128(hi) << " up to n="
        << to_string_u128(n_limit) << ": " << report.classes.size() << " classes\n";
    for (const auto& cls : report.classes) {
      out << "  class " << to_string_u128(cls.representative) << " (" << cls.members.size()
          << " seeds)\n";
    }
  }
  return 0;
}

int analyze_persistence(const Options& opt, std::ostream& out) {
  auto [lo, hi] =
      parse_range(opt.seed_range.empty() ? "1:10000" : opt.seed_range, "--seed-range");
  auto [rlo, rhi] = parse_range(opt.r_range, "--r-range");
  PersistenceScanOptions scan;
  scan.workers = opt.workers;
  scan.factor = make_factor(opt);
  scan.policy = make_policy(opt);
  auto records = scan_persistence(lo, hi, static_cast<unsigned>(rlo), static_cast<unsigned>(rhi),
                                  scan);
  if (opt.format == Format::csv) {
    out << "n1,r,repetitions,last_n\n";
    for (const auto& rec : records) {
      out << to_string_u128(rec.n1) << ',' << rec.r << ',' << to_string_u128(rec.repetitions)
          << ',' << to_string_u128(rec.last_n) << '\n';
    }
  } else {
    // Human rendering keeps only seeds whose ratio actually returned.
    out << "persistent integer-ratio seeds (a(n1) = r*n1, returns counted at events):\n";
    for (const auto& rec : records) {
      if (rec.repetitions == 0) continue;
      out << "  n1=" << to_string_u128(rec.n1) << " r=" << rec.r
          << " returns=" << to_string_u128(rec.repetitions)
          << " last at n=" << to_string_u128(rec.last_n) << '\n';
    }
  }
  return 0;
}

int analyze_bounds(const Options& opt, std::ostream& out) {
  State seed = make_seed(opt);
  IntegerPolicy policy = make_policy(opt);
  u128 n_max = opt.n_max.empty() ? 10000 : parse_value(opt.n_max, "--n-max");
  BoundCheck upper = check_ceiling_bound(seed, n_max, policy);
  bool lower_applies = seed.a > 2 * seed.n + 1;
  BoundCheck lower;
  if (lower_applies) lower = check_lower_bound(seed, n_max, policy);
  bool crossing_applies = seed.a == 2 * seed.n + 1;
  bool crossing_ok = true;
  if (crossing_applies) {
    StepRecord rec = crossing_step(seed, policy);
    crossing_ok = rec.ratio == Ratio{2, 1};
  }
  bool violated = !upper.ok || (lower_applies && !lower.ok) || !crossing_ok;
  if (opt.format == Format::csv) {
    out << "field,value\n";
    out << "ceiling," << to_string_u128(upper.ceiling) << '\n';
    out << "ceiling_ok," << (upper.ok ? "true" : "false") << '\n';
    out << "lower_applies," << (lower_applies ? "true" : "false") << '\n';
    if (lower_applies) out << "lower_ok," << (lower.ok ? "true" : "false") << '\n';
    out << "crossing_applies," << (crossing_applies ? "true" : "false") << '\n';
    if (crossing_applies) out << "crossing_exact," << (crossing_ok ? "true" : "false") << '\n';
  } else {
    out << "ceiling bound a(n)/n <= " << to_string_u128(upper.ceiling) << ": "
        << (upper.ok ? "holds" : "VIOLATED") << " to n=" << to_string_u128(n_max) << '\n';
    if (lower_applies)
      out << "lower bound a(n)/n > 2: " << (lower.ok ? "holds" : "VIOLATED") << '\n';
    if (crossing_applies)
      out << "crossing identity at a=2n+1: " << (crossing_ok ? "exact ratio 2" : "VIOLATED")
          << '\n';
  }
  return violated ? 4 : 0;
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  if (opt.analysis == "transience") return analyze_transience(opt, out);
  if (opt.analysis == "coverage") return analyze_coverage(opt, out);
  if (opt.analysis == "classes") return analyze_classes(opt, out);
  if (opt.analysis == "persistence") return analyze_persistence(opt, out);
  if (opt.analysis == "bounds") return analyze_bounds(opt, out);
  throw PreconditionError(
      "--analysis must be one of transience, coverage, classes, persistence, bounds");
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("--seed-n", opt.seed_n, "Seed index n1 (default 1)")->envname("GCDREC_SEED_N");
  sub->add_option("--seed-a", opt.seed_a, "Seed value a(n1) (default 7)")
      ->envname("GCDREC_SEED_A");
  sub->add_option("--n-max", opt.n_max, "Index horizon")->envname("GCDREC_N_MAX");
  sub->add_option("--events", opt.events, "Event count / term count / budget")
      ->envname("GCDREC_EVENTS");
  std::map<std::string, Mode> modes{{"shortcut", Mode::shortcut}, {"naive", Mode::naive}};
  sub->add_option("--mode", opt.mode, "Evolution mode (shortcut|naive)")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
      ->envname("GCDREC_MODE");
  std::map<std::string, Format> formats{
      {"table", Format::table}, {"csv", Format::csv}, {"bfile", Format::bfile}};
  sub->add_option("--format", opt.format, "Output format (table|csv|bfile)")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->envname("GCDREC_FORMAT");
  sub->add_option("--policy", opt.policy, "Integer policy (fixed|unbounded)")
      ->envname("GCDREC_POLICY");
  sub->add_option("--bound", opt.bound, "Fixed-policy value bound (default 2^80)")
      ->envname("GCDREC_BOUND");
  sub->add_option("--rho-seed", opt.rho_seed, "Deterministic seed for the rho factor search")
      ->envname("GCDREC_RHO_SEED");
  sub->add_option("--rho-effort", opt.rho_effort,
                  "Iteration cap for the rho factor search (default 2^26)")
      ->envname("GCDREC_RHO_EFFORT");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"gcd-accumulation recurrence toolkit: a(n) = a(n-1) + gcd(n, a(n-1))"};
  app.require_subcommand(1);

  CLI::App* evolve_cmd =
      app.add_subcommand("evolve", "Naive evolution table (n, Delta, g, a, a/n)");
  add_common(evolve_cmd, opt);
  evolve_cmd->add_flag("--exact", opt.exact, "Print ratios as reduced fractions");

  CLI::App* primes_cmd =
      app.add_subcommand("primes", "Nontrivial gcd values of the evolution (events)");
  add_common(primes_cmd, opt);

  CLI::App* diffs_cmd = app.add_subcommand("diffs", "Difference sequence g(n) = a(n) - a(n-1)");
  add_common(diffs_cmd, opt);

  CLI::App* plot_cmd = app.add_subcommand("plotdata", "CSV series for external plotting");
  add_common(plot_cmd, opt);
  plot_cmd->add_option("--kind", opt.kind, "Series kind (clusters|ratio)")->required();

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Dynamical analyses and reports");
  add_common(analyze_cmd, opt);
  analyze_cmd
      ->add_option("--analysis", opt.analysis,
                   "Analysis (transience|coverage|classes|persistence|bounds)")
      ->required();
  analyze_cmd->add_option("--seed-range", opt.seed_range, "Seed interval lo:hi")
      ->envname("GCDREC_SEED_RANGE");
  analyze_cmd->add_option("--r-range", opt.r_range, "Integer ratio interval lo:hi (persistence)")
      ->envname("GCDREC_R_RANGE");
  analyze_cmd->add_option("--n-limit", opt.n_limit, "Class-scan index horizon (default 2^23)")
      ->envname("GCDREC_N_LIMIT");
  analyze_cmd->add_option("--workers", opt.workers, "Worker threads for seed scans")
      ->envname("GCDREC_WORKERS");
  analyze_cmd->add_option("--checkpoint", opt.checkpoint, "Checkpoint file for long class scans")
      ->envname("GCDREC_CHECKPOINT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    int code = CLI::App().exit(e, msg, msg);  // render message without touching std streams
    (code == 0 ? out : err) << msg.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (evolve_cmd->parsed()) return cmd_evolve(opt, out);
    if (primes_cmd->parsed()) return cmd_primes(opt, out, err);
    if (diffs_cmd->parsed()) return cmd_diffs(opt, out);
    if (plot_cmd->parsed()) return cmd_plotdata(opt, out, err);
    if (analyze_cmd->parsed()) return cmd_analyze(opt, out);
  } catch (const FactorEffortError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const NoNontrivialGcd& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace gcdrec::cli
