#include "gcdrec/shortcut.hpp"

namespace gcdrec {
namespace {

// Assembles the landing for a general jump of k steps from (n, a):
// the skipped steps each add 1, the landing adds g = gcd(n+k, a+k-1).
JumpOutcome land_general(const State& s, u128 k, const IntegerPolicy& policy) {
  u128 n2 = checked_add(s.n, k);
  enforce_bound(n2, policy, n2);
  u128 a_pre = checked_add(s.a, k - 1);
  u128 g = gcd_u128(n2, a_pre);
  if (g < 2) throw PreconditionError("general jump landed on a trivial gcd");
  u128 a2 = checked_add(a_pre, g);
  enforce_bound(a2, policy, n2);
  return JumpOutcome{n2, g, a2, k - 1, JumpOutcome::Rule::general};
}

}  // namespace

i128 mod_window(i128 a, i128 b, i128 j) {
  if (b < 1) throw PreconditionError("mod_window requires b >= 1");
  i128 r = (a - j) % b;
  if (r < 0) r += b;
  return r + j;
}

u128 jump_offset(u128 n, u128 delta, u128 j, const FactorConfig& config) {
  if (delta < 2) throw PreconditionError("jump_offset requires delta >= 2");
  u128 best = 0;
  bool have = false;
  for (u128 p : distinct_prime_divisors(delta, config)) {
    // mod_window(-n, p, j) with -n folded to a small residue first.
    i128 residue = -static_cast<i128>(n % p);
    u128 k = static_cast<u128>(mod_window(residue, static_cast<i128>(p), static_cast<i128>(j)));
    if (!have || k < best) {
      best = k;
      have = true;
    }
  }
  return best;
}

bool in_ratio_regime(const State& s) {
  return (s.a == 3 * s.n && s.n >= 2) || (s.a == 2 * s.n && s.n >= 3);
}

JumpOutcome ratio_jump(const State& s, unsigned r, const FactorConfig& config,
                       const IntegerPolicy& policy) {
  validate(s);
  if (r != 2 && r != 3) throw PreconditionError("ratio_jump requires r in {2, 3}");
  u128 rr = r;
  if (s.a != checked_mul(rr, s.n)) throw PreconditionError("ratio_jump requires a = r*n");
  u128 rm1 = rr - 1;
  if (rm1 * s.n < 3)
    throw PreconditionError("ratio_jump requires (r-1)*n >= 3 (excluded small seeds)");
  u128 delta = rm1 * s.n - 1;
  u128 p = smallest_prime_factor(delta, config);
  if (delta % p != 0) throw PreconditionError("smallest factor does not divide delta");
  if ((p - 1) % rm1 != 0)
    throw PreconditionError("(r-1) does not divide (p-1); proportional jump invalid");
  u128 n2 = checked_add(s.n, (p - 1) / rm1);
  u128 a2 = checked_mul(rr, n2);
  enforce_bound(a2, policy, n2);
  return JumpOutcome{n2, p, a2, n2 - s.n - 1, JumpOutcome::Rule::ratio};
}

JumpOutcome next_event(const State& s, const FactorConfig& config, const IntegerPolicy& policy) {
  validate(s);
  i128 d = static_cast<i128>(s.a) - static_cast<i128>(s.n) - 1;
  if (d == 0) {
    // a = n + 1: gcd(n+1, a) = n + 1 immediately.
    u128 n2 = checked_add(s.n, 1);
    u128 a2 = checked_mul(2, n2);
    enforce_bound(a2, policy, n2);
    return JumpOutcome{n2, n2, a2, 0, JumpOutcome::Rule::immediate};
  }
  if (d == 1 || d == -1) {
    throw NoNontrivialGcd("a(n) = n + 2 or a(n) = n: consecutive integers stay coprime");
  }
  if (d >= 2) {
    u128 k = jump_offset(s.n, static_cast<u128>(d), 1, config);
    return land_general(s, k, policy);
  }
  // d <= -2: same frame with the roles swapped, gcd(a-1+k, n+k) divides |d|.
  u128 mag = static_cast<u128>(-d);
  u128 k = jump_offset(s.a - 1, mag, 1, config);
  return land_general(s, k, policy);
}

EventStream::EventStream(const State& s0, FactorConfig config, IntegerPolicy policy)
    : current_(s0), config_(config), policy_(policy) {
  validate(s0);
}

std::optional<Event> EventStream::next() {
  if (exhausted_) return std::nullopt;
  JumpOutcome jump;
  try {
    if (current_.a == 3 * current_.n && current_.n >= 2) {
      jump = ratio_jump(current_, 3, config_, policy_);
    } else if (current_.a == 2 * current_.n && current_.n >= 3) {
      jump = ratio_jump(current_, 2, config_, policy_);
    } else {
      jump = next_event(current_, config_, policy_);
    }
  } catch (const NoNontrivialGcd&) {
    exhausted_ = true;
    return std::nullopt;
  }
  current_ = State{jump.n2, jump.a2};
  return Event{jump.n2, jump.p, jump.a2, jump.ones_skipped};
}

EventTrace collect_events(const State& s0, u128 n_max, const FactorConfig& config,
                          const IntegerPolicy& policy) {
  validate(s0);
  if (n_max < s0.n) throw PreconditionError("collect_events requires n_max >= seed index");
  EventTrace trace;
  trace.final_state = s0;
  EventStream stream(s0, config, policy);
  while (auto ev = stream.next()) {
    if (ev->n > n_max) return trace;
    trace.events.push_back(*ev);
    trace.final_state = State{ev->n, ev->a};
  }
  trace.end = EventTrace::End::exhausted;
  return trace;
}

}  // namespace gcdrec
