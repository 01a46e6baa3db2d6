#include "gcdrec/core.hpp"

namespace gcdrec {

std::vector<StepRecord> evolve_records(const State& s0, u128 n_max, const IntegerPolicy& policy) {
  std::vector<StepRecord> out;
  if (n_max > s0.n) out.reserve(static_cast<std::size_t>(n_max - s0.n));
  evolve(s0, n_max, [&](const StepRecord& rec) { out.push_back(rec); }, policy);
  return out;
}

std::vector<u128> difference_sequence(const State& s0, u128 count, const IntegerPolicy& policy) {
  if (count < 1) throw PreconditionError("difference_sequence requires count >= 1");
  std::vector<u128> out;
  out.reserve(static_cast<std::size_t>(count));
  State s = s0;
  validate(s);
  while (out.size() < count) {
    StepRecord rec = step(s, policy);
    out.push_back(rec.g);
    s = State{rec.n, rec.a};
  }
  return out;
}

std::vector<u128> lcm_variant_sequence(u128 count, const IntegerPolicy& policy) {
  if (count < 1) throw PreconditionError("lcm_variant_sequence requires count >= 1");
  std::vector<u128> out;
  out.reserve(static_cast<std::size_t>(count));

  if (policy.fixed()) {
    u128 b = 1;
    for (u128 n = 2; out.size() < count; ++n) {
      u128 g = gcd_u128(n, b);
      u128 m = n / g;
      if (n % g != 0) throw OverflowError("lcm variant term was not an integer");
      // b(n) = b(n-1) * (1 + n/g); the emitted term b(n)/b(n-1) - 1 = n/g.
      u128 bn = checked_mul(b, checked_add(m, 1));
      enforce_bound(bn, policy, n);
      out.push_back(m);
      b = bn;
    }
    return out;
  }

  BigUint b(1);
  for (std::uint64_t n = 2; out.size() < count; ++n) {
    std::uint64_t g = gcd_u64(n, b.mod_u64(n));
    std::uint64_t m = n / g;
    if (n % g != 0) throw OverflowError("lcm variant term was not an integer");
    b.mul_u64(m + 1);
    out.push_back(m);
  }
  return out;
}

}  // namespace gcdrec
