#include "sumprod/progressions.hpp"

#include "sumprod/oracle.hpp"

#include <array>
#include <stdexcept>

namespace sumprod {

namespace {

void require_positive_primitive(const Int& a, const Int& b, const Int& c, const Int& d,
                                const Int& m, const char* who) {
  if (a < 1 || b < 1 || c < 1 || d < 1 || m < 1)
    throw std::invalid_argument(std::string(who) + ": a, b, c, d, m must be positive");
  const std::array<Int, 5> params{a, b, c, d, m};
  if (gcd(params) != 1)
    throw std::invalid_argument(std::string(who) + ": gcd(a, b, c, d, m) must be 1");
}

}  // namespace

ThresholdReport threshold_N0(const Int& a, const Int& b, const Int& c, const Int& d,
                             const Int& m) {
  if (a < 1 || b < 1 || c < 1 || d < 1 || m < 1)
    throw std::invalid_argument("threshold_N0: all inputs must be positive");
  const Int m2 = m * m;
  ThresholdReport r;
  r.a = a;
  r.b = b;
  r.c = c;
  r.d = d;
  r.m = m;
  r.a_hi = a + (d + 1) * m2;
  r.c_hi = c + (a + b + 1) * m2 + (d + 1) * m2 * m2;
  r.N0 = r.a_hi * b + r.c_hi * d + m * r.a_hi * r.c_hi;
  return r;
}

const char* to_string(ProgressionStatus s) {
  switch (s) {
    case ProgressionStatus::witness: return "witness";
    case ProgressionStatus::not_member: return "not-member";
    case ProgressionStatus::below_threshold_failure: return "below-threshold-failure";
  }
  return "unknown";
}

bool verify_progression_witness(const Instance& inst, const Witness& w) {
  return verify_witness(inst, w) && w.a_prime >= inst.a && w.b_prime >= inst.b &&
         w.c_prime >= inst.c && w.d_prime >= inst.d;
}

ProgressionOutcome solve_progression(const Instance& inst) {
  require_positive_primitive(inst.a, inst.b, inst.c, inst.d, inst.m, "solve_progression");
  ProgressionOutcome out;
  out.threshold = threshold_N0(inst.a, inst.b, inst.c, inst.d, inst.m);
  const Int base = inst.a * inst.b + inst.c * inst.d;
  if (inst.N < base || !divides(inst.m, Int(inst.N - base))) return out;
  if (inst.N == base) {
    out.status = ProgressionStatus::witness;
    out.witness = Witness{inst.a, inst.b, inst.c, inst.d};
    return out;
  }

  WitnessTrace t = prepare_lift(inst);
  auto lift = lemma_lift(t.a_prime, t.c_prime, inst.b, inst.d, inst.m, inst.N, true);
  if (!lift) {
    if (inst.N >= out.threshold.N0)
      throw InvariantViolation("no nonnegative lift at or above N0", describe(t));
    out.status = ProgressionStatus::below_threshold_failure;
    out.trace = std::move(t);
    return out;
  }
  t.lifted = true;
  t.ell = lift->ell;
  t.r = lift->r;
  t.s = lift->s;
  t.b_prime = lift->b_prime;
  t.d_prime = lift->d_prime;

  const auto bad = trace_violations(t);
  if (!bad.empty()) throw InvariantViolation("trace invariant violated: " + bad.front(), describe(t));
  Witness w{t.a_prime, t.b_prime, t.c_prime, t.d_prime};
  if (!verify_progression_witness(inst, w))
    throw InvariantViolation("progression witness failed verification", describe(t));

  out.status = ProgressionStatus::witness;
  out.witness = std::move(w);
  out.trace = std::move(t);
  return out;
}

std::vector<Int> exceptional_set(const Int& a, const Int& b, const Int& c, const Int& d,
                                 const Int& m, const Int& cap) {
  require_positive_primitive(a, b, c, d, m, "exceptional_set");
  const Int base = a * b + c * d;
  if (cap < base) throw std::invalid_argument("exceptional_set: cap must be >= ab + cd");
  const ProgressionSieve sieve(a, b, c, d, m, cap);
  std::vector<Int> out;
  for (Int n = base; n <= cap; n += m)
    if (!sieve.contains(n)) out.push_back(n);
  return out;
}

}  // namespace sumprod
