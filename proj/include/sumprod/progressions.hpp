#pragma once

// Sums of products of infinite arithmetic progressions P_m(a)P_m(b) +
// P_m(c)P_m(d): the explicit threshold N0 beyond which every element of
// P_m(ab + cd) is represented, nonnegative witnesses, and the exceptional
// set below the threshold.

#include "sumprod/witness.hpp"

#include <optional>
#include <vector>

namespace sumprod {

struct ThresholdReport {
  Int N0;
  Int a_hi;  // a + (d+1)m^2, upper bound on a'
  Int c_hi;  // c + (a+b+1)m^2 + (d+1)m^4, upper bound on c'
  Int a, b, c, d, m;
};

/// N0 = a_hi*b + c_hi*d + m*a_hi*c_hi. Throws for any input < 1.
ThresholdReport threshold_N0(const Int& a, const Int& b, const Int& c,
                             const Int& d, const Int& m);

enum class ProgressionStatus { witness, not_member, below_threshold_failure };

const char* to_string(ProgressionStatus s);

struct ProgressionOutcome {
  ProgressionStatus status = ProgressionStatus::not_member;
  std::optional<Witness> witness;  // set iff status == witness
  std::optional<WitnessTrace> trace;  // absent for the identity witness at N = ab + cd
  ThresholdReport threshold;
};

/// Requires a, b, c, d, m >= 1 and gcd(a, b, c, d, m) == 1 (throws
/// std::invalid_argument otherwise). A returned witness has a' >= a,
/// b' >= b, c' >= c, d' >= d. For N >= N0 the witness is guaranteed;
/// below N0 the construction is attempted and may report
/// below_threshold_failure.
ProgressionOutcome solve_progression(const Instance& inst);

/// True iff w is a witness for inst with all four entries in their
/// progressions.
bool verify_progression_witness(const Instance& inst, const Witness& w);

/// Members of P_m(ab + cd) up to cap (inclusive) that are not in
/// P_m(a)P_m(b) + P_m(c)P_m(d), ascending. Decided by exhaustive sieve.
/// Requires gcd == 1, positive inputs, cap >= ab + cd and cap within the
/// sieve limit (oracle::kMaxSieveCap).
std::vector<Int> exceptional_set(const Int& a, const Int& b, const Int& c,
                                 const Int& d, const Int& m, const Int& cap);

}  // namespace sumprod
