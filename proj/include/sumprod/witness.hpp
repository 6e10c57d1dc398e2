#pragma once

// Constructive membership for sums of products of congruence classes.
//
// Given (a, b, c, d, m) and a target N in R_m(ab + cd), the pipeline builds
// explicit a', b', c', d' with a' = a, b' = b, c' = c, d' = d (mod m) and
// a'b' + c'd' = N. Every intermediate is kept in a WitnessTrace and every
// bound the construction promises is re-checked on each run; a failed check
// is a bug and raises InvariantViolation.

#include "sumprod/arith.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumprod {

struct Instance {
  Int a, b, c, d;
  Int m;  // >= 1
  Int N;
};

struct Witness {
  Int a_prime, b_prime, c_prime, d_prime;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct WitnessTrace {
  // Instance as seen by the construction (positive representatives).
  Int a, b, c, d, m, N;

  Int m_prime;          // gcd(a, c, m)
  Int k;                // (N - (ab + cd)) / m
  Int x, y, z;          // b*x + d*y + m'*z == k
  Int x_prime, y_prime; // x' in [0, m'), y' in [bm, bm + m')
  Int q_x, q_y;         // x = q_x*m' + x', y = q_y*m' + y'
  Int a0, c0;
  std::vector<Int> P1, P2;  // primes of m', split by valuation of gcd(a0, c0)
  Int u;
  Int a1, c1;
  std::vector<Int> P3;  // primes dividing a1 but not m
  Int v;
  Int a_prime, c_prime;

  bool lifted = false;  // fields below are meaningful only when set
  Int ell, r, s;
  Int b_prime, d_prime;
};

/// Human-readable "name=value" dump of every trace field, one per line.
std::string describe(const WitnessTrace& trace);

/// Every claim the construction makes about its intermediates, re-checked.
/// Returns the list of violated claims (empty on a correct run).
std::vector<std::string> trace_violations(const WitnessTrace& trace);

class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(const std::string& what, std::string dump)
      : std::logic_error(what), dump_(std::move(dump)) {}
  const std::string& dump() const { return dump_; }

 private:
  std::string dump_;
};

/// Raised by solve_class when gcd(a, b, c, d, m) != 1; use solve_dilated.
class NotPrimitive : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LiftResult {
  Int b_prime, d_prime;
  Int ell, r, s;
};

/// Given a', c' with m' = gcd(a', c') and N = a'b + c'd (mod m*m'), returns
/// b' = b, d' = d (mod m) with N = a'b' + c'd'. With require_nonneg_growth
/// the result also has b' >= b and d' >= d; this is guaranteed once
/// N >= a'b + c'd + m(a' - m')(c' - m'), and below that the result exists
/// exactly when such a pair exists. Throws std::invalid_argument when the
/// congruence hypothesis fails.
std::optional<LiftResult> lemma_lift(const Int& a_prime, const Int& c_prime,
                                     const Int& b, const Int& d, const Int& m,
                                     const Int& N, bool require_nonneg_growth);

/// Runs the construction up to (a', c') for positive a, b, c, d with
/// gcd(a, b, c, d, m) == 1 and N = ab + cd (mod m). The lift fields of the
/// returned trace are left unset.
WitnessTrace prepare_lift(const Instance& positive);

struct ClassSolution {
  Witness witness;
  WitnessTrace trace;
};

/// Requires gcd(a, b, c, d, m) == 1 (throws NotPrimitive otherwise).
/// Returns std::nullopt exactly when N != ab + cd (mod m).
std::optional<ClassSolution> solve_class(const Instance& inst);

struct DilatedSolution {
  Witness witness;
  Int delta;
  WitnessTrace trace;  // trace of the reduced (primitive) instance
};

/// Any gcd: divides through by delta = gcd(a, b, c, d, m), solves the
/// primitive instance, and scales back. std::nullopt exactly when
/// N != ab + cd (mod delta*m).
std::optional<DilatedSolution> solve_dilated(const Instance& inst);

struct SubgroupWitness {
  Int w, x, y, z;
  Int t;
};

/// a*w + b*x + c*y + d*z + m*(w*x + y*z)
Int subgroup_form(const Int& a, const Int& b, const Int& c, const Int& d,
                  const Int& m, const Int& w, const Int& x, const Int& y,
                  const Int& z);

/// (w, x, y, z) with subgroup_form(...) == t, or std::nullopt when
/// gcd(a, b, c, d, m) does not divide t.
std::optional<SubgroupWitness> subgroup_witness(const Int& a, const Int& b,
                                                const Int& c, const Int& d,
                                                const Int& m, const Int& t);

/// Pure certificate check: four congruences mod m and a'b' + c'd' == N.
bool verify_witness(const Instance& inst, const Witness& w);

}  // namespace sumprod
