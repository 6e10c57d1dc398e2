#pragma once

// Iterated sums of products: sum over i of prod over j of R_m(a_ij).
// Supported shapes are those with a singleton first term (absorbed
// directly) and those whose first two terms are pairs with coprime
// coefficients (reduced to the two-pair construction). Everything else is
// reported as unsupported rather than answered.

#include "sumprod/arith.hpp"

#include <optional>
#include <vector>

namespace sumprod {

class IteratedSpec {
 public:
  /// Throws std::invalid_argument unless m >= 1, there are at least two
  /// terms, every term is nonempty and term lengths are nondecreasing.
  IteratedSpec(Int m, std::vector<std::vector<Int>> terms);

  const Int& modulus() const { return m_; }
  const std::vector<std::vector<Int>>& terms() const { return terms_; }
  std::vector<std::size_t> shape() const;

  /// sum_i prod_j a_ij, the representative of the target class.
  Int base_value() const;

 private:
  Int m_;
  std::vector<std::vector<Int>> terms_;
};

struct IteratedWitness {
  std::vector<std::vector<Int>> values;

  friend bool operator==(const IteratedWitness&, const IteratedWitness&) = default;
};

Int evaluate(const std::vector<std::vector<Int>>& terms);

/// Same shape, entrywise congruent mod m, and evaluates to N.
bool verify_iterated(const IteratedSpec& spec, const IteratedWitness& w, const Int& N);

/// R_m(a0) + R_m(a1)...R_m(ak): moves all of N - (a0 + a1...ak) into the
/// first entry. The result has shape [[a0'], factors].
std::optional<IteratedWitness> absorb_k1(const Int& a0, const std::vector<Int>& factors,
                                         const Int& m, const Int& N);

enum class IteratedStatus { witness, not_member, unsupported_shape };

const char* to_string(IteratedStatus s);

struct IteratedOutcome {
  IteratedStatus status = IteratedStatus::not_member;
  std::optional<IteratedWitness> witness;
};

IteratedOutcome solve_iterated(const IteratedSpec& spec, const Int& N);

}  // namespace sumprod
