#pragma once

// Congruence classes R_m(a) = {a + i*m : i in Z}, infinite progressions
// P_m(a) = {a + i*m : i >= 0}, dilation, and exact product-set membership.

#include "sumprod/arith.hpp"

#include <optional>

namespace sumprod {

class CongruenceClass {
 public:
  /// Throws std::invalid_argument unless modulus >= 1.
  CongruenceClass(const Int& representative, const Int& modulus);

  const Int& rep() const { return rep_; }      // in [0, modulus)
  const Int& modulus() const { return modulus_; }
  bool contains(const Int& n) const;

  friend bool operator==(const CongruenceClass&, const CongruenceClass&) = default;

 private:
  Int rep_;
  Int modulus_;
};

class Progression {
 public:
  /// Throws std::invalid_argument unless first >= 1 and difference >= 1.
  Progression(const Int& first, const Int& difference);

  const Int& first() const { return first_; }
  const Int& difference() const { return difference_; }
  bool contains(const Int& n) const;

  friend bool operator==(const Progression&, const Progression&) = default;

 private:
  Int first_;
  Int difference_;
};

struct FactorPair {
  Int x;
  Int y;
};

bool class_contains(const CongruenceClass& cls, const Int& n);

/// Decides n in c1*c2 by enumerating the signed divisors of n in order of
/// increasing |x| (positive first). For n == 0 the answer is whether either
/// class contains 0. Throws if the moduli differ.
std::optional<FactorPair> product_class_contains(const CongruenceClass& c1,
                                                 const CongruenceClass& c2,
                                                 const Int& n);

/// Decides n in p1*p2 over positive divisors. Throws if the differences
/// differ.
std::optional<FactorPair> progression_product_contains(const Progression& p1,
                                                       const Progression& p2,
                                                       const Int& n);

/// delta * R_m(a) == R_{delta*m}(delta*a). Requires delta >= 1.
CongruenceClass dilate(const CongruenceClass& cls, const Int& delta);

}  // namespace sumprod
