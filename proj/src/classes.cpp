#include "sumprod/classes.hpp"

#include <stdexcept>

namespace sumprod {

CongruenceClass::CongruenceClass(const Int& representative, const Int& modulus)
    : modulus_(modulus) {
  if (modulus < 1) throw std::invalid_argument("congruence class modulus must be >= 1");
  rep_ = mod_floor(representative, modulus);
}

bool CongruenceClass::contains(const Int& n) const { return divides(modulus_, Int(n - rep_)); }

Progression::Progression(const Int& first, const Int& difference)
    : first_(first), difference_(difference) {
  if (first < 1) throw std::invalid_argument("progression initial term must be >= 1");
  if (difference < 1) throw std::invalid_argument("progression difference must be >= 1");
}

bool Progression::contains(const Int& n) const {
  return n >= first_ && divides(difference_, Int(n - first_));
}

bool class_contains(const CongruenceClass& cls, const Int& n) { return cls.contains(n); }

std::optional<FactorPair> product_class_contains(const CongruenceClass& c1,
                                                 const CongruenceClass& c2,
                                                 const Int& n) {
  if (c1.modulus() != c2.modulus())
    throw std::invalid_argument("product_class_contains: moduli differ");
  if (n == 0) {
    if (c1.contains(0)) return FactorPair{0, c2.rep()};
    if (c2.contains(0)) return FactorPair{c1.rep(), 0};
    return std::nullopt;
  }
  for (const Int& div : factorize(n).divisors()) {
    for (const Int& x : {Int(div), Int(-div)}) {
      if (!c1.contains(x)) continue;
      Int y = n / x;
      if (c2.contains(y)) return FactorPair{x, y};
    }
  }
  return std::nullopt;
}

std::optional<FactorPair> progression_product_contains(const Progression& p1,
                                                       const Progression& p2,
                                                       const Int& n) {
  if (p1.difference() != p2.difference())
    throw std::invalid_argument("progression_product_contains: differences differ");
  if (n < p1.first() * p2.first()) return std::nullopt;
  for (const Int& x : factorize(n).divisors()) {
    if (!p1.contains(x)) continue;
    Int y = n / x;
    if (p2.contains(y)) return FactorPair{x, y};
  }
  return std::nullopt;
}

CongruenceClass dilate(const CongruenceClass& cls, const Int& delta) {
  if (delta < 1) throw std::invalid_argument("dilate: delta must be >= 1");
  return CongruenceClass(delta * cls.rep(), delta * cls.modulus());
}

}  // namespace sumprod
