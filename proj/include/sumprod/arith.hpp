#pragma once

// Exact integer primitives used by the witness pipeline: extended gcd,
// p-adic valuation, factorization, CRT, and the small Diophantine solvers.
// Everything is arbitrary precision (GMP).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sumprod {

using Int = mpz_class;

Int parse_int(const std::string& text);
std::string to_string(const Int& v);

/// Remainder of x modulo m in [0, m). Requires m > 0.
Int mod_floor(const Int& x, const Int& m);
/// Floor division. Requires m != 0.
Int div_floor(const Int& x, const Int& m);
bool divides(const Int& d, const Int& n);

Int gcd(const Int& x, const Int& y);
Int gcd(std::span<const Int> values);
Int lcm(const Int& x, const Int& y);

/// Bezout data: s*x + t*y == g, g = gcd(x, y) >= 0.
struct ExtGcd {
  Int g;
  Int s;
  Int t;
};

ExtGcd ext_gcd(const Int& x, const Int& y);

/// Inverse of x modulo m, if gcd(x, m) == 1. Result lies in [0, m).
std::optional<Int> mod_inverse(const Int& x, const Int& m);

bool is_prime(const Int& n);

/// Largest k with p^k | n. Throws std::invalid_argument for n == 0 or a
/// non-prime p.
unsigned ord_p(const Int& p, const Int& n);

struct PrimePower {
  Int p;
  unsigned e = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::vector<PrimePower> pairs;  // ascending p

  std::vector<Int> primes() const;
  Int value() const;
  /// All positive divisors, ascending.
  std::vector<Int> divisors() const;
};

/// Factorization of |n|. Trial division by primes below 10^6, then
/// Pollard-Brent on any composite cofactor. Throws for n == 0.
Factorization factorize(const Int& n);

struct Congruence {
  Int residue;
  Int modulus;  // > 0
};

struct CrtSystem {
  std::vector<Congruence> congruences;
};

struct CrtSolution {
  Int x0;       // canonical, 0 <= x0 < modulus
  Int modulus;  // lcm of the input moduli
};

/// General-moduli CRT. Incompatible systems return std::nullopt. An empty
/// system has the solution 0 mod 1. Throws for a non-positive modulus.
std::optional<CrtSolution> crt_solve(const CrtSystem& system);

struct Triple {
  Int x;
  Int y;
  Int z;
};

/// One solution of b*x + d*y + mp*z == k, if gcd(b, d, mp) | k.
std::optional<Triple> solve_linear3(const Int& b, const Int& d, const Int& mp,
                                    const Int& k);

struct NonnegPair {
  Int r;
  Int s;
};

/// Nonnegative (r, s) with a*r + c*s == ell*mp where mp == gcd(a, c).
/// Always succeeds once ell >= (a/mp - 1)(c/mp - 1); below that, returns
/// a solution exactly when one exists. The r returned is the least
/// nonnegative one. Throws std::invalid_argument if a, c, mp are not
/// positive or gcd(a, c) != mp.
std::optional<NonnegPair> sylvester_nonneg(const Int& a, const Int& c,
                                           const Int& mp, const Int& ell);

/// (a/mp - 1)(c/mp - 1): every ell at or above this is representable.
Int sylvester_bound(const Int& a, const Int& c, const Int& mp);

}  // namespace sumprod
