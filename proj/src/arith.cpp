#include "sumprod/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sumprod {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Pollard rho with Brent's cycle detection. Returns a nontrivial factor of
// the composite n; deterministic in the choice of polynomial constants.
Int brent_factor(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, q = 1, g = 1, ys;
    std::uint64_t r = 1;
    constexpr std::uint64_t batch = 128;
    auto step = [&](Int& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
          step(y);
          Int diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += batch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        g = gcd(Int(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Int& n, std::map<Int, unsigned>& acc) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++acc[n];
    return;
  }
  Int f = brent_factor(n);
  split_into(f, acc);
  Int rest = n / f;
  split_into(rest, acc);
}

}  // namespace

Int parse_int(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size())
    throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return Int(text, 10);
}

std::string to_string(const Int& v) { return v.get_str(10); }

Int mod_floor(const Int& x, const Int& m) {
  if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int div_floor(const Int& x, const Int& m) {
  if (m == 0) throw std::invalid_argument("div_floor: division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return q;
}

bool divides(const Int& d, const Int& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Int gcd(const Int& x, const Int& y) {
  Int g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

Int gcd(std::span<const Int> values) {
  Int g = 0;
  for (const Int& v : values) g = gcd(g, v);
  return g;
}

Int lcm(const Int& x, const Int& y) {
  Int l;
  mpz_lcm(l.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return l;
}

ExtGcd ext_gcd(const Int& x, const Int& y) {
  if (x == 0 && y == 0) return {0, 0, 0};
  ExtGcd out;
  mpz_gcdext(out.g.get_mpz_t(), out.s.get_mpz_t(), out.t.get_mpz_t(),
             x.get_mpz_t(), y.get_mpz_t());
  return out;
}

std::optional<Int> mod_inverse(const Int& x, const Int& m) {
  if (m <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
  if (m == 1) return Int(0);
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
    return std::nullopt;
  return mod_floor(inv, m);
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

unsigned ord_p(const Int& p, const Int& n) {
  if (n == 0) throw std::invalid_argument("ord_p: valuation of 0 is infinite");
  if (!is_prime(p)) throw std::invalid_argument("ord_p: " + to_string(p) + " is not prime");
  unsigned k = 0;
  Int rest = abs(n);
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    ++k;
  }
  return k;
}

std::vector<Int> Factorization::primes() const {
  std::vector<Int> out;
  out.reserve(pairs.size());
  for (const auto& pp : pairs) out.push_back(pp.p);
  return out;
}

Int Factorization::value() const {
  Int v = 1;
  for (const auto& pp : pairs) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), pp.p.get_mpz_t(), pp.e);
    v *= pe;
  }
  return v;
}

std::vector<Int> Factorization::divisors() const {
  std::vector<Int> divs{1};
  for (const auto& pp : pairs) {
    const std::size_t base = divs.size();
    Int power = 1;
    for (unsigned e = 1; e <= pp.e; ++e) {
      power *= pp.p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Factorization factorize(const Int& n) {
  if (n == 0) throw std::invalid_argument("factorize: 0 has no factorization");
  Int rest = abs(n);
  std::map<Int, unsigned> acc;
  for (std::uint32_t p : small_primes()) {
    if (rest == 1) break;
    if (Int(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
      acc[Int(p)] = e;
    }
  }
  split_into(rest, acc);
  Factorization f;
  for (auto& [p, e] : acc) f.pairs.push_back({p, e});
  return f;
}

std::optional<CrtSolution> crt_solve(const CrtSystem& system) {
  Int x = 0;
  Int modulus = 1;
  for (const auto& cg : system.congruences) {
    if (cg.modulus <= 0) throw std::invalid_argument("crt_solve: moduli must be positive");
    const Int g = gcd(modulus, cg.modulus);
    const Int diff = cg.residue - x;
    if (!divides(g, diff)) return std::nullopt;
    const Int m1 = modulus / g;
    const Int m2 = cg.modulus / g;
    // x + modulus*t == residue (mod cg.modulus)  <=>  m1*t == diff/g (mod m2)
    const Int inv = *mod_inverse(m1, m2);
    const Int t = mod_floor(Int(diff / g) * inv, m2);
    x += modulus * t;
    modulus *= m2;
    x = mod_floor(x, modulus);
  }
  return CrtSolution{x, modulus};
}

std::optional<Triple> solve_linear3(const Int& b, const Int& d, const Int& mp,
                                    const Int& k) {
  const ExtGcd bd = ext_gcd(b, d);
  const ExtGcd all = ext_gcd(bd.g, mp);
  if (all.g == 0) {
    if (k == 0) return Triple{0, 0, 0};
    return std::nullopt;
  }
  if (!divides(all.g, k)) return std::nullopt;
  const Int q = k / all.g;
  const Int scale = all.s * q;
  return Triple{bd.s * scale, bd.t * scale, all.t * q};
}

Int sylvester_bound(const Int& a, const Int& c, const Int& mp) {
  return (a / mp - 1) * (c / mp - 1);
}

std::optional<NonnegPair> sylvester_nonneg(const Int& a, const Int& c,
                                           const Int& mp, const Int& ell) {
  if (a <= 0 || c <= 0 || mp <= 0)
    throw std::invalid_argument("sylvester_nonneg: a, c, mp must be positive");
  if (gcd(a, c) != mp)
    throw std::invalid_argument("sylvester_nonneg: gcd(a, c) != mp");
  if (ell < 0) return std::nullopt;
  const Int ar = a / mp;
  const Int cr = c / mp;
  // All solutions of ar*r + cr*s == ell share r mod cr; the least
  // nonnegative r maximizes s.
  const Int r = mod_floor(mod_floor(ell, cr) * *mod_inverse(ar, cr), cr);
  const Int s = (ell - ar * r) / cr;
  if (s < 0) return std::nullopt;
  return NonnegPair{r, s};
}

}  // namespace sumprod
