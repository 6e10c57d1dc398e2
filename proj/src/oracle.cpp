#include "sumprod/oracle.hpp"

#include "sumprod/classes.hpp"
#include "sumprod/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumprod {

namespace {

using i128 = __int128;

constexpr std::int64_t kMaxAxis = 2049;
const Int kValueLimit = Int(1) << 61;

std::int64_t to_i64(const Int& v, const char* what) {
  if (!v.fits_slong_p()) throw std::length_error(std::string(what) + " does not fit in 64 bits");
  return v.get_si();
}

// Machine-integer twin of oracle_product_of_classes with the same search
// order, so both return the same factors.
bool small_product(const std::int64_t* reps, std::size_t k, std::int64_t m, std::int64_t n,
                   std::int64_t* out) {
  if (k == 1) {
    if ((n - reps[0]) % m != 0) return false;
    out[0] = n;
    return true;
  }
  if (n == 0) {
    for (std::size_t t = 0; t < k; ++t) {
      if (reps[t] % m != 0) continue;
      std::copy(reps, reps + k, out);
      out[t] = 0;
      return true;
    }
    return false;
  }
  const std::int64_t an = n < 0 ? -n : n;
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d <= an / d; ++d) {
    if (an % d != 0) continue;
    low.push_back(d);
    if (d != an / d) high.push_back(an / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  for (const std::int64_t div : low)
    for (const std::int64_t x : {div, -div}) {
      if ((x - reps[0]) % m != 0) continue;
      if (!small_product(reps + 1, k - 1, m, n / x, out + 1)) continue;
      out[0] = x;
      return true;
    }
  return false;
}

// Index tuples shell by shell: every tuple with max |index| = L comes
// before any with L + 1. Each coordinate runs 0, -1, 1, -2, 2, ...
class ShellOrder {
 public:
  ShellOrder(std::size_t slots, std::int64_t radius) : pos_(slots, 0), radius_(radius) {}

  std::int64_t index(std::size_t s) const {
    const auto p = static_cast<std::int64_t>(pos_[s]);
    return p % 2 ? -(p + 1) / 2 : p / 2;
  }

  bool advance() {
    for (;;) {
      if (!step()) {
        if (pos_.empty() || ++shell_ > radius_) return false;
        std::fill(pos_.begin(), pos_.end(), 0);
      }
      for (const std::size_t p : pos_)
        if (p + 1 >= 2 * static_cast<std::size_t>(shell_)) return true;
    }
  }

 private:
  bool step() {
    const auto top = 2 * static_cast<std::size_t>(shell_);
    for (std::size_t s = pos_.size(); s > 0; --s) {
      if (pos_[s - 1] < top) {
        ++pos_[s - 1];
        return true;
      }
      pos_[s - 1] = 0;
    }
    return false;
  }

  std::vector<std::size_t> pos_;
  std::int64_t radius_;
  std::int64_t shell_ = 0;
};

std::optional<IteratedWitness> small_member_iterated(const IteratedSpec& spec, std::int64_t N,
                                                     std::int64_t radius, std::size_t solved) {
  const std::int64_t m = spec.modulus().get_si();
  std::vector<std::vector<std::int64_t>> terms;
  for (const auto& t : spec.terms()) {
    terms.emplace_back();
    for (const Int& v : t) terms.back().push_back(v.get_si());
  }
  std::vector<std::pair<std::size_t, std::size_t>> free_slots;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (i != solved)
      for (std::size_t j = 0; j < terms[i].size(); ++j) free_slots.emplace_back(i, j);

  ShellOrder order(free_slots.size(), radius);
  auto values = terms;
  std::vector<std::int64_t> factors(terms[solved].size());
  for (;;) {
    for (std::size_t s = 0; s < free_slots.size(); ++s) {
      const auto [i, j] = free_slots[s];
      values[i][j] = terms[i][j] + order.index(s) * m;
    }
    std::int64_t partial = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i == solved) continue;
      std::int64_t p = 1;
      for (const std::int64_t v : values[i]) p *= v;
      partial += p;
    }
    if (small_product(terms[solved].data(), factors.size(), m, N - partial, factors.data())) {
      values[solved] = factors;
      IteratedWitness w;
      for (const auto& t : values) {
        w.values.emplace_back();
        for (const std::int64_t v : t) w.values.back().push_back(Int(static_cast<long>(v)));
      }
      return w;
    }
    if (!order.advance()) return std::nullopt;
  }
}

}  // namespace

SearchBox default_box(const Instance& inst) {
  if (inst.m < 1) throw std::invalid_argument("default_box: m must be >= 1");
  const Int r = abs(inst.N) / inst.m + inst.m;
  const std::int64_t radius = to_i64(r, "search box radius");
  return {-radius, radius};
}

Witness witness_from_indices(const Instance& inst, const Quadruple& q) {
  return {inst.a + Int(static_cast<long>(q.i)) * inst.m, inst.b + Int(static_cast<long>(q.j)) * inst.m,
          inst.c + Int(static_cast<long>(q.k)) * inst.m, inst.d + Int(static_cast<long>(q.l)) * inst.m};
}

ClassOracle::ClassOracle(const Int& a, const Int& b, const Int& c, const Int& d, const Int& m,
                         SearchBox box)
    : box_(box) {
  if (m < 1) throw std::invalid_argument("class oracle: m must be >= 1");
  if (box.lo > box.hi) throw std::invalid_argument("class oracle: empty search box");
  if (box.hi - box.lo + 1 > kMaxAxis) throw std::length_error("class oracle: search box too wide");
  const Int reach = Int(static_cast<long>(std::max(-box.lo, box.hi))) * m;
  if ((abs(a) + reach) * (abs(b) + reach) >= kValueLimit ||
      (abs(c) + reach) * (abs(d) + reach) >= kValueLimit)
    throw std::length_error("class oracle: products exceed 61 bits");

  a_ = to_i64(a, "a");
  b_ = to_i64(b, "b");
  m_ = to_i64(m, "m");
  const std::int64_t c64 = to_i64(c, "c");
  const std::int64_t d64 = to_i64(d, "d");
  base_mod_m_ = to_i64(mod_floor(Int(a * b + c * d), m), "residue");

  const auto width = static_cast<std::size_t>(box.hi - box.lo + 1);
  table_.reserve(width * width);
  for (std::int64_t k = box.lo; k <= box.hi; ++k) {
    const std::int64_t left = c64 + k * m_;
    for (std::int64_t l = box.lo; l <= box.hi; ++l)
      table_.push_back({left * (d64 + l * m_), k, l});
  }
  // Stable sort keeps lexicographic (k, l) order within equal values.
  std::stable_sort(table_.begin(), table_.end(),
                   [](const Entry& x, const Entry& y) { return x.value < y.value; });
  auto last = std::unique(table_.begin(), table_.end(),
                          [](const Entry& x, const Entry& y) { return x.value == y.value; });
  table_.erase(last, table_.end());
}

std::optional<Quadruple> ClassOracle::find(const Int& N) const {
  // Every element of the set is ab + cd mod m.
  if (mod_floor(N, Int(static_cast<long>(m_))) != base_mod_m_) return std::nullopt;
  if (abs(N) >= 2 * kValueLimit) return std::nullopt;
  const std::int64_t target = N.get_si();
  for (std::int64_t i = box_.lo; i <= box_.hi; ++i) {
    const std::int64_t x = a_ + i * m_;
    for (std::int64_t j = box_.lo; j <= box_.hi; ++j) {
      const std::int64_t rest = target - x * (b_ + j * m_);
      auto it = std::lower_bound(table_.begin(), table_.end(), rest,
                                 [](const Entry& e, std::int64_t v) { return e.value < v; });
      if (it != table_.end() && it->value == rest) return Quadruple{i, j, it->k, it->l};
    }
  }
  return std::nullopt;
}

std::optional<Quadruple> oracle_member_class(const Instance& inst, const SearchBox& box) {
  return ClassOracle(inst.a, inst.b, inst.c, inst.d, inst.m, box).find(inst.N);
}

std::optional<Quadruple> oracle_member_progression(const Instance& inst) {
  if (inst.a < 1 || inst.b < 1 || inst.c < 1 || inst.d < 1 || inst.m < 1)
    throw std::invalid_argument("progression oracle: a, b, c, d, m must be positive");
  if (inst.N <= 0) return std::nullopt;
  if (inst.N >= kValueLimit) throw std::length_error("progression oracle: N exceeds 61 bits");
  const std::int64_t N = inst.N.get_si();
  const std::int64_t a = to_i64(inst.a, "a"), b = to_i64(inst.b, "b");
  const std::int64_t c = to_i64(inst.c, "c"), d = to_i64(inst.d, "d");
  const std::int64_t m = to_i64(inst.m, "m");
  const i128 cd = i128{c} * d;

  for (std::int64_t x = a, i = 0; i128{x} * b + cd <= N; x += m, ++i) {
    for (std::int64_t y = b, j = 0; i128{x} * y + cd <= N; y += m, ++j) {
      const std::int64_t rest = N - x * y;
      std::optional<std::int64_t> best_k;
      auto consider = [&](std::int64_t z) {
        if (z < c || (z - c) % m != 0) return;
        const std::int64_t w = rest / z;
        if (w < d || (w - d) % m != 0) return;
        const std::int64_t k = (z - c) / m;
        if (!best_k || k < *best_k) best_k = k;
      };
      for (std::int64_t t = 1; i128{t} * t <= rest; ++t) {
        if (rest % t != 0) continue;
        consider(t);
        consider(rest / t);
      }
      if (best_k) {
        const std::int64_t z = c + *best_k * m;
        return Quadruple{i, j, *best_k, (rest / z - d) / m};
      }
    }
  }
  return std::nullopt;
}

ProgressionSieve::ProgressionSieve(const Int& a, const Int& b, const Int& c, const Int& d,
                                   const Int& m, const Int& cap) {
  if (a < 1 || b < 1 || c < 1 || d < 1 || m < 1)
    throw std::invalid_argument("progression sieve: a, b, c, d, m must be positive");
  if (cap < 0) throw std::invalid_argument("progression sieve: cap must be nonnegative");
  if (cap > Int(static_cast<unsigned long>(kMaxSieveCap)))
    throw std::length_error("progression sieve: cap exceeds " + std::to_string(kMaxSieveCap));
  cap_ = cap.get_ui();
  const std::size_t words = cap_ / 64 + 1;

  auto product_bits = [&](const Int& first, const Int& second, std::size_t& count) {
    std::vector<std::uint64_t> bits(words, 0);
    count = 0;
    if (first > cap || second > cap) return bits;
    const std::uint64_t f = first.get_ui(), s = second.get_ui(), step = m.get_ui();
    for (std::uint64_t x = f; x * s <= cap_; x += step) {
      for (std::uint64_t y = s; x * y <= cap_; y += step) {
        const std::uint64_t v = x * y;
        const std::uint64_t mask = std::uint64_t{1} << (v % 64);
        if (!(bits[v / 64] & mask)) ++count;
        bits[v / 64] |= mask;
      }
    }
    return bits;
  };

  std::size_t count_ab = 0, count_cd = 0;
  auto ab = product_bits(a, b, count_ab);
  auto cd = product_bits(c, d, count_cd);
  const auto& sparse = count_ab <= count_cd ? ab : cd;
  const auto& dense = count_ab <= count_cd ? cd : ab;

  bits_.assign(words, 0);
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t word = sparse[w];
    while (word) {
      const unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
      word &= word - 1;
      kernels::or_shifted(bits_, dense, w * 64 + bit);
    }
  }
}

bool ProgressionSieve::contains(const Int& n) const {
  if (n < 0) return false;
  if (n > Int(static_cast<unsigned long>(cap_)))
    throw std::out_of_range("progression sieve: query above cap");
  const std::uint64_t v = n.get_ui();
  return (bits_[v / 64] >> (v % 64)) & 1;
}

std::optional<std::vector<Int>> oracle_product_of_classes(const std::vector<Int>& reps,
                                                          const Int& m, const Int& n) {
  if (reps.empty()) throw std::invalid_argument("product of classes: no factors");
  if (reps.size() == 1) {
    if (divides(m, Int(n - reps[0]))) return std::vector<Int>{n};
    return std::nullopt;
  }
  if (n == 0) {
    for (std::size_t t = 0; t < reps.size(); ++t) {
      if (!divides(m, reps[t])) continue;
      std::vector<Int> out = reps;
      out[t] = 0;
      return out;
    }
    return std::nullopt;
  }
  const std::vector<Int> tail(reps.begin() + 1, reps.end());
  for (const Int& div : factorize(n).divisors()) {
    for (const Int& x : {Int(div), Int(-div)}) {
      if (!divides(m, Int(x - reps[0]))) continue;
      auto rest = oracle_product_of_classes(tail, m, n / x);
      if (!rest) continue;
      rest->insert(rest->begin(), x);
      return rest;
    }
  }
  return std::nullopt;
}

std::optional<IteratedWitness> oracle_member_iterated(const IteratedSpec& spec, const Int& N,
                                                      std::int64_t radius) {
  const auto& terms = spec.terms();
  const Int& m = spec.modulus();
  if (!divides(m, Int(N - spec.base_value()))) return std::nullopt;
  if (radius < 0) throw std::invalid_argument("iterated oracle: negative radius");

  std::size_t solved = 0;
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i].size() < terms[solved].size()) solved = i;

  // Every intermediate is bounded by h * B^kmax + |N|; use machine words
  // when that fits.
  Int B = Int(static_cast<long>(radius)) * m;
  std::size_t kmax = 0;
  for (const auto& t : terms) {
    kmax = std::max(kmax, t.size());
    for (const Int& v : t) B = std::max(B, Int(abs(v) + Int(static_cast<long>(radius)) * m));
  }
  Int bound;
  mpz_pow_ui(bound.get_mpz_t(), B.get_mpz_t(), kmax);
  bound = bound * static_cast<unsigned long>(terms.size()) + abs(N);
  if (bound < kValueLimit && N.fits_slong_p())
    return small_member_iterated(spec, N.get_si(), radius, solved);

  std::vector<std::pair<std::size_t, std::size_t>> free_slots;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == solved) continue;
    for (std::size_t j = 0; j < terms[i].size(); ++j) free_slots.emplace_back(i, j);
  }

  ShellOrder order(free_slots.size(), radius);

  std::vector<std::vector<Int>> values = terms;
  for (;;) {
    for (std::size_t s = 0; s < free_slots.size(); ++s) {
      const auto [i, j] = free_slots[s];
      values[i][j] = terms[i][j] + Int(static_cast<long>(order.index(s))) * m;
    }
    Int partial = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i == solved) continue;
      Int p = 1;
      for (const Int& v : values[i]) p *= v;
      partial += p;
    }
    if (auto factors = oracle_product_of_classes(terms[solved], m, Int(N - partial))) {
      values[solved] = std::move(*factors);
      return IteratedWitness{std::move(values)};
    }
    if (!order.advance()) return std::nullopt;
  }
}

GridReport grid_verify_theorem(const GridOptions& options) {
  if (options.m_max < 1 || options.m_max > kGridMaxM)
    throw std::invalid_argument("grid: m_max must lie in [1, " + std::to_string(kGridMaxM) + "]");
  if (options.window < 0) throw std::invalid_argument("grid: window must be nonnegative");

  GridReport report;
  report.m_max = options.m_max;
  report.window = options.window;
  auto flag = [&](const Instance& inst, const char* kind, std::string detail) {
    report.discrepancies.push_back({inst, kind, std::move(detail)});
  };

  for (long mm = 1; mm <= options.m_max; ++mm) {
    const Int m = mm;
    const Int span = Int(options.window) * m;
    for (long a = 1; a <= mm; ++a)
      for (long b = 1; b <= mm; ++b)
        for (long c = 1; c <= mm; ++c)
          for (long d = 1; d <= mm; ++d) {
            ++report.tuples;
            const Int base = a * b + c * d;
            // Widest default box over the window, so one table serves every N.
            const Instance widest{a, b, c, d, m, abs(base) + span};
            const ClassOracle oracle(a, b, c, d, m, default_box(widest));
            for (Int N = base - span; N <= base + span; ++N) {
              ++report.targets;
              const Instance inst{a, b, c, d, m, N};
              std::optional<DilatedSolution> sol;
              try {
                sol = solve_dilated(inst);
              } catch (const InvariantViolation& e) {
                flag(inst, "invariant-violation", std::string(e.what()) + "\n" + e.dump());
                continue;
              }
              const auto found = oracle.find(N);
              if (found && !verify_witness(inst, witness_from_indices(inst, *found)))
                flag(inst, "oracle-unsound", "indices do not re-evaluate to N");
              if (sol) {
                ++report.members;
                Witness w = sol->witness;
                if (options.tamper) options.tamper(inst, w);
                if (!verify_witness(inst, w))
                  flag(inst, "witness-rejected",
                       "a'=" + to_string(w.a_prime) + " b'=" + to_string(w.b_prime) +
                           " c'=" + to_string(w.c_prime) + " d'=" + to_string(w.d_prime));
                if (!found) flag(inst, "oracle-miss", "no quadruple in the search box");
              } else {
                ++report.non_members;
                if (found)
                  flag(inst, "pipeline-miss",
                       "oracle indices (" + std::to_string(found->i) + "," +
                           std::to_string(found->j) + "," + std::to_string(found->k) + "," +
                           std::to_string(found->l) + ")");
              }
            }
          }
  }
  return report;
}

StrictnessReport strictness_demo(const Int& bound) {
  StrictnessReport r;
  r.bound = bound;
  const Int m = 19;
  r.class_member = class_contains(CongruenceClass(15, m), 53);
  r.product_member =
      product_class_contains(CongruenceClass(3, m), CongruenceClass(5, m), 53).has_value();
  const Progression p3(3, m), p5(5, m);
  for (Int n = 15; n <= bound; n += m) {
    if (progression_product_contains(p3, p5, n)) continue;
    r.exceptions.push_back(n);
    if (is_prime(n)) r.prime_exceptions.push_back(n);
  }
  return r;
}

}  // namespace sumprod
