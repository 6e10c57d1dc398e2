#pragma once

// Brute-force ground truth. Nothing here calls the constructive pipeline:
// membership is decided by direct enumeration and every positive answer
// carries explicit indices that re-evaluate to the target.

#include "sumprod/iterated.hpp"
#include "sumprod/witness.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sumprod {

/// Inclusive index range applied to each of i, j, k, l.
struct SearchBox {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// Indices with (a + im)(b + jm) + (c + km)(d + lm) == N.
struct Quadruple {
  std::int64_t i = 0, j = 0, k = 0, l = 0;

  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

/// [-(|N|/m + m), |N|/m + m]
SearchBox default_box(const Instance& inst);

Witness witness_from_indices(const Instance& inst, const Quadruple& q);

/// Class-membership oracle over a fixed box. The (k, l) half is tabulated
/// once, so one oracle answers many targets for the same (a, b, c, d, m).
/// Limited to boxes whose values fit in 62 bits and at most 4097 indices
/// per axis (std::length_error otherwise).
class ClassOracle {
 public:
  ClassOracle(const Int& a, const Int& b, const Int& c, const Int& d, const Int& m,
              SearchBox box);

  /// Lexicographically first (i, j, k, l) in the box, if any.
  std::optional<Quadruple> find(const Int& N) const;

 private:
  struct Entry {
    std::int64_t value;
    std::int64_t k, l;
  };
  std::int64_t a_, b_, m_, base_mod_m_;
  SearchBox box_;
  std::vector<Entry> table_;  // sorted by value, first (k, l) per value
};

std::optional<Quadruple> oracle_member_class(const Instance& inst, const SearchBox& box);

/// Complete decision for P_m(a)P_m(b) + P_m(c)P_m(d); needs a, b, c, d, m
/// >= 1. Returns the lexicographically first nonnegative (i, j, k, l).
std::optional<Quadruple> oracle_member_progression(const Instance& inst);

constexpr std::uint64_t kMaxSieveCap = std::uint64_t{1} << 28;

/// Membership table of P_m(a)P_m(b) + P_m(c)P_m(d) on [0, cap], built as a
/// bitset sumset of the two product sets.
class ProgressionSieve {
 public:
  ProgressionSieve(const Int& a, const Int& b, const Int& c, const Int& d, const Int& m,
                   const Int& cap);

  bool contains(const Int& n) const;
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
  std::vector<std::uint64_t> bits_;
};

/// Decides membership in a product of classes mod m by signed divisor
/// enumeration; returns one factor per class.
std::optional<std::vector<Int>> oracle_product_of_classes(const std::vector<Int>& reps,
                                                          const Int& m, const Int& n);

/// Bounded search for iterated sums of products: every term but one is
/// enumerated within |index| <= radius, nearest shells first, and the
/// remaining term is decided exactly. Refutation uses only the congruence
/// every element satisfies.
std::optional<IteratedWitness> oracle_member_iterated(const IteratedSpec& spec, const Int& N,
                                                      std::int64_t radius);

constexpr int kGridMaxM = 12;

struct GridOptions {
  int m_max = 4;
  int window = 20;
  /// Test hook: applied to each pipeline witness before it is checked.
  std::function<void(const Instance&, Witness&)> tamper;
};

struct Discrepancy {
  Instance instance;
  std::string kind;
  std::string detail;
};

struct GridReport {
  int m_max = 0;
  int window = 0;
  std::uint64_t tuples = 0;
  std::uint64_t targets = 0;
  std::uint64_t members = 0;
  std::uint64_t non_members = 0;
  std::vector<Discrepancy> discrepancies;
};

/// Every (a, b, c, d, m) with m <= m_max and entries in [1, m], every N with
/// |N - (ab + cd)| <= window*m: the pipeline (with gcd reduction) must agree
/// with the class oracle and produce verifying witnesses.
GridReport grid_verify_theorem(const GridOptions& options);

struct StrictnessReport {
  bool class_member = false;    // 53 in R_19(15)
  bool product_member = false;  // 53 in R_19(3) R_19(5)
  Int bound;
  std::vector<Int> exceptions;        // P_19(15) \ P_19(3)P_19(5) up to bound
  std::vector<Int> prime_exceptions;  // the primes among them
};

StrictnessReport strictness_demo(const Int& bound = 1000);

}  // namespace sumprod
