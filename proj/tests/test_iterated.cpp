#include <doctest.h>

#include "sumprod/iterated.hpp"
#include "sumprod/oracle.hpp"

using namespace sumprod;

namespace {

using Terms = std::vector<std::vector<Int>>;

// All coefficient vectors in [lo, hi]^n.
std::vector<std::vector<Int>> tuples(std::size_t n, long lo, long hi) {
  std::vector<std::vector<Int>> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Int>> next;
    for (const auto& t : out)
      for (long v = lo; v <= hi; ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("absorb_k1 examples") {
  auto w = absorb_k1(2, {3, 4}, 7, 21);
  REQUIRE(w);
  CHECK(w->values == Terms{{9}, {3, 4}});

  w = absorb_k1(2, {3, 4}, 7, 14);
  REQUIRE(w);
  CHECK(w->values == Terms{{2}, {3, 4}});

  CHECK_FALSE(absorb_k1(2, {3, 4}, 7, 15));
}

TEST_CASE("absorb_k1 satisfies both witness invariants") {
  for (long m = 1; m <= 10; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      // Factor values are sampled on a stride for n = 3 to keep this quick.
      const long step = n == 3 ? 3 : 1;
      for (long a0 = -m; a0 <= m; ++a0)
        for (const auto& f : tuples(n, -m, m)) {
          bool skip = false;
          for (const Int& v : f) skip = skip || mod_floor(v, Int(step)) != 0;
          if (skip) continue;
          const IteratedSpec spec(m, {{a0}, f});
          const Int base = spec.base_value();
          for (Int N = base - 30 * m; N <= base + 30 * m; ++N) {
            const auto w = absorb_k1(a0, f, m, N);
            REQUIRE(w.has_value() == divides(Int(m), Int(N - base)));
            if (w) {
              REQUIRE(verify_iterated(spec, *w, N));
              REQUIRE(w->values[1] == f);
            }
          }
        }
    }
}

TEST_CASE("solve_iterated examples") {
  const IteratedSpec s12(7, {{5}, {3, 4}});
  auto r = solve_iterated(s12, 17);
  REQUIRE(r.status == IteratedStatus::witness);
  CHECK(r.witness->values == Terms{{5}, {3, 4}});

  const IteratedSpec s223(2, {{1, 1}, {1, 1}, {1, 1, 1}});
  CHECK(s223.base_value() == 3);
  for (long k = -5; k <= 5; ++k) {
    const Int N = 3 + 2 * k;
    r = solve_iterated(s223, N);
    REQUIRE(r.status == IteratedStatus::witness);
    CHECK(verify_iterated(s223, *r.witness, N));
    CHECK(oracle_member_iterated(s223, N, 6).has_value());
  }
  CHECK(solve_iterated(s223, 4).status == IteratedStatus::not_member);

  const IteratedSpec s33(5, {{1, 2, 3}, {1, 1, 1}});
  CHECK(solve_iterated(s33, 11).status == IteratedStatus::unsupported_shape);
  CHECK(to_string(IteratedStatus::unsupported_shape) == std::string("unsupported-shape"));

  // Pairs whose coefficients share a factor with m are not supported.
  const IteratedSpec shared(4, {{2, 2}, {2, 2}});
  CHECK(solve_iterated(shared, 8).status == IteratedStatus::unsupported_shape);
}

TEST_CASE("IteratedSpec validation") {
  CHECK_THROWS_AS(IteratedSpec(0, {{1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(IteratedSpec(3, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(IteratedSpec(3, {{1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(IteratedSpec(3, {{1, 2}, {1}}), std::invalid_argument);
  const IteratedSpec ok(3, {{1}, {2, 2}, {1, 1, 1}});
  CHECK(ok.shape() == std::vector<std::size_t>{1, 2, 3});
  CHECK(ok.base_value() == 6);
}

TEST_CASE("verify_iterated rejects wrong shape, residue or value") {
  const IteratedSpec s(5, {{1}, {2, 3}});
  CHECK(verify_iterated(s, {{{1}, {2, 3}}}, 7));
  CHECK(verify_iterated(s, {{{6}, {2, 3}}}, 12));
  CHECK_FALSE(verify_iterated(s, {{{6}, {2, 3}}}, 7));
  CHECK_FALSE(verify_iterated(s, {{{2}, {2, 3}}}, 8));
  CHECK_FALSE(verify_iterated(s, {{{1}, {2, 3, 1}}}, 7));
  CHECK_FALSE(verify_iterated(s, {{{1}}}, 1));
}

TEST_CASE("solve_iterated agrees with the oracle on small shapes") {
  const std::vector<std::vector<std::size_t>> shapes = {{1, 1}, {1, 2}, {2, 2}, {1, 1, 2}, {2, 2, 2}};
  for (const auto& shape : shapes)
    for (long m = 1; m <= 4; ++m) {
      std::size_t total = 0;
      for (auto k : shape) total += k;
      for (const auto& flat : tuples(total, 1, m)) {
        Terms terms;
        std::size_t pos = 0;
        for (auto k : shape) {
          terms.emplace_back(flat.begin() + pos, flat.begin() + pos + k);
          pos += k;
        }
        const IteratedSpec spec(m, terms);
        const Int base = spec.base_value();
        for (Int N = base - 8 * m; N <= base + 8 * m; ++N) {
          const auto r = solve_iterated(spec, N);
          if (r.status == IteratedStatus::unsupported_shape) {
            REQUIRE(shape[0] == 2);
            continue;
          }
          const auto o = oracle_member_iterated(spec, N, 10);
          if (r.status == IteratedStatus::witness) {
            REQUIRE(verify_iterated(spec, *r.witness, N));
            REQUIRE(o.has_value());
          } else {
            REQUIRE_FALSE(o.has_value());
          }
        }
      }
    }
}
