#include <doctest.h>

#include "sumprod/classes.hpp"

using namespace sumprod;

namespace {

// Double loop over x, y in [-|n|, |n|]; any factorization of n != 0 lies
// in that range.
bool brute_product(long a1, long a2, long m, long n) {
  if (n == 0) return a1 % m == 0 || a2 % m == 0;
  const long lim = n < 0 ? -n : n;
  auto in = [m](long v, long a) { return ((v - a) % m + m) % m == 0; };
  for (long x = -lim; x <= lim; ++x) {
    if (x == 0 || n % x != 0 || !in(x, a1)) continue;
    if (in(n / x, a2)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("class_contains") {
  CHECK(class_contains(CongruenceClass(15, 19), 53));
  CHECK(class_contains(CongruenceClass(3, 19), 3));
  CHECK_FALSE(class_contains(CongruenceClass(2, 7), 20));
  CHECK(class_contains(CongruenceClass(-1, 7), 6));
  CHECK(CongruenceClass(-1, 7).rep() == 6);
  CHECK_THROWS_AS(CongruenceClass(1, 0), std::invalid_argument);
}

TEST_CASE("product_class_contains examples") {
  const CongruenceClass r3(3, 19), r5(5, 19);
  CHECK_FALSE(product_class_contains(r3, r5, 53));

  auto f = product_class_contains(r3, r5, 15);
  REQUIRE(f);
  CHECK(f->x == 3);
  CHECK(f->y == 5);

  f = product_class_contains(r3, r5, 72);
  REQUIRE(f);
  CHECK(f->x == 3);
  CHECK(f->y == 24);

  CHECK_THROWS_AS(product_class_contains(r3, CongruenceClass(5, 18), 15), std::invalid_argument);
}

TEST_CASE("product_class_contains at zero") {
  CHECK(product_class_contains(CongruenceClass(0, 4), CongruenceClass(3, 4), 0));
  CHECK(product_class_contains(CongruenceClass(1, 4), CongruenceClass(8, 4), 0));
  CHECK_FALSE(product_class_contains(CongruenceClass(1, 4), CongruenceClass(3, 4), 0));
}

TEST_CASE("product_class_contains agrees with double loop and implies R_m(ab)") {
  for (long m = 1; m <= 12; ++m)
    for (long a1 = 0; a1 < m; ++a1)
      for (long a2 = 0; a2 < m; ++a2) {
        const CongruenceClass c1(a1, m), c2(a2, m), target(a1 * a2, m);
        for (long n = -200; n <= 200; ++n) {
          const auto f = product_class_contains(c1, c2, n);
          REQUIRE(f.has_value() == brute_product(a1, a2, m, n));
          if (f) {
            REQUIRE(f->x * f->y == n);
            REQUIRE(c1.contains(f->x));
            REQUIRE(c2.contains(f->y));
            REQUIRE(target.contains(n));
          }
        }
      }
}

TEST_CASE("strictness is realized below 100") {
  const CongruenceClass r3(3, 19), r5(5, 19), r15(15, 19);
  bool found = false;
  for (long n = -100; n <= 100; ++n)
    if (r15.contains(n) && !product_class_contains(r3, r5, n)) found = true;
  CHECK(found);
}

TEST_CASE("progression_product_contains") {
  const Progression p3(3, 19), p5(5, 19);
  auto f = progression_product_contains(p3, p5, 15);
  REQUIRE(f);
  CHECK(f->x == 3);
  CHECK(f->y == 5);
  CHECK_FALSE(progression_product_contains(p3, p5, 34));
  CHECK_FALSE(progression_product_contains(p3, p5, 53));
  CHECK_FALSE(progression_product_contains(p3, p5, 3 * 5 - 19));
  CHECK_THROWS_AS(progression_product_contains(p3, Progression(5, 7), 15), std::invalid_argument);
  CHECK_THROWS_AS(Progression(0, 3), std::invalid_argument);

  // Enumerate products directly for a few progressions.
  for (long m = 1; m <= 6; ++m)
    for (long a = 1; a <= 4; ++a)
      for (long b = 1; b <= 4; ++b) {
        std::vector<bool> hit(301, false);
        for (long x = a; x <= 300; x += m)
          for (long y = b; x * y <= 300; y += m) hit[x * y] = true;
        for (long n = 1; n <= 300; ++n)
          REQUIRE(progression_product_contains(Progression(a, m), Progression(b, m), n)
                      .has_value() == hit[n]);
      }
}

TEST_CASE("dilate") {
  CHECK(dilate(CongruenceClass(1, 3), 2) == CongruenceClass(2, 6));
  CHECK(dilate(CongruenceClass(0, 5), 3) == CongruenceClass(0, 15));
  CHECK(dilate(CongruenceClass(3, 4), 1) == CongruenceClass(3, 4));
  CHECK_THROWS_AS(dilate(CongruenceClass(3, 4), 0), std::invalid_argument);

  for (long m = 1; m <= 9; ++m)
    for (long a = 0; a < m; ++a)
      for (long delta = 1; delta <= 5; ++delta) {
        const CongruenceClass cls(a, m), big = dilate(cls, delta);
        for (long n = -60; n <= 60; ++n) REQUIRE(cls.contains(n) == big.contains(delta * n));
      }
}
