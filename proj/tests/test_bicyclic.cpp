#include "doctest.h"

#include <random>

#include "isg/bicyclic.hpp"

#include "oracles.hpp"

using namespace isg;

TEST_CASE("pq = 1 but qp != 1") {
  CHECK(bicyclic_mul(kBicyclicP, kBicyclicQ) == kBicyclicOne);
  CHECK(bicyclic_mul(kBicyclicQ, kBicyclicP) == BicyclicElement{1, 1});
}

TEST_CASE("products match the string-rewriting oracle") {
  // frozen example: q^2 p^3 * q^5 p = q^4 p
  CHECK(oracles::bicyclic_rewrite(2, 3, 5, 1) == std::pair<int64_t, int64_t>{4, 1});
  CHECK(bicyclic_mul({2, 3}, {5, 1}) == BicyclicElement{4, 1});

  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int64_t> dist(0, 40);
  for (int trial = 0; trial < 10000; ++trial) {
    const BicyclicElement x{dist(rng), dist(rng)}, y{dist(rng), dist(rng)};
    const auto expect = oracles::bicyclic_rewrite(x.a, x.b, y.a, y.b);
    const auto got = bicyclic_mul(x, y);
    REQUIRE(got.a == expect.first);
    REQUIRE(got.b == expect.second);
  }
}

TEST_CASE("associativity, exhaustive for exponents <= 20") {
  const int kMax = 20;
  long long violations = 0;
  for (int a = 0; a <= kMax; ++a) {
    for (int b = 0; b <= kMax; ++b) {
      for (int c = 0; c <= kMax; ++c) {
        for (int d = 0; d <= kMax; ++d) {
          const BicyclicElement x{a, b}, y{c, d};
          const auto xy = bicyclic_mul(x, y);
          for (int e = 0; e <= kMax; ++e) {
            for (int f = 0; f <= kMax; ++f) {
              const BicyclicElement z{e, f};
              if (bicyclic_mul(xy, z) != bicyclic_mul(x, bicyclic_mul(y, z))) {
                ++violations;
              }
            }
          }
        }
      }
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("inverse and idempotents") {
  const BicyclicElement x{2, 5};
  const auto xi = bicyclic_inverse(x);
  CHECK(xi == BicyclicElement{5, 2});
  CHECK(bicyclic_mul(bicyclic_mul(x, xi), x) == x);
  CHECK(bicyclic_mul(bicyclic_mul(xi, x), xi) == xi);
  // x x^-1 = q^a p^a and x^-1 x = q^b p^b
  CHECK(bicyclic_mul(x, xi) == BicyclicElement{2, 2});
  CHECK(bicyclic_mul(xi, x) == BicyclicElement{5, 5});

  CHECK(bicyclic_is_idempotent({3, 3}));
  CHECK_FALSE(bicyclic_is_idempotent({3, 4}));
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= 10; ++b) {
      const BicyclicElement e{a, b};
      CHECK(bicyclic_is_idempotent(e) == (bicyclic_mul(e, e) == e));
    }
  }
}

TEST_CASE("parse / format round-trip") {
  CHECK(bicyclic_parse("q^2 p^3") == BicyclicElement{2, 3});
  CHECK(bicyclic_format({2, 3}) == "q^2 p^3");
  CHECK(bicyclic_parse("1") == kBicyclicOne);
  CHECK(bicyclic_parse("p") == kBicyclicP);
  CHECK(bicyclic_parse("q") == kBicyclicQ);
  CHECK(bicyclic_parse("q p") == BicyclicElement{1, 1});
  CHECK(bicyclic_format({0, 1}) == "p");
  CHECK(bicyclic_format({1, 0}) == "q");
  CHECK(bicyclic_format({0, 0}) == "1");
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      const BicyclicElement x{a, b};
      CHECK(bicyclic_parse(bicyclic_format(x)) == x);
    }
  }
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(bicyclic_parse(""), parse_error);
  CHECK_THROWS_AS(bicyclic_parse("pq"), parse_error);  // not in normal form
  CHECK_THROWS_AS(bicyclic_parse("q^"), parse_error);
  CHECK_THROWS_AS(bicyclic_parse("x"), parse_error);
  try {
    bicyclic_parse("q^2 p^3 junk");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.position == 8);
  }
}
