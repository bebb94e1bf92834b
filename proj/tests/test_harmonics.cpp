#include <doctest.h>

#include <random>

#include "harmonic_codes/errors.hpp"
#include "harmonic_codes/harmonics.hpp"
#include "oracles.hpp"

using namespace harmonic_codes;

TEST_CASE("harmonic_dimension") {
  CHECK(harmonic_dimension(7, 2) == 35);
  CHECK(harmonic_dimension(23, 2) == 299);
  CHECK(harmonic_dimension(5, 0) == 1);
  for (int d = 1; d <= 30; ++d) CHECK(harmonic_dimension(d, 1) == static_cast<std::uint64_t>(d + 1));
  CHECK(harmonic_dimension(1, 5) == 2);
  CHECK_THROWS_AS(harmonic_dimension(0, 2), DomainError);
  CHECK_THROWS_AS(harmonic_dimension(3, -1), DomainError);
}

TEST_CASE("harmonic_dimension agrees with monomial counting") {
  for (int d = 1; d <= 30; ++d)
    for (int k = 0; k <= 12; ++k)
      REQUIRE(BigInt(static_cast<unsigned long>(harmonic_dimension(d, k))) ==
              oracle::harmonic_dimension_by_counting(d, k));
}

TEST_CASE("gegenbauer degree 2 on S^7") {
  const GegenbauerPoly g = gegenbauer(7, 2);
  REQUIRE(g.coeffs().size() == 3);
  CHECK(g.coeffs()[0] == rat(-1, 7));
  CHECK(g.coeffs()[1] == 0);
  CHECK(g.coeffs()[2] == rat(8, 7));
  CHECK(evaluate(g, rat(1, 2)) == rat(1, 7));
  CHECK(evaluate(g, rat(-1, 2)) == rat(1, 7));
  CHECK(evaluate(g, 0) == rat(-1, 7));
}

TEST_CASE("gegenbauer small cases") {
  for (int d = 1; d <= 30; ++d) {
    const GegenbauerPoly g1 = gegenbauer(d, 1);
    CHECK(g1.coeffs() == std::vector<Rational>{0, 1});
    CHECK(gegenbauer(d, 0).coeffs() == std::vector<Rational>{1});
  }
  CHECK(evaluate(gegenbauer(7, 3), rat(1, 2)) == rat(-1, 28));
  // Chebyshev on the circle.
  CHECK(gegenbauer(1, 2).coeffs() == std::vector<Rational>{-1, 0, 2});
  CHECK(gegenbauer(1, 3).coeffs() == std::vector<Rational>{0, -3, 0, 4});
  CHECK_THROWS_AS(gegenbauer(0, 2), DomainError);
  CHECK_THROWS_AS(gegenbauer(3, -1), DomainError);
}

TEST_CASE("gegenbauer recurrence agrees with the explicit sum") {
  for (int d = 2; d <= 30; ++d)
    for (int k = 0; k <= 12; ++k)
      REQUIRE(gegenbauer(d, k).coeffs() == oracle::gegenbauer_explicit(rat(d - 1, 2), k));
}

TEST_CASE("degree-2 closed form") {
  for (int d = 2; d <= 30; ++d) {
    const std::vector<Rational> expected{rat(-1, d), 0, rat(d + 1, d)};
    REQUIRE(gegenbauer(d, 2).coeffs() == expected);
  }
}

TEST_CASE("normalization, parity and boundedness up to (30, 12)") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> den(1, 60);
  for (int d = 1; d <= 30; ++d) {
    for (int k = 0; k <= 12; ++k) {
      const GegenbauerPoly g = gegenbauer(d, k);
      REQUIRE(evaluate(g, 1) == 1);
      for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
        if ((static_cast<int>(j) - k) % 2 != 0) REQUIRE(g.coeffs()[j] == 0);
      }
      for (int s = 0; s < 8; ++s) {
        const long q = den(rng);
        const Rational t = rat(std::uniform_int_distribution<long>(-q, q)(rng), q);
        const Rational v = evaluate(g, t);
        const Rational w = evaluate(g, -t);
        REQUIRE(w == (k % 2 ? -v : v));
        REQUIRE(abs(v) <= 1);
      }
    }
  }
}
