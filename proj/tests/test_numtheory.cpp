#include "shor_spectra/error.hpp"
#include "shor_spectra/numtheory.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace shor_spectra;

TEST_CASE("gcd") {
  CHECK(gcd(1, 29) == 1);
  CHECK(gcd(2, 29) == 1);
  CHECK(gcd(6, 9) == 3);
  CHECK(gcd(0, 7) == 7);
  CHECK_THROWS_AS(gcd(0, 0), Error);
}

TEST_CASE("multiplicative order") {
  CHECK(mult_order(2, 29) == 28);
  CHECK(mult_order(2, 31) == 5);
  CHECK(mult_order(2, 7) == 3);

  try {
    mult_order(3, 9);
    FAIL("expected NotCoprime");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::not_coprime);
  }
}

TEST_CASE("mod_exp examples") {
  CHECK(mod_exp(2, 0, 29) == 1);
  CHECK(mod_exp(2, 28, 29) == 1);
  CHECK(mod_exp(2, 10, 29) == 9);
}

TEST_CASE("mod_exp is exact near 64-bit moduli") {
  // 2^61 - 1 is prime, so Fermat gives a^(p-1) = 1.
  const std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  CHECK(mod_exp(3, p - 1, p) == 1);
  CHECK(mod_exp(p - 1, 2, p) == 1);
  const std::uint64_t big = (std::uint64_t{1} << 63) + 29;
  const std::uint64_t a = big - 2;
  CHECK(mod_exp(a, 2, big) == 4);
  CHECK(mod_exp(a, 1000001, big) == big - mod_exp(2, 1000001, big));
}

TEST_CASE("mod_exp agrees with repeated multiplication") {
  for (std::uint64_t n = 3; n <= 1000; n += 2) {
    for (std::uint64_t x : {2ULL, 7ULL}) {
      std::uint64_t naive = 1;
      for (std::uint64_t j = 0; j <= 10000; ++j) {
        REQUIRE(mod_exp(x, j, n) == naive);
        naive = naive * x % n;
      }
    }
  }
}

TEST_CASE("orbit decomposition examples") {
  SUBCASE("N=29") {
    const auto d = orbit_decomposition(2, 29);
    CHECK(d.order == 28);
    REQUIRE(d.orbits.size() == 2);
    CHECK(d.orbits[0].seed == 0);
    CHECK(d.orbits[0].length() == 1);
    CHECK(d.orbits[1].seed == 1);
    CHECK(d.orbits[1].length() == 28);
    CHECK(d.orbits[1].elements[10] == 9);
  }
  SUBCASE("N=31") {
    const auto d = orbit_decomposition(2, 31);
    REQUIRE(d.orbits.size() == 7);
    CHECK(d.orbits[0].length() == 1);
    for (std::size_t i = 1; i < 7; ++i) {
      CHECK(d.orbits[i].length() == 5);
    }
  }
  SUBCASE("N=3") {
    const auto d = orbit_decomposition(2, 3);
    REQUIRE(d.orbits.size() == 2);
    CHECK(d.orbits[1].elements == std::vector<std::uint64_t>{1, 2});
  }
  CHECK_THROWS_AS(orbit_decomposition(3, 21), Error);
}

TEST_CASE("orbit decomposition invariants") {
  for (std::uint64_t n = 3; n < 1000; n += 2) {
    for (std::uint64_t x : {2ULL, 3ULL, 10ULL}) {
      if (std::gcd(x, n) != 1) {
        continue;
      }
      const auto d = orbit_decomposition(x, n);
      std::set<std::uint64_t> seen;
      std::uint64_t total = 0;
      std::uint64_t previous_seed = 0;
      for (std::size_t i = 0; i < d.orbits.size(); ++i) {
        const Orbit &o = d.orbits[i];
        REQUIRE(d.order % o.length() == 0);
        REQUIRE(o.seed == *std::min_element(o.elements.begin(), o.elements.end()));
        REQUIRE(o.elements.front() == o.seed);
        if (i > 0) {
          REQUIRE(o.seed > previous_seed);
        }
        previous_seed = o.seed;
        for (std::size_t k = 0; k < o.length(); ++k) {
          REQUIRE(x * o.elements[k] % n == o.elements[(k + 1) % o.length()]);
          REQUIRE(seen.insert(o.elements[k]).second);
        }
        total += o.length();
      }
      REQUIRE(total == n);
      REQUIRE(d.orbits[0].elements == std::vector<std::uint64_t>{0});
      REQUIRE(d.orbits[1].seed == 1);
      REQUIRE(d.orbits[1].length() == d.order);
    }
  }
}

TEST_CASE("turn normalization and ordering") {
  CHECK(Turn(-10, 28) == Turn(9, 14));
  CHECK(Turn(28, 28) == Turn(0, 1));
  CHECK(Turn(1, 5) < Turn(1, 4));
  CHECK(Turn(3, 6) == Turn(1, 2));
  CHECK_THROWS_AS(Turn(1, 0), Error);
}
