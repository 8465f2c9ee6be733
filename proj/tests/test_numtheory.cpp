#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "qx/numtheory.hpp"

using namespace qx;
using nt::u64;

TEST_SUITE("numtheory") {
  TEST_CASE("is_prime on fixed values") {
    CHECK(nt::is_prime(13));
    CHECK_FALSE(nt::is_prime(1));
    CHECK_FALSE(nt::is_prime(0));
    CHECK(nt::is_prime(2));
    CHECK(nt::is_prime(1009));
    CHECK(oracle::prime_by_trial_division(1009));
    // Strong pseudoprimes to several small bases.
    CHECK_FALSE(nt::is_prime(3215031751ULL));
    CHECK_FALSE(nt::is_prime(3825123056546413051ULL));
    CHECK(nt::is_prime(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(nt::is_prime(18446744073709551615ULL));
  }

  TEST_CASE("is_prime agrees with trial division below 100000") {
    for (u64 m = 0; m < 100000; ++m) REQUIRE(nt::is_prime(m) == oracle::prime_by_trial_division(m));
  }

  TEST_CASE("factorize examples") {
    CHECK(nt::factorize(45).factors == std::vector<std::pair<u64, unsigned>>{{3, 2}, {5, 1}});
    CHECK(nt::factorize(1).factors.empty());
    CHECK(nt::factorize(1001).factors == std::vector<std::pair<u64, unsigned>>{{7, 1}, {11, 1}, {13, 1}});
    CHECK_THROWS_AS(nt::factorize(0), std::invalid_argument);
  }

  TEST_CASE("factorize past the trial-division bound uses rho") {
    const u64 a = 1000003, b = 1000033;  // both prime, above 10^6
    const auto f = nt::factorize(a * b);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<u64, unsigned>{a, 1});
    CHECK(f.factors[1] == std::pair<u64, unsigned>{b, 1});
    const auto g = nt::factorize(a * a * 6);
    CHECK(g.factors == std::vector<std::pair<u64, unsigned>>{{2, 1}, {3, 1}, {a, 2}});
  }

  TEST_CASE("factorize round-trips for every m up to 10^6") {
    for (u64 m = 1; m <= 1'000'000; ++m) {
      const auto f = nt::factorize(m);
      u64 product = 1, last = 0;
      for (const auto& [p, e] : f.factors) {
        REQUIRE(p > last);
        REQUIRE(e >= 1);
        last = p;
        for (unsigned i = 0; i < e; ++i) product *= p;
      }
      REQUIRE(product == m);
    }
    for (u64 m : {360ULL, 997ULL, 65536ULL, 999999ULL}) {
      CHECK(nt::factorize(m).factors == oracle::factor_by_trial_division(m));
    }
  }

  TEST_CASE("divisors") {
    CHECK(nt::factorize(45).divisors() == std::vector<u64>{1, 3, 5, 9, 15, 45});
    CHECK(nt::factorize(1).divisors() == std::vector<u64>{1});
    CHECK(nt::factorize(66).divisors() == std::vector<u64>{1, 2, 3, 6, 11, 22, 33, 66});
  }

  TEST_CASE("legendre examples") {
    CHECK(nt::legendre(2, 13) == -1);
    CHECK(nt::legendre(3, 13) == 1);
    CHECK(nt::legendre(26, 13) == 0);
    CHECK(nt::legendre(-1, 13) == 1);
    for (u64 p : {3ULL, 5ULL, 7ULL, 101ULL, 9973ULL}) CHECK(nt::legendre(1, p) == 1);
    CHECK_THROWS_AS(nt::legendre(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(nt::legendre(3, 15), std::invalid_argument);
  }

  TEST_CASE("legendre matches exhaustive squaring for odd primes up to 2000") {
    for (u64 p = 3; p <= 2000; ++p) {
      if (!oracle::prime_by_trial_division(p)) continue;
      for (u64 a = 1; a < p; ++a) REQUIRE(nt::legendre(static_cast<nt::i64>(a), p) == oracle::legendre_by_squaring(a, p));
    }
  }

  TEST_CASE("quartic_class examples") {
    CHECK(nt::sqrt_minus_one(29) == 12);
    CHECK(oracle::smallest_sqrt_minus_one(29) == 12);
    CHECK(nt::quartic_class(2, 29).index == 1);  // 2^7 = 12 (mod 29)
    CHECK(oracle::slow_pow(2, 7, 29) == 12);
    CHECK(nt::quartic_class(1, 29).index == 0);
    CHECK(nt::quartic_class(-1, 29).index == 2);
    CHECK_THROWS_AS(nt::quartic_class(29, 29), std::invalid_argument);
    CHECK_THROWS_AS(nt::quartic_class(2, 31), std::invalid_argument);
    CHECK_THROWS_AS(nt::quartic_class(2, 25), std::invalid_argument);
  }

  TEST_CASE("quartic_class matches enumeration") {
    for (u64 q = 5; q < 400; q += 4) {
      if (!oracle::prime_by_trial_division(q)) continue;
      const u64 r = oracle::smallest_sqrt_minus_one(q);
      REQUIRE(nt::sqrt_minus_one(q) == r);
      for (u64 a = 1; a < q; ++a) {
        const unsigned cls = nt::quartic_class(static_cast<nt::i64>(a), q).index;
        REQUIRE((cls == 0) == oracle::is_fourth_power(a, q));
        const u64 t = oracle::slow_pow(a, (q - 1) / 4, q);
        const unsigned expected = t == 1 ? 0 : t == r ? 1 : t == q - 1 ? 2 : 3;
        REQUIRE(cls == expected);
        // Quartic classes refine quadratic residuosity.
        REQUIRE((cls % 2 == 0) == (oracle::legendre_by_squaring(a, q) == 1));
      }
    }
  }

  TEST_CASE("primorial") {
    CHECK(nt::primorial(1) == 1);
    CHECK(nt::primorial(3) == 6);
    CHECK(nt::primorial(4) == 6);
    CHECK(nt::primorial(5) == 30);
    CHECK(nt::primorial(52) == 614889782588491410ULL);
    CHECK_THROWS_AS(nt::primorial(53), std::overflow_error);
  }

  TEST_CASE("mod_pow, mod_inv, gcd") {
    CHECK(nt::mod_pow(6, 7, 29) == 28);
    CHECK(oracle::slow_pow(6, 7, 29) == 28);
    CHECK(nt::mod_pow(5, 0, 7) == 1);
    CHECK(nt::mod_pow(5, 3, 1) == 0);
    CHECK(nt::mod_inv(5, 12) == u64{5});
    CHECK_FALSE(nt::mod_inv(3, 12).has_value());
    CHECK(nt::mod_inv(-1, 13) == u64{12});
    CHECK(nt::gcd(12, 18) == 6);
    CHECK(nt::gcd(0, 7) == 7);
    CHECK(nt::reduce(-1, 13) == 12);
    CHECK(nt::reduce(-26, 13) == 0);
    for (u64 m = 2; m < 60; ++m) {
      for (u64 a = 0; a < m; ++a) {
        const auto inv = nt::mod_inv(static_cast<nt::i64>(a), m);
        REQUIRE(inv.has_value() == (nt::gcd(a, m) == 1));
        if (inv) REQUIRE(a * *inv % m == 1 % m);
      }
    }
  }
}
