#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "tau/arith.hpp"

using namespace tau;

TEST_CASE("factorize small values") {
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(6).factors == std::vector<PrimePower>{{2, 1}, {3, 1}});
  CHECK(factorize(2048).factors == std::vector<PrimePower>{{2, 11}});
  CHECK(factorize(49).factors == std::vector<PrimePower>{{7, 2}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize handles 64-bit inputs") {
  // 2^64 - 1 = 3 * 5 * 17 * 257 * 641 * 65537 * 6700417
  const auto f = factorize(UINT64_MAX);
  const std::vector<PrimePower> expected{{3, 1}, {5, 1}, {17, 1}, {257, 1}, {641, 1}, {65537, 1}, {6700417, 1}};
  CHECK(f.factors == expected);
  CHECK(f.recompose() == mpz_class("18446744073709551615"));
  const std::uint64_t big_prime = 4294967291ULL;  // largest prime below 2^32
  CHECK(factorize(big_prime).factors == std::vector<PrimePower>{{big_prime, 1}});
}

TEST_CASE("factorize recomposes for every n up to 10^5") {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const auto f = factorize(n);
    REQUIRE(f.recompose() == mpz_class(static_cast<unsigned long>(n)));
    REQUIRE(f.factors.empty() == (n == 1));
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      REQUIRE(is_prime(f.factors[i].prime));
      REQUIRE(f.factors[i].exponent >= 1);
      if (i > 0) REQUIRE(f.factors[i].prime > f.factors[i - 1].prime);
    }
  }
}

TEST_CASE("is_prime agrees with the sieve") {
  const auto primes = primes_up_to(20000);
  std::size_t idx = 0;
  for (std::uint64_t n = 0; n <= 20000; ++n) {
    const bool expected = idx < primes.size() && primes[idx] == n;
    if (expected) ++idx;
    REQUIRE(is_prime(n) == expected);
  }
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(18446744073709551557ULL));
}

TEST_CASE("sieve_sigma examples") {
  const auto s = sieve_sigma(10, {0, 1, 3});
  const std::vector<long> sigma1{1, 3, 4, 7, 6, 12};
  for (std::uint64_t n = 1; n <= 6; ++n) CHECK(s.at(1, n) == sigma1[n - 1]);
  CHECK(s.at(0, 4) == 3);
  CHECK(s.at(3, 2) == 9);
  CHECK_FALSE(s.has(5));
  CHECK_THROWS_AS(s.table(5), std::out_of_range);
  CHECK_THROWS_AS(sieve_sigma(0, {1}), std::invalid_argument);
  CHECK_THROWS_AS(sieve_sigma(5, {2}), std::invalid_argument);
}

TEST_CASE("sieve_sigma matches divisor enumeration up to 1000") {
  const auto s = sieve_sigma(1000, {0, 1, 3, 5});
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    for (unsigned a : {0u, 1u, 3u, 5u}) REQUIRE(s.at(a, n) == oracle::divisor_power_sum(n, a));
  }
  for (std::uint64_t p : primes_up_to(1000)) {
    mpz_class p5;
    mpz_ui_pow_ui(p5.get_mpz_t(), p, 5);
    REQUIRE(s.at(5, p) == p5 + 1);
  }
}

TEST_CASE("sigma_1 is multiplicative on coprime pairs") {
  const std::uint64_t limit = 3000;
  const auto s = sieve_sigma(limit, {1});
  for (std::uint64_t m = 1; m <= limit; ++m) {
    for (std::uint64_t n = m; m * n <= limit; ++n) {
      if (std::gcd(m, n) == 1) REQUIRE(s.at(1, m * n) == s.at(1, m) * s.at(1, n));
    }
  }
}

TEST_CASE("power sums") {
  CHECK(power_sum_direct(1, 10) == 45);
  CHECK(power_sum_direct(3, 10) == 2025);
  CHECK(power_sum_direct(4, 2) == 1);
  CHECK(power_sum_direct(7, 1) == 0);
  CHECK(power_sum_faulhaber(2, 5) == 30);
  CHECK(power_sum_faulhaber(6, 3) == 65);
  CHECK(power_sum_faulhaber(5, 100) == power_sum_direct(5, 100));
  CHECK(power_sum_faulhaber(64, 50) == power_sum_direct(64, 50));
  CHECK_THROWS_AS(power_sum_faulhaber(65, 10), std::invalid_argument);
  CHECK_THROWS_AS(power_sum_faulhaber(0, 10), std::invalid_argument);
}

TEST_CASE("Bernoulli numbers") {
  const auto& b = bernoulli_numbers();
  CHECK(b[1] == Rational(-1, 2));
  CHECK(b[2] == Rational(1, 6));
  CHECK(b[3] == 0);
  CHECK(b[12] == Rational(-691, 2730));
  CHECK(b[20] == Rational(-174611, 330));
}

TEST_CASE("Faulhaber coefficients of S_1 and S_3") {
  // S_1(n) = n^2/2 - n/2
  const auto c1 = faulhaber_coefficients(1);
  REQUIRE(c1.size() == 3);
  CHECK(c1[0] == 0);
  CHECK(c1[1] == Rational(-1, 2));
  CHECK(c1[2] == Rational(1, 2));
  // S_3(n) = n^4/4 - n^3/2 + n^2/4
  const auto c3 = faulhaber_coefficients(3);
  CHECK(c3[4] == Rational(1, 4));
  CHECK(c3[3] == Rational(-1, 2));
  CHECK(c3[2] == Rational(1, 4));
  CHECK(c3[1] == 0);
}

TEST_CASE("loglog") {
  // ln(ln n), reference values from a 40-digit evaluation
  CHECK(loglog(3).to_double() == doctest::Approx(0.09404782761669901).epsilon(1e-15));
  CHECK(loglog(16).to_double() == doctest::Approx(1.0197814405382263).epsilon(1e-15));
  CHECK(loglog(2).to_double() == doctest::Approx(-0.3665129205816643).epsilon(1e-15));
  CHECK(loglog(2).sign() < 0);
  CHECK(loglog(3).sign() > 0);
  CHECK_THROWS_AS(loglog(1), std::invalid_argument);

  HighReal prev = loglog(2);
  for (std::uint64_t n = 3; n < 2000000; n = n * 3 / 2 + 1) {
    const HighReal cur = loglog(n);
    REQUIRE(cur > prev);
    prev = cur;
  }
}

TEST_CASE("loglog enclosure brackets the rounded value") {
  for (std::uint64_t n : {3ULL, 12ULL, 1000ULL, 99991ULL}) {
    const Enclosure e = loglog_enclosure(n);
    const HighReal v = loglog(n);
    CHECK(e.lo() <= v);
    CHECK(v <= e.hi());
    // width stays far below 2^-60 relative
    CHECK(((e.hi() - e.lo()) / v).to_double() < 1e-60);
  }
}
