#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tau/bounds.hpp"

using namespace tau;

namespace {

double approx(const HighReal& x) { return x.to_double(); }

}  // namespace

TEST_CASE("Deligne examples") {
  CHECK(deligne_holds(2, BigInt(-24), BigInt(2)));
  CHECK(deligne_holds(1, BigInt(1), BigInt(1)));
  CHECK(deligne_holds(6, BigInt(-6048), BigInt(4)));
  // one past the boundary: sigma_0(1)^2 * 1 = 1 < 4
  CHECK_FALSE(deligne_holds(1, BigInt(2), BigInt(1)));
}

TEST_CASE("check_deligne over a table") {
  const TauTable t = tau_eta(2000);
  const auto sigma = sieve_sigma(2000, {0});
  const DeligneCheck d = check_deligne(t, sigma);
  CHECK(d.violations.empty());
  CHECK(d.argmax == 1);
  CHECK(d.max_ratio == HighReal(1L));
  CHECK_THROWS_AS(check_deligne(t, sieve_sigma(1000, {0})), std::invalid_argument);
  CHECK_THROWS_AS(check_deligne(t, sieve_sigma(2000, {1})), std::invalid_argument);
}

TEST_CASE("Robin examples") {
  BoundParams params;
  const auto sigma = sieve_sigma(20, {1});
  const RobinRecord r6 = robin_evaluate(6, sigma.at(1, 6), params);
  CHECK(approx(r6.bound) == doctest::Approx(12.901054321046845).epsilon(1e-14));
  CHECK(r6.verdict == Verdict::holds);
  const RobinRecord r3 = robin_evaluate(3, sigma.at(1, 3), params);
  CHECK(approx(r3.bound) == doctest::Approx(21.179231614214454).epsilon(1e-14));
  CHECK(r3.verdict == Verdict::holds);
  // With the constant 0.6482 the bound at 12 sits 1.8e-4 below sigma(12) = 28.
  const RobinRecord r12 = robin_evaluate(12, sigma.at(1, 12), params);
  CHECK(approx(r12.bound) == doctest::Approx(27.999820054112623).epsilon(1e-14));
  CHECK(approx(r12.margin) == doctest::Approx(-1.799458873768271e-4).epsilon(1e-10));
  CHECK(r12.verdict == Verdict::near_equality);

  params.robin_near_tolerance = HighReal(1e-6);
  CHECK(robin_evaluate(12, sigma.at(1, 12), params).verdict == Verdict::violated);
  // Robin's constant to more digits makes n = 12 hold with a hair to spare.
  params.robin_const = Enclosure::decimal("0.64821365");
  params.robin_near_tolerance = HighReal(0L);
  CHECK(robin_evaluate(12, sigma.at(1, 12), params).verdict == Verdict::holds);
}

TEST_CASE("Robin bound enclosure agrees with long double evaluation") {
  const long double eg = std::exp(0.57721566490153286060651209L);
  for (std::uint64_t n : {3ULL, 7ULL, 100ULL, 5040ULL, 55440ULL}) {
    const long double ll = oracle::loglog_ld(n);
    const long double ref = eg * n * ll + 0.6482L * n / ll;
    const Enclosure e = robin_bound(n, BoundParams{});
    CHECK(approx(e.mid()) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-15));
  }
}

TEST_CASE("check_robin range and scan") {
  const auto sigma = sieve_sigma(20000, {1});
  const RobinCheck r = check_robin(sigma, BoundParams{}, 3, 20000);
  CHECK(r.violations.empty());
  CHECK(r.near_equality == std::vector<std::uint64_t>{12});
  CHECK_THROWS_AS(check_robin(sigma, BoundParams{}, 2, 10), std::invalid_argument);
  CHECK_THROWS_AS(check_robin(sigma, BoundParams{}, 3, 20001), std::invalid_argument);
}

TEST_CASE("implied_c") {
  const auto sigma = sieve_sigma(100, {1});
  const ImpliedC c = implied_c(sigma, 3, 10);
  CHECK(c.argmax == 3);
  CHECK(approx(c.value) == doctest::Approx(14.177183749181978).epsilon(1e-14));
  const ImpliedC single = implied_c(sigma, 3, 3);
  CHECK(single.value == c.value);

  // direct scan oracle in long double
  long double best = -1;
  std::uint64_t arg = 0;
  for (std::uint64_t n = 16; n <= 100; ++n) {
    const long double v = oracle::sigma1_ld(n) / (n * oracle::loglog_ld(n));
    if (v > best) {
      best = v;
      arg = n;
    }
  }
  const ImpliedC range = implied_c(sigma, 16, 100);
  CHECK(range.argmax == arg);
  CHECK(approx(range.value) == doctest::Approx(static_cast<double>(best)).epsilon(1e-15));
}

TEST_CASE("claimed-bound spot values") {
  const HighReal one(1L);
  const T5Evaluation t10 = evaluate_t5(10, BigInt(115920), one);
  CHECK(approx(t10.bound) == doctest::Approx(208683.03591788532).epsilon(1e-14));
  CHECK(t10.verdict == Verdict::holds);
  const T5Evaluation t5 = evaluate_t5(5, BigInt(4830), one);
  CHECK(approx(t5.ratio) == doctest::Approx(6.824849607328232).epsilon(1e-14));
  CHECK(t5.verdict == Verdict::violated);
  const T5Evaluation t16 = evaluate_t5(16, BigInt(987136), one);
  CHECK(approx(t16.ratio) == doctest::Approx(0.9052381943851898).epsilon(1e-14));
  CHECK_THROWS_AS(evaluate_t5(2, BigInt(24), one), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_t5(10, BigInt(1), HighReal(0L)), std::invalid_argument);
}

TEST_CASE("claimed-bound verdicts are monotone in c") {
  const TauTable t = tau_eta(1000);
  const std::vector<std::string> cs{"0.5", "1", "1.7", "2.5", "4", "10"};
  std::vector<Verdict> prev(t.limit() + 1, Verdict::violated);
  for (const auto& c_text : cs) {
    const HighReal c = HighReal::parse(c_text);
    for (std::uint64_t n = 3; n <= t.limit(); ++n) {
      const Verdict v = evaluate_t5(n, t[n], c).verdict;
      if (prev[n] == Verdict::holds) REQUIRE(v == Verdict::holds);
      prev[n] = v;
    }
  }
}

TEST_CASE("check_t5 profile") {
  const std::uint64_t limit = 1000;
  const TauTable t = tau_eta(limit);
  const auto sigma = sieve_sigma(limit, {0, 1});
  BoundParams params;
  params.c = HighReal(2L);
  const T5Check check = check_t5(t, sigma, params, 16, limit);
  REQUIRE(check.profile.size() == 2);
  CHECK(check.profile[0].upto == 100);
  CHECK(check.profile[1].upto == 1000);
  CHECK(check.profile[0].running_max <= check.profile[1].running_max);
  CHECK(check.records.size() == limit - 15);

  // running max recomputed from the records
  HighReal best(-1L);
  for (const auto& rec : check.records) {
    if (rec.t5->ratio > best) best = rec.t5->ratio;
    if (rec.n == 100) CHECK(best == check.profile[0].running_max);
  }
  CHECK(best == check.profile[1].running_max);

  params.scan_start = 2;
  CHECK_THROWS_AS(check_t5(t, sigma, params, 16, limit), std::invalid_argument);
  params.scan_start = 16;
  CHECK_THROWS_AS(check_t5(t, sigma, params, 2, limit), std::invalid_argument);
}

TEST_CASE("cancellation audit examples") {
  const auto sigma = sieve_sigma(10, {1});
  const CancellationAudit a3 = audit_cancellation(3, sigma);
  CHECK(a3.signed_abs == 3);
  CHECK(a3.absolute_sum == 243);
  CHECK(approx(a3.ratio) == doctest::Approx(3.0 / 243.0));
  CHECK(a3.reconstructed_tau == 252);
  const CancellationAudit a2 = audit_cancellation(2, sigma);
  CHECK(a2.signed_abs == 3);
  CHECK(a2.absolute_sum == 3);
  CHECK(a2.ratio == HighReal(1L));
  CHECK(a2.reconstructed_tau == -24);
  const CancellationAudit a1 = audit_cancellation(1, sigma);
  CHECK(a1.signed_abs == 0);
  CHECK(a1.absolute_sum == 0);
  CHECK(a1.ratio.sign() == 0);
  CHECK(a1.reconstructed_tau == 1);
}

TEST_CASE("cancellation audit invariants up to 500") {
  const std::uint64_t limit = 500;
  const auto sigma = sieve_sigma(limit, {1});
  const TauTable t = tau_eta(limit);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const CancellationAudit a = audit_cancellation(n, sigma);
    REQUIRE(a.signed_abs <= a.absolute_sum);
    REQUIRE(a.ratio >= HighReal(0L));
    REQUIRE(a.ratio <= HighReal(1L));
    REQUIRE(a.reconstructed_tau == t[n]);
  }
}

TEST_CASE("Hecke ratio scan") {
  const TauTable t = tau_eta(6);
  CHECK(hecke_ratio_scan(t, 1, 1).max_ratio == HighReal(1L));
  CHECK(approx(hecke_ratio_scan(t, 2, 2).max_ratio) == 0.375);
  const HeckeScan all = hecke_ratio_scan(t, 1, 6);
  CHECK(all.argmax == 1);
  CHECK(all.max_ratio == HighReal(1L));
  const HeckeScan tail = hecke_ratio_scan(t, 3, 6);
  CHECK(tail.argmax == 4);  // 1472/4096 beats 252/729
  CHECK(approx(tail.max_ratio) == 0.359375);
  CHECK_THROWS_AS(hecke_ratio_scan(t, 1, 7), std::invalid_argument);
}

TEST_CASE("bound params validation") {
  BoundParams p;
  CHECK_NOTHROW(p.validate());
  p.c = HighReal(-1L);
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.c = HighReal(1L);
  p.scan_start = 2;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
