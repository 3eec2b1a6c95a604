#include "tau/stats.hpp"

#include <stdexcept>
#include <string>

#include "tau/arith.hpp"

namespace tau {

namespace {

HighReal real_pow(std::uint64_t base, const HighReal& exponent) { return pow(HighReal(BigInt(base)), exponent); }

}  // namespace

BigInt sum_of_squares(const TauTable& tau, std::uint64_t upto) {
  if (upto == 0 || upto > tau.limit()) throw std::invalid_argument("sum_of_squares: N outside table");
  BigInt sum = 0;
  for (std::uint64_t n = 1; n <= upto; ++n) mpz_addmul(sum.get_mpz_t(), tau[n].get_mpz_t(), tau[n].get_mpz_t());
  return sum;
}

RankinRow rankin_row(const TauTable& tau, std::uint64_t upto) {
  RankinRow row;
  row.upto = upto;
  row.sum_sq = sum_of_squares(tau, upto);
  const HighReal sum(row.sum_sq);
  const HighReal n(BigInt{upto});
  row.r12 = sum / pow(n, HighReal(12L));
  if (upto >= kRankinMinCheckpoint) {
    const HighReal ll = loglog(upto);
    row.r11 = sum / (pow(n, HighReal(11L)) * pow(ll, HighReal(4L)));
  }
  return row;
}

RankinScan rankin_rows(const TauTable& tau, const std::vector<std::uint64_t>& checkpoints) {
  RankinScan out;
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
      throw std::invalid_argument("checkpoints must be strictly ascending");
    }
    out.rows.push_back(rankin_row(tau, checkpoints[i]));
  }
  for (std::size_t i = 1; i < out.rows.size(); ++i) {
    const RankinRow& a = out.rows[i - 1];
    const RankinRow& b = out.rows[i];
    RankinGrowth g{a.upto, b.upto, b.r12 / a.r12, std::nullopt};
    if (a.r11 && b.r11) g.r11_factor = *b.r11 / *a.r11;
    out.growth.push_back(std::move(g));
  }
  return out;
}

RankinScan rankin_scan(const TauTable& tau, const std::vector<std::uint64_t>& checkpoints) {
  for (std::uint64_t c : checkpoints) {
    if (c < kRankinMinCheckpoint) {
      throw std::invalid_argument("rankin_scan: checkpoint " + std::to_string(c) + " below 16");
    }
  }
  return rankin_rows(tau, checkpoints);
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 1000; c <= limit; c *= 2) out.push_back(c);
  if (out.empty()) out.push_back(limit);
  return out;
}

HighReal dirichlet_tail_bound(const HighReal& s, std::uint64_t n_terms) {
  const HighReal a = s - HighReal::parse("5.5");
  const HighReal am1 = a - HighReal(1L);
  const HighReal n(BigInt{n_terms});
  const HighReal logn = log(n);
  return a * pow(n, HighReal(1L) - a) * ((logn + HighReal(1L)) / am1 + HighReal(1L) / (am1 * am1));
}

LSeriesComparison lseries_compare(const TauTable& tau, const HighReal& s, std::uint64_t n_terms,
                                  std::uint64_t p_max) {
  if (!(s > HighReal::parse("6.5"))) {
    throw std::invalid_argument(
        "lseries_compare: s must exceed 6.5; below that the Dirichlet series is not absolutely convergent "
        "(only conditional convergence is available) and truncations are not comparable");
  }
  if (n_terms == 0 || n_terms > tau.limit()) throw std::invalid_argument("lseries_compare: N outside table");
  if (p_max > n_terms) throw std::invalid_argument("lseries_compare: P must not exceed N");

  LSeriesComparison out;
  const HighReal neg_s = -s;
  for (std::uint64_t n = 1; n <= n_terms; ++n) {
    out.dirichlet_partial += HighReal(tau[n]) * real_pow(n, neg_s);
  }
  out.euler_partial = HighReal(1L);
  const HighReal weight_exp = HighReal(11L) - HighReal(2L) * s;
  for (std::uint64_t p : primes_up_to(p_max)) {
    const HighReal factor = HighReal(1L) - HighReal(tau[p]) * real_pow(p, neg_s) + real_pow(p, weight_exp);
    out.euler_partial /= factor;
  }
  out.difference = abs(out.dirichlet_partial - out.euler_partial);
  out.tail_bound = dirichlet_tail_bound(s, n_terms);
  return out;
}

std::vector<BigInt> euler_factor_coefficients(const BigInt& tau_p, std::uint64_t p, unsigned max_power) {
  // coefficient of x^a: sum_i C(a - i, i) tau_p^{a - 2i} (-p^11)^i
  BigInt p11;
  mpz_ui_pow_ui(p11.get_mpz_t(), p, 11);
  const BigInt neg_p11 = -p11;
  std::vector<BigInt> out(max_power + 1, BigInt(0));
  BigInt binom;
  BigInt t_pow;
  BigInt q_pow;
  for (unsigned a = 0; a <= max_power; ++a) {
    for (unsigned i = 0; 2 * i <= a; ++i) {
      mpz_bin_uiui(binom.get_mpz_t(), a - i, i);
      mpz_pow_ui(t_pow.get_mpz_t(), tau_p.get_mpz_t(), a - 2 * i);
      mpz_pow_ui(q_pow.get_mpz_t(), neg_p11.get_mpz_t(), i);
      out[a] += binom * t_pow * q_pow;
    }
  }
  return out;
}

std::vector<Rational> euler_factor_terms(const BigInt& tau_p, std::uint64_t p, unsigned s, unsigned max_power) {
  const auto coeffs = euler_factor_coefficients(tau_p, p, max_power);
  std::vector<Rational> out;
  BigInt denom;
  for (unsigned a = 0; a <= max_power; ++a) {
    mpz_ui_pow_ui(denom.get_mpz_t(), p, static_cast<unsigned long>(a) * s);
    Rational r(coeffs[a], denom);
    r.canonicalize();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tau
