#include "tau/engines.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tau/series.hpp"

namespace tau {

namespace {

using i128 = __int128;

void set_i128(mpz_ptr out, i128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
  mpz_import(out, 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (negative) mpz_neg(out, out);
}

void require_limit(std::uint64_t limit, const char* who) {
  if (limit == 0) throw std::invalid_argument(std::string(who) + ": limit must be >= 1");
}

void require_sigma(const SigmaTables& sigma, std::uint64_t limit, unsigned exponent, const char* who) {
  if (sigma.limit() < limit || !sigma.has(exponent)) {
    throw std::invalid_argument(std::string(who) + ": needs sigma_" + std::to_string(exponent) + " up to " +
                                std::to_string(limit));
  }
}

BigInt prime_pow11(std::uint64_t p) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, 11);
  return r;
}

}  // namespace

std::string_view to_string(Algo algo) {
  switch (algo) {
    case Algo::eta: return "eta";
    case Algo::niebur: return "niebur";
    case Algo::eisenstein: return "eisenstein";
    case Algo::multiplicative: return "multiplicative";
  }
  return "unknown";
}

Algo parse_algo(std::string_view label) {
  for (Algo a : {Algo::eta, Algo::niebur, Algo::eisenstein, Algo::multiplicative}) {
    if (to_string(a) == label) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(label) + "'");
}

TauTable::TauTable(Algo algo, std::vector<BigInt> values) : algo_(algo), values_(std::move(values)) {
  if (values_.size() < 2) throw std::invalid_argument("tau table needs at least tau(1)");
}

const BigInt& TauTable::at(std::uint64_t n) const {
  if (n == 0 || n > limit()) {
    throw std::out_of_range("tau index " + std::to_string(n) + " outside 1.." + std::to_string(limit()));
  }
  return values_[n];
}

TauTable tau_eta(std::uint64_t limit) {
  require_limit(limit, "tau_eta");
  const std::size_t order = limit - 1;
  const SparseSeries cube = jacobi_cube_series(order);
  const IntSeries sixth = sparse_product(cube, cube, order);
  const IntSeries twelfth = square(sixth);
  const IntSeries power24 = square(twelfth);
  std::vector<BigInt> values(limit + 1, BigInt(0));
  for (std::uint64_t n = 1; n <= limit; ++n) values[n] = power24[n - 1];
  return TauTable(Algo::eta, std::move(values));
}

NieburConvolution niebur_convolution(std::uint64_t n, const SigmaTables& sigma) {
  if (n == 0 || n > kNieburMaxN) throw std::invalid_argument("niebur_convolution: n outside 1..10^6");
  NieburConvolution out{0, 0};
  if (n == 1) return out;
  require_sigma(sigma, n - 1, 1, "niebur_convolution");
  const auto& s = sigma.table(1);
  const i128 nn = static_cast<i128>(n);
  BigInt poly;
  BigInt pair;
  for (std::uint64_t k = 1; k < n; ++k) {
    const i128 kk = static_cast<i128>(k);
    const i128 p = kk * kk * (18 * nn * nn + kk * (35 * kk - 52 * nn));
    set_i128(poly.get_mpz_t(), p);
    mpz_mul(pair.get_mpz_t(), s[k].get_mpz_t(), s[n - k].get_mpz_t());
    mpz_addmul(out.signed_sum.get_mpz_t(), poly.get_mpz_t(), pair.get_mpz_t());
    mpz_abs(poly.get_mpz_t(), poly.get_mpz_t());
    mpz_addmul(out.absolute_sum.get_mpz_t(), poly.get_mpz_t(), pair.get_mpz_t());
  }
  return out;
}

BigInt niebur_value(std::uint64_t n, const SigmaTables& sigma) {
  require_sigma(sigma, n, 1, "niebur_value");
  BigInt n4;
  mpz_ui_pow_ui(n4.get_mpz_t(), n, 4);
  return n4 * sigma.at(1, n) - 24 * niebur_convolution(n, sigma).signed_sum;
}

TauTable tau_niebur(std::uint64_t limit, const SigmaTables& sigma) {
  require_limit(limit, "tau_niebur");
  require_sigma(sigma, limit, 1, "tau_niebur");
  std::vector<BigInt> values(limit + 1, BigInt(0));
  for (std::uint64_t n = 1; n <= limit; ++n) values[n] = niebur_value(n, sigma);
  return TauTable(Algo::niebur, std::move(values));
}

TauTable tau_eisenstein(std::uint64_t limit, const SigmaTables& sigma) {
  require_limit(limit, "tau_eisenstein");
  require_sigma(sigma, limit, 3, "tau_eisenstein");
  require_sigma(sigma, limit, 5, "tau_eisenstein");
  IntSeries e4(limit);
  IntSeries e6(limit);
  e4[0] = 1;
  e6[0] = 1;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    e4[n] = 240 * sigma.at(3, n);
    e6[n] = -504 * sigma.at(5, n);
  }
  const IntSeries discriminant = (e4 * square(e4) - square(e6)).divided_exactly(BigInt(1728));
  if (sgn(discriminant[0]) != 0) throw std::logic_error("E4^3 - E6^2 has a constant term");
  std::vector<BigInt> values(discriminant.coeffs().begin(), discriminant.coeffs().end());
  return TauTable(Algo::eisenstein, std::move(values));
}

PrimeTaus harvest_prime_taus(const TauTable& table) {
  PrimeTaus out;
  for (std::uint64_t p : primes_up_to(table.limit())) out.emplace(p, table[p]);
  return out;
}

TauTable tau_multiplicative(std::uint64_t limit, const PrimeTaus& prime_taus) {
  require_limit(limit, "tau_multiplicative");
  std::vector<BigInt> values(limit + 1, BigInt(0));
  values[1] = 1;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    const Factorization f = factorize(n);
    if (f.factors.size() > 1) {
      // every prime-power part is smaller than n and already filled
      BigInt product = 1;
      for (const auto& [p, a] : f.factors) {
        std::uint64_t pa = 1;
        for (unsigned i = 0; i < a; ++i) pa *= p;
        product *= values[pa];
      }
      values[n] = std::move(product);
      continue;
    }
    const auto [p, a] = f.factors.front();
    if (a == 1) {
      const auto it = prime_taus.find(p);
      if (it == prime_taus.end()) {
        throw std::invalid_argument("tau_multiplicative: missing seed tau(" + std::to_string(p) + ")");
      }
      values[n] = it->second;
    } else {
      values[n] = values[p] * values[n / p] - prime_pow11(p) * values[n / p / p];
    }
  }
  return TauTable(Algo::multiplicative, std::move(values));
}

bool ReconcileReport::all_agree() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairAgreement& p) { return !p.first_mismatch; });
}

ReconcileReport reconcile(std::span<const TauTable> tables) {
  if (tables.size() < 2) throw std::invalid_argument("reconcile needs at least two tables");
  ReconcileReport report;
  report.range = tables.front().limit();
  for (const auto& t : tables) {
    report.range = std::min(report.range, t.limit());
    report.algos.push_back(t.algo());
  }
  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (std::size_t j = i + 1; j < tables.size(); ++j) {
      PairAgreement pair{i, j, std::nullopt};
      for (std::uint64_t n = 1; n <= report.range; ++n) {
        if (tables[i][n] != tables[j][n]) {
          pair.first_mismatch = n;
          break;
        }
      }
      report.pairs.push_back(pair);
    }
  }
  return report;
}

}  // namespace tau
