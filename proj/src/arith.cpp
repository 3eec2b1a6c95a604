#include "tau/arith.hpp"

#include <stdexcept>
#include <string>

namespace tau {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

bool divides_square_over(std::uint64_t d, std::uint64_t n) {
  return static_cast<u128>(d) * d <= n;
}

void extract(std::uint64_t& n, std::uint64_t p, Factorization& out) {
  unsigned a = 0;
  while (n % p == 0) {
    n /= p;
    ++a;
  }
  if (a > 0) out.factors.push_back({p, a});
}

}  // namespace

BigInt Factorization::recompose() const {
  BigInt r = 1;
  for (const auto& [p, a] : factors) {
    BigInt pa;
    mpz_ui_pow_ui(pa.get_mpz_t(), p, a);
    r *= pa;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  out.n = n;
  extract(n, 2, out);
  extract(n, 3, out);
  extract(n, 5, out);
  // Offsets from 7 through the residues coprime to 30.
  static constexpr std::uint64_t kWheel[] = {4, 2, 4, 2, 4, 6, 2, 6};
  std::uint64_t d = 7;
  for (std::size_t i = 0; divides_square_over(d, n); i = (i + 1) % 8) {
    extract(n, d, out);
    if (d > UINT64_MAX - 6) break;
    d += kWheel[i];
  }
  if (n > 1) out.factors.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::size_t SigmaTables::slot(unsigned exponent) {
  for (std::size_t i = 0; i < kSupported.size(); ++i) {
    if (kSupported[i] == exponent) return i;
  }
  throw std::invalid_argument("sigma exponent " + std::to_string(exponent) + " not in {0,1,3,5}");
}

bool SigmaTables::has(unsigned exponent) const { return !tables_[slot(exponent)].empty(); }

const std::vector<BigInt>& SigmaTables::table(unsigned exponent) const {
  const auto& t = tables_[slot(exponent)];
  if (t.empty()) throw std::out_of_range("sigma_" + std::to_string(exponent) + " table was not sieved");
  return t;
}

const BigInt& SigmaTables::at(unsigned exponent, std::uint64_t n) const {
  const auto& t = table(exponent);
  if (n == 0 || n > limit_) {
    throw std::out_of_range("sigma index " + std::to_string(n) + " outside 1.." + std::to_string(limit_));
  }
  return t[n];
}

SigmaTables sieve_sigma(std::uint64_t limit, std::initializer_list<unsigned> exponents) {
  if (limit == 0) throw std::invalid_argument("sieve_sigma: limit must be >= 1");
  SigmaTables out;
  out.limit_ = limit;
  for (unsigned a : exponents) {
    auto& t = out.tables_[SigmaTables::slot(a)];
    if (!t.empty()) continue;
    t.assign(limit + 1, BigInt(0));
    BigInt da;
    for (std::uint64_t d = 1; d <= limit; ++d) {
      mpz_ui_pow_ui(da.get_mpz_t(), d, a);
      for (std::uint64_t m = d; m <= limit; m += d) t[m] += da;
    }
  }
  return out;
}

BigInt power_sum_direct(unsigned t, std::uint64_t n) {
  if (t == 0 || n == 0) throw std::invalid_argument("power_sum_direct: t and n must be >= 1");
  BigInt sum = 0;
  BigInt term;
  for (std::uint64_t k = 1; k < n; ++k) {
    mpz_ui_pow_ui(term.get_mpz_t(), k, t);
    sum += term;
  }
  return sum;
}

const std::vector<Rational>& bernoulli_numbers() {
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
  static const std::vector<Rational> table = [] {
    std::vector<Rational> b(kFaulhaberMaxExponent + 1);
    b[0] = 1;
    BigInt binom;
    for (unsigned m = 1; m <= kFaulhaberMaxExponent; ++m) {
      Rational acc = 0;
      for (unsigned j = 0; j < m; ++j) {
        mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
        acc += Rational(binom) * b[j];
      }
      b[m] = -acc / (m + 1);
      b[m].canonicalize();
    }
    return b;
  }();
  return table;
}

std::vector<Rational> faulhaber_coefficients(unsigned t) {
  if (t == 0) throw std::invalid_argument("faulhaber: t must be >= 1");
  if (t > kFaulhaberMaxExponent) {
    throw std::invalid_argument("faulhaber: t exceeds ceiling " + std::to_string(kFaulhaberMaxExponent));
  }
  // sum_{k=0}^{n-1} k^t = 1/(t+1) sum_j C(t+1, j) B_j n^{t+1-j}
  const auto& b = bernoulli_numbers();
  std::vector<Rational> coeffs(t + 2, Rational(0));
  BigInt binom;
  for (unsigned j = 0; j <= t; ++j) {
    mpz_bin_uiui(binom.get_mpz_t(), t + 1, j);
    Rational c = Rational(binom) * b[j] / (t + 1);
    c.canonicalize();
    coeffs[t + 1 - j] = c;
  }
  return coeffs;
}

BigInt power_sum_faulhaber(unsigned t, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("power_sum_faulhaber: n must be >= 1");
  const auto coeffs = faulhaber_coefficients(t);
  const Rational x{BigInt(n)};
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  acc.canonicalize();
  if (acc.get_den() != 1) throw std::logic_error("faulhaber evaluation produced a non-integer");
  return acc.get_num();
}

HighReal loglog(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("loglog: n must be >= 2");
  HighReal x{BigInt(n)};
  return log(log(x));
}

Enclosure loglog_enclosure(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("loglog_enclosure: n must be >= 3");
  return log(log(Enclosure(BigInt(n))));
}

}  // namespace tau
