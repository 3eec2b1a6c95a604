#include "tau/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace tau {

IntSeries::IntSeries(std::size_t order) : coeffs_(order + 1, BigInt(0)) {}

IntSeries::IntSeries(std::size_t order, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1, BigInt(0));
}

IntSeries& IntSeries::operator+=(const IntSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

IntSeries& IntSeries::operator-=(const IntSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

IntSeries& IntSeries::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

IntSeries IntSeries::divided_exactly(const BigInt& divisor) const {
  if (divisor == 0) throw std::invalid_argument("division of series by zero");
  IntSeries out(order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), divisor.get_mpz_t())) {
      throw std::logic_error("inexact series division at coefficient " + std::to_string(i));
    }
    mpz_divexact(out.coeffs_[i].get_mpz_t(), coeffs_[i].get_mpz_t(), divisor.get_mpz_t());
  }
  return out;
}

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  IntSeries out(order);
  for (std::size_t k = 0; k <= order; ++k) {
    mpz_ptr acc = out.coeffs_[k].get_mpz_t();
    for (std::size_t i = 0; i <= k; ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      mpz_addmul(acc, a.coeffs_[i].get_mpz_t(), b.coeffs_[k - i].get_mpz_t());
    }
  }
  return out;
}

IntSeries square(const IntSeries& a) {
  const std::size_t order = a.order();
  IntSeries out(order);
  BigInt cross;
  for (std::size_t k = 0; k <= order; ++k) {
    cross = 0;
    mpz_ptr acc = cross.get_mpz_t();
    const std::size_t half = (k + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
      if (sgn(a[i]) == 0) continue;
      mpz_addmul(acc, a[i].get_mpz_t(), a[k - i].get_mpz_t());
    }
    mpz_mul_2exp(out[k].get_mpz_t(), acc, 1);
    if (k % 2 == 0) mpz_addmul(out[k].get_mpz_t(), a[k / 2].get_mpz_t(), a[k / 2].get_mpz_t());
  }
  return out;
}

SparseSeries::SparseSeries(std::size_t order, std::vector<SparseTerm> terms)
    : order_(order), terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exponent > order_) throw std::invalid_argument("sparse term beyond truncation order");
    if (sgn(terms_[i].coeff) == 0) throw std::invalid_argument("sparse series stores a zero coefficient");
    if (i > 0 && terms_[i].exponent <= terms_[i - 1].exponent) {
      throw std::invalid_argument("sparse exponents must be strictly increasing");
    }
  }
}

IntSeries SparseSeries::to_dense() const {
  IntSeries out(order_);
  for (const auto& t : terms_) out[t.exponent] = t.coeff;
  return out;
}

SparseSeries pentagonal_series(std::size_t order) {
  std::vector<SparseTerm> terms{{0, BigInt(1)}};
  for (std::uint64_t k = 1;; ++k) {
    const std::uint64_t lower = k * (3 * k - 1) / 2;
    if (lower > order) break;
    const BigInt sign = (k % 2 == 0) ? 1 : -1;
    terms.push_back({lower, sign});
    const std::uint64_t upper = k * (3 * k + 1) / 2;
    if (upper <= order) terms.push_back({upper, sign});
  }
  return SparseSeries(order, std::move(terms));
}

SparseSeries jacobi_cube_series(std::size_t order) {
  std::vector<SparseTerm> terms;
  for (std::uint64_t k = 0;; ++k) {
    const std::uint64_t e = k * (k + 1) / 2;
    if (e > order) break;
    BigInt c = static_cast<unsigned long>(2 * k + 1);
    if (k % 2 == 1) c = -c;
    terms.push_back({e, std::move(c)});
  }
  return SparseSeries(order, std::move(terms));
}

IntSeries sparse_product(const SparseSeries& a, const SparseSeries& b, std::size_t order) {
  IntSeries out(order);
  for (const auto& x : a.terms()) {
    if (x.exponent > order) break;
    for (const auto& y : b.terms()) {
      const std::uint64_t e = x.exponent + y.exponent;
      if (e > order) break;
      mpz_addmul(out[e].get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
    }
  }
  return out;
}

IntSeries euler_product_power(std::size_t order, unsigned power) {
  IntSeries acc(order);
  acc[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    for (unsigned r = 0; r < power; ++r) {
      // multiply in place by (1 - q^n), descending so each source is unmodified
      for (std::size_t i = order; i >= n; --i) acc[i] -= acc[i - n];
    }
  }
  return acc;
}

}  // namespace tau
