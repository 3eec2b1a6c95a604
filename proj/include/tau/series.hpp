#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tau/high_real.hpp"

namespace tau {

// Dense power series sum_{i=0}^{T} a_i q^i, truncated at order T.
class IntSeries {
 public:
  explicit IntSeries(std::size_t order);
  IntSeries(std::size_t order, std::vector<BigInt> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
  BigInt& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const BigInt> coeffs() const { return coeffs_; }

  IntSeries& operator+=(const IntSeries& rhs);
  IntSeries& operator-=(const IntSeries& rhs);
  IntSeries& operator*=(const BigInt& scalar);

  // Divides every coefficient; throws std::logic_error if any division is inexact.
  IntSeries divided_exactly(const BigInt& divisor) const;

  friend IntSeries operator+(IntSeries a, const IntSeries& b) { return a += b; }
  friend IntSeries operator-(IntSeries a, const IntSeries& b) { return a -= b; }
  // Schoolbook product truncated at min(order) of the operands.
  friend IntSeries operator*(const IntSeries& a, const IntSeries& b);
  friend bool operator==(const IntSeries&, const IntSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

// Symmetric schoolbook squaring; about half the multiplications of a * a.
IntSeries square(const IntSeries& a);

struct SparseTerm {
  std::uint64_t exponent = 0;
  BigInt coeff;
};

// Sparse series with strictly increasing exponents and no zero coefficients.
class SparseSeries {
 public:
  SparseSeries(std::size_t order, std::vector<SparseTerm> terms);

  std::size_t order() const { return order_; }
  std::span<const SparseTerm> terms() const { return terms_; }

  IntSeries to_dense() const;

 private:
  std::size_t order_;
  std::vector<SparseTerm> terms_;
};

// prod_{n>=1} (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}, k over all integers.
SparseSeries pentagonal_series(std::size_t order);

// prod_{n>=1} (1 - q^n)^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}.
SparseSeries jacobi_cube_series(std::size_t order);

// Product of two sparse series as a dense series truncated at `order`.
IntSeries sparse_product(const SparseSeries& a, const SparseSeries& b, std::size_t order);

// prod_{n=1}^{order} (1 - q^n)^power by repeated dense multiplication.
// Slow; used as an independent reference in tests.
IntSeries euler_product_power(std::size_t order, unsigned power);

}  // namespace tau
