#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "tau/high_real.hpp"

namespace tau {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n together with its prime-power decomposition, primes strictly increasing.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;

  BigInt recompose() const;
};

// Deterministic Miller-Rabin, exact for the whole 64-bit range.
bool is_prime(std::uint64_t n);

// Trial division over a 2-3-5 wheel. Total on [1, 2^64 - 1]; n = 0 throws.
Factorization factorize(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Divisor power sums sigma_a(n) = sum_{d | n} d^a for a in {0, 1, 3, 5}.
// Index 0 of each table is unused (holds 0). Tables that were not requested
// are empty.
class SigmaTables {
 public:
  static constexpr std::array<unsigned, 4> kSupported{0, 1, 3, 5};

  SigmaTables() = default;

  std::uint64_t limit() const { return limit_; }
  bool has(unsigned exponent) const;
  // Throws std::out_of_range if the exponent table is absent.
  const std::vector<BigInt>& table(unsigned exponent) const;
  const BigInt& at(unsigned exponent, std::uint64_t n) const;

 private:
  friend SigmaTables sieve_sigma(std::uint64_t, std::initializer_list<unsigned>);
  static std::size_t slot(unsigned exponent);

  std::uint64_t limit_ = 0;
  std::array<std::vector<BigInt>, 4> tables_;
};

SigmaTables sieve_sigma(std::uint64_t limit, std::initializer_list<unsigned> exponents);

// S_t(n) = sum_{k=1}^{n-1} k^t.
BigInt power_sum_direct(unsigned t, std::uint64_t n);

inline constexpr unsigned kFaulhaberMaxExponent = 64;

// Bernoulli numbers B_0..B_m with B_1 = -1/2. m <= kFaulhaberMaxExponent.
const std::vector<Rational>& bernoulli_numbers();

// Coefficients c_0..c_{t+1} of S_t(n) as a polynomial in n.
std::vector<Rational> faulhaber_coefficients(unsigned t);

BigInt power_sum_faulhaber(unsigned t, std::uint64_t n);

// ln(ln n) for n >= 2.
HighReal loglog(std::uint64_t n);
Enclosure loglog_enclosure(std::uint64_t n);

}  // namespace tau
