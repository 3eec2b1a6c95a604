#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the engine code paths it is used to check.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace tau::oracle {

// sigma_a(n) by enumerating every candidate divisor.
inline mpz_class divisor_power_sum(std::uint64_t n, unsigned a) {
  mpz_class sum = 0;
  mpz_class term;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(term.get_mpz_t(), d, a);
    sum += term;
  }
  return sum;
}

// Coefficients of q * prod_{k=1}^{N} (1 - q^k)^24 by multiplying one linear
// factor at a time: O(24 N^2), independent of the sparse/squaring route.
inline std::vector<mpz_class> tau_by_linear_factors(std::uint64_t limit) {
  const std::uint64_t order = limit - 1;
  std::vector<mpz_class> poly(order + 1, 0);
  poly[0] = 1;
  for (std::uint64_t k = 1; k <= order; ++k) {
    for (int r = 0; r < 24; ++r) {
      for (std::uint64_t i = order; i >= k; --i) poly[i] -= poly[i - k];
    }
  }
  std::vector<mpz_class> tau(limit + 1, 0);
  for (std::uint64_t n = 1; n <= limit; ++n) tau[n] = poly[n - 1];
  return tau;
}

inline long double sigma1_ld(std::uint64_t n) {
  long double s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) s += static_cast<long double>(d);
  }
  return s;
}

inline long double loglog_ld(std::uint64_t n) { return std::log(std::log(static_cast<long double>(n))); }

inline std::vector<mpz_class> random_series(std::mt19937_64& rng, std::size_t length, long magnitude) {
  std::uniform_int_distribution<long> dist(-magnitude, magnitude);
  std::vector<mpz_class> out(length);
  for (auto& c : out) c = dist(rng);
  return out;
}

}  // namespace tau::oracle
