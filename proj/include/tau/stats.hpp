#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tau/engines.hpp"
#include "tau/high_real.hpp"

namespace tau {

// Checkpoints below this are distorted by (log log N)^4 and have no r11.
inline constexpr std::uint64_t kRankinMinCheckpoint = 16;

struct RankinRow {
  std::uint64_t upto = 0;
  BigInt sum_sq;              // sum_{n <= N} tau(n)^2
  HighReal r12;               // sum_sq / N^12
  std::optional<HighReal> r11;  // sum_sq / (N^11 (log log N)^4), N >= 16 only
};

struct RankinGrowth {
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  HighReal r12_factor;
  std::optional<HighReal> r11_factor;
};

struct RankinScan {
  std::vector<RankinRow> rows;
  std::vector<RankinGrowth> growth;
};

BigInt sum_of_squares(const TauTable& tau, std::uint64_t upto);

// Single row for any 1 <= N <= limit.
RankinRow rankin_row(const TauTable& tau, std::uint64_t upto);

// Strictly ascending checkpoints, each in [16, limit].
RankinScan rankin_scan(const TauTable& tau, const std::vector<std::uint64_t>& checkpoints);

// Rows for arbitrary ascending checkpoints; r11 is omitted below 16.
RankinScan rankin_rows(const TauTable& tau, const std::vector<std::uint64_t>& checkpoints);

// 1000, 2000, 4000, ... up to limit; {limit} when limit < 1000.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t limit);

struct LSeriesComparison {
  HighReal dirichlet_partial;  // sum_{n <= N} tau(n) n^-s
  HighReal euler_partial;      // prod_{p <= P} (1 - tau(p) p^-s + p^{11-2s})^-1
  HighReal difference;         // |dirichlet - euler|
  HighReal tail_bound;         // majorant of sum_{n > N} sigma_0(n) n^{5.5-s}
};

// Needs s > 6.5, P <= N <= tau.limit().
LSeriesComparison lseries_compare(const TauTable& tau, const HighReal& s, std::uint64_t n_terms,
                                  std::uint64_t p_max);

// Integral majorant of sum_{n > N} sigma_0(n) n^{-a} with a = s - 5.5 > 1, from
// sum_{n <= x} sigma_0(n) <= x (log x + 1) and partial summation:
//   a N^{1-a} ((log N + 1)/(a - 1) + 1/(a - 1)^2).
HighReal dirichlet_tail_bound(const HighReal& s, std::uint64_t n_terms);

// Coefficients of x^0..x^max_power in 1 / (1 - tau_p x + p^11 x^2), expanded as the
// geometric series sum_j (tau_p x - p^11 x^2)^j.
std::vector<BigInt> euler_factor_coefficients(const BigInt& tau_p, std::uint64_t p, unsigned max_power);

// The same coefficients with x = p^-s for integer s: c_a / p^{a s}.
std::vector<Rational> euler_factor_terms(const BigInt& tau_p, std::uint64_t p, unsigned s, unsigned max_power);

}  // namespace tau
