#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tau/arith.hpp"
#include "tau/high_real.hpp"

namespace tau {

enum class Algo { eta, niebur, eisenstein, multiplicative };

std::string_view to_string(Algo algo);
// Throws std::invalid_argument for unknown labels.
Algo parse_algo(std::string_view label);

// tau(1..limit) with the algorithm that produced it. values[0] is unused.
class TauTable {
 public:
  TauTable(Algo algo, std::vector<BigInt> values);

  std::uint64_t limit() const { return values_.size() - 1; }
  Algo algo() const { return algo_; }
  // 1 <= n <= limit, otherwise std::out_of_range.
  const BigInt& at(std::uint64_t n) const;
  const BigInt& operator[](std::uint64_t n) const { return values_[n]; }
  std::span<const BigInt> values() const { return std::span(values_).subspan(1); }

  friend bool operator==(const TauTable&, const TauTable&) = default;

 private:
  Algo algo_;
  std::vector<BigInt> values_;
};

// Coefficients of q * prod (1 - q^n)^24: Jacobi cube, squared three times.
TauTable tau_eta(std::uint64_t limit);

// sum_{k=1}^{n-1} P(k, n) sigma(k) sigma(n-k), P(k, n) = 35k^4 - 52k^3 n + 18k^2 n^2,
// together with the same sum over |P(k, n)|.
struct NieburConvolution {
  BigInt signed_sum;
  BigInt absolute_sum;
};

// Largest n accepted by the convolution (keeps P(k, n) inside 128 bits).
inline constexpr std::uint64_t kNieburMaxN = 1'000'000;

NieburConvolution niebur_convolution(std::uint64_t n, const SigmaTables& sigma);

// n^4 sigma(n) - 24 * signed convolution.
BigInt niebur_value(std::uint64_t n, const SigmaTables& sigma);

TauTable tau_niebur(std::uint64_t limit, const SigmaTables& sigma);

// Coefficients of (E4^3 - E6^2) / 1728; needs sigma_3 and sigma_5.
TauTable tau_eisenstein(std::uint64_t limit, const SigmaTables& sigma);

using PrimeTaus = std::map<std::uint64_t, BigInt>;

// tau(p) for every prime p <= table.limit().
PrimeTaus harvest_prime_taus(const TauTable& table);

// Recurrence on prime powers, products over coprime parts.
TauTable tau_multiplicative(std::uint64_t limit, const PrimeTaus& prime_taus);

struct PairAgreement {
  std::size_t first = 0;
  std::size_t second = 0;
  std::optional<std::uint64_t> first_mismatch;
};

struct ReconcileReport {
  std::uint64_t range = 0;
  std::vector<Algo> algos;
  std::vector<PairAgreement> pairs;

  bool all_agree() const;
};

// Pairwise comparison over 1..min(limits). Needs at least two tables.
ReconcileReport reconcile(std::span<const TauTable> tables);

}  // namespace tau
