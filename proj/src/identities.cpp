#include "tau/identities.hpp"

#include <numeric>

namespace tau {

std::string_view to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::leading: return "leading";
    case IdentityKind::hecke: return "hecke";
    case IdentityKind::multiplicative: return "multiplicative";
  }
  return "unknown";
}

std::vector<IdentityViolation> check_leading(const TauTable& table) {
  std::vector<IdentityViolation> out;
  if (table[1] != 1) out.push_back({IdentityKind::leading, 1, table[1], BigInt(1), "tau(1)"});
  return out;
}

std::vector<IdentityViolation> check_hecke(const TauTable& table) {
  std::vector<IdentityViolation> out;
  const std::uint64_t limit = table.limit();
  BigInt p11;
  for (std::uint64_t p : primes_up_to(limit)) {
    mpz_ui_pow_ui(p11.get_mpz_t(), p, 11);
    std::uint64_t prev2 = 1;
    std::uint64_t prev = p;
    for (unsigned a = 2; prev <= limit / p; ++a) {
      const std::uint64_t cur = prev * p;
      const BigInt rhs = table[p] * table[prev] - p11 * table[prev2];
      if (table[cur] != rhs) {
        out.push_back({IdentityKind::hecke, cur, table[cur], rhs,
                       "p=" + std::to_string(p) + " a=" + std::to_string(a)});
      }
      prev2 = prev;
      prev = cur;
    }
  }
  return out;
}

std::vector<IdentityViolation> check_multiplicative(const TauTable& table) {
  std::vector<IdentityViolation> out;
  const std::uint64_t limit = table.limit();
  BigInt rhs;
  for (std::uint64_t m = 1; m * (m + 1) <= limit; ++m) {
    for (std::uint64_t n = m + 1; m * n <= limit; ++n) {
      if (std::gcd(m, n) != 1) continue;
      rhs = table[m] * table[n];
      if (table[m * n] != rhs) {
        out.push_back({IdentityKind::multiplicative, m * n, table[m * n], rhs,
                       "m=" + std::to_string(m) + " n=" + std::to_string(n)});
      }
    }
  }
  return out;
}

std::vector<IdentityViolation> check_all_identities(const TauTable& table) {
  auto out = check_leading(table);
  for (auto&& v : check_hecke(table)) out.push_back(std::move(v));
  for (auto&& v : check_multiplicative(table)) out.push_back(std::move(v));
  return out;
}

}  // namespace tau
