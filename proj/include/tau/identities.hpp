#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tau/engines.hpp"

namespace tau {

enum class IdentityKind { leading, hecke, multiplicative };

std::string_view to_string(IdentityKind kind);

// One failed identity: `lhs` is the table value at n, `rhs` what the identity predicts.
struct IdentityViolation {
  IdentityKind kind;
  std::uint64_t n = 0;
  BigInt lhs;
  BigInt rhs;
  std::string detail;
};

// tau(1) = 1.
std::vector<IdentityViolation> check_leading(const TauTable& table);

// tau(p^a) = tau(p) tau(p^{a-1}) - p^11 tau(p^{a-2}) for every prime power p^a <= limit, a >= 2.
std::vector<IdentityViolation> check_hecke(const TauTable& table);

// tau(mn) = tau(m) tau(n) for every coprime pair 1 <= m < n with mn <= limit.
std::vector<IdentityViolation> check_multiplicative(const TauTable& table);

std::vector<IdentityViolation> check_all_identities(const TauTable& table);

}  // namespace tau
