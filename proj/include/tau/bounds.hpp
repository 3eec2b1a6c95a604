#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tau/arith.hpp"
#include "tau/engines.hpp"
#include "tau/high_real.hpp"

namespace tau {

enum class Verdict { holds, near_equality, violated };

std::string_view to_string(Verdict v);

struct BoundParams {
  // Constant in sigma(n) < c n log log n; must be positive.
  HighReal c{1L};
  Enclosure gamma = Enclosure::euler_gamma();
  Enclosure robin_const = Enclosure::decimal("0.6482");
  std::uint64_t scan_start = 16;
  // Robin comparisons closer than this (absolute) are reported as near-equality.
  HighReal robin_near_tolerance = HighReal::parse("0.001");

  // Throws std::invalid_argument if c <= 0 or scan_start < 3.
  void validate() const;
};

// ---- Deligne: tau(n)^2 <= sigma_0(n)^2 n^11, exact -------------------------

struct DeligneCheck {
  std::vector<bool> ok;  // index n, ok[0] unused
  std::vector<std::uint64_t> violations;
  HighReal max_ratio;  // max tau^2 / (sigma_0^2 n^11)
  std::uint64_t argmax = 1;
};

bool deligne_holds(std::uint64_t n, const BigInt& tau_n, const BigInt& sigma0_n);
DeligneCheck check_deligne(const TauTable& tau, const SigmaTables& sigma);

// ---- Robin: sigma(n) < e^gamma n log log n + 0.6482 n / log log n ----------

struct RobinRecord {
  std::uint64_t n = 0;
  BigInt sigma;
  HighReal bound;   // enclosure midpoint
  HighReal margin;  // bound - sigma
  Verdict verdict = Verdict::holds;
};

struct RobinCheck {
  std::vector<RobinRecord> records;
  std::vector<std::uint64_t> violations;
  std::vector<std::uint64_t> near_equality;
};

Enclosure robin_bound(std::uint64_t n, const BoundParams& params);
RobinRecord robin_evaluate(std::uint64_t n, const BigInt& sigma_n, const BoundParams& params);
// Range first..last, first >= 3, last <= sigma.limit().
RobinCheck check_robin(const SigmaTables& sigma, const BoundParams& params, std::uint64_t first, std::uint64_t last);

// ---- smallest c with sigma(n) < c n log log n over a range -----------------

struct ImpliedC {
  HighReal value;
  std::uint64_t argmax = 0;
};

ImpliedC implied_c(const SigmaTables& sigma, std::uint64_t first, std::uint64_t last);

// ---- claimed bound |tau(n)| <= (2c^2 + c) n^5 (log log n)^2 ----------------

struct T5Evaluation {
  HighReal bound;  // (2c^2 + c) n^5 (log log n)^2
  HighReal ratio;  // |tau(n)| / (n^5 (log log n)^2)
  Verdict verdict = Verdict::holds;
};

T5Evaluation evaluate_t5(std::uint64_t n, const BigInt& tau_n, const HighReal& c);

struct BoundRecord {
  std::uint64_t n = 0;
  BigInt abs_tau;
  bool deligne_ok = false;
  HighReal hecke_ratio;
  std::optional<T5Evaluation> t5;  // absent for n < 3
};

BoundRecord make_bound_record(std::uint64_t n, const BigInt& tau_n, const BigInt& sigma0_n, const HighReal& c);

struct ProfilePoint {
  std::uint64_t upto = 0;
  HighReal running_max;
  std::uint64_t argmax = 0;
};

struct T5Check {
  std::vector<BoundRecord> records;
  // Running max of the ratio at each power of ten inside the range, and at its end.
  std::vector<ProfilePoint> profile;
  std::uint64_t failures = 0;
  std::uint64_t near_equality = 0;
};

// Range first..last with first >= 3; sigma supplies sigma_0 for the records.
T5Check check_t5(const TauTable& tau, const SigmaTables& sigma, const BoundParams& params, std::uint64_t first,
                 std::uint64_t last);

// ---- sign cancellation inside the convolution ------------------------------

struct CancellationAudit {
  std::uint64_t n = 0;
  BigInt signed_sum;
  BigInt signed_abs;
  BigInt absolute_sum;
  HighReal ratio;  // signed_abs / absolute_sum, 0 for the empty sum at n = 1
  BigInt reconstructed_tau;
};

CancellationAudit audit_cancellation(std::uint64_t n, const SigmaTables& sigma);

// ---- Hecke ratio |tau(n)| / n^6 --------------------------------------------

struct HeckeScan {
  HighReal max_ratio;
  std::uint64_t argmax = 0;
};

HighReal hecke_ratio(std::uint64_t n, const BigInt& tau_n);
HeckeScan hecke_ratio_scan(const TauTable& tau, std::uint64_t first, std::uint64_t last);

}  // namespace tau
