#include "tau/bounds.hpp"

#include <stdexcept>
#include <string>

namespace tau {

namespace {

BigInt ui_pow(std::uint64_t base, unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

bool is_power_of_ten(std::uint64_t n) {
  while (n >= 10 && n % 10 == 0) n /= 10;
  return n == 1;
}

void require_range(std::uint64_t first, std::uint64_t last, std::uint64_t limit, std::uint64_t min_first,
                   const char* who) {
  if (first < min_first) {
    throw std::invalid_argument(std::string(who) + ": range must start at n >= " + std::to_string(min_first));
  }
  if (last < first || last > limit) {
    throw std::invalid_argument(std::string(who) + ": range " + std::to_string(first) + ".." + std::to_string(last) +
                                " not inside 1.." + std::to_string(limit));
  }
}

Verdict classify(const Enclosure& bound, const BigInt& value) {
  if (bound.contains(value)) return Verdict::near_equality;
  return mpfr_cmp_z(bound.lo().get(), value.get_mpz_t()) > 0 ? Verdict::holds : Verdict::violated;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::near_equality: return "near-equality";
    case Verdict::violated: return "violated";
  }
  return "unknown";
}

void BoundParams::validate() const {
  if (c.sign() <= 0) throw std::invalid_argument("bound constant c must be > 0");
  if (scan_start < 3) throw std::invalid_argument("scan_start must be >= 3");
}

bool deligne_holds(std::uint64_t n, const BigInt& tau_n, const BigInt& sigma0_n) {
  return tau_n * tau_n <= sigma0_n * sigma0_n * ui_pow(n, 11);
}

DeligneCheck check_deligne(const TauTable& tau, const SigmaTables& sigma) {
  if (!sigma.has(0) || sigma.limit() < tau.limit()) {
    throw std::invalid_argument("check_deligne: sigma_0 table does not cover the tau table");
  }
  DeligneCheck out;
  out.ok.assign(tau.limit() + 1, false);
  Rational best = -1;
  for (std::uint64_t n = 1; n <= tau.limit(); ++n) {
    const BigInt& s0 = sigma.at(0, n);
    const BigInt lhs = tau[n] * tau[n];
    const BigInt rhs = s0 * s0 * ui_pow(n, 11);
    out.ok[n] = lhs <= rhs;
    if (!out.ok[n]) out.violations.push_back(n);
    Rational ratio(lhs, rhs);
    ratio.canonicalize();
    if (ratio > best) {
      best = ratio;
      out.argmax = n;
    }
  }
  out.max_ratio = HighReal(best);
  return out;
}

Enclosure robin_bound(std::uint64_t n, const BoundParams& params) {
  const Enclosure nn{BigInt(n)};
  const Enclosure ll = loglog_enclosure(n);
  return exp(params.gamma) * nn * ll + params.robin_const * nn / ll;
}

RobinRecord robin_evaluate(std::uint64_t n, const BigInt& sigma_n, const BoundParams& params) {
  const Enclosure bound = robin_bound(n, params);
  RobinRecord rec;
  rec.n = n;
  rec.sigma = sigma_n;
  rec.bound = bound.mid();
  rec.margin = rec.bound - HighReal(sigma_n);
  rec.verdict = classify(bound, sigma_n);
  if (rec.verdict != Verdict::near_equality && abs(rec.margin) < params.robin_near_tolerance) {
    rec.verdict = Verdict::near_equality;
  }
  return rec;
}

RobinCheck check_robin(const SigmaTables& sigma, const BoundParams& params, std::uint64_t first, std::uint64_t last) {
  require_range(first, last, sigma.limit(), 3, "check_robin");
  RobinCheck out;
  out.records.reserve(last - first + 1);
  for (std::uint64_t n = first; n <= last; ++n) {
    RobinRecord rec = robin_evaluate(n, sigma.at(1, n), params);
    if (rec.verdict == Verdict::violated) out.violations.push_back(n);
    if (rec.verdict == Verdict::near_equality) out.near_equality.push_back(n);
    out.records.push_back(std::move(rec));
  }
  return out;
}

ImpliedC implied_c(const SigmaTables& sigma, std::uint64_t first, std::uint64_t last) {
  require_range(first, last, sigma.limit(), 3, "implied_c");
  ImpliedC out;
  out.value = HighReal(-1L);
  for (std::uint64_t n = first; n <= last; ++n) {
    const HighReal v = HighReal(sigma.at(1, n)) / (HighReal(BigInt(n)) * loglog(n));
    if (v > out.value) {
      out.value = v;
      out.argmax = n;
    }
  }
  return out;
}

T5Evaluation evaluate_t5(std::uint64_t n, const BigInt& tau_n, const HighReal& c) {
  if (n < 3) throw std::invalid_argument("evaluate_t5: log log n is not positive below n = 3");
  if (c.sign() <= 0) throw std::invalid_argument("evaluate_t5: c must be > 0");
  const BigInt abs_tau = abs(tau_n);
  const BigInt n5 = ui_pow(n, 5);
  const Enclosure ll = loglog_enclosure(n);
  const Enclosure cc(c, c);
  const Enclosure factor = Enclosure(BigInt(2)) * cc * cc + cc;
  const Enclosure bound = factor * Enclosure(n5) * ll * ll;

  T5Evaluation out;
  out.bound = bound.mid();
  const HighReal l = loglog(n);
  out.ratio = HighReal(abs_tau) / (HighReal(n5) * l * l);
  out.verdict = classify(bound, abs_tau);
  return out;
}

BoundRecord make_bound_record(std::uint64_t n, const BigInt& tau_n, const BigInt& sigma0_n, const HighReal& c) {
  BoundRecord rec;
  rec.n = n;
  rec.abs_tau = abs(tau_n);
  rec.deligne_ok = deligne_holds(n, tau_n, sigma0_n);
  rec.hecke_ratio = hecke_ratio(n, tau_n);
  if (n >= 3) rec.t5 = evaluate_t5(n, tau_n, c);
  return rec;
}

T5Check check_t5(const TauTable& tau, const SigmaTables& sigma, const BoundParams& params, std::uint64_t first,
                 std::uint64_t last) {
  params.validate();
  require_range(first, last, tau.limit(), 3, "check_t5");
  if (!sigma.has(0) || sigma.limit() < last) throw std::invalid_argument("check_t5: sigma_0 does not cover range");
  T5Check out;
  out.records.reserve(last - first + 1);
  ProfilePoint running{0, HighReal(-1L), 0};
  for (std::uint64_t n = first; n <= last; ++n) {
    BoundRecord rec = make_bound_record(n, tau[n], sigma.at(0, n), params.c);
    const T5Evaluation& t5 = *rec.t5;
    if (t5.verdict == Verdict::violated) ++out.failures;
    if (t5.verdict == Verdict::near_equality) ++out.near_equality;
    if (t5.ratio > running.running_max) {
      running.running_max = t5.ratio;
      running.argmax = n;
    }
    if (is_power_of_ten(n) || n == last) {
      running.upto = n;
      out.profile.push_back(running);
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

CancellationAudit audit_cancellation(std::uint64_t n, const SigmaTables& sigma) {
  if (n == 0) throw std::invalid_argument("audit_cancellation: n must be >= 1");
  if (!sigma.has(1) || sigma.limit() < n) throw std::invalid_argument("audit_cancellation: sigma_1 does not cover n");
  const NieburConvolution conv = niebur_convolution(n, sigma);
  CancellationAudit out;
  out.n = n;
  out.signed_sum = conv.signed_sum;
  out.signed_abs = abs(conv.signed_sum);
  out.absolute_sum = conv.absolute_sum;
  out.ratio = sgn(conv.absolute_sum) == 0 ? HighReal() : HighReal(Rational(out.signed_abs, out.absolute_sum));
  out.reconstructed_tau = ui_pow(n, 4) * sigma.at(1, n) - 24 * conv.signed_sum;
  return out;
}

HighReal hecke_ratio(std::uint64_t n, const BigInt& tau_n) {
  Rational r(abs(tau_n), ui_pow(n, 6));
  r.canonicalize();
  return HighReal(r);
}

HeckeScan hecke_ratio_scan(const TauTable& tau, std::uint64_t first, std::uint64_t last) {
  require_range(first, last, tau.limit(), 1, "hecke_ratio_scan");
  HeckeScan out{HighReal(-1L), 0};
  for (std::uint64_t n = first; n <= last; ++n) {
    HighReal r = hecke_ratio(n, tau[n]);
    if (r > out.max_ratio) {
      out.max_ratio = std::move(r);
      out.argmax = n;
    }
  }
  return out;
}

}  // namespace tau
