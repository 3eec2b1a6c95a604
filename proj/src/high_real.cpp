#include "tau/high_real.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace tau {

namespace {

HighReal binary_op(const HighReal& a, const HighReal& b, mpfr_rnd_t rnd,
                   int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
  HighReal r;
  op(r.get(), a.get(), b.get(), rnd);
  return r;
}

void require_positive(const Enclosure& e, const char* what) {
  if (!e.positive()) {
    throw std::domain_error(std::string("enclosure must be positive for ") + what);
  }
}

}  // namespace

HighReal::HighReal() {
  mpfr_init2(value_, kPrecision);
  mpfr_set_zero(value_, 1);
}

HighReal::HighReal(long v) {
  mpfr_init2(value_, kPrecision);
  mpfr_set_si(value_, v, MPFR_RNDN);
}

HighReal::HighReal(double v) {
  mpfr_init2(value_, kPrecision);
  mpfr_set_d(value_, v, MPFR_RNDN);
}

HighReal::HighReal(const BigInt& v, mpfr_rnd_t rnd) {
  mpfr_init2(value_, kPrecision);
  mpfr_set_z(value_, v.get_mpz_t(), rnd);
}

HighReal::HighReal(const Rational& v, mpfr_rnd_t rnd) {
  mpfr_init2(value_, kPrecision);
  mpfr_set_q(value_, v.get_mpq_t(), rnd);
}

HighReal HighReal::parse(std::string_view text, mpfr_rnd_t rnd) {
  std::string buf(text);
  HighReal r;
  char* end = nullptr;
  if (!buf.empty()) mpfr_strtofr(r.value_, buf.c_str(), &end, 10, rnd);
  if (buf.empty() || end != buf.c_str() + buf.size() || r.is_nan()) {
    throw std::invalid_argument("not a real number: '" + buf + "'");
  }
  return r;
}

HighReal::HighReal(const HighReal& other) {
  mpfr_init2(value_, kPrecision);
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

HighReal::HighReal(HighReal&& other) noexcept {
  mpfr_init2(value_, kPrecision);
  mpfr_swap(value_, other.value_);
}

HighReal& HighReal::operator=(const HighReal& other) {
  if (this != &other) mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

HighReal& HighReal::operator=(HighReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

HighReal::~HighReal() { mpfr_clear(value_); }

HighReal& HighReal::operator+=(const HighReal& rhs) {
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

HighReal& HighReal::operator-=(const HighReal& rhs) {
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

HighReal& HighReal::operator*=(const HighReal& rhs) {
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

HighReal& HighReal::operator/=(const HighReal& rhs) {
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

HighReal HighReal::operator-() const {
  HighReal r;
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

bool operator==(const HighReal& a, const HighReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const HighReal& a, const HighReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool HighReal::is_nan() const { return mpfr_nan_p(value_) != 0; }

int HighReal::sign() const { return mpfr_sgn(value_); }

double HighReal::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string HighReal::str(int digits) const {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*RNg", digits, value_) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

HighReal abs(const HighReal& x) {
  HighReal r;
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

HighReal log(const HighReal& x) {
  HighReal r;
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

HighReal exp(const HighReal& x) {
  HighReal r;
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

HighReal pow(const HighReal& base, const HighReal& exponent) {
  return binary_op(base, exponent, MPFR_RNDN, mpfr_pow);
}

HighReal euler_gamma() {
  HighReal r;
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

Enclosure::Enclosure(const BigInt& exact) : lo_(exact, MPFR_RNDD), hi_(exact, MPFR_RNDU) {}

Enclosure::Enclosure(HighReal lo, HighReal hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("enclosure with lo > hi");
}

Enclosure Enclosure::decimal(std::string_view text) {
  return Enclosure(HighReal::parse(text, MPFR_RNDD), HighReal::parse(text, MPFR_RNDU));
}

Enclosure Enclosure::euler_gamma() {
  HighReal lo;
  HighReal hi;
  mpfr_const_euler(lo.get(), MPFR_RNDD);
  mpfr_const_euler(hi.get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

HighReal Enclosure::mid() const {
  HighReal m = lo_ + hi_;
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

bool Enclosure::contains(const BigInt& v) const {
  return mpfr_cmp_z(lo_.get(), v.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_.get(), v.get_mpz_t()) >= 0;
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  return Enclosure(binary_op(a.lo_, b.lo_, MPFR_RNDD, mpfr_add), binary_op(a.hi_, b.hi_, MPFR_RNDU, mpfr_add));
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  require_positive(a, "multiplication");
  require_positive(b, "multiplication");
  return Enclosure(binary_op(a.lo_, b.lo_, MPFR_RNDD, mpfr_mul), binary_op(a.hi_, b.hi_, MPFR_RNDU, mpfr_mul));
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  require_positive(a, "division");
  require_positive(b, "division");
  return Enclosure(binary_op(a.lo_, b.hi_, MPFR_RNDD, mpfr_div), binary_op(a.hi_, b.lo_, MPFR_RNDU, mpfr_div));
}

Enclosure log(const Enclosure& x) {
  require_positive(x, "log");
  HighReal lo;
  HighReal hi;
  mpfr_log(lo.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_log(hi.get(), x.hi_.get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure exp(const Enclosure& x) {
  HighReal lo;
  HighReal hi;
  mpfr_exp(lo.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_exp(hi.get(), x.hi_.get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

}  // namespace tau
