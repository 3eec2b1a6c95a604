#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace tau {

using BigInt = mpz_class;
using Rational = mpq_class;

// Fixed-precision MPFR real. Every arithmetic operator rounds to nearest;
// directed rounding is only available through Enclosure.
class HighReal {
 public:
  static constexpr mpfr_prec_t kPrecision = 256;

  HighReal();
  HighReal(long v);  // NOLINT: implicit, small integer literals
  explicit HighReal(double v);
  explicit HighReal(const BigInt& v, mpfr_rnd_t rnd = MPFR_RNDN);
  explicit HighReal(const Rational& v, mpfr_rnd_t rnd = MPFR_RNDN);

  // Parses a decimal literal; throws std::invalid_argument on junk.
  static HighReal parse(std::string_view text, mpfr_rnd_t rnd = MPFR_RNDN);

  HighReal(const HighReal& other);
  HighReal(HighReal&& other) noexcept;
  HighReal& operator=(const HighReal& other);
  HighReal& operator=(HighReal&& other) noexcept;
  ~HighReal();

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  HighReal& operator+=(const HighReal& rhs);
  HighReal& operator-=(const HighReal& rhs);
  HighReal& operator*=(const HighReal& rhs);
  HighReal& operator/=(const HighReal& rhs);

  friend HighReal operator+(HighReal lhs, const HighReal& rhs) { return lhs += rhs; }
  friend HighReal operator-(HighReal lhs, const HighReal& rhs) { return lhs -= rhs; }
  friend HighReal operator*(HighReal lhs, const HighReal& rhs) { return lhs *= rhs; }
  friend HighReal operator/(HighReal lhs, const HighReal& rhs) { return lhs /= rhs; }
  HighReal operator-() const;

  friend bool operator==(const HighReal& a, const HighReal& b);
  friend std::partial_ordering operator<=>(const HighReal& a, const HighReal& b);

  bool is_nan() const;
  int sign() const;
  double to_double() const;

  // Round-to-nearest with `digits` significant digits, printf %g style.
  std::string str(int digits = 15) const;

 private:
  mpfr_t value_;
};

HighReal abs(const HighReal& x);
HighReal log(const HighReal& x);
HighReal exp(const HighReal& x);
HighReal pow(const HighReal& base, const HighReal& exponent);
HighReal euler_gamma();

// Certified closed interval [lo, hi] built with outward rounding.
// Multiplication, division and log are restricted to positive operands,
// which is all the bound evaluations require.
class Enclosure {
 public:
  Enclosure() = default;
  explicit Enclosure(const BigInt& exact);
  Enclosure(HighReal lo, HighReal hi);

  // Encloses a decimal literal that may not be representable in binary.
  static Enclosure decimal(std::string_view text);
  static Enclosure euler_gamma();

  const HighReal& lo() const { return lo_; }
  const HighReal& hi() const { return hi_; }
  HighReal mid() const;

  bool positive() const { return lo_.sign() > 0; }
  bool contains(const BigInt& v) const;

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);
  friend Enclosure log(const Enclosure& x);
  friend Enclosure exp(const Enclosure& x);

 private:
  HighReal lo_;
  HighReal hi_;
};

}  // namespace tau
