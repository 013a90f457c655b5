#pragma once

#include <mpfr.h>

#include <string>

#include "localh/rational.hpp"

namespace localh {

/// Arbitrary-precision binary float (MPFR, round-to-nearest unless noted).
/// Binary operations evaluate at the larger operand precision.
class BigFloat {
 public:
  explicit BigFloat(long precision_bits = 128);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(BigFloat o) noexcept;
  ~BigFloat();

  long precision_bits() const noexcept;

  static BigFloat pi(long precision_bits);
  static BigFloat from_rational(const Rational& q, long precision_bits);
  static BigFloat from_long(long v, long precision_bits);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  BigFloat mul_ui(unsigned long v) const;
  BigFloat div_ui(unsigned long v) const;
  BigFloat cos() const;
  BigFloat sqr() const;
  BigFloat abs() const;
  BigFloat mul_2exp(long e) const;  // exact

  BigFloat add_rounded_up(const BigFloat& o) const;    // MPFR_RNDU
  BigFloat sub_rounded_down(const BigFloat& o) const;  // MPFR_RNDD

  int sign() const noexcept;
  /// Exact comparison with a rational: sign of (*this - q).
  int compare(const Rational& q) const noexcept;
  int compare(const BigFloat& o) const noexcept;

  double to_double() const noexcept;
  std::string to_string(std::size_t digits = 25) const;

 private:
  mpfr_t v_;
};

/// A value together with its precision and a conservative absolute error
/// bound, for comparing transcendental quantities against exact rational
/// interval endpoints with outward rounding.
struct HighPrecisionValue {
  BigFloat value;
  long precision_bits = 0;
  BigFloat abs_error;

  BigFloat lower() const { return value.sub_rounded_down(abs_error); }
  BigFloat upper() const { return value.add_rounded_up(abs_error); }
};

}  // namespace localh
