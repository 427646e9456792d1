#pragma once

#include "pascal/big_rational.hpp"

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pascal {

/// Arbitrary-precision binary floating value (MPFR) whose precision is set in
/// decimal digits and carried by the value itself; binary operations round to
/// the larger operand precision. No global state, so values may be used from
/// several threads independently.
class HPNumber {
public:
  static constexpr unsigned kMinDigits = 50;

  /// Zero at the given precision. Throws std::invalid_argument if digits < kMinDigits.
  explicit HPNumber(unsigned digits);
  HPNumber(std::int64_t value, unsigned digits);
  HPNumber(int value, unsigned digits) : HPNumber(std::int64_t{value}, digits) {}
  HPNumber(double value, unsigned digits);
  HPNumber(const BigRational& value, unsigned digits);
  /// Decimal string such as "-2935.4" or "1.25e-7". Throws std::invalid_argument.
  static HPNumber parse(std::string_view text, unsigned digits);

  HPNumber(const HPNumber& other);
  HPNumber(HPNumber&& other) noexcept;
  HPNumber& operator=(const HPNumber& other);
  HPNumber& operator=(HPNumber&& other) noexcept;
  ~HPNumber();

  unsigned digits() const { return digits_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// Nearest binary64.
  double to_double() const;
  /// Exact value (every finite binary float is a dyadic rational).
  BigRational to_rational() const;
  /// Scientific notation with `significant` digits, e.g. "1.8765853e-08".
  std::string to_string(unsigned significant) const;
  /// Full-precision decimal string that parses back to a value within one ulp.
  std::string to_string() const;

  HPNumber& operator+=(const HPNumber& rhs);
  HPNumber& operator-=(const HPNumber& rhs);
  HPNumber& operator*=(const HPNumber& rhs);
  /// Division by zero throws std::domain_error.
  HPNumber& operator/=(const HPNumber& rhs);

  friend HPNumber operator+(HPNumber a, const HPNumber& b) { return a += b; }
  friend HPNumber operator-(HPNumber a, const HPNumber& b) { return a -= b; }
  friend HPNumber operator*(HPNumber a, const HPNumber& b) { return a *= b; }
  friend HPNumber operator/(HPNumber a, const HPNumber& b) { return a /= b; }
  HPNumber operator-() const;

  friend bool operator==(const HPNumber& a, const HPNumber& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const HPNumber& a, const HPNumber& b);

private:
  void raise_precision(unsigned digits);

  unsigned digits_;
  mpfr_t value_;
};

HPNumber abs(const HPNumber& x);
HPNumber sqrt(const HPNumber& x);
/// 10^exponent at the given precision.
HPNumber pow10(int exponent, unsigned digits);
/// Binary precision used for a number of decimal digits (with guard bits).
mpfr_prec_t bits_for_digits(unsigned digits);

}  // namespace pascal
