#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pascal {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. Zero is 0/1.
class BigRational {
public:
  BigRational() = default;
  BigRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  BigRational(std::int64_t num, std::int64_t den);
  explicit BigRational(const mpz_class& integer);
  explicit BigRational(const mpq_class& value);

  /// Exact value of a finite double (every binary64 value is a dyadic rational).
  static BigRational from_double(double value);

  /// Parses "p", "-p" or "p/q" in decimal. Throws std::invalid_argument.
  static BigRational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// True iff gcd(num, den) = 1 and den >= 1.
  bool is_canonical() const;

  /// Nearest binary64 (round-to-nearest-even); +-inf when out of range.
  double to_double() const;
  std::string num_string() const { return value_.get_num().get_str(); }
  std::string den_string() const { return value_.get_den().get_str(); }
  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  BigRational abs() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  /// Throws std::domain_error on division by zero.
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class value_{0};
};

/// C(n, k) by the multiplicative formula; 0 when k > n.
BigRational binomial(std::uint64_t n, std::uint64_t k);

/// Same as binomial() but as a GMP integer.
mpz_class binomial_integer(std::uint64_t n, std::uint64_t k);

}  // namespace pascal
