#pragma once

#include "pascal/big_rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pascal {

/// Univariate polynomial with exact rational coefficients, stored in ascending
/// degree with no trailing zeros. The zero polynomial has no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coefficients);
  Polynomial(std::initializer_list<std::int64_t> coefficients);

  static Polynomial constant(const BigRational& c);
  static Polynomial monomial(std::size_t degree, const BigRational& c = BigRational(1));

  /// Unique polynomial of degree < xs.size() through the points (Newton form).
  static Polynomial interpolate(std::span<const BigRational> xs, std::span<const BigRational> ys);

  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  BigRational operator()(const BigRational& x) const;
  BigRational operator()(std::int64_t x) const { return (*this)(BigRational(x)); }

  /// p(x + s).
  Polynomial shifted(const BigRational& s) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const BigRational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const BigRational& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(char variable = 'x') const;

private:
  void trim();
  std::vector<BigRational> coeffs_;
};

}  // namespace pascal
