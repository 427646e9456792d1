#include "pascal/polynomial.hpp"

#include <stdexcept>

namespace pascal {

Polynomial::Polynomial(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<std::int64_t> coefficients) {
  for (auto c : coefficients) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const BigRational& c) { return Polynomial(std::vector<BigRational>{c}); }

Polynomial Polynomial::monomial(std::size_t degree, const BigRational& c) {
  std::vector<BigRational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::interpolate(std::span<const BigRational> xs, std::span<const BigRational> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("Polynomial::interpolate: size mismatch");
  const std::size_t n = xs.size();
  // Divided differences, then expand the Newton form.
  std::vector<BigRational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const BigRational dx = xs[i] - xs[i - level];
      if (dx.is_zero()) throw std::invalid_argument("Polynomial::interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
    }
  }
  Polynomial result;
  for (std::size_t i = n; i-- > 0;) {
    // result = result * (x - xs[i]) + dd[i]
    result = result * Polynomial(std::vector<BigRational>{-xs[i], BigRational(1)});
    result += Polynomial::constant(dd[i]);
  }
  return result;
}

BigRational Polynomial::operator()(const BigRational& x) const {
  BigRational acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

Polynomial Polynomial::shifted(const BigRational& s) const {
  if (s.is_zero()) return *this;
  const Polynomial linear(std::vector<BigRational>{s, BigRational(1)});
  Polynomial acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * linear;
    acc += Polynomial::constant(coeffs_[i]);
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(char variable) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigRational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const BigRational mag = c.abs();
    const bool unit = mag == BigRational(1);
    if (i == 0 || !unit) out += mag.to_string();
    if (i > 0) {
      out += variable;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

}  // namespace pascal
