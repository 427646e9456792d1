#include "pascal/big_rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace pascal {

BigRational::BigRational(std::int64_t value) {
  // mpq_class has no int64 constructor on every platform; go through a string-free path.
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(value));
  value_ = mpq_class(z);
}

BigRational::BigRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  mpz_class n;
  mpz_class d;
  mpz_set_si(n.get_mpz_t(), static_cast<long>(num));
  mpz_set_si(d.get_mpz_t(), static_cast<long>(den));
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

BigRational::BigRational(const mpz_class& integer) : value_(integer) {}

BigRational::BigRational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

BigRational BigRational::from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("BigRational: non-finite double");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return BigRational(q);
}

double BigRational::to_double() const {
  // mpq_get_d truncates; go through a 53-bit MPFR value for correct rounding.
  mpfr_t r;
  mpfr_init2(r, 53);
  mpfr_set_q(r, value_.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(r, MPFR_RNDN);
  mpfr_clear(r);
  return d;
}

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw std::invalid_argument("BigRational: empty string");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
    throw std::invalid_argument("BigRational: cannot parse '" + std::string(text) + "'");
  }
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::domain_error("BigRational: zero denominator");
  return BigRational(mpq_class(n, d));
}

bool BigRational::is_canonical() const {
  if (value_.get_den() < 1) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return g == 1;
}

std::string BigRational::to_string() const {
  if (is_integer()) return num_string();
  return num_string() + "/" + den_string();
}

BigRational BigRational::abs() const {
  BigRational r = *this;
  mpq_abs(r.value_.get_mpq_t(), r.value_.get_mpq_t());
  return r;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("BigRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const {
  BigRational r = *this;
  mpq_neg(r.value_.get_mpq_t(), r.value_.get_mpq_t());
  return r;
}

mpz_class binomial_integer(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  mpz_class result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= static_cast<unsigned long>(n - k + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return result;
}

BigRational binomial(std::uint64_t n, std::uint64_t k) { return BigRational(binomial_integer(n, k)); }

}  // namespace pascal
