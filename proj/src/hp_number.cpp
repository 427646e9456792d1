#include "pascal/hp_number.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pascal {

mpfr_prec_t bits_for_digits(unsigned digits) {
  // log2(10) = 3.3219...; 16 guard bits.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

HPNumber::HPNumber(unsigned digits) : digits_(digits) {
  if (digits < kMinDigits) {
    throw std::invalid_argument("HPNumber: precision must be at least " + std::to_string(kMinDigits) + " digits");
  }
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_zero(value_, 1);
}

HPNumber::HPNumber(std::int64_t value, unsigned digits) : HPNumber(digits) {
  mpfr_set_sj(value_, value, MPFR_RNDN);
}

HPNumber::HPNumber(double value, unsigned digits) : HPNumber(digits) {
  if (!std::isfinite(value)) throw std::invalid_argument("HPNumber: non-finite double");
  mpfr_set_d(value_, value, MPFR_RNDN);
}

HPNumber::HPNumber(const BigRational& value, unsigned digits) : HPNumber(digits) {
  mpfr_set_q(value_, value.value().get_mpq_t(), MPFR_RNDN);
}

HPNumber HPNumber::parse(std::string_view text, unsigned digits) {
  HPNumber out(digits);
  const std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(out.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size() || !mpfr_number_p(out.value_)) {
    throw std::invalid_argument("HPNumber: cannot parse '" + s + "'");
  }
  return out;
}

HPNumber::HPNumber(const HPNumber& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

HPNumber::HPNumber(HPNumber&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

HPNumber& HPNumber::operator=(const HPNumber& other) {
  if (this != &other) {
    digits_ = other.digits_;
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

HPNumber& HPNumber::operator=(HPNumber&& other) noexcept {
  if (this != &other) {
    std::swap(digits_, other.digits_);
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

HPNumber::~HPNumber() { mpfr_clear(value_); }

void HPNumber::raise_precision(unsigned digits) {
  if (digits <= digits_) return;
  mpfr_prec_round(value_, bits_for_digits(digits), MPFR_RNDN);
  digits_ = digits;
}

double HPNumber::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

BigRational HPNumber::to_rational() const {
  if (!mpfr_number_p(value_)) throw std::domain_error("HPNumber: non-finite value");
  if (is_zero()) return {};
  mpz_class mantissa;
  const mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  mpq_class q(mantissa);
  if (exponent >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return BigRational(q);
}

std::string HPNumber::to_string(unsigned significant) const {
  if (significant == 0) significant = 1;
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", static_cast<int>(significant - 1), value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

std::string HPNumber::to_string() const {
  // Enough decimal digits to round-trip the binary precision.
  const auto bits = static_cast<double>(mpfr_get_prec(value_));
  return to_string(static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1);
}

HPNumber& HPNumber::operator+=(const HPNumber& rhs) {
  raise_precision(rhs.digits_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

HPNumber& HPNumber::operator-=(const HPNumber& rhs) {
  raise_precision(rhs.digits_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

HPNumber& HPNumber::operator*=(const HPNumber& rhs) {
  raise_precision(rhs.digits_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

HPNumber& HPNumber::operator/=(const HPNumber& rhs) {
  if (rhs.is_zero()) throw std::domain_error("HPNumber: division by zero");
  raise_precision(rhs.digits_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

HPNumber HPNumber::operator-() const {
  HPNumber out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const HPNumber& a, const HPNumber& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

HPNumber abs(const HPNumber& x) {
  HPNumber out(x);
  mpfr_abs(out.get(), out.get(), MPFR_RNDN);
  return out;
}

HPNumber sqrt(const HPNumber& x) {
  if (x.sign() < 0) throw std::domain_error("HPNumber: sqrt of a negative value");
  HPNumber out(x);
  mpfr_sqrt(out.get(), out.get(), MPFR_RNDN);
  return out;
}

HPNumber pow10(int exponent, unsigned digits) {
  HPNumber out(std::int64_t{10}, digits);
  mpfr_pow_si(out.get(), out.get(), exponent, MPFR_RNDN);
  return out;
}

}  // namespace pascal
