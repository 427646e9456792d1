#include "pascal/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

namespace pascal {

namespace {

struct IntegerTridiagonal {
  std::vector<mpz_class> diag;
  std::vector<mpz_class> offdiag_sq;  // e_i^2
};

IntegerTridiagonal integer_entries(const ExactTridiagonal& j) {
  IntegerTridiagonal out;
  for (const auto& d : j.diag()) {
    if (!d.is_integer()) throw std::invalid_argument("oracle: tridiagonal entries must be integers");
    out.diag.push_back(d.numerator());
  }
  for (const auto& e : j.offdiag()) {
    if (!e.is_integer()) throw std::invalid_argument("oracle: tridiagonal entries must be integers");
    if (e.is_zero()) throw std::invalid_argument("oracle: off-diagonal entries must be nonzero");
    out.offdiag_sq.push_back(e.numerator() * e.numerator());
  }
  return out;
}

// Leading minors P_k = b^k det(J_k - (a/b) I) over the integers; returns the
// number of sign changes (zeros skipped), i.e. eigenvalues strictly below a/b.
std::size_t sign_changes(const IntegerTridiagonal& t, const mpz_class& a, const mpz_class& b) {
  const std::size_t n = t.diag.size();
  const mpz_class b2 = b * b;
  mpz_class prev2 = 1;  // P_{k-2}
  mpz_class prev1 = 1;  // P_{k-1}
  int last_sign = 1;
  std::size_t changes = 0;
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class current = (t.diag[k] * b - a) * prev1;
    if (k > 0) current -= t.offdiag_sq[k - 1] * b2 * prev2;
    const int s = sgn(current);
    if (s != 0) {
      if (s != last_sign) ++changes;
      last_sign = s;
    }
    prev2 = std::move(prev1);
    prev1 = std::move(current);
  }
  return changes;
}

bool is_root(const IntegerTridiagonal& t, const mpz_class& r) {
  const std::size_t n = t.diag.size();
  mpz_class prev2 = 1;
  mpz_class prev1 = 1;
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class current = (t.diag[k] - r) * prev1;
    if (k > 0) current -= t.offdiag_sq[k - 1] * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(current);
  }
  return prev1 == 0;
}

std::size_t exact_count(const IntegerTridiagonal& t, const BigRational& x) {
  return sign_changes(t, x.numerator(), x.denominator());
}

// Pivot count of the LDL^T factorization of J - x I in working precision.
std::size_t hp_count(const std::vector<HPNumber>& diag, const std::vector<HPNumber>& offdiag_sq, const HPNumber& x,
                     const HPNumber& pivmin) {
  std::size_t negatives = 0;
  HPNumber q = diag[0] - x;
  for (std::size_t k = 0;; ++k) {
    if (abs(q) < pivmin) q = -pivmin;
    if (q.sign() < 0) ++negatives;
    if (k + 1 == diag.size()) break;
    q = (diag[k + 1] - x) - offdiag_sq[k] / q;
  }
  return negatives;
}

void apply_sign_convention(std::vector<HPNumber>& v, unsigned digits) {
  const HPNumber threshold(1e-12, digits);
  for (const auto& x : v) {
    if (abs(x) > threshold) {
      if (x.sign() < 0) {
        for (auto& y : v) y = -y;
      }
      return;
    }
  }
}

HPNumber norm2(const std::vector<HPNumber>& v, unsigned digits) {
  HPNumber s(digits);
  for (const auto& x : v) s += x * x;
  return sqrt(s);
}

// Solves (J - sigma I) y = b in place by Gaussian elimination with partial
// pivoting on the tridiagonal structure. Returns false on an exactly zero pivot.
bool solve_shifted(const ExactTridiagonal& j, const HPNumber& sigma, std::vector<HPNumber>& b, unsigned digits) {
  const std::size_t n = j.size();
  std::vector<HPNumber> d;
  std::vector<HPNumber> dl;
  std::vector<HPNumber> du;
  for (std::size_t i = 0; i < n; ++i) d.push_back(HPNumber(j.diag()[i], digits) - sigma);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    dl.emplace_back(j.offdiag()[i], digits);
    du.emplace_back(j.offdiag()[i], digits);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (abs(d[i]) >= abs(dl[i])) {
      if (d[i].is_zero()) return false;
      const HPNumber fact = dl[i] / d[i];
      d[i + 1] -= fact * du[i];
      b[i + 1] -= fact * b[i];
      dl[i] = HPNumber(digits);  // no fill-in
    } else {
      const HPNumber fact = d[i] / dl[i];
      d[i] = dl[i];
      const HPNumber temp = d[i + 1];
      d[i + 1] = du[i] - fact * temp;
      if (i + 2 < n) {
        dl[i] = du[i + 1];  // fill-in on the second superdiagonal
        du[i + 1] = -(fact * dl[i]);
      } else {
        dl[i] = HPNumber(digits);
      }
      du[i] = temp;
      const HPNumber bt = b[i];
      b[i] = b[i + 1];
      b[i + 1] = bt - fact * b[i + 1];
    }
  }
  if (d[n - 1].is_zero()) return false;
  b[n - 1] /= d[n - 1];
  if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
  for (std::size_t ii = n - 2; ii-- > 0;) b[ii] = (b[ii] - du[ii] * b[ii + 1] - dl[ii] * b[ii + 2]) / d[ii];
  return true;
}

void check_digits(unsigned digits) {
  if (digits < HPNumber::kMinDigits) {
    throw std::invalid_argument("oracle: precision must be at least " + std::to_string(HPNumber::kMinDigits) +
                                " digits");
  }
}

std::filesystem::path cache_file(const std::filesystem::path& dir, std::size_t n, unsigned digits) {
  return dir / ("jacobi_n" + std::to_string(n) + "_digits" + std::to_string(digits) + ".json");
}

}  // namespace

std::size_t sturm_count_exact(const ExactTridiagonal& j, const BigRational& x) {
  return exact_count(integer_entries(j), x);
}

std::vector<HPEigenvalue> hp_eigenvalues(const ExactTridiagonal& j, unsigned digits) {
  check_digits(digits);
  const IntegerTridiagonal exact = integer_entries(j);
  const std::size_t n = j.size();

  std::vector<HPNumber> diag;
  std::vector<HPNumber> offdiag_sq;
  for (const auto& d : exact.diag) diag.emplace_back(BigRational(d), digits);
  for (const auto& e2 : exact.offdiag_sq) offdiag_sq.emplace_back(BigRational(e2), digits);

  // Gershgorin enclosure, widened by one so both ends are strict bounds.
  BigRational lo_exact;
  BigRational hi_exact;
  for (std::size_t i = 0; i < n; ++i) {
    BigRational radius;
    if (i > 0) radius += j.offdiag()[i - 1].abs();
    if (i + 1 < n) radius += j.offdiag()[i].abs();
    const BigRational lo_i = j.diag()[i] - radius - BigRational(1);
    const BigRational hi_i = j.diag()[i] + radius + BigRational(1);
    if (i == 0 || lo_i < lo_exact) lo_exact = lo_i;
    if (i == 0 || hi_i > hi_exact) hi_exact = hi_i;
  }
  const BigRational norm = j.inf_norm();
  const HPNumber scale(norm > BigRational(1) ? norm : BigRational(1), digits);
  const HPNumber tolerance = pow10(5 - static_cast<int>(digits), digits) * scale;
  const HPNumber pivmin = pow10(-2 * static_cast<int>(digits), digits) * scale;
  const HPNumber half(BigRational(1, 2), digits);

  std::vector<HPEigenvalue> out;
  for (std::size_t k = 0; k < n; ++k) {
    HPNumber lo(lo_exact, digits);
    HPNumber hi(hi_exact, digits);
    // Invariant: count(lo) <= k < count(hi).
    auto bisect = [&](bool use_exact) {
      while (hi - lo > tolerance) {
        const HPNumber mid = (lo + hi) * half;
        if (!(mid > lo && mid < hi)) break;  // interval at working resolution
        const std::size_t c =
            use_exact ? exact_count(exact, mid.to_rational()) : hp_count(diag, offdiag_sq, mid, pivmin);
        if (c <= k) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
    };
    bisect(false);
    auto certified = [&] {
      return exact_count(exact, lo.to_rational()) == k && exact_count(exact, hi.to_rational()) == k + 1;
    };
    if (!certified()) {
      // Rounding in the pivot recurrence misplaced an endpoint; redo with exact counts.
      lo = HPNumber(lo_exact, digits);
      hi = HPNumber(hi_exact, digits);
      bisect(true);
      if (!certified()) throw std::logic_error("hp_eigenvalues: certification failed");
    }

    HPEigenvalue ev{(lo + hi) * half, lo, hi, false};
    // Integer eigenvalues (e.g. (N^2-1)/2 for odd N) are recognized exactly.
    mpz_class r;
    mpfr_get_z(r.get_mpz_t(), ev.value.get(), MPFR_RNDN);
    const BigRational r_exact(r);
    if (lo.to_rational() <= r_exact && r_exact <= hi.to_rational() && is_root(exact, r)) {
      ev.value = HPNumber(r_exact, digits);
      ev.lower = ev.value;
      ev.upper = ev.value;
      ev.exact = true;
    }
    out.push_back(std::move(ev));
  }
  return out;
}

HPEigenPair hp_eigenvector(const ExactTridiagonal& j, const HPEigenvalue& lambda, unsigned digits) {
  check_digits(digits);
  const std::size_t n = j.size();
  HPEigenPair out{lambda.value, {}, lambda.width(), HPNumber(digits), lambda.exact};
  if (n == 1) {
    out.vector.emplace_back(1, digits);
    return out;
  }
  const BigRational norm = j.inf_norm();
  const HPNumber scale(norm > BigRational(1) ? norm : BigRational(1), digits);
  HPNumber sigma = lambda.value;
  const HPNumber step = lambda.width().is_zero() ? pow10(-static_cast<int>(digits), digits) * scale : lambda.width();
  const HPNumber tolerance = pow10(10 - static_cast<int>(digits), digits);

  std::vector<HPNumber> x;
  for (std::size_t i = 0; i < n; ++i) x.emplace_back(BigRational(static_cast<std::int64_t>(7 + i % 3), 7), digits);
  {
    const HPNumber s = norm2(x, digits);
    for (auto& xi : x) xi /= s;
  }
  for (int iteration = 0; iteration < 20; ++iteration) {
    std::vector<HPNumber> y = x;
    int perturbations = 0;
    while (!solve_shifted(j, sigma, y, digits)) {
      if (++perturbations > 8) throw std::runtime_error("hp_eigenvector: shift stays singular");
      sigma += step;
      y = x;
    }
    const HPNumber s = norm2(y, digits);
    for (auto& yi : y) yi /= s;
    apply_sign_convention(y, digits);
    std::vector<HPNumber> diff;
    for (std::size_t i = 0; i < n; ++i) diff.push_back(y[i] - x[i]);
    x = std::move(y);
    if (iteration > 0 && norm2(diff, digits) <= tolerance) break;
  }
  out.vector = std::move(x);

  std::vector<HPNumber> r;
  for (std::size_t i = 0; i < n; ++i) {
    HPNumber acc = (HPNumber(j.diag()[i], digits) - out.value) * out.vector[i];
    if (i > 0) acc += HPNumber(j.offdiag()[i - 1], digits) * out.vector[i - 1];
    if (i + 1 < n) acc += HPNumber(j.offdiag()[i], digits) * out.vector[i + 1];
    r.push_back(std::move(acc));
  }
  out.residual = norm2(r, digits);
  return out;
}

double eigenvector_error(std::span<const double> computed, const HPEigenPair& reference) {
  if (computed.size() != reference.vector.size()) throw std::invalid_argument("eigenvector_error: length mismatch");
  const unsigned digits = reference.value.digits();
  HPNumber s(digits);
  for (std::size_t i = 0; i < computed.size(); ++i) {
    const HPNumber d = HPNumber(computed[i], digits) - reference.vector[i];
    s += d * d;
  }
  return sqrt(s).to_double();
}

nlohmann::json to_json(const ReferenceSpectrum& spectrum) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : spectrum.pairs) {
    nlohmann::json vec = nlohmann::json::array();
    for (const auto& x : p.vector) vec.push_back(x.to_string());
    pairs.push_back({{"value", p.value.to_string()},
                     {"width", p.width.to_string()},
                     {"residual", p.residual.to_string()},
                     {"exact", p.exact_value},
                     {"vector", std::move(vec)}});
  }
  return {{"n", spectrum.n}, {"digits", spectrum.digits}, {"pairs", std::move(pairs)}};
}

ReferenceSpectrum reference_spectrum_from_json(const nlohmann::json& j) {
  try {
    ReferenceSpectrum out;
    out.n = j.at("n").get<std::size_t>();
    out.digits = j.at("digits").get<unsigned>();
    check_digits(out.digits);
    for (const auto& p : j.at("pairs")) {
      HPEigenPair pair{HPNumber::parse(p.at("value").get<std::string>(), out.digits), {},
                       HPNumber::parse(p.at("width").get<std::string>(), out.digits),
                       HPNumber::parse(p.at("residual").get<std::string>(), out.digits), p.at("exact").get<bool>()};
      for (const auto& x : p.at("vector")) pair.vector.push_back(HPNumber::parse(x.get<std::string>(), out.digits));
      if (pair.vector.size() != out.n) throw std::invalid_argument("vector length differs from n");
      out.pairs.push_back(std::move(pair));
    }
    if (out.pairs.size() != out.n) throw std::invalid_argument("pair count differs from n");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("reference spectrum JSON: ") + e.what());
  }
}

ReferenceSpectrum reference_spectrum(std::size_t n, unsigned digits,
                                     const std::optional<std::filesystem::path>& cache_dir) {
  check_digits(digits);
  if (n == 0) throw std::invalid_argument("reference_spectrum: N must be >= 1");
  if (cache_dir) {
    std::ifstream in(cache_file(*cache_dir, n, digits));
    if (in) {
      try {
        ReferenceSpectrum cached = reference_spectrum_from_json(nlohmann::json::parse(in));
        if (cached.n == n && cached.digits == digits) return cached;
      } catch (const std::exception&) {
        // Unreadable cache entries are recomputed below.
      }
    }
  }

  const ExactTridiagonal j = jacobi_JN(n);
  ReferenceSpectrum out;
  out.n = n;
  out.digits = digits;
  for (const auto& ev : hp_eigenvalues(j, digits)) out.pairs.push_back(hp_eigenvector(j, ev, digits));

  if (cache_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*cache_dir, ec);
    const auto target = cache_file(*cache_dir, n, digits);
    const auto temp = target.string() + ".tmp";
    {
      std::ofstream file(temp);
      file << to_json(out).dump(1) << '\n';
    }
    std::filesystem::rename(temp, target, ec);  // a failed cache write is not an error
  }
  return out;
}

std::optional<std::filesystem::path> oracle_cache_from_env() {
  const char* value = std::getenv("PASCAL_ORACLE_CACHE");
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::filesystem::path(value);
}

}  // namespace pascal
