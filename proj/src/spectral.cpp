#include "pascal/spectral.hpp"

#include "pascal/format.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace pascal {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// A binary64 vector written exactly as integers times a common power of two:
// v_i = u_i * 2^exponent.
struct ScaledIntegers {
  std::vector<mpz_class> u;
  long exponent = 0;
};

ScaledIntegers to_scaled_integers(std::span<const double> v) {
  long emin = std::numeric_limits<long>::max();
  std::vector<std::pair<mpz_class, long>> parts;
  parts.reserve(v.size());
  for (double x : v) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite vector entry");
    int e = 0;
    const double m = std::frexp(x, &e);
    mpz_class mant;
    mpz_set_d(mant.get_mpz_t(), std::ldexp(m, 53));  // exact: 53-bit integer
    const long exponent = static_cast<long>(e) - 53;
    if (x != 0.0) emin = std::min(emin, exponent);
    parts.emplace_back(std::move(mant), exponent);
  }
  if (emin == std::numeric_limits<long>::max()) emin = 0;
  ScaledIntegers out;
  out.exponent = emin;
  for (auto& [mant, exponent] : parts) {
    mpz_class u;
    if (mant != 0) mpz_mul_2exp(u.get_mpz_t(), mant.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent - emin));
    out.u.push_back(std::move(u));
  }
  return out;
}

// Nearest binary64 to s * 2^exponent.
double scaled_to_double(const mpz_class& s, long exponent) {
  mpq_class q(s);
  if (exponent >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return BigRational(q).to_double();
}

// Psi Lambda u over the integers.
std::vector<mpz_class> binomial_transform_integers(const std::vector<mpz_class>& u) {
  const std::size_t n = u.size();
  std::vector<mpz_class> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= r; ++k) {
      if (u[k] == 0) continue;
      const mpz_class c = binomial_integer(r, k);
      if (k % 2 == 0) {
        mpz_addmul(out[r].get_mpz_t(), c.get_mpz_t(), u[k].get_mpz_t());
      } else {
        mpz_submul(out[r].get_mpz_t(), c.get_mpz_t(), u[k].get_mpz_t());
      }
    }
  }
  return out;
}

std::vector<double> normalized(std::vector<double> v) {
  const double s = norm2(v);
  if (s == 0.0) throw std::logic_error("cannot normalize the zero vector");
  for (double& x : v) x /= s;
  return v;
}

void sort_pairs(SpectralDecomposition& d) {
  std::stable_sort(d.pairs.begin(), d.pairs.end(),
                   [](const EigenPair& a, const EigenPair& b) { return a.value < b.value; });
}

// Implicit QL with Wilkinson shifts on (d, e), e[i] coupling i and i+1,
// accumulating the rotations into the row-major n x n matrix z.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z, std::size_t n) {
  e.resize(n, 0.0);
  e[n - 1] = 0.0;
  std::size_t sweeps = 0;
  const std::size_t max_sweeps = 30 * n;
  for (std::size_t l = 0; l < n; ++l) {
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m == l) break;
      if (++sweeps > max_sweeps) {
        throw ConvergenceError("tridiag_eigen: no convergence after " + std::to_string(max_sweeps) + " sweeps");
      }
      // Wilkinson shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t ii = m; ii-- > l;) {
        const double f = s * e[ii];
        const double b = c * e[ii];
        r = std::hypot(f, g);
        e[ii + 1] = r;
        if (r == 0.0) {
          d[ii + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[ii + 1] - p;
        r = (d[ii] - g) * s + 2.0 * c * b;
        p = s * r;
        d[ii + 1] = g + p;
        g = c * r - b;
        for (std::size_t k = 0; k < n; ++k) {
          const double t = z[k * n + ii + 1];
          z[k * n + ii + 1] = s * z[k * n + ii] + c * t;
          z[k * n + ii] = c * z[k * n + ii] - s * t;
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (true);
  }
}

SpectralDecomposition pairs_from_columns(const std::vector<double>& values, const std::vector<double>& z,
                                         std::size_t n, DecompositionSource source) {
  SpectralDecomposition out;
  out.source = source;
  for (std::size_t k = 0; k < n; ++k) {
    EigenPair pair;
    pair.value = values[k];
    pair.vector.resize(n);
    for (std::size_t i = 0; i < n; ++i) pair.vector[i] = z[i * n + k];
    pair.vector = normalized(std::move(pair.vector));
    apply_sign_convention(pair.vector);
    out.pairs.push_back(std::move(pair));
  }
  sort_pairs(out);
  return out;
}

// Householder reduction of a symmetric matrix (row-major in z) to tridiagonal
// form. On exit z holds the orthogonal transformation Q with A = Q T Q^T,
// d the diagonal and e[i] (i >= 1) the subdiagonal entry (i, i-1).
void householder_tridiagonalize(std::vector<double>& z, std::size_t n, std::vector<double>& d,
                                std::vector<double>& e) {
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return z[r * n + c]; };
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k < i; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (std::size_t k = 0; k < i; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j < i; ++j) {
          at(j, i) = at(i, j) / h;
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (std::size_t k = j + 1; k < i; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j < i; ++j) {
          f = at(i, j);
          g = e[j] - hh * f;
          e[j] = g;
          for (std::size_t k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] != 0.0) {
      for (std::size_t j = 0; j < i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k < i; ++k) g += at(i, k) * at(k, j);
        for (std::size_t k = 0; k < i; ++k) at(k, j) -= g * at(k, i);
      }
    }
    d[i] = at(i, i);
    at(i, i) = 1.0;
    for (std::size_t j = 0; j < i; ++j) at(j, i) = at(i, j) = 0.0;
  }
}

std::vector<mpz_class> pascal_symmetric_integers(std::size_t n) {
  std::vector<mpz_class> t(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c <= r; ++c) t[r * n + c] = t[c * n + r] = binomial_integer(r + c, r);
  }
  return t;
}

IdentityCheck tolerance_check(std::string name, std::size_t n, double defect, double tolerance,
                              std::size_t where) {
  IdentityCheck check;
  check.name = std::move(name);
  check.dimension = n;
  check.passed = defect <= tolerance;
  check.max_abs_defect = std::isfinite(defect) ? BigRational::from_double(defect) : BigRational(1);
  check.detail = "defect " + format_double(defect) + " vs tolerance " + format_double(tolerance);
  if (!check.passed) check.witness = DefectWitness{where, 0, check.max_abs_defect};
  return check;
}

}  // namespace

const char* source_name(DecompositionSource source) {
  switch (source) {
    case DecompositionSource::TridiagonalQL: return "tridiagonal-QL";
    case DecompositionSource::DenseHouseholderQL: return "dense-householder-QL";
    case DecompositionSource::ViaJ: return "via-J";
  }
  return "?";
}

std::vector<double> SpectralDecomposition::values() const {
  std::vector<double> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(p.value);
  return out;
}

void apply_sign_convention(std::span<double> v) {
  for (double x : v) {
    if (std::abs(x) > 1e-12) {
      if (x < 0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

SpectralDecomposition tridiag_eigen(std::span<const double> diag, std::span<const double> offdiag) {
  const std::size_t n = diag.size();
  if (n == 0) throw std::invalid_argument("tridiag_eigen: empty matrix");
  if (offdiag.size() + 1 != n) throw std::invalid_argument("tridiag_eigen: offdiag must have size n-1");
  const auto finite = [](double x) { return std::isfinite(x); };
  if (!std::all_of(diag.begin(), diag.end(), finite) || !std::all_of(offdiag.begin(), offdiag.end(), finite)) {
    throw std::invalid_argument("tridiag_eigen: non-finite entry");
  }
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(offdiag.begin(), offdiag.end());
  std::vector<double> z(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
  ql_implicit(d, e, z, n);
  SpectralDecomposition out = pairs_from_columns(d, z, n, DecompositionSource::TridiagonalQL);
  for (auto& pair : out.pairs) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double r = (diag[i] - pair.value) * pair.vector[i];
      if (i > 0) r += offdiag[i - 1] * pair.vector[i - 1];
      if (i + 1 < n) r += offdiag[i] * pair.vector[i + 1];
      s += r * r;
    }
    pair.residual = std::sqrt(s);
  }
  return out;
}

SpectralDecomposition tridiag_eigen(const ExactTridiagonal& j) {
  return tridiag_eigen(j.diag_double(), j.offdiag_double());
}

SpectralDecomposition dense_sym_eigen(std::span<const double> a, std::size_t n) {
  if (n == 0 || a.size() != n * n) throw std::invalid_argument("dense_sym_eigen: expects a non-empty n x n matrix");
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!std::isfinite(a[r * n + c])) throw std::invalid_argument("dense_sym_eigen: non-finite entry");
      if (a[r * n + c] != a[c * n + r]) throw std::invalid_argument("dense_sym_eigen: matrix is not symmetric");
    }
  }
  std::vector<double> z(a.begin(), a.end());
  std::vector<double> d;
  std::vector<double> e;
  householder_tridiagonalize(z, n, d, e);
  // Shift the subdiagonal so that e[i] couples i and i+1.
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  ql_implicit(d, e, z, n);
  SpectralDecomposition out = pairs_from_columns(d, z, n, DecompositionSource::DenseHouseholderQL);
  for (auto& pair : out.pairs) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      double acc = -pair.value * pair.vector[r];
      for (std::size_t c = 0; c < n; ++c) acc += a[r * n + c] * pair.vector[c];
      s += acc * acc;
    }
    pair.residual = std::sqrt(s);
  }
  return out;
}

SpectralDecomposition dense_sym_eigen(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("dense_sym_eigen: matrix must be square");
  std::vector<double> values;
  values.reserve(a.rows() * a.cols());
  for (const auto& x : a.entries()) {
    const double v = x.to_double();
    if (!std::isfinite(v)) throw std::overflow_error("dense_sym_eigen: entry " + x.to_string() + " overflows binary64");
    values.push_back(v);
  }
  return dense_sym_eigen(values, a.rows());
}

SpectralDecomposition pascal_eigen_direct(std::size_t n) {
  if (n == 0) throw std::invalid_argument("pascal_eigen_direct: N must be >= 1");
  return dense_sym_eigen(pascal_symmetric(n));
}

SpectralDecomposition pascal_eigen_via_J(std::size_t n) {
  if (n == 0) throw std::invalid_argument("pascal_eigen_via_J: N must be >= 1");
  const SpectralDecomposition j = tridiag_eigen(jacobi_JN(n));
  const std::vector<mpz_class> t = pascal_symmetric_integers(n);
  SpectralDecomposition out;
  out.source = DecompositionSource::ViaJ;
  for (const auto& jp : j.pairs) {
    const ScaledIntegers v = to_scaled_integers(jp.vector);
    std::vector<mpz_class> tv(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) mpz_addmul(tv[r].get_mpz_t(), t[r * n + c].get_mpz_t(), v.u[c].get_mpz_t());
    }
    mpz_class num;
    mpz_class den;
    for (std::size_t i = 0; i < n; ++i) {
      mpz_addmul(num.get_mpz_t(), v.u[i].get_mpz_t(), tv[i].get_mpz_t());
      mpz_addmul(den.get_mpz_t(), v.u[i].get_mpz_t(), v.u[i].get_mpz_t());
    }
    EigenPair pair;
    pair.value = BigRational(mpq_class(num, den)).to_double();
    pair.vector = jp.vector;
    pair.jacobi_value = jp.value;
    // Residual ||T v - value v|| evaluated exactly, then rounded.
    const BigRational lambda = BigRational::from_double(pair.value);
    BigRational sum_sq;
    for (std::size_t i = 0; i < n; ++i) {
      const BigRational r = BigRational(tv[i]) - lambda * BigRational(v.u[i]);
      sum_sq += r * r;
    }
    mpq_class scaled = sum_sq.value();
    const long twice = 2 * v.exponent;
    if (twice >= 0) {
      mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<mp_bitcnt_t>(twice));
    } else {
      mpq_div_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<mp_bitcnt_t>(-twice));
    }
    pair.residual = std::sqrt(BigRational(scaled).to_double());
    out.pairs.push_back(std::move(pair));
  }
  sort_pairs(out);
  return out;
}

std::vector<BigRational> binomial_transform(std::span<const BigRational> v) {
  if (v.empty()) throw std::invalid_argument("binomial_transform: empty vector");
  std::vector<BigRational> out(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    BigRational acc;
    for (std::size_t k = 0; k <= r; ++k) {
      if (v[k].is_zero()) continue;
      const BigRational term = binomial(r, k) * v[k];
      if (k % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    out[r] = std::move(acc);
  }
  return out;
}

std::vector<double> binomial_transform(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("binomial_transform: empty vector");
  std::vector<double> out(v.size(), 0.0);
  for (std::size_t r = 0; r < v.size(); ++r) {
    double c = 1.0;  // C(r, k)
    double acc = 0.0;
    for (std::size_t k = 0; k <= r; ++k) {
      acc += (k % 2 == 0 ? c : -c) * v[k];
      c = c * static_cast<double>(r - k) / static_cast<double>(k + 1);
    }
    out[r] = acc;
  }
  return out;
}

std::vector<double> binomial_transform_exact(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("binomial_transform: empty vector");
  const ScaledIntegers s = to_scaled_integers(v);
  const std::vector<mpz_class> t = binomial_transform_integers(s.u);
  std::vector<double> out;
  out.reserve(t.size());
  for (const auto& x : t) out.push_back(scaled_to_double(x, s.exponent));
  return out;
}

IdentityReport reflection_check(std::size_t n, const SpectralDecomposition& j) {
  if (j.size() != n) throw std::invalid_argument("reflection_check: decomposition size differs from N");
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  const double value_tolerance = 1e-9 * n2;
  IdentityReport report;

  double worst = 0.0;
  std::size_t where = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double defect = std::abs(j.pairs[i].value + j.pairs[n - 1 - i].value - (n2 - 1.0));
    if (defect > worst || std::isnan(defect)) {
      worst = defect;
      where = i;
    }
  }
  report.add(tolerance_check("lambda_i + lambda_{N-1-i} = N^2 - 1", n, worst, value_tolerance, where));

  worst = 0.0;
  where = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<double> w = binomial_transform_exact(j.pairs[i].vector);
    const auto& partner = j.pairs[n - 1 - i].vector;
    const double dot = std::inner_product(w.begin(), w.end(), partner.begin(), 0.0);
    const double defect = 1.0 - std::abs(dot) / norm2(w);
    if (defect > worst) {
      worst = defect;
      where = i;
    }
  }
  report.add(tolerance_check("binomial transform maps v_i onto v_{N-1-i}", n, std::max(worst, 0.0), 1e-8, where));

  if (n % 2 == 1) {
    const double defect = std::abs(j.pairs[n / 2].value - (n2 - 1.0) / 2.0);
    report.add(tolerance_check("(N^2-1)/2 is the middle eigenvalue", n, defect, value_tolerance, n / 2));
  }
  return report;
}

std::vector<BinomialEigenvector> binomial_eigenbasis(std::size_t n) {
  if (n == 0) throw std::invalid_argument("binomial_eigenbasis: N must be >= 1");
  const SpectralDecomposition j = tridiag_eigen(jacobi_JN(n));
  std::vector<std::vector<double>> candidates;
  std::vector<int> signs;
  for (std::size_t i = 0; i < n / 2; ++i) {
    const auto& v = j.pairs[i].vector;
    const std::vector<double> image = binomial_transform_exact(v);
    std::vector<double> plus(n);
    std::vector<double> minus(n);
    for (std::size_t k = 0; k < n; ++k) {
      plus[k] = v[k] + image[k];
      minus[k] = v[k] - image[k];
    }
    candidates.push_back(std::move(plus));
    signs.push_back(1);
    candidates.push_back(std::move(minus));
    signs.push_back(-1);
  }
  if (n % 2 == 1) {
    std::vector<double> middle;
    for (const auto& x : middle_eigenvector(n)) middle.push_back(x.to_double());
    candidates.push_back(std::move(middle));
    signs.push_back(1);
  }

  std::vector<BinomialEigenvector> out;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    BinomialEigenvector b;
    b.vector = normalized(std::move(candidates[c]));
    apply_sign_convention(b.vector);
    b.sign = signs[c];
    const ScaledIntegers s = to_scaled_integers(b.vector);
    const std::vector<mpz_class> t = binomial_transform_integers(s.u);
    mpz_class sum_sq;
    for (std::size_t k = 0; k < n; ++k) {
      const mpz_class r = b.sign > 0 ? mpz_class(t[k] - s.u[k]) : mpz_class(t[k] + s.u[k]);
      mpz_addmul(sum_sq.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t());
    }
    b.residual = std::sqrt(scaled_to_double(sum_sq, 2 * s.exponent));
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<BigRational> middle_eigenvector(std::size_t n) {
  if (n == 0 || n % 2 == 0) throw std::invalid_argument("middle_eigenvector: N must be odd and positive");
  std::vector<BigRational> v(n);
  v[0] = BigRational(1);
  if (n > 1) v[1] = BigRational(1, 2);
  const auto nn = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n);
  const BigRational mu(nn - 1, 2);
  for (std::size_t ku = 1; ku + 1 < n; ++ku) {
    const auto k = static_cast<std::int64_t>(ku);
    const BigRational numerator = mu * v[ku] + BigRational(k * (nn - 2 * k * k - 3 * k - 2)) * v[ku] -
                                  BigRational(k * (nn - k * k)) * v[ku - 1];
    v[ku + 1] = numerator / BigRational((k + 1) * (nn - (k + 1) * (k + 1)));
  }

  // Exact postconditions; a failure here means the build is wrong.
  const auto jv = jacobi_JN(n).apply(v);
  const auto psi_lambda_v = binomial_transform(v);
  const auto tv = pascal_symmetric(n).apply(v);
  for (std::size_t i = 0; i < n; ++i) {
    if (jv[i] != mu * v[i]) throw std::logic_error("middle_eigenvector: J v != ((N^2-1)/2) v");
    if (psi_lambda_v[i] != v[i]) throw std::logic_error("middle_eigenvector: Psi Lambda v != v");
    if (tv[i] != v[i]) throw std::logic_error("middle_eigenvector: T v != v");
  }
  return v;
}

nlohmann::json to_json(const SpectralDecomposition& d, bool include_vectors) {
  nlohmann::json pairs = nlohmann::json::array();
  for (std::size_t i = 0; i < d.pairs.size(); ++i) {
    const auto& p = d.pairs[i];
    nlohmann::json entry;
    entry["index"] = i;
    entry["eigenvalue"] = p.value;
    entry["residual"] = p.residual;
    if (p.jacobi_value) entry["jacobi_eigenvalue"] = *p.jacobi_value;
    if (include_vectors) entry["vector"] = p.vector;
    pairs.push_back(std::move(entry));
  }
  return {{"source", source_name(d.source)}, {"n", d.pairs.size()}, {"pairs", std::move(pairs)}};
}

void write_csv(std::ostream& out, const SpectralDecomposition& d, bool include_vectors) {
  const bool with_jacobi = !d.pairs.empty() && d.pairs.front().jacobi_value.has_value();
  out << "index,eigenvalue,residual";
  if (with_jacobi) out << ",jacobi_eigenvalue";
  if (include_vectors) {
    for (std::size_t k = 0; k < d.pairs.size(); ++k) out << ",v" << k;
  }
  out << '\n';
  for (std::size_t i = 0; i < d.pairs.size(); ++i) {
    const auto& p = d.pairs[i];
    out << i << ',' << format_double(p.value) << ',' << format_double(p.residual);
    if (with_jacobi) out << ',' << format_double(p.jacobi_value.value_or(std::nan("")));
    if (include_vectors) {
      for (double x : p.vector) out << ',' << format_double(x);
    }
    out << '\n';
  }
}

}  // namespace pascal
