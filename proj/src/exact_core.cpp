#include "pascal/exact_core.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace pascal {

namespace {

void require_dimension(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": N must be >= 1");
}

BigRational cube(std::int64_t n) { return BigRational(n * n * n); }

}  // namespace

ExactTridiagonal::ExactTridiagonal(std::vector<BigRational> diag, std::vector<BigRational> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  if (diag_.empty()) throw std::invalid_argument("ExactTridiagonal: dimension must be >= 1");
  if (offdiag_.size() + 1 != diag_.size()) {
    throw std::invalid_argument("ExactTridiagonal: offdiag must have n-1 entries");
  }
}

ExactMatrix ExactTridiagonal::to_dense() const {
  const std::size_t n = size();
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = diag_[i];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = offdiag_[i];
    m(i + 1, i) = offdiag_[i];
  }
  return m;
}

std::vector<BigRational> ExactTridiagonal::apply(std::span<const BigRational> v) const {
  const std::size_t n = size();
  if (v.size() != n) throw std::invalid_argument("ExactTridiagonal::apply: length mismatch");
  std::vector<BigRational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigRational acc = diag_[i] * v[i];
    if (i > 0) acc += offdiag_[i - 1] * v[i - 1];
    if (i + 1 < n) acc += offdiag_[i] * v[i + 1];
    out[i] = std::move(acc);
  }
  return out;
}

BigRational ExactTridiagonal::trace() const {
  BigRational t;
  for (const auto& d : diag_) t += d;
  return t;
}

BigRational ExactTridiagonal::inf_norm() const {
  BigRational best;
  for (std::size_t i = 0; i < size(); ++i) {
    BigRational row = diag_[i].abs();
    if (i > 0) row += offdiag_[i - 1].abs();
    if (i + 1 < size()) row += offdiag_[i].abs();
    if (row > best) best = row;
  }
  return best;
}

std::vector<double> ExactTridiagonal::diag_double() const {
  std::vector<double> out;
  for (const auto& d : diag_) out.push_back(d.to_double());
  return out;
}

std::vector<double> ExactTridiagonal::offdiag_double() const {
  std::vector<double> out;
  for (const auto& e : offdiag_) out.push_back(e.to_double());
  return out;
}

ExactMatrix pascal_symmetric(std::size_t n) {
  require_dimension(n, "pascal_symmetric");
  ExactMatrix t(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      t(j, k) = binomial(j + k, j);
      t(k, j) = t(j, k);
    }
  }
  return t;
}

ExactMatrix pascal_lower(std::size_t n) {
  require_dimension(n, "pascal_lower");
  ExactMatrix psi(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k <= j; ++k) psi(j, k) = binomial(j, k);
  }
  return psi;
}

ExactMatrix sign_diagonal(std::size_t n) {
  require_dimension(n, "sign_diagonal");
  ExactMatrix lambda(n, n);
  for (std::size_t j = 0; j < n; ++j) lambda(j, j) = BigRational(j % 2 == 0 ? 1 : -1);
  return lambda;
}

ExactTridiagonal jacobi_J(std::size_t n) {
  require_dimension(n, "jacobi_J");
  std::vector<BigRational> diag(n);
  std::vector<BigRational> off(n - 1);
  for (std::size_t i = 0; i < n; ++i) diag[i] = BigRational(-static_cast<std::int64_t>(i));
  for (std::size_t i = 1; i < n; ++i) off[i - 1] = BigRational(static_cast<std::int64_t>(i));
  return {std::move(diag), std::move(off)};
}

ExactTridiagonal jacobi_Jtilde(std::size_t n) {
  require_dimension(n, "jacobi_Jtilde");
  std::vector<BigRational> diag(n);
  std::vector<BigRational> off(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::int64_t>(i);
    diag[i] = BigRational(-2 * k * k * k - 3 * k * k - 2 * k);
  }
  for (std::size_t i = 1; i < n; ++i) off[i - 1] = cube(static_cast<std::int64_t>(i));
  return {std::move(diag), std::move(off)};
}

ExactTridiagonal jacobi_JN(std::size_t n) {
  require_dimension(n, "jacobi_JN");
  // Build one row past the block so the decoupling entry can be checked.
  const ExactTridiagonal j = jacobi_J(n + 1);
  const ExactTridiagonal jt = jacobi_Jtilde(n + 1);
  const BigRational n2(static_cast<std::int64_t>(n * n));
  std::vector<BigRational> diag(n);
  std::vector<BigRational> off(n - 1);
  for (std::size_t i = 0; i < n; ++i) diag[i] = n2 * j.diag()[i] - jt.diag()[i];
  for (std::size_t i = 0; i + 1 < n; ++i) off[i] = n2 * j.offdiag()[i] - jt.offdiag()[i];
  const BigRational coupling = n2 * j.offdiag()[n - 1] - jt.offdiag()[n - 1];
  if (!coupling.is_zero()) {
    throw std::logic_error("jacobi_JN: N^2 J - Jtilde does not decouple after row N-1");
  }
  return {std::move(diag), std::move(off)};
}

ExactMatrix dual_S(std::size_t n) {
  const ExactMatrix psi = pascal_lower(n);
  return psi.transpose() * psi;
}

ExactMatrix fourier_image_JN(std::size_t n) {
  const ExactMatrix lambda = sign_diagonal(n);
  ExactMatrix out = lambda * jacobi_JN(n).to_dense() * lambda;
  out *= BigRational(-1);
  const BigRational shift(static_cast<std::int64_t>(n * n) - 1);
  for (std::size_t i = 0; i < n; ++i) out(i, i) += shift;
  return out;
}

ExactMatrix pascal_lower_inverse(std::size_t n) {
  const ExactMatrix lambda = sign_diagonal(n);
  return lambda * pascal_lower(n) * lambda;
}

ExactMatrix pascal_symmetric_inverse(std::size_t n) {
  const ExactMatrix inv = pascal_lower_inverse(n);
  return inv.transpose() * inv;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw std::invalid_argument("commutator: operands must be square of equal size");
  }
  return a * b - b * a;
}

IdentityCheck compare_exact(std::string name, const ExactMatrix& lhs, const ExactMatrix& rhs) {
  IdentityCheck check;
  check.name = std::move(name);
  check.dimension = lhs.rows();
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    check.passed = false;
    check.detail = "shape mismatch";
    return check;
  }
  const auto worst = (lhs - rhs).max_abs_entry();
  check.passed = !worst.has_value();
  if (worst) {
    check.max_abs_defect = worst->value.abs();
    check.witness = worst;
  }
  return check;
}

IdentityReport verify_suite(std::size_t n, const VerifyOptions& options) {
  require_dimension(n, "verify_suite");
  IdentityReport report;
  const ExactMatrix t = pascal_symmetric(n);
  const ExactMatrix psi = pascal_lower(n);
  const ExactMatrix lambda = sign_diagonal(n);
  const ExactMatrix id = ExactMatrix::identity(n);
  const ExactMatrix s = dual_S(n);

  ExactTridiagonal jn = jacobi_JN(n);
  if (options.corrupt_jacobi) {
    auto diag = jn.diag();
    diag[n - 1] += BigRational(1);
    jn = ExactTridiagonal(std::move(diag), jn.offdiag());
  }
  const ExactMatrix j = jn.to_dense();

  report.add(compare_exact("T_N = Psi_N Psi_N^T", t, psi * psi.transpose()));
  const ExactMatrix psi_lambda = psi * lambda;
  report.add(compare_exact("(Psi_N Lambda_N)^2 = I_N", psi_lambda * psi_lambda, id));
  report.add(compare_exact("[T_N, J_N] = 0", t * j, j * t));

  ExactMatrix image = lambda * j * lambda;
  image *= BigRational(-1);
  for (std::size_t i = 0; i < n; ++i) image(i, i) += BigRational(static_cast<std::int64_t>(n * n) - 1);
  report.add(compare_exact("[S_N, -Lambda J_N Lambda + (N^2-1) I] = 0", s * image, image * s));

  const ExactMatrix t_inv = pascal_symmetric_inverse(n);
  report.add(compare_exact("T_N T_N^{-1} = I_N", t * t_inv, id));
  report.add(compare_exact("S_N = Lambda_N T_N^{-1} Lambda_N", s, lambda * t_inv * lambda));

  const auto nn = static_cast<std::int64_t>(n);
  ExactMatrix trace_lhs(1, 1);
  ExactMatrix trace_rhs(1, 1);
  trace_lhs(0, 0) = jn.trace();
  trace_rhs(0, 0) = BigRational(nn * (nn * nn - 1), 2);
  auto trace_check = compare_exact("trace(J_N) = N(N^2-1)/2", trace_lhs, trace_rhs);
  trace_check.dimension = n;
  report.add(std::move(trace_check));
  return report;
}

}  // namespace pascal
