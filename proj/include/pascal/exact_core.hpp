#pragma once

#include "pascal/big_rational.hpp"
#include "pascal/exact_matrix.hpp"
#include "pascal/report.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pascal {

/// Symmetric tridiagonal matrix with exact entries. offdiag[i] couples rows i and i+1.
class ExactTridiagonal {
public:
  ExactTridiagonal(std::vector<BigRational> diag, std::vector<BigRational> offdiag);

  std::size_t size() const { return diag_.size(); }
  const std::vector<BigRational>& diag() const { return diag_; }
  const std::vector<BigRational>& offdiag() const { return offdiag_; }

  ExactMatrix to_dense() const;
  std::vector<BigRational> apply(std::span<const BigRational> v) const;
  BigRational trace() const;
  /// Largest absolute row sum.
  BigRational inf_norm() const;

  std::vector<double> diag_double() const;
  std::vector<double> offdiag_double() const;

  friend bool operator==(const ExactTridiagonal&, const ExactTridiagonal&) = default;

private:
  std::vector<BigRational> diag_;
  std::vector<BigRational> offdiag_;
};

/// (T_N)_{jk} = C(j+k, j).
ExactMatrix pascal_symmetric(std::size_t n);
/// (Psi_N)_{jk} = C(j, k), lower triangular with unit diagonal.
ExactMatrix pascal_lower(std::size_t n);
/// Lambda_N = diag(1, -1, 1, ...).
ExactMatrix sign_diagonal(std::size_t n);

/// Truncation of the Jacobi matrix with a_n = n, b_n = -n.
ExactTridiagonal jacobi_J(std::size_t n);
/// Truncation of the Jacobi matrix with alpha_n = n^3, beta_n = -2n^3 - 3n^2 - 2n.
ExactTridiagonal jacobi_Jtilde(std::size_t n);
/// The N x N Jacobi matrix commuting with T_N: top-left block of N^2 J - Jtilde.
ExactTridiagonal jacobi_JN(std::size_t n);

/// S_N = Psi_N^T Psi_N.
ExactMatrix dual_S(std::size_t n);
/// -Lambda_N J_N Lambda_N + (N^2 - 1) I_N, the finite Fourier image of J_N.
ExactMatrix fourier_image_JN(std::size_t n);
/// Psi_N^{-1} = Lambda_N Psi_N Lambda_N.
ExactMatrix pascal_lower_inverse(std::size_t n);
/// T_N^{-1} = Psi_N^{-T} Psi_N^{-1}, assembled from the triangular inverse.
ExactMatrix pascal_symmetric_inverse(std::size_t n);

/// AB - BA. Throws std::invalid_argument unless both are square of equal size.
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

/// Check that `lhs - rhs` vanishes and summarize the defect.
IdentityCheck compare_exact(std::string name, const ExactMatrix& lhs, const ExactMatrix& rhs);

/// Options used by tests and the CLI to inject a deliberate error into J_N.
struct VerifyOptions {
  bool corrupt_jacobi = false;
};

/// Runs every exact identity for dimension N: T = Psi Psi^T, (Psi Lambda)^2 = I,
/// [T, J_N] = 0, [S, fourier_image_JN] = 0, S = Lambda T^{-1} Lambda,
/// T T^{-1} = I, trace(J_N) = N(N^2-1)/2.
IdentityReport verify_suite(std::size_t n, const VerifyOptions& options = {});

}  // namespace pascal
