#pragma once

#include "pascal/big_rational.hpp"
#include "pascal/exact_core.hpp"
#include "pascal/exact_matrix.hpp"
#include "pascal/report.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace pascal {

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // unit l2 norm, first significant entry positive
  double residual = 0.0;       // ||A v - value v||_2
  // For decompositions of the Pascal matrix obtained through the commuting
  // tridiagonal matrix: the eigenvalue of that tridiagonal matrix.
  std::optional<double> jacobi_value;
};

enum class DecompositionSource { TridiagonalQL, DenseHouseholderQL, ViaJ };

const char* source_name(DecompositionSource source);

struct SpectralDecomposition {
  std::vector<EigenPair> pairs;  // ascending by value
  DecompositionSource source = DecompositionSource::TridiagonalQL;

  std::size_t size() const { return pairs.size(); }
  std::vector<double> values() const;
};

/// Raised when the QL iteration does not converge within 30 n sweeps.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Eigenvectors with the first entry of magnitude > 1e-12 made positive.
void apply_sign_convention(std::span<double> v);

/// Symmetric tridiagonal eigensolver: implicit QL with Wilkinson shifts,
/// accumulating rotations. `offdiag` has size n - 1. Throws
/// std::invalid_argument for n = 0 or mismatched sizes, ConvergenceError on
/// non-convergence.
SpectralDecomposition tridiag_eigen(std::span<const double> diag, std::span<const double> offdiag);
SpectralDecomposition tridiag_eigen(const ExactTridiagonal& j);

/// Dense symmetric eigensolver: Householder tridiagonalization followed by
/// tridiag_eigen with back-transformed vectors. `a` is row-major n x n.
/// Throws std::invalid_argument if the matrix is not symmetric or not finite.
SpectralDecomposition dense_sym_eigen(std::span<const double> a, std::size_t n);
/// Exact input rounded to binary64. Throws std::overflow_error if an entry
/// does not fit (Pascal matrices overflow near N = 515).
SpectralDecomposition dense_sym_eigen(const ExactMatrix& a);

/// The direct route: dense_sym_eigen applied to the symmetric Pascal matrix.
SpectralDecomposition pascal_eigen_direct(std::size_t n);

/// The stable route: eigenvectors of the commuting tridiagonal matrix J_N,
/// Pascal eigenvalues as exact Rayleigh quotients v^T T v / v^T v (v promoted
/// to rationals, rounded once), sorted ascending by Pascal eigenvalue.
/// Each pair carries the J_N eigenvalue in `jacobi_value`.
SpectralDecomposition pascal_eigen_via_J(std::size_t n);

/// Psi Lambda v: s_n = sum_k C(n,k) (-1)^k v_k.
std::vector<BigRational> binomial_transform(std::span<const BigRational> v);
/// Binary64 evaluation of the same sum.
std::vector<double> binomial_transform(std::span<const double> v);
/// Exact evaluation of the binary64 input, rounded once per entry.
std::vector<double> binomial_transform_exact(std::span<const double> v);

/// Checks on a decomposition of J_N: lambda_i + lambda_{N-1-i} = N^2 - 1
/// within 1e-9 N^2, and |cos| between binomial_transform(v_i) and
/// v_{N-1-i} >= 1 - 1e-8. For odd N also checks the middle value (N^2-1)/2.
IdentityReport reflection_check(std::size_t n, const SpectralDecomposition& j_decomposition);

struct BinomialEigenvector {
  std::vector<double> vector;  // unit norm
  int sign = 1;                // eigenvalue of Psi Lambda: +1 or -1
  double residual = 0.0;       // ||Psi Lambda w - sign w||_2, evaluated exactly then rounded
};

/// An eigenbasis of Psi_N Lambda_N built from pairs of J_N eigenvectors
/// v +- Psi Lambda v (lambda below (N^2-1)/2), plus the middle vector for odd N.
std::vector<BinomialEigenvector> binomial_eigenbasis(std::size_t n);

/// The exact eigenvector of J_N for (N^2-1)/2 (N odd) from the rational
/// recursion with v_0 = 1, v_1 = 1/2. Asserts J v = ((N^2-1)/2) v,
/// Psi Lambda v = v and T v = v exactly (std::logic_error otherwise).
/// Throws std::invalid_argument for even or zero N.
std::vector<BigRational> middle_eigenvector(std::size_t n);

/// JSON: {"source", "n", "pairs":[{"index","eigenvalue","residual"[,"jacobi_eigenvalue"][,"vector"]}]}
nlohmann::json to_json(const SpectralDecomposition& d, bool include_vectors);
/// CSV header: index,eigenvalue,residual[,jacobi_eigenvalue][,v0,...]
void write_csv(std::ostream& out, const SpectralDecomposition& d, bool include_vectors);

}  // namespace pascal
