#pragma once

#include "pascal/big_rational.hpp"
#include "pascal/exact_core.hpp"
#include "pascal/hp_number.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace pascal {

inline constexpr unsigned kDefaultOracleDigits = 200;

/// An eigenvalue enclosed by a certified interval [lower, upper] that contains
/// exactly one eigenvalue. When `exact` is set the value is an integer root of
/// the characteristic polynomial and lower = upper = value.
struct HPEigenvalue {
  HPNumber value;
  HPNumber lower;
  HPNumber upper;
  bool exact = false;

  HPNumber width() const { return upper - lower; }
};

struct HPEigenPair {
  HPNumber value;
  std::vector<HPNumber> vector;  // unit l2 norm, first significant entry positive
  HPNumber width;                // certified enclosure width of the eigenvalue
  HPNumber residual;             // ||J v - value v||_2 in working precision
  bool exact_value = false;
};

/// Number of eigenvalues strictly below x, from the exact integer leading
/// principal minors det(J_k - x I) (Sturm sequence). Requires nonzero
/// off-diagonal entries; throws std::invalid_argument otherwise.
std::size_t sturm_count_exact(const ExactTridiagonal& j, const BigRational& x);

/// All eigenvalues of a symmetric tridiagonal matrix with exact entries,
/// ascending, each bisected from Gershgorin bounds to width
/// <= 10^(5 - digits) * max(||J||_inf, 1) and certified by exact Sturm counts
/// at both endpoints. Integer eigenvalues are recognized exactly.
/// Throws std::invalid_argument if digits < 50 or J has a zero off-diagonal.
std::vector<HPEigenvalue> hp_eigenvalues(const ExactTridiagonal& j, unsigned digits = kDefaultOracleDigits);

/// Inverse iteration on J - lambda I (pivoted tridiagonal solves) until the
/// iterate changes by <= 10^(10 - digits); unit norm, sign convention applied.
/// An exactly singular shift is perturbed by one enclosure width (or 10^-digits).
HPEigenPair hp_eigenvector(const ExactTridiagonal& j, const HPEigenvalue& lambda,
                           unsigned digits = kDefaultOracleDigits);

/// l2 distance between a binary64 eigenvector and a reference, evaluated in
/// the reference precision, then rounded. Throws std::invalid_argument on a
/// length mismatch.
double eigenvector_error(std::span<const double> computed, const HPEigenPair& reference);

/// Reference eigenpairs of J_N (equivalently of the Pascal matrix T_N).
struct ReferenceSpectrum {
  std::size_t n = 0;
  unsigned digits = kDefaultOracleDigits;
  std::vector<HPEigenPair> pairs;  // ascending by eigenvalue
};

/// Computes (or loads from `cache_dir`) the reference eigenpairs of J_N.
/// Cache files are keyed by (N, digits); unreadable or mismatched cache
/// entries are recomputed and rewritten.
ReferenceSpectrum reference_spectrum(std::size_t n, unsigned digits = kDefaultOracleDigits,
                                     const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

/// Cache directory from the PASCAL_ORACLE_CACHE environment variable, if set.
std::optional<std::filesystem::path> oracle_cache_from_env();

/// Decimal strings at full precision.
nlohmann::json to_json(const ReferenceSpectrum& spectrum);
/// Throws std::invalid_argument on malformed input.
ReferenceSpectrum reference_spectrum_from_json(const nlohmann::json& j);

}  // namespace pascal
