#pragma once

#include "pascal/exact_core.hpp"
#include "pascal/oracle.hpp"
#include "pascal/report.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace pascal {

/// One eigenpair of the N x N Pascal matrix, compared across routes.
struct BenchmarkRow {
  double t_eigenvalue = 0.0;  // via the commuting tridiagonal matrix
  double j_eigenvalue = 0.0;
  double error_via_j = 0.0;   // l2 error of the eigenvector from J_N
  double error_via_t = 0.0;   // l2 error of the eigenvector computed directly from T_N
};

struct BenchmarkOptions {
  std::size_t n = 15;
  unsigned digits = kDefaultOracleDigits;
  std::optional<std::filesystem::path> cache_dir;
};

/// Reference eigenvectors, direct-T and via-J decompositions; rows ascending by
/// t_eigenvalue, eigenvectors paired by rank. Throws std::invalid_argument if N < 2.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkOptions& options);

/// Header "t_eigenvalue,j_eigenvalue,error_via_j,error_via_t"; shortest round-trip floats.
void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows);
nlohmann::json benchmark_to_json(const std::vector<BenchmarkRow>& rows, const BenchmarkOptions& options);

/// verify_suite for N = 1..n_max plus the bispectral relations at N = max(n_max, 3).
IdentityReport run_verify(std::size_t n_max, const VerifyOptions& options = {});

/// Runs the command line (subcommands verify, eigen, benchmark, transform,
/// identities) writing to the given streams. Returns the process exit code:
/// 0 iff every requested check passed.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pascal
