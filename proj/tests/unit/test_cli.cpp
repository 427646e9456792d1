#include "pascal/cli.hpp"

#include "../common/reference_spectrum.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace pascal;
using pascal::testing::kReferenceRows;
using pascal::testing::matches_printed;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "pascal_spectra");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("pascal_cli_test_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(CliVerify, AllSuitesPassUpToTwenty) {
  const auto r = run({"verify", "--n-max", "20"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("ALL PASSED"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL "), std::string::npos);
}

TEST(CliVerify, TrivialSize) { EXPECT_EQ(run({"verify", "--n-max", "1"}).code, 0); }

TEST(CliVerify, InjectedCorruptionFailsWithWitness) {
  const auto r = run({"verify", "--n-max", "4", "--inject-corruption"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("FAILED"), std::string::npos);
}

TEST(CliVerify, RejectsZero) { EXPECT_NE(run({"verify", "--n-max", "0"}).code, 0); }

TEST(CliEigen, OddSizeContainsOne) {
  const auto r = run({"eigen", "--n", "3", "--route", "via-j"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "index,eigenvalue,residual,jacobi_eigenvalue");
  bool found = false;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string index, value;
    std::getline(fields, index, ',');
    std::getline(fields, value, ',');
    if (std::abs(std::stod(value) - 1.0) <= 1e-14) found = true;
  }
  EXPECT_TRUE(found) << r.out;
}

TEST(CliEigen, JsonAndDeterminism) {
  const auto a = run({"eigen", "--n", "9", "--route", "direct", "--format", "json", "--vectors"});
  const auto b = run({"eigen", "--n", "9", "--route", "direct", "--format", "json", "--vectors"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["source"], "dense-householder-QL");
  EXPECT_EQ(j["pairs"].size(), 9u);
  EXPECT_EQ(j["pairs"][0]["vector"].size(), 9u);
  EXPECT_NE(run({"eigen", "--n", "3", "--route", "bogus"}).code, 0);
  EXPECT_NE(run({"eigen"}).code, 0);
}

TEST(CliTransform, UnitVector) {
  const auto input = write_temp("unit.txt", "1 0 0\n");
  const auto r = run({"transform", "--input", input.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1\n1\n1\n");
  const auto f = run({"transform", "--input", input.string(), "--mode", "binary64"});
  EXPECT_EQ(f.out, "1\n1\n1\n");
  std::filesystem::remove(input);
}

TEST(CliTransform, ExactDecimalsAndInvolution) {
  // s_n = sum_k C(n,k) (-1)^k v_k on (0.1, 1/3, -2e-1).
  const auto input = write_temp("dec.txt", "0.1, 1/3, -2e-1\n");
  const auto r = run({"transform", "--input", input.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1/10\n-7/30\n-23/30\n");
  const auto back = write_temp("back.txt", r.out);
  EXPECT_EQ(run({"transform", "--input", back.string()}).out, "1/10\n1/3\n-1/5\n");
  const auto bad = write_temp("bad.txt", "1 x 2\n");
  EXPECT_EQ(run({"transform", "--input", bad.string()}).code, 2);
  EXPECT_EQ(run({"transform", "--input", "/nonexistent/file"}).code, 2);
  for (const auto& p : {input, back, bad}) std::filesystem::remove(p);
}

TEST(CliIdentities, OrthogonalityToForty) {
  const auto r = run({"identities", "--which", "orthogonality", "--bounds", "40"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(CliIdentities, EachFamilyPasses) {
  for (const std::string which : {"bispectral", "fourier", "fubar", "recovery"}) {
    const auto r = run({"identities", "--which", which, "--bounds", "4"});
    EXPECT_EQ(r.code, 0) << which << "\n" << r.out;
  }
}

TEST(CliBenchmark, TwoByTwoIsTiny) {
  const auto rows = run_benchmark({2, 60, std::nullopt});
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& row : rows) {
    EXPECT_LE(row.error_via_j, 1e-14);
    EXPECT_LE(row.error_via_t, 1e-14);
  }
  EXPECT_THROW(run_benchmark({1, 60, std::nullopt}), std::invalid_argument);
  EXPECT_NE(run({"benchmark", "--n", "1"}).code, 0);
}

TEST(CliBenchmark, ReferenceTableColumns) {
  const auto rows = run_benchmark({15, 60, std::nullopt});
  ASSERT_EQ(rows.size(), 15u);
  for (std::size_t k = 0; k < 15; ++k) {
    EXPECT_TRUE(matches_printed(rows[k].t_eigenvalue, kReferenceRows[k].t_eigenvalue)) << k;
    EXPECT_TRUE(matches_printed(rows[k].j_eigenvalue, kReferenceRows[k].j_eigenvalue)) << k;
    EXPECT_LE(rows[k].error_via_j, 1e-13) << k;
    if (k > 0) {
      EXPECT_LT(rows[k - 1].t_eigenvalue, rows[k].t_eigenvalue);
    }
  }
  for (std::size_t k = 0; k < 3; ++k) EXPECT_GE(rows[k].error_via_t, 1e-7) << k;
}

TEST(CliBenchmark, DirectRouteDegradesAtTwenty) {
  const auto rows = run_benchmark({20, 60, std::nullopt});
  double worst = 0.0;
  for (const auto& row : rows) {
    EXPECT_LE(row.error_via_j, 1e-12);
    worst = std::max(worst, row.error_via_t);
  }
  // The smallest eigenvectors from T_20 carry percent-level errors.
  EXPECT_GE(worst, 1e-2);
}

TEST(CliBenchmark, CsvJsonOutputAndCache) {
  const auto dir = std::filesystem::temp_directory_path() / "pascal_cli_test_cache";
  std::filesystem::remove_all(dir);
  const auto out_file = std::filesystem::temp_directory_path() / "pascal_cli_test_bench.csv";
  const auto a = run({"benchmark", "--n", "6", "--digits", "50", "--cache-dir", dir.string()});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_TRUE(std::filesystem::exists(dir / "jacobi_n6_digits50.json"));
  const auto b = run({"--output", out_file.string(), "benchmark", "--n", "6", "--digits", "50", "--cache-dir",
                      dir.string()});
  ASSERT_EQ(b.code, 0);
  EXPECT_TRUE(b.out.empty());
  std::stringstream file_text;
  file_text << std::ifstream(out_file).rdbuf();
  EXPECT_EQ(file_text.str(), a.out);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "t_eigenvalue,j_eigenvalue,error_via_j,error_via_t");
  const auto j = run({"benchmark", "--n", "6", "--digits", "50", "--format", "json"});
  const auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed["rows"].size(), 6u);
  EXPECT_EQ(parsed["digits"], 50);
  std::filesystem::remove_all(dir);
  std::filesystem::remove(out_file);
}
