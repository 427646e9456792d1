#include "pascal/oracle.hpp"
#include "pascal/spectral.hpp"

#include "../common/reference_spectrum.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <fstream>

using namespace pascal;
using pascal::testing::kReferenceRows;
using pascal::testing::matches_printed;

namespace {

std::filesystem::path fresh_temp_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("pascal_oracle_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(HPNumberTest, PrecisionGuardAndArithmetic) {
  EXPECT_THROW(HPNumber(49u), std::invalid_argument);
  const HPNumber third = HPNumber(1, 60) / HPNumber(3, 60);
  EXPECT_EQ(third.to_string(10), "3.333333333e-01");
  EXPECT_EQ(third.digits(), 60u);
  // 1/3 is accurate to the configured precision.
  const HPNumber defect = abs(third * HPNumber(3, 60) - HPNumber(1, 60));
  EXPECT_LE(defect, pow10(-60, 60));
  EXPECT_THROW(HPNumber(1, 60) / HPNumber(60u), std::domain_error);
  EXPECT_THROW(sqrt(HPNumber(-1, 60)), std::domain_error);
  EXPECT_EQ(sqrt(HPNumber(16, 60)), HPNumber(4, 60));
}

TEST(HPNumberTest, ConversionsRoundTrip) {
  const HPNumber x = HPNumber::parse("-2935.4", 80);
  EXPECT_EQ(x.to_double(), -2935.4);
  EXPECT_EQ(HPNumber::parse(x.to_string(), 80), x);
  EXPECT_THROW(HPNumber::parse("12abc", 80), std::invalid_argument);
  EXPECT_THROW(HPNumber::parse("", 80), std::invalid_argument);
  const HPNumber q(BigRational(3, 8), 50);
  EXPECT_EQ(q.to_rational(), BigRational(3, 8));
  EXPECT_EQ(HPNumber(0.1, 50).to_rational(), BigRational::from_double(0.1));
  // Mixed precision rounds to the larger one.
  EXPECT_EQ((HPNumber(1, 50) + HPNumber(1, 120)).digits(), 120u);
}

TEST(SturmCount, ExactCountsOnSmallMatrix) {
  const ExactTridiagonal j3 = jacobi_JN(3);
  const auto approx = tridiag_eigen(j3).values();
  EXPECT_EQ(sturm_count_exact(j3, BigRational(4)), 1u);  // 4 itself is not counted
  EXPECT_EQ(sturm_count_exact(j3, BigRational(4) + BigRational(1, 1000000)), 2u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(sturm_count_exact(j3, BigRational::from_double(approx[i] - 1e-6)), i);
    EXPECT_EQ(sturm_count_exact(j3, BigRational::from_double(approx[i] + 1e-6)), i + 1);
  }
  for (std::size_t n = 2; n <= 12; ++n) {
    const ExactTridiagonal j = jacobi_JN(n);
    const auto values = tridiag_eigen(j).values();
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(sturm_count_exact(j, BigRational::from_double(values[i] + 1e-3)), i + 1) << n << "," << i;
    }
  }
  EXPECT_THROW(sturm_count_exact(ExactTridiagonal({BigRational(1), BigRational(2)}, {BigRational(0)}), BigRational(0)),
               std::invalid_argument);
}

TEST(HPEigenvalues, TrivialAndSmall) {
  const ExactTridiagonal one({BigRational(-7)}, {});
  const auto ev = hp_eigenvalues(one, 50);
  ASSERT_EQ(ev.size(), 1u);
  EXPECT_TRUE(ev[0].exact);
  EXPECT_EQ(ev[0].value, HPNumber(-7, 50));

  const auto ev3 = hp_eigenvalues(jacobi_JN(3), 60);
  ASSERT_EQ(ev3.size(), 3u);
  EXPECT_TRUE(ev3[1].exact);
  EXPECT_EQ(ev3[1].value, HPNumber(4, 60));
  EXPECT_FALSE(ev3[0].exact);
  EXPECT_THROW(hp_eigenvalues(jacobi_JN(3), 20), std::invalid_argument);
}

TEST(HPEigenvalues, CertifiedEnclosures) {
  const ExactTridiagonal j = jacobi_JN(10);
  const auto ev = hp_eigenvalues(j, 60);
  const HPNumber bound = pow10(5 - 60, 60) * HPNumber(j.inf_norm(), 60);
  for (std::size_t k = 0; k < ev.size(); ++k) {
    EXPECT_LE(ev[k].width(), bound);
    EXPECT_EQ(sturm_count_exact(j, ev[k].lower.to_rational()), k);
    if (!ev[k].exact) {
      EXPECT_EQ(sturm_count_exact(j, ev[k].upper.to_rational()), k + 1);
    }
    if (k > 0) {
      EXPECT_LT(ev[k - 1].value, ev[k].value);
    }
  }
}

TEST(HPEigenvalues, ReferenceTableAt200Digits) {
  const auto ev = hp_eigenvalues(jacobi_JN(15), 200);
  for (std::size_t k = 0; k < 15; ++k) {
    EXPECT_TRUE(matches_printed(ev[k].value.to_double(), kReferenceRows[k].j_eigenvalue)) << k;
  }
  EXPECT_TRUE(ev[7].exact);
  EXPECT_EQ(ev[7].value, HPNumber(112, 200));
}

TEST(HPEigenvalues, ReflectionInHighPrecision) {
  const unsigned digits = 60;
  for (std::size_t n = 2; n <= 20; ++n) {
    const auto ev = hp_eigenvalues(jacobi_JN(n), digits);
    const HPNumber target(static_cast<std::int64_t>(n * n - 1), digits);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_LE(abs(ev[i].value + ev[n - 1 - i].value - target), pow10(10 - static_cast<int>(digits), digits))
          << n << "," << i;
    }
    if (n % 2 == 1) {
      EXPECT_TRUE(ev[n / 2].exact);
      EXPECT_EQ(ev[n / 2].value, HPNumber(BigRational(static_cast<std::int64_t>(n * n - 1), 2), digits));
    }
  }
}

TEST(HPEigenvalues, DoublingPrecisionStaysInsideEnclosure) {
  const ExactTridiagonal j = jacobi_JN(12);
  const auto coarse = hp_eigenvalues(j, 50);
  const auto fine = hp_eigenvalues(j, 100);
  for (std::size_t k = 0; k < 12; ++k) {
    EXPECT_LE(abs(fine[k].value - coarse[k].value), coarse[k].width());
    EXPECT_GE(fine[k].value, coarse[k].lower);
    EXPECT_LE(fine[k].value, coarse[k].upper);
  }
}

TEST(HPEigenvector, MiddleVectorOfJ3) {
  const ExactTridiagonal j = jacobi_JN(3);
  const auto ev = hp_eigenvalues(j, 80);
  const auto pair = hp_eigenvector(j, ev[1], 80);
  // Exact direction (1, 1/2, -1/2) / sqrt(3/2).
  const HPNumber s = sqrt(HPNumber(BigRational(3, 2), 80));
  const std::vector<HPNumber> expected{HPNumber(1, 80) / s, HPNumber(BigRational(1, 2), 80) / s,
                                       HPNumber(BigRational(-1, 2), 80) / s};
  for (std::size_t i = 0; i < 3; ++i) EXPECT_LE(abs(pair.vector[i] - expected[i]), pow10(-70, 80));
  EXPECT_TRUE(pair.exact_value);
}

TEST(HPEigenvector, TrivialSize) {
  const ExactTridiagonal one({BigRational(3)}, {});
  const auto pair = hp_eigenvector(one, hp_eigenvalues(one, 50)[0], 50);
  ASSERT_EQ(pair.vector.size(), 1u);
  EXPECT_EQ(pair.vector[0], HPNumber(1, 50));
}

TEST(HPEigenvector, ResidualsAt200Digits) {
  const ExactTridiagonal j = jacobi_JN(15);
  const HPNumber bound = pow10(-180, 200) * HPNumber(j.inf_norm(), 200);
  for (const auto& ev : hp_eigenvalues(j, 200)) {
    const auto pair = hp_eigenvector(j, ev, 200);
    EXPECT_LE(pair.residual, bound);
    HPNumber norm(200);
    for (const auto& x : pair.vector) norm += x * x;
    EXPECT_LE(abs(norm - HPNumber(1, 200)), pow10(-190, 200));
  }
}

TEST(EigenvectorError, IdenticalAndMismatched) {
  const std::vector<double> v{0.6, 0.8};
  HPEigenPair reference{HPNumber(1, 50), {HPNumber(0.6, 50), HPNumber(0.8, 50)}, HPNumber(50u), HPNumber(50u), false};
  EXPECT_EQ(eigenvector_error(v, reference), 0.0);
  EXPECT_THROW(eigenvector_error(std::vector<double>{1.0}, reference), std::invalid_argument);
  const std::vector<double> w{0.8, 0.6};
  EXPECT_NEAR(eigenvector_error(w, reference), std::sqrt(0.08), 1e-15);
}

TEST(EigenvectorError, RoutesAtN15) {
  const auto reference = reference_spectrum(15, 60);
  const auto via_j = pascal_eigen_via_J(15);
  const auto direct = pascal_eigen_direct(15);
  for (std::size_t k = 0; k < 15; ++k) {
    EXPECT_LE(eigenvector_error(via_j.pairs[k].vector, reference.pairs[k]), 1e-14) << k;
  }
  const double smallest_direct = eigenvector_error(direct.pairs[0].vector, reference.pairs[0]);
  EXPECT_GE(smallest_direct, 1e-8);
  EXPECT_LE(smallest_direct, 1e-3);
}

TEST(ReferenceSpectrumCache, WritesLoadsAndRecovers) {
  const auto dir = fresh_temp_dir("cache");
  const auto computed = reference_spectrum(6, 50, dir);
  const auto file = dir / "jacobi_n6_digits50.json";
  ASSERT_TRUE(std::filesystem::exists(file));
  const auto loaded = reference_spectrum(6, 50, dir);
  ASSERT_EQ(loaded.pairs.size(), 6u);
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_LE(abs(loaded.pairs[k].value - computed.pairs[k].value), pow10(-55, 50));
    for (std::size_t i = 0; i < 6; ++i) {
      EXPECT_LE(abs(loaded.pairs[k].vector[i] - computed.pairs[k].vector[i]), pow10(-55, 50));
    }
  }
  {
    std::ofstream corrupt(file);
    corrupt << "{ not json";
  }
  const auto recovered = reference_spectrum(6, 50, dir);
  EXPECT_EQ(recovered.pairs.size(), 6u);
  EXPECT_NO_THROW(reference_spectrum_from_json(nlohmann::json::parse(std::ifstream(file))));
  std::filesystem::remove_all(dir);
}

TEST(ReferenceSpectrumCache, JsonValidation) {
  const auto spectrum = reference_spectrum(3, 50);
  const auto j = to_json(spectrum);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["pairs"][1]["exact"], true);
  auto broken = j;
  broken["pairs"][0]["vector"].erase(0);
  EXPECT_THROW(reference_spectrum_from_json(broken), std::invalid_argument);
  EXPECT_THROW(reference_spectrum_from_json(nlohmann::json::parse(R"({"n":1})")), std::invalid_argument);
}
