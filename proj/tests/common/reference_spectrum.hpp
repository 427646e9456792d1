#pragma once

// Published reference spectrum for N = 15: Pascal eigenvalues (9 significant
// digits), eigenvalues of the commuting tridiagonal matrix, and the l2 errors
// of eigenvectors computed through the tridiagonal matrix and directly from
// the Pascal matrix. Values are kept as the printed strings so that the
// number of printed digits defines the comparison tolerance.

#include <array>
#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>

namespace pascal::testing {

struct ReferenceRow {
  std::string_view t_eigenvalue;
  std::string_view j_eigenvalue;
  std::string_view error_via_j;
  std::string_view error_via_t;
};

inline constexpr std::size_t kReferenceN = 15;

inline constexpr std::array<ReferenceRow, 15> kReferenceRows{{
    {"1.87658533e-08", "-2935.4", "8.4094e-16", "9.075e-6"},
    {"1.16639323e-06", "-2319.7", "7.1595e-16", "9.3672e-6"},
    {"3.31357255e-05", "-1762.4", "5.055e-16", "2.6413e-6"},
    {"5.67427242e-04", "-1262.8", "1.0187e-15", "6.8088e-7"},
    {"6.48778221e-03", "-821.21", "8.7125e-16", "1.6673e-7"},
    {"5.15247212e-02", "-439.43", "3.6927e-16", "2.5406e-8"},
    {"2.80569832e-01", "-124.69", "3.307e-16", "3.6577e-9"},
    {"1.00000000e+0", "112.0", "2.4291e-16", "2.5178e-9"},
    {"3.56417507e+0", "348.69", "6.2037e-16", "5.4666e-10"},
    {"1.94081593e+01", "663.43", "7.4917e-16", "6.8609e-11"},
    {"1.54135877e+02", "1045.2", "7.0933e-16", "1.4533e-11"},
    {"1.76234048e+03", "1486.8", "1.0204e-15", "1.7079e-12"},
    {"3.01789077e+04", "1986.4", "1.166e-15", "1.1491e-13"},
    {"8.57343794e+05", "2543.7", "8.01e-16", "7.1326e-15"},
    {"5.32882775e+07", "3159.4", "1.3531e-16", "2.7205e-16"},
}};

/// Half a unit in the last printed digit of a decimal string such as
/// "1.87658533e-08" or "-821.21".
inline double half_unit_in_last_place(std::string_view printed) {
  const auto e_pos = printed.find_first_of("eE");
  const std::string_view mantissa = printed.substr(0, e_pos);
  const int exponent = e_pos == std::string_view::npos ? 0 : std::atoi(std::string(printed.substr(e_pos + 1)).c_str());
  const auto dot = mantissa.find('.');
  const int decimals = dot == std::string_view::npos ? 0 : static_cast<int>(mantissa.size() - dot - 1);
  return 0.5 * std::pow(10.0, exponent - decimals);
}

inline double parse_printed(std::string_view printed) { return std::strtod(std::string(printed).c_str(), nullptr); }

/// True when `value` rounds to the printed string (with a 1e-6 relative slack
/// on the half-unit for the decimal-to-binary conversion of the bound).
inline bool matches_printed(double value, std::string_view printed) {
  return std::abs(value - parse_printed(printed)) <= half_unit_in_last_place(printed) * (1.0 + 1e-6);
}

}  // namespace pascal::testing
