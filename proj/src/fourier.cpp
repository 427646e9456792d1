#include "pascal/fourier.hpp"

#include "pascal/exact_core.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pascal {

namespace {

BigRational alternating(std::int64_t exponent) { return BigRational(exponent % 2 == 0 ? 1 : -1); }

// C(n, k) for possibly negative arguments, with the convention that it is 0
// whenever k < 0 or n < k (n < 0 never arises with k >= 0 below).
BigRational binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return {};
  return binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
}

BigRational int_power(std::int64_t base, std::size_t exponent) {
  mpz_class b;
  mpz_set_si(b.get_mpz_t(), static_cast<long>(base));
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
  return BigRational(r);
}

}  // namespace

GeneratorWord jacobi_word() { return GeneratorWord::parse("D*X - X + E"); }

GeneratorWord jacobi_tilde_word() { return GeneratorWord::parse("D*X^3 - (2X^3 + 3X^2 + 2X) + X^2*E"); }

ExactMatrix fourier_map_numeric(const DiffOp& op, std::size_t n) {
  if (op.side() != Side::X) throw std::invalid_argument("fourier_map_numeric: expects an x-side operator");
  const std::size_t m = op.bandwidth();
  if (n <= 2 * m) throw std::invalid_argument("fourier_map_numeric: N must exceed twice the bandwidth");
  const ExactMatrix conj = pascal_lower_inverse(n) * matrix_rep(op, n) * pascal_lower(n);
  // Rows r with r + m < N do not see the truncation.
  return conj.block(n - m, n - m).transpose();
}

bool in_fourier_algebra(const DiffOp& op) {
  if (op.side() != Side::X) throw std::invalid_argument("in_fourier_algebra: expects an x-side operator");
  if (!op.is_polynomial()) return false;
  for (const auto& [k, band] : op.bands()) {
    if (k >= 0) continue;
    for (std::int64_t row = 0; row < -k; ++row) {
      if (!band.poly(BigRational(row)).is_zero()) return false;
    }
  }
  return true;
}

IdentityCheck check_bispectral_pair(std::string name, const DiffOp& x_side, const DiffOp& y_side,
                                    std::size_t n) {
  const std::size_t m = n + x_side.bandwidth();
  const ExactMatrix psi = pascal_lower(m);
  const ExactMatrix lhs = matrix_rep(x_side, m) * psi;
  const ExactMatrix rhs = psi * matrix_rep(y_side, m).transpose();
  return compare_exact(std::move(name), lhs.block(n, n), rhs.block(n, n));
}

IdentityReport bispectral_check(std::size_t n, bool mutate) {
  if (n < 3) throw std::invalid_argument("bispectral_check: N must be >= 3");
  const DiffOp x = generator_operator(Generator::X);
  const DiffOp y = generator_operator(Generator::Y);
  const DiffOp dx = generator_operator(Generator::D);
  const DiffOp dy_star = generator_operator(Generator::Dstar);
  const DiffOp one_y = DiffOp::identity(Side::Y);

  const DiffOp raise = DiffOp::term(Side::Y, 1, mutate ? Polynomial{2, 1} : Polynomial{1, 1});

  IdentityReport report;
  report.add(check_bispectral_pair("((y+1) d_y + y) psi = x psi", x, raise + y, n));
  report.add(check_bispectral_pair("(x - x d_x*) psi = y psi", x - generator_operator(Generator::E), y, n));
  report.add(check_bispectral_pair("d_x psi = (1 + d_y*) psi", dx, one_y + dy_star, n));
  return report;
}

std::vector<BigRational> recover_x_band(const DiffOp& y_side, int l, std::size_t x_max,
                                        SignConvention convention) {
  std::vector<BigRational> out;
  for (std::size_t xu = 0; xu <= x_max; ++xu) {
    const auto x = static_cast<std::int64_t>(xu);
    BigRational acc;
    if (x + l >= 0) {
      for (const auto& [k, band] : y_side.bands()) {
        // C(y, x+l) C(x, y+k) vanishes outside x+l <= y <= x-k.
        for (std::int64_t y = std::max<std::int64_t>({0, x + l, -k}); y <= x - k; ++y) {
          acc += alternating(y) * band.value(static_cast<std::size_t>(y)) * binom(y, x + l) * binom(x, y + k);
        }
      }
      if (convention == SignConvention::Corrected) acc *= alternating(x + l);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<BigRational> recover_y_band(const DiffOp& x_side, int l, std::size_t y_max,
                                        SignConvention convention) {
  std::vector<BigRational> out;
  for (std::size_t yu = 0; yu <= y_max; ++yu) {
    const auto y = static_cast<std::int64_t>(yu);
    BigRational acc;
    if (y + l >= 0) {
      for (const auto& [j, band] : x_side.bands()) {
        // C(y+l, x) C(x+j, y) vanishes outside y-j <= x <= y+l.
        for (std::int64_t x = std::max<std::int64_t>({0, -j, y - j}); x <= y + l; ++x) {
          acc += alternating(x) * band.value(static_cast<std::size_t>(x)) * binom(y + l, x) * binom(x + j, y);
        }
      }
      if (convention == SignConvention::Corrected) acc *= alternating(y + l);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

RecoveredCoefficients recover_coefficients(const DiffOp& x_side, const DiffOp& y_side, int l,
                                           std::size_t max_index, SignConvention convention) {
  if (x_side.side() != Side::X || y_side.side() != Side::Y) {
    throw std::invalid_argument("recover_coefficients: expects an (x-side, y-side) pair");
  }
  return {recover_x_band(y_side, l, max_index, convention), recover_y_band(x_side, l, max_index, convention)};
}

IdentityReport check_coefficient_recovery(const std::string& name, const DiffOp& x_side, const DiffOp& y_side,
                                          std::size_t max_index) {
  const int m = static_cast<int>(std::max(x_side.bandwidth(), y_side.bandwidth()));
  IdentityReport report;
  for (int l = -m; l <= m; ++l) {
    const auto recovered = recover_coefficients(x_side, y_side, l, max_index);
    ExactMatrix got(2, max_index + 1);
    ExactMatrix want(2, max_index + 1);
    // Rows i < -l carry no matrix entry for band l and are left at zero.
    for (std::size_t i = static_cast<std::size_t>(std::max(0, -l)); i <= max_index; ++i) {
      got(0, i) = recovered.x_band[i];
      got(1, i) = recovered.y_band[i];
      want(0, i) = x_side.coefficient(l, i);
      want(1, i) = y_side.coefficient(l, i);
    }
    report.add(compare_exact(name + ": band " + std::to_string(l) + " (row 0: x side, row 1: y side)", got, want));
  }
  return report;
}

IdentityReport check_fourier_images(std::size_t n) {
  DiffOp image_l(Side::Y);
  image_l.set_band(-1, Polynomial{0, 1});
  image_l.set_band(0, Polynomial{1, 1});
  image_l.set_band(1, Polynomial{1, 1});
  DiffOp image_lt(Side::Y);
  image_lt.set_band(-1, Polynomial{0, 0, 0, 1});
  image_lt.set_band(0, Polynomial{1, 2, 3, 2});
  image_lt.set_band(1, Polynomial{1, 3, 3, 1});

  IdentityReport report;
  const auto symbolic = [&](const std::string& name, const GeneratorWord& word, const DiffOp& expected) {
    const DiffOp got = fourier_map(word);
    const std::size_t size = n;
    IdentityCheck check = compare_exact(name, matrix_rep(got, size), matrix_rep(expected, size));
    check.passed = check.passed && got == expected;
    check.detail = "b(L) = " + got.to_string();
    report.add(std::move(check));
  };
  symbolic("symbolic b(L) = y d* + (y+1) + d y", jacobi_word(), image_l);
  symbolic("symbolic b(Lt) = y^3 d* + (2y^3+3y^2+2y+1) + d y^3", jacobi_tilde_word(), image_lt);

  const auto numeric = [&](const std::string& name, const GeneratorWord& word, const DiffOp& expected) {
    const ExactMatrix conj = fourier_map_numeric(to_diffop(word), n);
    report.add(compare_exact(name, conj, matrix_rep(expected, conj.rows())));
  };
  numeric("Psi-conjugation reproduces b(L)", jacobi_word(), image_l);
  numeric("Psi-conjugation reproduces b(Lt)", jacobi_tilde_word(), image_lt);
  return report;
}

BigRational fubar_lhs(std::size_t n, std::size_t l, std::size_t y) {
  BigRational acc;
  const auto top = static_cast<std::int64_t>(y + l);
  for (std::int64_t x = static_cast<std::int64_t>(y); x <= top; ++x) {
    acc += alternating(x) * int_power(x, n) * binom(top, x) * binom(x, static_cast<std::int64_t>(y));
  }
  return acc;
}

BigRational fubar_rhs(std::size_t n, std::size_t l, std::size_t y) {
  if (l > n) throw std::invalid_argument("fubar_rhs: requires l <= n");
  const auto upper = static_cast<std::int64_t>(n - l);
  // indices[0] = i_0 = 1 and indices[l+1] = n - l, free indices in between.
  std::vector<std::int64_t> indices(l + 2);
  indices[0] = 1;
  indices[l + 1] = upper;
  BigRational total;
  std::function<void(std::size_t, std::int64_t)> visit = [&](std::size_t slot, std::int64_t lower) {
    if (slot == l + 1) {
      BigRational product(1);
      for (std::size_t j = 0; j <= l; ++j) {
        const std::int64_t exponent = indices[j + 1] - indices[j] + 1;
        if (exponent < 0) throw std::logic_error("fubar_rhs: negative exponent");
        product *= int_power(static_cast<std::int64_t>(y + j), static_cast<std::size_t>(exponent));
      }
      total += product;
      return;
    }
    for (std::int64_t i = lower; i <= upper; ++i) {
      indices[slot] = i;
      visit(slot + 1, i);
    }
  };
  visit(1, 0);
  return total;
}

IdentityReport check_identity_fubar(std::size_t n, std::size_t l, std::size_t y_max) {
  if (l > n) throw std::invalid_argument("check_identity_fubar: requires 0 <= l <= n");
  GeneratorWord x_power = GeneratorWord::scalar(BigRational(1));
  for (std::size_t i = 0; i < n; ++i) x_power = x_power * GeneratorWord::letter(Generator::X);
  const DiffOp image = fourier_map(x_power);

  ExactMatrix lhs(1, y_max + 1);
  ExactMatrix signed_lhs(1, y_max + 1);
  ExactMatrix rhs(1, y_max + 1);
  ExactMatrix band(1, y_max + 1);
  bool only_sign_flips = true;
  for (std::size_t y = 0; y <= y_max; ++y) {
    lhs(0, y) = fubar_lhs(n, l, y);
    rhs(0, y) = fubar_rhs(n, l, y);
    signed_lhs(0, y) = alternating(static_cast<std::int64_t>(y + l)) * lhs(0, y);
    band(0, y) = image.coefficient(static_cast<int>(l), y);
    if (lhs(0, y) != rhs(0, y) && lhs(0, y) != -rhs(0, y)) only_sign_flips = false;
  }
  const std::string tag = " [n=" + std::to_string(n) + ", l=" + std::to_string(l) + "]";

  IdentityReport report;
  IdentityCheck verbatim = compare_exact("fubar as printed" + tag, lhs, rhs);
  verbatim.informational = true;
  if (verbatim.witness) {
    const auto y = verbatim.witness->col;
    verbatim.detail = "at y=" + std::to_string(y) + ": LHS=" + lhs(0, y).to_string() +
                      " RHS=" + rhs(0, y).to_string() +
                      (only_sign_flips ? "; every mismatch is LHS = (-1)^(y+l) RHS" : "");
  }
  report.add(std::move(verbatim));
  report.add(compare_exact("fubar with (-1)^(y+l) on LHS" + tag, signed_lhs, rhs));
  report.add(compare_exact("fubar RHS = band l of b(x^n)" + tag, rhs, band));
  for (auto& c : report.checks) c.dimension = y_max + 1;
  return report;
}

IdentityReport check_orthogonality(std::size_t x_max) {
  const std::size_t n = x_max + 1;
  ExactMatrix sums(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t xp = 0; xp <= x; ++xp) {
      BigRational acc;
      for (std::size_t y = xp; y <= x; ++y) {
        acc += alternating(static_cast<std::int64_t>(y)) * binomial(x, y) * binomial(y, xp);
      }
      sums(x, xp) = std::move(acc);
    }
  }
  IdentityReport report;
  IdentityCheck verbatim = compare_exact("sum_y (-1)^y C(x,y) C(y,x') = [x=x']", sums, ExactMatrix::identity(n));
  verbatim.informational = true;
  if (verbatim.witness) verbatim.detail = "diagonal entries equal (-1)^x";
  report.add(std::move(verbatim));
  report.add(compare_exact("sum_y (-1)^(y+x') C(x,y) C(y,x') = [x=x']", sums * sign_diagonal(n),
                           ExactMatrix::identity(n)));
  return report;
}

}  // namespace pascal
