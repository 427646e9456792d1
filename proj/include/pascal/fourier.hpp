#pragma once

#include "pascal/diffop.hpp"
#include "pascal/exact_matrix.hpp"
#include "pascal/generator_word.hpp"
#include "pascal/report.hpp"

#include <cstddef>
#include <vector>

namespace pascal {

/// The self-adjoint x-side operator delta x - x + x delta^*, whose matrix is J.
GeneratorWord jacobi_word();
/// delta x^3 - (2x^3 + 3x^2 + 2x) + x^3 delta^*, whose matrix is Jtilde.
GeneratorWord jacobi_tilde_word();

/// Fourier image of an arbitrary x-side operator computed by conjugation,
/// (Psi^{-1} pi(L) Psi)^T, on an N x N truncation. Returns the exact
/// (N-m) x (N-m) leading block. Throws std::invalid_argument if N <= 2m.
ExactMatrix fourier_map_numeric(const DiffOp& op, std::size_t n);

/// Membership in R[x, delta, x delta^*]: every band is polynomial and each band
/// -n vanishes at 0, ..., n-1. Throws std::invalid_argument for y-side operators.
bool in_fourier_algebra(const DiffOp& op);

/// Verifies the basic relations of the binomial kernel as matrix identities
/// pi(L) Psi = Psi pi(R)^T on an N x N block:
///   x psi = ((y+1) delta_y + y) psi,  (x - x delta_x^*) psi = y psi,
///   delta_x psi = (1 + delta_y^*) psi.
/// With `mutate` set, the first relation uses (y+2) in place of (y+1).
IdentityReport bispectral_check(std::size_t n, bool mutate = false);

/// Checks pi(L) Psi = Psi pi(R)^T on the exact N x N block.
IdentityCheck check_bispectral_pair(std::string name, const DiffOp& x_side, const DiffOp& y_side,
                                    std::size_t n);

enum class SignConvention {
  Corrected,  // includes the (-1)^(x+l) factor that orthogonality actually produces
  AsPrinted,  // the alternating sums without that factor
};

/// a_l(x) for x = 0..x_max, recovered from the y-side partner R of an operator
/// L with L psi = R psi, by summing R's coefficients against binomials.
std::vector<BigRational> recover_x_band(const DiffOp& y_side, int l, std::size_t x_max,
                                        SignConvention convention = SignConvention::Corrected);

/// b_l(y) for y = 0..y_max, recovered from the x-side operator L.
std::vector<BigRational> recover_y_band(const DiffOp& x_side, int l, std::size_t y_max,
                                        SignConvention convention = SignConvention::Corrected);

struct RecoveredCoefficients {
  std::vector<BigRational> x_band;  // a_l(0..max)
  std::vector<BigRational> y_band;  // b_l(0..max)
};

/// Both recovery formulas for band l. The caller guarantees L psi = R psi.
RecoveredCoefficients recover_coefficients(const DiffOp& x_side, const DiffOp& y_side, int l,
                                           std::size_t max_index,
                                           SignConvention convention = SignConvention::Corrected);

/// Round trip of the recovery formulas: every band of `x_side` is recovered
/// from `y_side` and vice versa at the points 0..max_index (bands up to the
/// larger bandwidth, so vanishing bands are checked too).
IdentityReport check_coefficient_recovery(const std::string& name, const DiffOp& x_side, const DiffOp& y_side,
                                          std::size_t max_index);

/// Fourier images of L and Ltilde: the symbolic images equal
/// y delta^* + (y+1) + delta y and y^3 delta^* + (2y^3+3y^2+2y+1) + delta y^3,
/// and Psi-conjugation of the N x N truncations reproduces them numerically.
IdentityReport check_fourier_images(std::size_t n);

/// Left side of the alternating-sum identity: sum_x (-1)^x x^n C(y+l, x) C(x, y).
BigRational fubar_lhs(std::size_t n, std::size_t l, std::size_t y);
/// Right side, with the index convention i_0 = 1, i_{l+1} = n - l:
/// sum over 0 <= i_1 <= ... <= i_l <= n-l of prod_{j=0}^{l} (y+j)^(i_{j+1} - i_j + 1).
BigRational fubar_rhs(std::size_t n, std::size_t l, std::size_t y);

/// Compares both sides for y = 0..y_max. The literal comparison is recorded as
/// an informational check with a witness; the sign-corrected comparison
/// (-1)^(y+l) LHS = RHS and the match of RHS against band l of the Fourier
/// image of x^n are required checks. Throws std::invalid_argument unless l <= n.
IdentityReport check_identity_fubar(std::size_t n, std::size_t l, std::size_t y_max);

/// Binomial orthogonality for 0 <= x, x' <= x_max. The required check is
/// sum_y (-1)^(y+x') C(x,y) C(y,x') = [x = x']; the unsigned form
/// sum_y (-1)^y C(x,y) C(y,x') = [x = x'] is reported as informational.
IdentityReport check_orthogonality(std::size_t x_max);

}  // namespace pascal
