#pragma once

#include "pascal/big_rational.hpp"
#include "pascal/exact_matrix.hpp"
#include "pascal/polynomial.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace pascal {

/// Which variable a difference operator acts on.
enum class Side { X, Y };

const char* side_name(Side side);

/// One diagonal of a banded operator: a polynomial in the row index, plus a
/// finite set of rows where the matrix entry differs from the polynomial.
/// Boundary rows appear when composing with adjoint shifts near row 0
/// (e.g. delta^* delta is the identity except at row 0).
struct Band {
  Polynomial poly;
  std::map<std::size_t, BigRational> boundary;

  BigRational value(std::size_t row) const;
  bool is_zero() const { return poly.is_zero() && boundary.empty(); }
  friend bool operator==(const Band&, const Band&) = default;
};

/// Banded difference operator L = sum_k a_k(x) delta^k with the usual
/// convention delta^{-k} = (delta^*)^k. Identified with its semi-infinite
/// matrix: entry (r, r+k) is a_k(r) for r >= max(0, -k). Functions are
/// extended by zero below 0, so composition is matrix multiplication and the
/// adjoint is the transpose.
class DiffOp {
public:
  explicit DiffOp(Side side = Side::X) : side_(side) {}

  static DiffOp identity(Side side);
  /// Multiplication by p(x).
  static DiffOp multiplication(Side side, Polynomial p);
  /// delta^k for k >= 0, (delta^*)^{-k} for k < 0.
  static DiffOp shift(Side side, int k);
  /// p(x) delta^k.
  static DiffOp term(Side side, int k, Polynomial p);

  Side side() const { return side_; }
  const std::map<int, Band>& bands() const { return bands_; }
  /// max |k| over nonzero bands; 0 for the zero operator.
  std::size_t bandwidth() const;
  bool is_zero() const { return bands_.empty(); }
  /// True when no band carries boundary corrections.
  bool is_polynomial() const;

  /// Matrix entry (row, row + k); zero when no such band exists.
  BigRational coefficient(int k, std::size_t row) const;
  /// Polynomial part of band k (zero polynomial if absent).
  Polynomial band_polynomial(int k) const;

  void set_band(int k, Polynomial p);
  void set_boundary(int k, std::size_t row, BigRational value);

  /// L^*, whose matrix is the transpose of L's.
  DiffOp adjoint() const;

  DiffOp& operator+=(const DiffOp& rhs);
  DiffOp& operator-=(const DiffOp& rhs);
  DiffOp& operator*=(const BigRational& s);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const BigRational& s) { return a *= s; }
  friend DiffOp operator*(const BigRational& s, DiffOp a) { return a *= s; }
  /// Composition (apply rhs first). Throws std::invalid_argument on side mismatch.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  std::string to_string() const;

private:
  void normalize();
  Side side_;
  std::map<int, Band> bands_;
};

DiffOp op_multiply(const DiffOp& a, const DiffOp& b);
DiffOp op_add(const DiffOp& a, const DiffOp& b);
DiffOp op_scale(const DiffOp& a, const BigRational& s);
DiffOp op_adjoint(const DiffOp& a);

/// Top-left N x N block of the matrix of L.
ExactMatrix matrix_rep(const DiffOp& op, std::size_t n);

/// Rows 0..N-m-1 of pi(L) f for f of length N, i.e. the rows that do not see
/// the truncation. Throws std::invalid_argument if N <= bandwidth.
std::vector<BigRational> apply(const DiffOp& op, std::span<const BigRational> f);

/// Recovers a DiffOp from a finite matrix whose bands are polynomial in the
/// row index: for each band, fits the lowest degree d <= max_degree through
/// d+1 leading samples and verifies it on every remaining sample (at least 3).
/// Throws std::runtime_error if a band cannot be fitted.
DiffOp diffop_from_matrix(const ExactMatrix& m, Side side, std::size_t max_degree);

/// {"side", "bands": [{"k", "poly": [rational strings]}]}; bands with boundary
/// rows also carry "boundary": [{"row", "value"}].
nlohmann::json to_json(const DiffOp& op);
DiffOp diffop_from_json(const nlohmann::json& j);

}  // namespace pascal
