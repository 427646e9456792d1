#pragma once

#include "pascal/big_rational.hpp"
#include "pascal/report.hpp"

#include <json.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace pascal {


/// Dense row-major matrix of exact rationals. Dimensions are always >= 1.
class ExactMatrix {
public:
  /// Zero matrix. Throws std::invalid_argument if rows or cols is 0.
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const BigRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  BigRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  /// Bounds-checked access.
  const BigRational& at(std::size_t r, std::size_t c) const;

  std::span<const BigRational> entries() const { return entries_; }

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_integer() const;

  ExactMatrix transpose() const;
  /// Top-left rows x cols block.
  ExactMatrix block(std::size_t rows, std::size_t cols) const;

  /// Entry of largest magnitude (first in row-major order on ties); nullopt for a zero matrix.
  std::optional<DefectWitness> max_abs_entry() const;

  std::vector<double> to_double() const;

  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  ExactMatrix& operator*=(const BigRational& scalar);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const BigRational& s) { return a *= s; }
  friend ExactMatrix operator*(const BigRational& s, ExactMatrix a) { return a *= s; }
  /// Naive O(n^3) product; integer-only operands take a GMP integer path.
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  /// Exact matrix-vector product.
  std::vector<BigRational> apply(std::span<const BigRational> v) const;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigRational> entries_;
};

/// {"rows", "cols", "entries": [["num","den"], ...]} with decimal-string integers.
nlohmann::json to_json(const ExactMatrix& m);
/// Throws std::invalid_argument on malformed input.
ExactMatrix exact_matrix_from_json(const nlohmann::json& j);

}  // namespace pascal
