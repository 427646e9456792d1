#include "pascal/exact_matrix.hpp"

#include <stdexcept>
#include <string>

namespace pascal {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("ExactMatrix: dimension 0 is not allowed");
  entries_.resize(rows * cols);
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : ExactMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ExactMatrix: ragged initializer");
    std::size_t c = 0;
    for (std::int64_t v : row) (*this)(r, c++) = BigRational(v);
    ++r;
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = BigRational(1);
  return m;
}

const BigRational& ExactMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("ExactMatrix::at");
  return (*this)(r, c);
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

bool ExactMatrix::is_integer() const {
  for (const auto& e : entries_) {
    if (!e.is_integer()) return false;
  }
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

ExactMatrix ExactMatrix::block(std::size_t rows, std::size_t cols) const {
  if (rows > rows_ || cols > cols_) throw std::out_of_range("ExactMatrix::block");
  ExactMatrix b(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) b(r, c) = (*this)(r, c);
  }
  return b;
}

std::optional<DefectWitness> ExactMatrix::max_abs_entry() const {
  std::optional<DefectWitness> best;
  BigRational best_abs;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& e = (*this)(r, c);
      if (e.is_zero()) continue;
      BigRational a = e.abs();
      if (!best || a > best_abs) {
        best_abs = a;
        best = DefectWitness{r, c, e};
      }
    }
  }
  return best;
}

std::vector<double> ExactMatrix::to_double() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.to_double());
  return out;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("ExactMatrix: dimension mismatch in +");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("ExactMatrix: dimension mismatch in -");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const BigRational& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("ExactMatrix: dimension mismatch in *");
  ExactMatrix out(a.rows_, b.cols_);
  if (a.is_integer() && b.is_integer()) {
    std::vector<mpz_class> bi(b.entries_.size());
    for (std::size_t i = 0; i < bi.size(); ++i) bi[i] = b.entries_[i].numerator();
    mpz_class acc;
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t c = 0; c < b.cols_; ++c) {
        acc = 0;
        for (std::size_t k = 0; k < a.cols_; ++k) {
          const mpq_class& x = a.entries_[r * a.cols_ + k].value();
          if (sgn(x) == 0) continue;
          mpz_addmul(acc.get_mpz_t(), x.get_num_mpz_t(), bi[k * b.cols_ + c].get_mpz_t());
        }
        out(r, c) = BigRational(acc);
      }
    }
    return out;
  }
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < b.cols_; ++c) {
      mpq_class acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const mpq_class& x = a.entries_[r * a.cols_ + k].value();
        if (sgn(x) == 0) continue;
        acc += x * b.entries_[k * b.cols_ + c].value();
      }
      out(r, c) = BigRational(acc);
    }
  }
  return out;
}

std::vector<BigRational> ExactMatrix::apply(std::span<const BigRational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("ExactMatrix::apply: length mismatch");
  std::vector<BigRational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    mpq_class acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const mpq_class& x = (*this)(r, c).value();
      if (sgn(x) != 0) acc += x * v[c].value();
    }
    out[r] = BigRational(acc);
  }
  return out;
}

nlohmann::json to_json(const ExactMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : m.entries()) entries.push_back({e.num_string(), e.den_string()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ExactMatrix exact_matrix_from_json(const nlohmann::json& j) {
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols) {
      throw std::invalid_argument("ExactMatrix JSON: entries length does not match rows*cols");
    }
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& pair = entries[i];
      if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("ExactMatrix JSON: entry is not [num, den]");
      m(i / cols, i % cols) =
          BigRational::parse(pair[0].get<std::string>() + "/" + pair[1].get<std::string>());
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("ExactMatrix JSON: ") + e.what());
  }
}

}  // namespace pascal
