#include "pascal/diffop.hpp"

#include <algorithm>
#include <stdexcept>

namespace pascal {

namespace {

// First row where band k has a matrix entry.
std::size_t first_row(int k) { return k < 0 ? static_cast<std::size_t>(-k) : 0; }

std::size_t max_boundary_row(const DiffOp& op) {
  std::size_t best = 0;
  for (const auto& [k, band] : op.bands()) {
    if (!band.boundary.empty()) best = std::max(best, band.boundary.rbegin()->first + 1);
  }
  return best;
}

std::size_t max_negative_shift(const DiffOp& op) {
  if (op.bands().empty()) return 0;
  const int lowest = op.bands().begin()->first;
  return lowest < 0 ? static_cast<std::size_t>(-lowest) : 0;
}

void require_same_side(const DiffOp& a, const DiffOp& b) {
  if (a.side() != b.side()) throw std::invalid_argument("DiffOp: operands act on different variables");
}

}  // namespace

const char* side_name(Side side) { return side == Side::X ? "x" : "y"; }

BigRational Band::value(std::size_t row) const {
  if (auto it = boundary.find(row); it != boundary.end()) return it->second;
  return poly(BigRational(static_cast<std::int64_t>(row)));
}

DiffOp DiffOp::identity(Side side) { return term(side, 0, Polynomial{1}); }

DiffOp DiffOp::multiplication(Side side, Polynomial p) { return term(side, 0, std::move(p)); }

DiffOp DiffOp::shift(Side side, int k) { return term(side, k, Polynomial{1}); }

DiffOp DiffOp::term(Side side, int k, Polynomial p) {
  DiffOp op(side);
  op.set_band(k, std::move(p));
  return op;
}

std::size_t DiffOp::bandwidth() const {
  std::size_t m = 0;
  for (const auto& [k, band] : bands_) m = std::max<std::size_t>(m, static_cast<std::size_t>(std::abs(k)));
  return m;
}

bool DiffOp::is_polynomial() const {
  return std::all_of(bands_.begin(), bands_.end(), [](const auto& kv) { return kv.second.boundary.empty(); });
}

BigRational DiffOp::coefficient(int k, std::size_t row) const {
  auto it = bands_.find(k);
  if (it == bands_.end()) return {};
  return it->second.value(row);
}

Polynomial DiffOp::band_polynomial(int k) const {
  auto it = bands_.find(k);
  return it == bands_.end() ? Polynomial{} : it->second.poly;
}

void DiffOp::set_band(int k, Polynomial p) {
  bands_[k].poly = std::move(p);
  normalize();
}

void DiffOp::set_boundary(int k, std::size_t row, BigRational value) {
  bands_[k].boundary[row] = std::move(value);
  normalize();
}

void DiffOp::normalize() {
  for (auto it = bands_.begin(); it != bands_.end();) {
    const int k = it->first;
    Band& band = it->second;
    for (auto b = band.boundary.begin(); b != band.boundary.end();) {
      const bool outside = b->first < first_row(k);
      const bool redundant = b->second == band.poly(BigRational(static_cast<std::int64_t>(b->first)));
      b = (outside || redundant) ? band.boundary.erase(b) : std::next(b);
    }
    it = band.is_zero() ? bands_.erase(it) : std::next(it);
  }
}

DiffOp DiffOp::adjoint() const {
  DiffOp out(side_);
  for (const auto& [k, band] : bands_) {
    // Entry (r, r+k) moves to (r+k, r): band -k at row s = r+k holds a_k(s - k).
    Band moved;
    moved.poly = band.poly.shifted(BigRational(-k));
    for (const auto& [row, value] : band.boundary) {
      moved.boundary[static_cast<std::size_t>(static_cast<std::int64_t>(row) + k)] = value;
    }
    out.bands_[-k] = std::move(moved);
  }
  out.normalize();
  return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& rhs) {
  require_same_side(*this, rhs);
  for (const auto& [k, band] : rhs.bands_) {
    Band& mine = bands_[k];
    // Materialize boundary rows of both operands before adding polynomials.
    std::map<std::size_t, BigRational> rows;
    for (const auto& [row, v] : mine.boundary) rows[row] = v + band.value(row);
    for (const auto& [row, v] : band.boundary) rows[row] = mine.value(row) + v;
    mine.poly += band.poly;
    mine.boundary = std::move(rows);
  }
  normalize();
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& rhs) { return *this += rhs * BigRational(-1); }

DiffOp& DiffOp::operator*=(const BigRational& s) {
  for (auto& [k, band] : bands_) {
    band.poly *= s;
    for (auto& [row, v] : band.boundary) v *= s;
  }
  normalize();
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  require_same_side(a, b);
  DiffOp out(a.side_);
  // Generic rows: c_l(r) = sum_{j+k=l} a_j(r) b_k(r+j).
  for (const auto& [j, aband] : a.bands_) {
    for (const auto& [k, bband] : b.bands_) {
      out.bands_[j + k].poly += aband.poly * bband.poly.shifted(BigRational(j));
    }
  }
  // Near row 0 some terms drop out (the intermediate index r+j is negative) and
  // boundary rows of the operands enter. Evaluate those rows exactly.
  const std::size_t limit = max_negative_shift(a) + max_boundary_row(a) + max_boundary_row(b) + 1;
  for (auto& [l, band] : out.bands_) {
    for (std::size_t r = first_row(l); r < limit; ++r) {
      BigRational exact;
      const auto ri = static_cast<std::int64_t>(r);
      for (const auto& [j, aband] : a.bands_) {
        if (ri + j < 0) continue;
        auto bit = b.bands_.find(l - j);
        if (bit == b.bands_.end()) continue;
        exact += aband.value(r) * bit->second.value(static_cast<std::size_t>(ri + j));
      }
      band.boundary[r] = std::move(exact);
    }
  }
  out.normalize();
  return out;
}

std::string DiffOp::to_string() const {
  if (bands_.empty()) return "0";
  const char var = side_ == Side::X ? 'x' : 'y';
  std::string out;
  for (const auto& [k, band] : bands_) {
    if (!out.empty()) out += " + ";
    std::string coeff = band.poly.to_string(var);
    const bool compound = band.poly.coefficients().size() > 1 &&
                          std::count_if(band.poly.coefficients().begin(), band.poly.coefficients().end(),
                                        [](const BigRational& c) { return !c.is_zero(); }) > 1;
    if (k == 0) {
      out += compound ? "(" + coeff + ")" : coeff;
    } else {
      const std::string shift = std::string(k > 0 ? "d" : "d*") +
                                (std::abs(k) > 1 ? "^" + std::to_string(std::abs(k)) : "");
      if (band.poly == Polynomial{1}) {
        out += shift;
      } else {
        out += (compound ? "(" + coeff + ")" : coeff) + " " + shift;
      }
    }
    for (const auto& [row, v] : band.boundary) {
      out += " [row " + std::to_string(row) + " of band " + std::to_string(k) + ": " + v.to_string() + "]";
    }
  }
  return out;
}

DiffOp op_multiply(const DiffOp& a, const DiffOp& b) { return a * b; }
DiffOp op_add(const DiffOp& a, const DiffOp& b) { return a + b; }
DiffOp op_scale(const DiffOp& a, const BigRational& s) { return a * s; }
DiffOp op_adjoint(const DiffOp& a) { return a.adjoint(); }

ExactMatrix matrix_rep(const DiffOp& op, std::size_t n) {
  ExactMatrix m(n, n);
  for (const auto& [k, band] : op.bands()) {
    for (std::size_t r = first_row(k); r < n; ++r) {
      const auto c = static_cast<std::int64_t>(r) + k;
      if (c >= static_cast<std::int64_t>(n)) break;
      m(r, static_cast<std::size_t>(c)) = band.value(r);
    }
  }
  return m;
}

std::vector<BigRational> apply(const DiffOp& op, std::span<const BigRational> f) {
  const std::size_t m = op.bandwidth();
  if (f.size() <= m) throw std::invalid_argument("apply: vector length must exceed the bandwidth");
  std::vector<BigRational> out(f.size() - m);
  for (std::size_t r = 0; r < out.size(); ++r) {
    BigRational acc;
    for (const auto& [k, band] : op.bands()) {
      const auto c = static_cast<std::int64_t>(r) + k;
      if (c < 0) continue;
      acc += band.value(r) * f[static_cast<std::size_t>(c)];
    }
    out[r] = std::move(acc);
  }
  return out;
}

DiffOp diffop_from_matrix(const ExactMatrix& m, Side side, std::size_t max_degree) {
  if (!m.is_square()) throw std::invalid_argument("diffop_from_matrix: matrix must be square");
  const auto n = static_cast<std::int64_t>(m.rows());
  DiffOp out(side);
  for (std::int64_t k = -(n - 1); k <= n - 1; ++k) {
    std::vector<BigRational> xs;
    std::vector<BigRational> ys;
    bool nonzero = false;
    for (std::int64_t r = std::max<std::int64_t>(0, -k); r < n && r + k < n; ++r) {
      xs.emplace_back(r);
      ys.push_back(m(static_cast<std::size_t>(r), static_cast<std::size_t>(r + k)));
      nonzero = nonzero || !ys.back().is_zero();
    }
    if (!nonzero) continue;
    bool fitted = false;
    for (std::size_t d = 0; d <= max_degree && d + 4 <= xs.size(); ++d) {
      const auto p = Polynomial::interpolate(std::span(xs).first(d + 1), std::span(ys).first(d + 1));
      bool ok = true;
      for (std::size_t i = d + 1; i < xs.size() && ok; ++i) ok = p(xs[i]) == ys[i];
      if (ok) {
        out.set_band(static_cast<int>(k), p);
        fitted = true;
        break;
      }
    }
    if (!fitted) {
      throw std::runtime_error("diffop_from_matrix: band " + std::to_string(k) +
                               " is not polynomial of degree <= " + std::to_string(max_degree) +
                               " with 3 verification samples");
    }
  }
  return out;
}

nlohmann::json to_json(const DiffOp& op) {
  nlohmann::json bands = nlohmann::json::array();
  for (const auto& [k, band] : op.bands()) {
    nlohmann::json poly = nlohmann::json::array();
    for (const auto& c : band.poly.coefficients()) poly.push_back(c.to_string());
    nlohmann::json entry = {{"k", k}, {"poly", std::move(poly)}};
    if (!band.boundary.empty()) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& [row, v] : band.boundary) rows.push_back({{"row", row}, {"value", v.to_string()}});
      entry["boundary"] = std::move(rows);
    }
    bands.push_back(std::move(entry));
  }
  return {{"side", side_name(op.side())}, {"bands", std::move(bands)}};
}

DiffOp diffop_from_json(const nlohmann::json& j) {
  try {
    const auto side_str = j.at("side").get<std::string>();
    if (side_str != "x" && side_str != "y") throw std::invalid_argument("DiffOp JSON: side must be x or y");
    DiffOp op(side_str == "x" ? Side::X : Side::Y);
    for (const auto& entry : j.at("bands")) {
      const int k = entry.at("k").get<int>();
      std::vector<BigRational> coeffs;
      for (const auto& c : entry.at("poly")) coeffs.push_back(BigRational::parse(c.get<std::string>()));
      op.set_band(k, Polynomial(std::move(coeffs)));
      if (entry.contains("boundary")) {
        for (const auto& b : entry.at("boundary")) {
          op.set_boundary(k, b.at("row").get<std::size_t>(), BigRational::parse(b.at("value").get<std::string>()));
        }
      }
    }
    return op;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("DiffOp JSON: ") + e.what());
  }
}

}  // namespace pascal
