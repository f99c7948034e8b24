#include "qplane/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace qplane {

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, std::vector<ScalarExpr> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match shape");
}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarExpr(1);
  return m;
}

ScalarMatrix ScalarMatrix::diagonal(const std::vector<ScalarExpr>& d) {
  ScalarMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ScalarMatrix ScalarMatrix::parse(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return {};
  ScalarMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = parse_scalar(rows[i][j]);
  }
  return m;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

void ScalarMatrix::require_same_shape(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
}

ScalarMatrix ScalarMatrix::operator-() const {
  ScalarMatrix out = *this;
  for (auto& e : out.data_) e = -e;
  return out;
}

ScalarMatrix& ScalarMatrix::operator+=(const ScalarMatrix& o) {
  require_same_shape(o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ScalarMatrix& ScalarMatrix::operator-=(const ScalarMatrix& o) {
  require_same_shape(o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  ScalarMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ScalarExpr& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ScalarMatrix operator*(const ScalarExpr& c, ScalarMatrix m) {
  for (auto& e : m.data_) e *= c;
  return m;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

ScalarMatrix ScalarMatrix::star() const {
  ScalarMatrix out = *this;
  for (auto& e : out.data_) e = e.star();
  return out;
}

ScalarMatrix ScalarMatrix::substitute(Var v, const ScalarExpr& value) const {
  ScalarMatrix out = *this;
  for (auto& e : out.data_) e = e.substitute(v, value);
  return out;
}

ScalarExpr ScalarMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  ScalarMatrix m = *this;
  ScalarExpr det(1);
  const std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return {};
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const ScalarExpr inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const ScalarExpr f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) {
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
      }
    }
  }
  return det;
}

ScalarMatrix ScalarMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  ScalarMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = ScalarExpr(1);
  }
  RowEchelon re = row_reduce(aug);
  if (re.rank() < n || re.pivots[n - 1] != n - 1) throw DivisionByZero("singular matrix");
  ScalarMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = re.matrix(i, n + j);
  }
  return out;
}

std::vector<std::vector<std::string>> ScalarMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).to_string();
  }
  return out;
}

std::string ScalarMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

RowEchelon row_reduce(ScalarMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const ScalarExpr inv = m(row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, c).is_zero()) continue;
      const ScalarExpr f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
      }
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.matrix = std::move(m);
  return out;
}

std::vector<std::vector<ScalarExpr>> nullspace(const ScalarMatrix& m) {
  const RowEchelon re = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : re.pivots) is_pivot[p] = true;
  std::vector<std::vector<ScalarExpr>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<ScalarExpr> x(m.cols());
    x[f] = ScalarExpr(1);
    for (std::size_t k = 0; k < re.pivots.size(); ++k) x[re.pivots[k]] = -re.matrix(k, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace qplane
