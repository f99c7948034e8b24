#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qplane/scalars.hpp"

namespace qplane {

/// Dense matrix over the coefficient field, row-major.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ScalarMatrix(std::size_t rows, std::size_t cols, std::vector<ScalarExpr> entries);

  static ScalarMatrix identity(std::size_t n);
  static ScalarMatrix diagonal(const std::vector<ScalarExpr>& d);
  /// Rows of expression strings in the scalar grammar.
  static ScalarMatrix parse(const std::vector<std::vector<std::string>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ScalarExpr& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const ScalarExpr& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  ScalarMatrix operator-() const;
  ScalarMatrix& operator+=(const ScalarMatrix& o);
  ScalarMatrix& operator-=(const ScalarMatrix& o);
  friend ScalarMatrix operator+(ScalarMatrix a, const ScalarMatrix& b) { return a += b; }
  friend ScalarMatrix operator-(ScalarMatrix a, const ScalarMatrix& b) { return a -= b; }
  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator*(const ScalarExpr& c, ScalarMatrix m);
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) = default;

  ScalarMatrix transpose() const;
  /// Entrywise field involution (no transpose).
  ScalarMatrix star() const;
  ScalarMatrix substitute(Var v, const ScalarExpr& value) const;

  ScalarExpr determinant() const;
  /// Throws DivisionByZero when singular.
  ScalarMatrix inverse() const;

  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ScalarExpr> data_;

  void require_same_shape(const ScalarMatrix& o) const;
};

/// Reduced row echelon form.
struct RowEchelon {
  ScalarMatrix matrix;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(ScalarMatrix m);

/// Basis of {x : m x = 0}, one vector per free column, in reduced form
/// (x[free] = 1, other free coordinates 0).
std::vector<std::vector<ScalarExpr>> nullspace(const ScalarMatrix& m);

}  // namespace qplane
