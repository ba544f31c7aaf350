#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "wreathdet/errors.hpp"
#include "wreathdet/perm.hpp"
#include "wreathdet/polynomial.hpp"
#include "wreathdet/rational.hpp"

namespace wreathdet {

/// Dense row-major matrix over a commutative ring R (Rational or Polynomial).
/// Indices are 0-based.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const R& fill = R(0))
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<R>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw ShapeError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_rows(std::initializer_list<std::initializer_list<R>> rows) {
    std::vector<std::vector<R>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }
  static Matrix ones(std::size_t rows, std::size_t cols) { return Matrix(rows, cols, R(1)); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  R& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<R>& entries() const { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> entries_;
};

using RationalMatrix = Matrix<Rational>;
using PolynomialMatrix = Matrix<Polynomial>;

template <class R>
Matrix<R> transpose(const Matrix<R>& a) {
  Matrix<R> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <class R>
Matrix<R> operator*(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  Matrix<R> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (is_zero(a(i, l))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, l) * b(l, j);
    }
  return c;
}

/// Left row action: (s . A)_{ij} = a_{s^{-1}(i), j}.
template <class R>
Matrix<R> act_rows(const Permutation& s, const Matrix<R>& a) {
  if (static_cast<std::size_t>(s.degree()) != a.rows()) throw ShapeError("row action degree mismatch");
  Matrix<R> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto dst = static_cast<std::size_t>(s(static_cast<int>(i) + 1) - 1);
    for (std::size_t j = 0; j < a.cols(); ++j) out(dst, j) = a(i, j);
  }
  return out;
}

/// Right column action: (A . t)_{ij} = a_{i, t(j)}.
template <class R>
Matrix<R> act_columns(const Matrix<R>& a, const Permutation& t) {
  if (static_cast<std::size_t>(t.degree()) != a.cols()) throw ShapeError("column action degree mismatch");
  Matrix<R> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = a(i, static_cast<std::size_t>(t(static_cast<int>(j) + 1) - 1));
  return out;
}

/// Repeats every column k times in place: A (x) (1, ..., 1).
template <class R>
Matrix<R> column_k_plex(const Matrix<R>& a, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const auto kk = static_cast<std::size_t>(k);
  Matrix<R> out(a.rows(), a.cols() * kk);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = a(i, j / kk);
  return out;
}

/// Repeats every row k times in place.
template <class R>
Matrix<R> row_k_plex(const Matrix<R>& a, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const auto kk = static_cast<std::size_t>(k);
  Matrix<R> out(a.rows() * kk, a.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i / kk, j);
  return out;
}

/// Stacks A on top of B (same column count).
template <class R>
Matrix<R> pile(const Matrix<R>& top, const Matrix<R>& bottom) {
  if (top.cols() != bottom.cols()) throw ShapeError("pile requires equal column counts");
  Matrix<R> out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  return out;
}

/// [[A11, A12], [0, A22]].
template <class R>
Matrix<R> block_upper(const Matrix<R>& a11, const Matrix<R>& a12, const Matrix<R>& a22) {
  if (!a11.is_square() || !a22.is_square() || a12.rows() != a11.rows() || a12.cols() != a22.cols()) {
    throw ShapeError("block shapes are incompatible");
  }
  const std::size_t n = a11.rows(), m = a22.rows();
  Matrix<R> out(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a11(i, j);
    for (std::size_t j = 0; j < m; ++j) out(i, n + j) = a12(i, j);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(n + i, n + j) = a22(i, j);
  return out;
}

/// Rows `rows` (0-based, in the given order) and all columns of A.
template <class R>
Matrix<R> select_rows(const Matrix<R>& a, const std::vector<std::size_t>& rows) {
  Matrix<R> out(rows.size(), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(rows[i], j);
  return out;
}

/// Ordinary determinant by fraction-free (Bareiss) elimination.
Rational determinant(const RationalMatrix& a);
/// Ordinary determinant by cofactor expansion over row subsets.
Polynomial determinant(const PolynomialMatrix& a);

/// Leading principal minors d_1, ..., d_n, computed exactly by Bareiss
/// elimination without pivoting (elimination stops at the first zero minor;
/// remaining minors are computed directly).
std::vector<Rational> leading_principal_minors(const RationalMatrix& a);

/// The solution x of a x = b for square nonsingular a. Throws std::domain_error when a is singular.
std::vector<Rational> solve(const RationalMatrix& a, const std::vector<Rational>& b);

/// Clears denominators: returns integers B and scale L with A = B / L.
struct IntegerScaled {
  std::vector<Integer> entries;  // row-major
  Integer scale;
};
IntegerScaled clear_denominators(const RationalMatrix& a);

/// Converts each entry to a constant polynomial.
PolynomialMatrix to_polynomial(const RationalMatrix& a);

/// Matrix of indeterminates name[i,j], 1-based indices.
PolynomialMatrix symbolic_matrix(std::size_t rows, std::size_t cols, const std::string& name = "x");

std::string to_string(const RationalMatrix& a);

}  // namespace wreathdet
