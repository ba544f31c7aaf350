#include "wreathdet/matrix.hpp"

#include <stdexcept>

#include <cstdint>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace wreathdet {

IntegerScaled clear_denominators(const RationalMatrix& a) {
  IntegerScaled out;
  out.scale = 1;
  for (const auto& e : a.entries()) mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), e.get_den_mpz_t());
  out.entries.reserve(a.entries().size());
  for (const auto& e : a.entries()) {
    Integer v = out.scale / e.get_den();
    v *= e.get_num();
    out.entries.push_back(std::move(v));
  }
  return out;
}

namespace {

// In-place Bareiss on an n x n integer matrix. With `pivoting`, rows are
// swapped to avoid zero pivots and the determinant sign is tracked. Returns
// the determinant of the input (or of the leading block already processed).
Integer bareiss(std::vector<Integer>& m, std::size_t n, bool pivoting, std::vector<Integer>* pivots) {
  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      if (!pivoting) return 0;
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row * n + k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[swap_row * n + j]);
      sign = -sign;
    }
    if (pivots) pivots->push_back(m[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& target = m[i * n + j];
        target = target * m[k * n + k] - m[i * n + k] * m[k * n + j];
        mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), previous.get_mpz_t());
      }
      m[i * n + k] = 0;
    }
    previous = m[k * n + k];
  }
  Integer det = n == 0 ? Integer(1) : m[(n - 1) * n + (n - 1)];
  if (pivots && n > 0) pivots->push_back(det);
  return sign < 0 ? Integer(-det) : det;
}

}  // namespace

Rational determinant(const RationalMatrix& a) {
  if (!a.is_square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  auto scaled = clear_denominators(a);
  Integer det = bareiss(scaled.entries, n, true, nullptr);
  Integer denominator;
  mpz_pow_ui(denominator.get_mpz_t(), scaled.scale.get_mpz_t(), n);
  Rational r(det, denominator);
  r.canonicalize();
  return r;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& a) {
  if (!a.is_square()) throw ShapeError("leading minors of a non-square matrix");
  const std::size_t n = a.rows();
  auto scaled = clear_denominators(a);
  std::vector<Integer> pivots;
  bareiss(scaled.entries, n, false, &pivots);
  std::vector<Rational> minors;
  minors.reserve(n);
  Integer scale_power = 1;
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    scale_power *= scaled.scale;
    Rational r(pivots[k], scale_power);
    r.canonicalize();
    minors.push_back(r);
  }
  // A zero pivot stops fraction-free elimination; finish the sequence directly.
  for (std::size_t k = minors.size(); k < n; ++k) {
    RationalMatrix lead(k + 1, k + 1);
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j <= k; ++j) lead(i, j) = a(i, j);
    minors.push_back(determinant(lead));
  }
  return minors;
}

Polynomial determinant(const PolynomialMatrix& a) {
  if (!a.is_square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Polynomial(1);
  if (n > 20) throw CapExceeded("symbolic determinant size", n, 20);
  // det restricted to the first |S| columns and the rows in S, expanding along
  // the last of those columns.
  std::unordered_map<std::uint32_t, Polynomial> memo;
  std::function<Polynomial(std::uint32_t)> minor = [&](std::uint32_t rows) -> Polynomial {
    const int size = __builtin_popcount(rows);
    if (size == 0) return Polynomial(1);
    if (auto it = memo.find(rows); it != memo.end()) return it->second;
    const auto col = static_cast<std::size_t>(size - 1);
    Polynomial total;
    int position = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (!((rows >> r) & 1U)) continue;
      if (!a(r, col).is_zero()) {
        // Sign of the cofactor: the row is at `position` among the chosen rows.
        Polynomial term = a(r, col) * minor(rows & ~(1U << r));
        if ((position + size - 1) % 2 == 0) {
          total += term;
        } else {
          total -= term;
        }
      }
      ++position;
    }
    memo.emplace(rows, total);
    return total;
  };
  return minor((n == 32 ? 0U : (1U << n)) - 1U);
}

std::vector<Rational> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw ShapeError("solve needs a square system");
  std::vector<std::vector<Rational>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(a(i, j));
    m[i].push_back(b[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("singular system");
    std::swap(m[p], m[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational factor = m[r][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[r][j] -= factor * m[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

PolynomialMatrix to_polynomial(const RationalMatrix& a) {
  PolynomialMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = Polynomial(a(i, j));
  return out;
}

PolynomialMatrix symbolic_matrix(std::size_t rows, std::size_t cols, const std::string& name) {
  PolynomialMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      out(i, j) = Polynomial::variable(name, static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return out;
}

std::string to_string(const RationalMatrix& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << to_string(a(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace wreathdet
