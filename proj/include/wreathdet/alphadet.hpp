#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wreathdet/errors.hpp"
#include "wreathdet/matrix.hpp"
#include "wreathdet/polynomial.hpp"
#include "wreathdet/rational.hpp"

namespace wreathdet {

/// The indeterminate used for a symbolic parameter alpha ("a").
Variable alpha_variable();

/// The parameter alpha: an exact rational or the indeterminate "a".
class AlphaParam {
 public:
  AlphaParam() = default;
  static AlphaParam symbolic();
  static AlphaParam value(const Rational& v);
  /// "symbolic" (or "a") or a fraction string.
  static AlphaParam parse(std::string_view text);

  bool is_symbolic() const { return !value_.has_value(); }
  const Rational& rational() const;
  /// True for alpha = -1/k with k a positive integer.
  bool is_singular() const { return singular_order() != 0; }
  /// k when alpha = -1/k, else 0.
  int singular_order() const;
  Polynomial as_polynomial() const;
  std::string to_string() const;

 private:
  std::optional<Rational> value_;
};

enum class AdetMethod { automatic, sum, laplace };

/// S_c = sum over w with nu(w) = c of a_{w(1)1} ... a_{w(n)n}, for c = 0..n.
/// adet(A) = sum_c alpha^{n-c} S_c.
template <class R>
std::vector<R> cycle_class_sums(const Matrix<R>& a, const Limits& limits = {});

/// Defining permutation sum.
template <class R>
R adet_sum(const Matrix<R>& a, const R& alpha, const Limits& limits = {});

/// Memoized Laplace recursion over (index subset, replaced row) states.
template <class R>
R adet_memo(const Matrix<R>& a, const R& alpha);

/// alpha-determinant; `automatic` uses the defining sum for n <= 8 and the
/// memoized Laplace recursion above that.
template <class R>
R adet(const Matrix<R>& a, const R& alpha, AdetMethod method = AdetMethod::automatic,
       const Limits& limits = {});

Rational adet(const RationalMatrix& a, const Rational& alpha);
/// adet as a polynomial in the indeterminate "a".
Polynomial adet_symbolic(const RationalMatrix& a, const Limits& limits = {});
Polynomial adet(const PolynomialMatrix& a, const AlphaParam& alpha, const Limits& limits = {});

/// One term alpha^{alpha_power} * entry * adet(minor) of the expansion along
/// column q. `row` is 1-based in the original matrix.
template <class R>
struct LaplaceTerm {
  int row = 0;
  int alpha_power = 0;
  R entry;
  Matrix<R> minor;
};

/// Expansion along column q (1-based): for each row p, X_pq drops row and
/// column q and, when p != q, puts the surviving entries of row q into row p.
template <class R>
std::vector<LaplaceTerm<R>> laplace_terms(const Matrix<R>& a, int q);

/// adet computed by expanding along column q.
template <class R>
R adet_laplace(const Matrix<R>& a, const R& alpha, int q);

/// adet at alpha = -1/k.
Rational kdet(const RationalMatrix& a, int k);
Polynomial kdet(const PolynomialMatrix& a, int k);

/// adet([[A11, A12], [0, A22]]) == adet(A11) * adet(A22).
bool block_adet_check(const RationalMatrix& a11, const RationalMatrix& a12, const RationalMatrix& a22,
                      const Rational& alpha);
bool block_adet_check(const PolynomialMatrix& a11, const PolynomialMatrix& a12,
                      const PolynomialMatrix& a22, const Polynomial& alpha);

}  // namespace wreathdet
