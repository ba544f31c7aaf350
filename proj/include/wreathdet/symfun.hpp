#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "wreathdet/errors.hpp"
#include "wreathdet/matrix.hpp"
#include "wreathdet/tableaux.hpp"

namespace wreathdet {

/// Some x_i + y_j (or 1 - x_i y_j) vanishes.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The wreath Vandermonde determinant vanishes at the given points.
class VanishingVandermonde : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using ExponentVector = std::vector<int>;

/// delta_{n,k}: entry j (1-based) is n - 1 - floor((j-1)/k).
ExponentVector delta_shift(int n, int k);

/// prod_{i<j} (y_i - y_j).
Rational difference_product(const std::vector<Rational>& y);

/// The kn x n matrix (x_i^{n-j}).
RationalMatrix vandermonde_matrix(const std::vector<Rational>& x, int n);
/// wrdet V_{n,k}(x). Throws ShapeError unless |x| = kn.
Rational wreath_vandermonde(const std::vector<Rational>& x, int n, int k);

/// kdet (x_i^{a_j}) over kn x kn.
Rational d_nk(const std::vector<Rational>& x, const ExponentVector& a, int k);

struct CauchyCheck {
  bool cauchy = false;   // 1/(x_i + y_j)
  bool variant = false;  // 1/(1 - x_i y_j)
  bool ok() const { return cauchy && variant; }
};
/// Throws PoleError when some x_i + y_j or 1 - x_i y_j is zero.
CauchyCheck cauchy_check(const std::vector<Rational>& x, const std::vector<Rational>& y, int k);

/// Distinct rearrangements of lambda padded with zeros to length `length`, lexicographic.
std::vector<ExponentVector> distinct_rearrangements(const Partition& lambda, int length, std::uint64_t cap = 10'000'000);

enum class PowerKind { power, complete, elementary };

/// Ratios of -1/k-determinants over wrdet V_{n,k}(x) at one fixed point set.
/// D_{n,k}(x; a) values are cached per exponent vector.
class KdetRatios {
 public:
  /// Throws ShapeError unless |x| = kn and VanishingVandermonde when wrdet V_{n,k}(x) = 0.
  KdetRatios(std::vector<Rational> x, int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Rational>& x() const { return x_; }
  const Rational& vandermonde() const { return vandermonde_; }

  Rational d(const ExponentVector& a);
  /// (1/wrdet V) sum over distinct rearrangements of D(x; delta + rearrangement).
  Rational monomial(const Partition& lambda);
  /// sum_mu K_{lambda mu} monomial(mu).
  Rational schur(const Partition& lambda);
  Rational power_kind(PowerKind kind, int degree);

 private:
  Rational shifted_sum(const std::vector<ExponentVector>& shifts);

  std::vector<Rational> x_;
  int n_;
  int k_;
  Rational vandermonde_;
  std::mutex mutex_;
  std::map<ExponentVector, Rational> cache_;
};

Rational monomial_via_kdet(const Partition& lambda, const std::vector<Rational>& x, int n, int k);
Rational schur_via_kdet(const Partition& lambda, const std::vector<Rational>& x, int n, int k);
Rational pde_via_kdet(PowerKind kind, int degree, const std::vector<Rational>& x, int n, int k);

/// Classical evaluations from the definitions.
namespace classical {
Rational monomial(const Partition& lambda, const std::vector<Rational>& x);
/// det(x_i^{lambda_j + N - j}) / det(x_i^{N - j}) with N = |x|; 0 when depth > N.
Rational schur(const Partition& lambda, const std::vector<Rational>& x);
Rational power_kind(PowerKind kind, int degree, const std::vector<Rational>& x);
}  // namespace classical

/// H^d_{n,k}(x, y) by the exponent sum.
Rational h_series_term(int n, int k, int d, const std::vector<Rational>& x, const std::vector<Rational>& y);
/// Delta_n(y)^k wrdet V_{n,k}(x) sum_{|lambda| = d, depth <= n} s_lambda(x) s_lambda(y).
Rational h_series_schur(int n, int k, int d, const std::vector<Rational>& x, const std::vector<Rational>& y);
/// Both sides agree for every d <= d_max.
bool h_series_check(int n, int k, int d_max, const std::vector<Rational>& x, const std::vector<Rational>& y);

/// prod_l Delta_n(x_l, x_{l+k}, ..., x_{l+(n-1)k}).
Rational delta_nk(const std::vector<Rational>& x, int n, int k);
/// k^{-kn} sum_{s in S_k^n} Delta_{n,k}(x_{s(1)}, ..., x_{s(kn)}).
Rational symmetric_orbit_sum(const std::vector<Rational>& x, int n, int k, const Limits& limits = {});
bool symmetric_sum_vdm_check(const std::vector<Rational>& x, int n, int k, const Limits& limits = {});

/// Delta_T(x) = prod over columns of T of the difference product of those x.
Rational specht_polynomial(const StandardTableau& t, const std::vector<Rational>& x);
/// sum_T wrdet I(T) Delta_T(x).
Rational specht_expansion(const std::vector<Rational>& x, int n, int k, const Limits& limits = {});
/// sum_T c_T Delta_T(x) with the solved tableau coefficients.
Rational specht_expansion_dual(const std::vector<Rational>& x, int n, int k, const Limits& limits = {});

}  // namespace wreathdet
