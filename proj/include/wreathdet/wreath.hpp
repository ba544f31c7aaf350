#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wreathdet/alphadet.hpp"
#include "wreathdet/errors.hpp"
#include "wreathdet/matrix.hpp"
#include "wreathdet/perm.hpp"
#include "wreathdet/tableaux.hpp"

namespace wreathdet {

/// A map f: [kn] -> [n] whose fibers all have size k. The n x k view has
/// (i, j)-entry f((i-1)k+j).
class ColoringFunction {
 public:
  /// Throws std::invalid_argument unless every fiber has exactly k elements.
  ColoringFunction(int n, int k, std::vector<int> values);
  /// iota: (i-1)k+j -> i.
  static ColoringFunction canonical(int n, int k);
  /// f(t_ij) = i for a tableau of shape (k^n).
  static ColoringFunction from_tableau(const StandardTableau& tableau);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int x) const { return values_[static_cast<std::size_t>(x - 1)]; }
  int view(int i, int j) const { return (*this)((i - 1) * k_ + j); }

  /// m_ij = #{l : f((i-1)k+l) = j}, as an n x n table.
  std::vector<std::vector<int>> multiplicity_matrix() const;
  /// The kn x n matrix (delta_{f(i), j}).
  RationalMatrix indicator_matrix() const;
  /// h in S_kn with f = iota o h: the sorted fiber f^{-1}(j) goes to block j.
  Permutation lift() const;
  /// f o s.
  ColoringFunction compose_right(const Permutation& s) const;
  /// tau o f for tau in S_n.
  ColoringFunction act_left(const Permutation& tau) const;
  /// Orbit representative under f -> f o s (s in S_k^n): each row of the view sorted.
  ColoringFunction orbit_representative() const;
  /// True when every column of the view is a permutation of [n].
  bool is_product_type() const;
  /// For product-type f, the columns w_1, ..., w_k of the view.
  std::vector<Permutation> column_permutations() const;

  auto operator<=>(const ColoringFunction&) const = default;
  bool operator==(const ColoringFunction&) const = default;
  std::string to_string() const;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<int> values_;
};

/// All colorings, lexicographic in (f(1), ..., f(kn)).
std::vector<ColoringFunction> all_colorings(int n, int k, const Limits& limits = {});
std::uint64_t coloring_count(int n, int k);

/// Element of the wreath product S_k wr S_n acting on [kn].
struct WreathGroupElement {
  std::vector<Permutation> blocks;  // n permutations of S_k
  Permutation outer;                // element of S_n

  /// phi(blocks) * psi(outer).
  Permutation embed() const;
  /// chi_{n,k}: the sign of the outer permutation.
  int character() const { return outer.sign(); }
};

std::vector<WreathGroupElement> wreath_group(int n, int k, const Limits& limits = {});

/// sum_{s in S_k^n} (-1/k)^{kn - nu(g s)}.
Rational young_cycle_sum(const Permutation& g, int n, int k, const Limits& limits = {});

/// Standard tableaux of shape (k^n) with their coefficients wrdet I(T).
struct TableauBasis {
  std::vector<StandardTableau> tableaux;
  std::vector<Rational> coefficients;
  /// pairing(u, t) = tdet_t(I(U_u)). Unitriangular in reading-word order.
  RationalMatrix pairing;
  /// c with wrdet(A) = sum_t c_t tdet_t(A), from pairing * c = coefficients.
  std::vector<Rational> dual_coefficients;
};
/// Cached per (n, k).
const TableauBasis& tableau_basis(int n, int k, const Limits& limits = {});

/// Every coloring with its (n,k)-sign. Cached per (n, k).
struct ColoringTable {
  std::vector<ColoringFunction> colorings;
  std::vector<Rational> signs;
};
const ColoringTable& coloring_table(int n, int k, const Limits& limits = {});

/// I(T) = g(T) . row_k_plex(I_n).
RationalMatrix tableau_matrix(const StandardTableau& tableau);
/// wrdet I(T) by the S_k^n sum.
Rational tableau_coefficient(const StandardTableau& tableau, const Limits& limits = {});

/// prod over columns l of T of det(a_{t_il, j}).
template <class R>
R tdet(const Matrix<R>& a, const StandardTableau& tableau);

enum class WrdetMethod { direct, tableaux, tableaux_dual, symmetric, monomial };

/// kdet(column_k_plex(A)).
template <class R>
R wrdet_direct(const Matrix<R>& a, int k, const Limits& limits = {});
/// sum_T wrdet I(T) tdet_T(A).
template <class R>
R wrdet_tableaux(const Matrix<R>& a, int k, const Limits& limits = {});
/// sum_T c_T tdet_T(A) with the coefficients solved against the pairing.
template <class R>
R wrdet_tableaux_dual(const Matrix<R>& a, int k, const Limits& limits = {});
/// k^{-kn} sum_{s in S_k^n} tdet_{T0}(s . A).
template <class R>
R wrdet_symmetric(const Matrix<R>& a, int k, const Limits& limits = {});
/// sum_f sgn^{(k)}(f) prod_i a_{i f(i)}.
template <class R>
R wrdet_monomial(const Matrix<R>& a, int k, const Limits& limits = {});

template <class R>
R wrdet(const Matrix<R>& a, int k, WrdetMethod method = WrdetMethod::direct, const Limits& limits = {});

/// (n,k)-sign: wrdet of the indicator matrix of f, by the S_k^n sum.
Rational nk_sign(const ColoringFunction& f, const Limits& limits = {});

struct OrbitData {
  std::uint64_t orbit_size = 0;          // by enumeration of f o S_k^n
  std::uint64_t orbit_size_formula = 0;  // (k!)^n / prod m_ij!
  std::uint64_t intersection = 0;        // orbit members omega(w) of product type
  long long signed_intersection = 0;     // sum of sgn(w) = prod sgn(w_j) over those members
  /// The common value of sgn(w) when it is the same for every member; 0 when
  /// the intersection is empty or the signs differ.
  int base_sign = 0;
  bool sign_is_constant() const { return intersection > 0 && base_sign != 0; }
  /// (k!/k^k)^n signed_intersection / orbit_size.
  Rational reconstructed_sign(int n, int k) const;
};
OrbitData orbit_data(const ColoringFunction& f, const Limits& limits = {});

/// sgn(f) det(A)^k == sum_h sgn(h) prod_i a_{f(i) h(i)}.
bool det_power_identity_check(const ColoringFunction& f, const RationalMatrix& a, const Limits& limits = {});

/// Coefficient of prod_{i,j} x_ij in the literal expansion of P_f(x).
Rational pf_coefficient(const ColoringFunction& f, const Limits& limits = {});

}  // namespace wreathdet
