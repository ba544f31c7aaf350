#pragma once

#include <vector>

#include "wreathdet/errors.hpp"
#include "wreathdet/matrix.hpp"
#include "wreathdet/perm.hpp"
#include "wreathdet/tableaux.hpp"

namespace wreathdet {

/// phi_{n,k}(g) = k^{kn}/(k!)^n sum_{s in S_k^n} (-1/k)^{kn - nu(g^{-1} s)}.
Rational phi(const Permutation& g, int n, int k, const Limits& limits = {});

/// kdet(g . 1_k^{+n}) / kdet(1_k^{+n}) through the alpha-determinant itself.
Rational phi_by_kdet(const Permutation& g, int n, int k, const Limits& limits = {});

/// m_ij = #{x in block j : g(x) in block i}; phi depends only on this table.
std::vector<std::vector<int>> double_coset_key(const Permutation& g, int n, int k);

struct XiMatrix {
  int n = 0;
  int k = 0;
  std::vector<StandardTableau> tableaux;  // reading-word order
  RationalMatrix entries;                 // entries(s, t) = phi(g(T_t)^{-1} g(T_s))
  std::size_t order() const { return tableaux.size(); }
};

/// Throws CapExceeded when f^{(k^n)} > limits.max_xi_order or (k!)^n > limits.max_young_order.
XiMatrix xi_matrix(int n, int k, const Limits& limits = {});
Rational xi_det(int n, int k, const Limits& limits = {});

struct Definiteness {
  bool positive_definite = false;
  std::vector<Rational> leading_minors;
  Rational det;
};
/// Exact Sylvester test on the leading principal minors.
Definiteness sylvester(const RationalMatrix& a);
Definiteness xi_positive_definite(int n, int k, const Limits& limits = {});

/// Apply g to a polynomial in x[r,p] by sending x[r,p] to x[g(r),p].
Polynomial relabel_rows(const Polynomial& f, const Permutation& g, const std::string& name = "x");

struct MatrixElementCheck {
  bool projector = false;      // P g . wrdet(X) == phi(g) wrdet(X)
  bool inner_product = false;  // <g . wrdet, wrdet> / <wrdet, wrdet> == phi(g)
  bool ok() const { return projector && inner_product; }
};
MatrixElementCheck phi_matrix_element_check(const Permutation& g, int n, int k, const Limits& limits = {});

/// sum_lambda |SSTab_k(lambda')| (1/(k!)^n) sum_s chi^lambda(g^{-1} s).
Rational phi_by_characters(const Permutation& g, int n, int k, const Limits& limits = {});

/// alpha^{N - nu(g)} == sum_lambda f^lambda/N! f_lambda(alpha) chi^lambda(g) for every class of S_N.
bool frobenius_specialization_check(int big_n);
/// f_lambda(-1/k) == (kn)!/f^lambda |SSTab_k(lambda')| / k^{kn} for every lambda of kn.
bool content_count_check(int n, int k);

/// D_T(X) = wrdet(g(T)^{-1} . X).
template <class R>
R d_tableau(const Matrix<R>& x, const StandardTableau& t, const Limits& limits = {});
/// (k!/k^k)^n sum_S phi(g(T)^{-1} g(S)) tdet_S(X).
template <class R>
R d_tableau_expansion(const Matrix<R>& x, const StandardTableau& t, const Limits& limits = {});
/// sum_S d_S tdet_S(X) with d solved against the tableau pairing.
template <class R>
R d_tableau_dual_expansion(const Matrix<R>& x, const StandardTableau& t, const Limits& limits = {});

}  // namespace wreathdet
