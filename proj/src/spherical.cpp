#include "wreathdet/spherical.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "wreathdet/alphadet.hpp"
#include "wreathdet/parallel.hpp"
#include "wreathdet/wreath.hpp"

namespace wreathdet {

namespace {

Rational unit_power(int n, int k) {
  return power(Rational(factorial_integer(static_cast<unsigned>(k))) / power(Rational(k), k), n);
}

void check_degree(const Permutation& g, int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("n and k must be positive");
  if (g.degree() != n * k) throw ShapeError("permutation degree differs from kn");
}

Rational phi_uncached(const Permutation& g, int n, int k, const Limits& limits) {
  // k^{kn}/(k!)^n = 1/unit^n
  return young_cycle_sum(g.inverse(), n, k, limits) / unit_power(n, k);
}

}  // namespace

std::vector<std::vector<int>> double_coset_key(const Permutation& g, int n, int k) {
  check_degree(g, n, k);
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int x = 1; x <= n * k; ++x) ++m[static_cast<std::size_t>((g(x) - 1) / k)][static_cast<std::size_t>((x - 1) / k)];
  return m;
}

Rational phi(const Permutation& g, int n, int k, const Limits& limits) {
  check_degree(g, n, k);
  young_subgroup_elements(n, k, limits);
  using Key = std::tuple<int, int, std::vector<std::vector<int>>>;
  static std::mutex mutex;
  static std::map<Key, Rational> cache;
  Key key{n, k, double_coset_key(g, n, k)};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const Rational value = phi_uncached(g, n, k, limits);
  std::lock_guard lock(mutex);
  cache.emplace(std::move(key), value);
  return value;
}

Rational phi_by_kdet(const Permutation& g, int n, int k, const Limits& limits) {
  check_degree(g, n, k);
  const auto size = static_cast<std::size_t>(n * k);
  RationalMatrix ones(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (i / static_cast<std::size_t>(k) == j / static_cast<std::size_t>(k)) ones(i, j) = 1;
  const Rational alpha(-1, k);
  return adet<Rational>(act_rows(g, ones), alpha, AdetMethod::automatic, limits) /
         adet<Rational>(ones, alpha, AdetMethod::automatic, limits);
}

XiMatrix xi_matrix(int n, int k, const Limits& limits) {
  young_subgroup_elements(n, k, limits);
  const auto shape = Partition::rectangle(n, k);
  const auto order = hook_f(shape);
  if (order > static_cast<std::uint64_t>(limits.max_xi_order)) {
    throw CapExceeded("Xi order f^(k^n)", order, static_cast<std::uint64_t>(limits.max_xi_order));
  }
  XiMatrix xi;
  xi.n = n;
  xi.k = k;
  xi.tableaux = standard_tableaux(shape, limits);
  const std::size_t size = xi.tableaux.size();
  std::vector<Permutation> g;
  std::vector<Permutation> g_inverse;
  for (const auto& t : xi.tableaux) {
    g.push_back(g_of_T(t));
    g_inverse.push_back(g.back().inverse());
  }
  std::vector<std::pair<std::size_t, std::size_t>> upper;
  for (std::size_t s = 0; s < size; ++s)
    for (std::size_t t = s; t < size; ++t) upper.emplace_back(s, t);
  const auto values = parallel_map<Rational>(upper.size(), [&](std::size_t i) {
    const auto [s, t] = upper[i];
    return s == t ? Rational(1) : phi(g_inverse[t] * g[s], n, k, limits);
  });
  xi.entries = RationalMatrix(size, size);
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const auto [s, t] = upper[i];
    xi.entries(s, t) = values[i];
    xi.entries(t, s) = values[i];
  }
  return xi;
}

Rational xi_det(int n, int k, const Limits& limits) { return determinant(xi_matrix(n, k, limits).entries); }

Definiteness sylvester(const RationalMatrix& a) {
  Definiteness d;
  d.leading_minors = leading_principal_minors(a);
  d.det = d.leading_minors.empty() ? Rational(1) : d.leading_minors.back();
  d.positive_definite = true;
  for (const auto& m : d.leading_minors) d.positive_definite = d.positive_definite && m > 0;
  return d;
}

Definiteness xi_positive_definite(int n, int k, const Limits& limits) { return sylvester(xi_matrix(n, k, limits).entries); }

Polynomial relabel_rows(const Polynomial& f, const Permutation& g, const std::string& name) {
  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::pair<Variable, unsigned>> factors;
    for (auto [v, e] : m.factors()) {
      if (v.name == name && v.row >= 1 && v.row <= g.degree()) v.row = g(v.row);
      factors.emplace_back(std::move(v), e);
    }
    out += Polynomial(Monomial::from_factors(std::move(factors)), c);
  }
  return out;
}

namespace {
Rational coefficient_pairing(const Polynomial& a, const Polynomial& b) {
  Rational total(0);
  for (const auto& [m, c] : a.terms()) total += c * b.coefficient(m);
  return total;
}
}  // namespace

MatrixElementCheck phi_matrix_element_check(const Permutation& g, int n, int k, const Limits& limits) {
  check_degree(g, n, k);
  const auto young = young_subgroup_elements(n, k, limits);
  const auto x = symbolic_matrix(static_cast<std::size_t>(n * k), static_cast<std::size_t>(n));
  const auto w = wrdet_direct(x, k, limits);
  const auto value = phi(g, n, k, limits);
  Polynomial projected;
  for (const auto& s : young) projected += relabel_rows(w, s * g);
  projected = projected * Polynomial(Rational(1) / Rational(Integer(static_cast<unsigned long>(young.size()))));
  MatrixElementCheck check;
  check.projector = projected == Polynomial(value) * w;
  check.inner_product = coefficient_pairing(relabel_rows(w, g), w) == value * coefficient_pairing(w, w);
  return check;
}

Rational phi_by_characters(const Permutation& g, int n, int k, const Limits& limits) {
  check_degree(g, n, k);
  const auto young = young_subgroup_elements(n, k, limits);
  const auto g_inverse = g.inverse();
  std::map<Partition, std::uint64_t> classes;
  for (const auto& s : young) ++classes[Partition((g_inverse * s).cycle_type())];
  Rational total(0);
  for (const auto& lambda : partitions_of(n * k)) {
    const auto count = count_semistandard(lambda.conjugate(), k);
    if (count == 0) continue;
    Integer spherical(0);
    for (const auto& [mu, size] : classes) spherical += Integer(static_cast<long>(mn_character(lambda, mu))) * Integer(static_cast<unsigned long>(size));
    total += Rational(Integer(static_cast<unsigned long>(count)) * spherical);
  }
  return total / Rational(Integer(static_cast<unsigned long>(young.size())));
}

bool frobenius_specialization_check(int big_n) {
  const auto alpha = Polynomial::variable(alpha_variable());
  const auto classes = partitions_of(big_n);
  const Rational n_factorial(factorial_integer(static_cast<unsigned>(big_n)));
  for (const auto& mu : classes) {
    Polynomial sum;
    for (const auto& lambda : classes) {
      const Rational weight = Rational(Integer(static_cast<unsigned long>(hook_f(lambda))) * Integer(static_cast<long>(mn_character(lambda, mu)))) / n_factorial;
      if (is_zero(weight)) continue;
      sum += Polynomial(weight) * content_polynomial(lambda, alpha);
    }
    if (sum != power(alpha, static_cast<unsigned>(big_n - mu.depth()))) return false;
  }
  return true;
}

bool content_count_check(int n, int k) {
  const int size = n * k;
  const Rational alpha(-1, k);
  const Rational scale = Rational(factorial_integer(static_cast<unsigned>(size))) / power(Rational(k), size);
  for (const auto& lambda : partitions_of(size)) {
    const Rational lhs = content_polynomial(lambda, alpha);
    const Rational rhs = scale * Rational(Integer(static_cast<unsigned long>(count_semistandard(lambda.conjugate(), k)))) /
                         Rational(Integer(static_cast<unsigned long>(hook_f(lambda))));
    if (lhs != rhs) return false;
  }
  return true;
}

namespace {
std::pair<int, int> rectangle_of(const StandardTableau& t) {
  const auto shape = t.shape();
  if (!shape.is_rectangle() || shape.depth() == 0) throw ShapeError("D_T needs a rectangular tableau");
  return {shape.depth(), shape[0]};
}
}  // namespace

template <class R>
R d_tableau(const Matrix<R>& x, const StandardTableau& t, const Limits& limits) {
  const auto [n, k] = rectangle_of(t);
  return wrdet_direct(act_rows(g_of_T(t).inverse(), x), k, limits);
}

template <class R>
R d_tableau_expansion(const Matrix<R>& x, const StandardTableau& t, const Limits& limits) {
  const auto [n, k] = rectangle_of(t);
  const auto& basis = tableau_basis(n, k, limits);
  const auto g_inverse = g_of_T(t).inverse();
  R total(0);
  for (const auto& s : basis.tableaux) {
    const auto weight = phi(g_inverse * g_of_T(s), n, k, limits);
    if (!is_zero(weight)) total += R(weight) * tdet(x, s);
  }
  return R(unit_power(n, k)) * total;
}

template <class R>
R d_tableau_dual_expansion(const Matrix<R>& x, const StandardTableau& t, const Limits& limits) {
  const auto [n, k] = rectangle_of(t);
  const auto& basis = tableau_basis(n, k, limits);
  const auto g_inverse = g_of_T(t).inverse();
  std::vector<Rational> values;
  for (const auto& u : basis.tableaux) values.push_back(unit_power(n, k) * phi(g_inverse * g_of_T(u), n, k, limits));
  const auto d = solve(basis.pairing, values);
  R total(0);
  for (std::size_t s = 0; s < d.size(); ++s)
    if (!is_zero(d[s])) total += R(d[s]) * tdet(x, basis.tableaux[s]);
  return total;
}

template Rational d_tableau(const RationalMatrix&, const StandardTableau&, const Limits&);
template Polynomial d_tableau(const PolynomialMatrix&, const StandardTableau&, const Limits&);
template Rational d_tableau_expansion(const RationalMatrix&, const StandardTableau&, const Limits&);
template Polynomial d_tableau_expansion(const PolynomialMatrix&, const StandardTableau&, const Limits&);
template Rational d_tableau_dual_expansion(const RationalMatrix&, const StandardTableau&, const Limits&);
template Polynomial d_tableau_dual_expansion(const PolynomialMatrix&, const StandardTableau&, const Limits&);

}  // namespace wreathdet
