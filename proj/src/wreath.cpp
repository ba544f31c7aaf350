#include "wreathdet/wreath.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wreathdet/parallel.hpp"

namespace wreathdet {

ColoringFunction::ColoringFunction(int n, int k, std::vector<int> values) : n_(n), k_(k), values_(std::move(values)) {
  if (n < 1 || k < 1) throw std::invalid_argument("coloring requires n, k >= 1");
  if (values_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(k)) {
    throw std::invalid_argument("coloring must have kn values");
  }
  std::vector<int> fiber(static_cast<std::size_t>(n) + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n) throw std::invalid_argument("coloring value out of range");
    ++fiber[static_cast<std::size_t>(v)];
  }
  for (int j = 1; j <= n; ++j)
    if (fiber[static_cast<std::size_t>(j)] != k) throw std::invalid_argument("every fiber of a coloring must have k elements");
}

ColoringFunction ColoringFunction::canonical(int n, int k) {
  std::vector<int> values;
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < k; ++j) values.push_back(i);
  return ColoringFunction(n, k, values);
}

ColoringFunction ColoringFunction::from_tableau(const StandardTableau& tableau) {
  const auto shape = tableau.shape();
  if (!shape.is_rectangle() || shape.depth() == 0) throw ShapeError("coloring from a non-rectangular tableau");
  const int n = shape.depth();
  const int k = shape[0];
  std::vector<int> values(static_cast<std::size_t>(n * k));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= k; ++j) values[static_cast<std::size_t>(tableau.entry(i, j) - 1)] = i;
  return ColoringFunction(n, k, values);
}

std::vector<std::vector<int>> ColoringFunction::multiplicity_matrix() const {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_), 0));
  for (int i = 1; i <= n_; ++i)
    for (int l = 1; l <= k_; ++l) ++m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(view(i, l) - 1)];
  return m;
}

RationalMatrix ColoringFunction::indicator_matrix() const {
  RationalMatrix a(values_.size(), static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < values_.size(); ++i) a(i, static_cast<std::size_t>(values_[i] - 1)) = 1;
  return a;
}

Permutation ColoringFunction::lift() const {
  std::vector<int> seen(static_cast<std::size_t>(n_) + 1, 0);
  std::vector<int> images;
  for (int v : values_) images.push_back((v - 1) * k_ + ++seen[static_cast<std::size_t>(v)]);
  return Permutation(images);
}

ColoringFunction ColoringFunction::compose_right(const Permutation& s) const {
  if (s.degree() != n_ * k_) throw ShapeError("permutation degree differs from kn");
  std::vector<int> values;
  for (int x = 1; x <= n_ * k_; ++x) values.push_back((*this)(s(x)));
  return ColoringFunction(n_, k_, values);
}

ColoringFunction ColoringFunction::act_left(const Permutation& tau) const {
  if (tau.degree() != n_) throw ShapeError("permutation degree differs from n");
  std::vector<int> values;
  for (int v : values_) values.push_back(tau(v));
  return ColoringFunction(n_, k_, values);
}

ColoringFunction ColoringFunction::orbit_representative() const {
  auto values = values_;
  for (int i = 0; i < n_; ++i) {
    auto first = values.begin() + i * k_;
    std::sort(first, first + k_);
  }
  return ColoringFunction(n_, k_, values);
}

bool ColoringFunction::is_product_type() const {
  for (int j = 1; j <= k_; ++j) {
    std::vector<bool> hit(static_cast<std::size_t>(n_) + 1, false);
    for (int i = 1; i <= n_; ++i) {
      const int v = view(i, j);
      if (hit[static_cast<std::size_t>(v)]) return false;
      hit[static_cast<std::size_t>(v)] = true;
    }
  }
  return true;
}

std::vector<Permutation> ColoringFunction::column_permutations() const {
  if (!is_product_type()) throw std::logic_error("coloring is not of product type");
  std::vector<Permutation> out;
  for (int j = 1; j <= k_; ++j) {
    std::vector<int> images;
    for (int i = 1; i <= n_; ++i) images.push_back(view(i, j));
    out.emplace_back(images);
  }
  return out;
}

std::string ColoringFunction::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << "]";
  return os.str();
}

std::uint64_t coloring_count(int n, int k) {
  Integer count = factorial_integer(static_cast<unsigned>(n * k));
  Integer block = factorial_integer(static_cast<unsigned>(k));
  for (int i = 0; i < n; ++i) count /= block;
  return count.fits_ulong_p() ? count.get_ui() : UINT64_MAX;
}

namespace {

void check_colorings(int n, int k, const Limits& limits) {
  const auto count = coloring_count(n, k);
  if (count > limits.max_colorings) throw CapExceeded("coloring functions", count, limits.max_colorings);
}

void check_young(int n, int k, const Limits& limits) {
  Integer order = 1;
  for (int i = 0; i < n; ++i) order *= factorial_integer(static_cast<unsigned>(k));
  const std::uint64_t requested = order.fits_ulong_p() ? order.get_ui() : UINT64_MAX;
  if (requested > limits.max_young_order) throw CapExceeded("Young subgroup order", requested, limits.max_young_order);
}

void check_wreath_shape(std::size_t rows, std::size_t cols, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (rows != cols * static_cast<std::size_t>(k)) throw ShapeError("wreath determinant needs a kn x n matrix");
}

// Young subgroup elements are cached: every sum in this module walks them.
const std::vector<Permutation>& young_elements(int n, int k, const Limits& limits) {
  check_young(n, k, limits);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<Permutation>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, k}];
  if (!slot) slot = std::make_unique<std::vector<Permutation>>(young_subgroup_elements(n, k, limits));
  return *slot;
}

Rational power_of_minus_inverse(int k, int exponent) { return power(Rational(-1, k), exponent); }

}  // namespace

std::vector<ColoringFunction> all_colorings(int n, int k, const Limits& limits) {
  check_colorings(n, k, limits);
  std::vector<int> word = ColoringFunction::canonical(n, k).values();
  std::vector<ColoringFunction> out;
  do {
    out.emplace_back(n, k, word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

Permutation WreathGroupElement::embed() const {
  const int k = blocks.empty() ? 1 : blocks.front().degree();
  return block_embed(blocks) * psi_embed(outer, k);
}

std::vector<WreathGroupElement> wreath_group(int n, int k, const Limits& limits) {
  check_young(n, k, limits);
  const auto sk = enumerate_group(k, limits);
  const auto sn = enumerate_group(n, limits);
  std::vector<WreathGroupElement> out;
  std::vector<std::size_t> index(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<Permutation> blocks;
    for (auto i : index) blocks.push_back(sk[i]);
    for (const auto& tau : sn) out.push_back({blocks, tau});
    std::size_t pos = index.size();
    while (pos > 0) {
      --pos;
      if (++index[pos] < sk.size()) break;
      index[pos] = 0;
      if (pos == 0) return out;
    }
    if (index.empty()) return out;
  }
}

Rational young_cycle_sum(const Permutation& g, int n, int k, const Limits& limits) {
  if (g.degree() != n * k) throw ShapeError("permutation degree differs from kn");
  const auto& young = young_elements(n, k, limits);
  const auto size = static_cast<std::size_t>(n * k);
  std::vector<std::uint64_t> histogram(size + 1, 0);
  std::vector<int> images(size);
  const auto g_images = g.images();
  for (const auto& s : young) {
    const auto s_images = s.images();
    for (std::size_t x = 0; x < size; ++x) images[x] = g_images[static_cast<std::size_t>(s_images[x] - 1)];
    ++histogram[static_cast<std::size_t>(count_cycles(images))];
  }
  Rational total(0);
  for (std::size_t c = 0; c <= size; ++c)
    if (histogram[c]) total += Rational(Integer(static_cast<unsigned long>(histogram[c]))) * power_of_minus_inverse(k, static_cast<int>(size - c));
  return total;
}

RationalMatrix tableau_matrix(const StandardTableau& tableau) {
  const auto shape = tableau.shape();
  if (!shape.is_rectangle() || shape.depth() == 0) throw ShapeError("I(T) needs a rectangular tableau");
  return act_rows(g_of_T(tableau), row_k_plex(RationalMatrix::identity(static_cast<std::size_t>(shape.depth())), shape[0]));
}

Rational tableau_coefficient(const StandardTableau& tableau, const Limits& limits) {
  const auto shape = tableau.shape();
  if (!shape.is_rectangle() || shape.depth() == 0) throw ShapeError("coefficient needs a rectangular tableau");
  return young_cycle_sum(g_of_T(tableau), shape.depth(), shape[0], limits);
}

const TableauBasis& tableau_basis(int n, int k, const Limits& limits) {
  check_young(n, k, limits);
  if (n * k > limits.max_tableau_size) {
    throw CapExceeded("standard tableaux size", static_cast<std::uint64_t>(n * k),
                      static_cast<std::uint64_t>(limits.max_tableau_size));
  }
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<TableauBasis>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, k}); it != cache.end()) return *it->second;
  }
  auto basis = std::make_unique<TableauBasis>();
  basis->tableaux = standard_tableaux(Partition::rectangle(n, k), limits);
  basis->coefficients = parallel_map<Rational>(basis->tableaux.size(), [&](std::size_t t) {
    return tableau_coefficient(basis->tableaux[t], limits);
  });
  const std::size_t count = basis->tableaux.size();
  std::vector<RationalMatrix> images;
  for (const auto& t : basis->tableaux) images.push_back(tableau_matrix(t));
  basis->pairing = RationalMatrix(count, count);
  for (std::size_t u = 0; u < count; ++u)
    for (std::size_t t = 0; t < count; ++t) basis->pairing(u, t) = tdet(images[u], basis->tableaux[t]);
  basis->dual_coefficients = solve(basis->pairing, basis->coefficients);
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, k}];
  if (!slot) slot = std::move(basis);
  return *slot;
}

Rational nk_sign(const ColoringFunction& f, const Limits& limits) {
  return young_cycle_sum(f.lift(), f.n(), f.k(), limits);
}

const ColoringTable& coloring_table(int n, int k, const Limits& limits) {
  check_colorings(n, k, limits);
  check_young(n, k, limits);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<ColoringTable>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, k}); it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<ColoringTable>();
  table->colorings = all_colorings(n, k, limits);
  // The sign is constant along f o S_k^n, so compute it once per orbit.
  std::map<ColoringFunction, std::size_t> representative_index;
  std::vector<ColoringFunction> representatives;
  std::vector<std::size_t> orbit_of(table->colorings.size());
  for (std::size_t i = 0; i < table->colorings.size(); ++i) {
    auto rep = table->colorings[i].orbit_representative();
    auto [it, inserted] = representative_index.try_emplace(rep, representatives.size());
    if (inserted) representatives.push_back(rep);
    orbit_of[i] = it->second;
  }
  const auto rep_signs = parallel_map<Rational>(representatives.size(), [&](std::size_t r) {
    return nk_sign(representatives[r], limits);
  });
  for (std::size_t i = 0; i < table->colorings.size(); ++i) table->signs.push_back(rep_signs[orbit_of[i]]);
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, k}];
  if (!slot) slot = std::move(table);
  return *slot;
}

template <class R>
R tdet(const Matrix<R>& a, const StandardTableau& tableau) {
  const auto shape = tableau.shape();
  if (!shape.is_rectangle() || shape.depth() == 0) throw ShapeError("tdet needs a rectangular tableau");
  const int n = shape.depth();
  const int k = shape[0];
  check_wreath_shape(a.rows(), a.cols(), k);
  if (a.cols() != static_cast<std::size_t>(n)) throw ShapeError("tdet: matrix width differs from tableau depth");
  R out(1);
  for (int l = 1; l <= k; ++l) {
    std::vector<std::size_t> rows;
    for (int v : tableau.column(l)) rows.push_back(static_cast<std::size_t>(v - 1));
    out = out * determinant(select_rows(a, rows));
    if (is_zero(out)) break;
  }
  return out;
}

template <class R>
R wrdet_direct(const Matrix<R>& a, int k, const Limits& limits) {
  check_wreath_shape(a.rows(), a.cols(), k);
  return adet<R>(column_k_plex(a, k), R(Rational(-1, k)), AdetMethod::automatic, limits);
}

template <class R>
R wrdet_tableaux(const Matrix<R>& a, int k, const Limits& limits) {
  check_wreath_shape(a.rows(), a.cols(), k);
  const int n = static_cast<int>(a.cols());
  if (n == 0) return R(1);
  const auto& basis = tableau_basis(n, k, limits);
  R total(0);
  for (std::size_t t = 0; t < basis.tableaux.size(); ++t) {
    if (is_zero(basis.coefficients[t])) continue;
    total += R(basis.coefficients[t]) * tdet(a, basis.tableaux[t]);
  }
  return total;
}

template <class R>
R wrdet_tableaux_dual(const Matrix<R>& a, int k, const Limits& limits) {
  check_wreath_shape(a.rows(), a.cols(), k);
  const int n = static_cast<int>(a.cols());
  if (n == 0) return R(1);
  const auto& basis = tableau_basis(n, k, limits);
  R total(0);
  for (std::size_t t = 0; t < basis.tableaux.size(); ++t) {
    if (is_zero(basis.dual_coefficients[t])) continue;
    total += R(basis.dual_coefficients[t]) * tdet(a, basis.tableaux[t]);
  }
  return total;
}

template <class R>
R wrdet_symmetric(const Matrix<R>& a, int k, const Limits& limits) {
  check_wreath_shape(a.rows(), a.cols(), k);
  const int n = static_cast<int>(a.cols());
  if (n == 0) return R(1);
  const auto& young = young_elements(n, k, limits);
  std::map<std::vector<std::size_t>, R> minors;
  auto minor = [&](const std::vector<std::size_t>& rows) -> const R& {
    auto it = minors.find(rows);
    if (it == minors.end()) it = minors.emplace(rows, determinant(select_rows(a, rows))).first;
    return it->second;
  };
  R total(0);
  std::vector<std::size_t> rows(static_cast<std::size_t>(n));
  for (const auto& s : young) {
    const auto inverse = s.inverse();
    // Row x of s . A is row s^{-1}(x) of A; column l of T0 holds (i-1)k+l.
    R term(1);
    for (int l = 1; l <= k && !is_zero(term); ++l) {
      for (int i = 1; i <= n; ++i) rows[static_cast<std::size_t>(i - 1)] = static_cast<std::size_t>(inverse((i - 1) * k + l) - 1);
      term = term * minor(rows);
    }
    total += term;
  }
  return total * R(power(Rational(k), -n * k));
}

template <class R>
R wrdet_monomial(const Matrix<R>& a, int k, const Limits& limits) {
  check_wreath_shape(a.rows(), a.cols(), k);
  const int n = static_cast<int>(a.cols());
  if (n == 0) return R(1);
  const auto& table = coloring_table(n, k, limits);
  R total(0);
  for (std::size_t c = 0; c < table.colorings.size(); ++c) {
    if (is_zero(table.signs[c])) continue;
    R term(table.signs[c]);
    const auto& f = table.colorings[c];
    for (int i = 1; i <= n * k && !is_zero(term); ++i)
      term = term * a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(f(i) - 1));
    total += term;
  }
  return total;
}

template <class R>
R wrdet(const Matrix<R>& a, int k, WrdetMethod method, const Limits& limits) {
  switch (method) {
    case WrdetMethod::direct: return wrdet_direct(a, k, limits);
    case WrdetMethod::tableaux: return wrdet_tableaux(a, k, limits);
    case WrdetMethod::tableaux_dual: return wrdet_tableaux_dual(a, k, limits);
    case WrdetMethod::symmetric: return wrdet_symmetric(a, k, limits);
    case WrdetMethod::monomial: return wrdet_monomial(a, k, limits);
  }
  throw std::invalid_argument("unknown wreath determinant method");
}

Rational OrbitData::reconstructed_sign(int n, int k) const {
  if (signed_intersection == 0) return 0;
  const Rational unit = Rational(factorial_integer(static_cast<unsigned>(k))) / power(Rational(k), k);
  return power(unit, n) * Rational(Integer(static_cast<long>(signed_intersection))) /
         Rational(Integer(static_cast<unsigned long>(orbit_size)));
}

OrbitData orbit_data(const ColoringFunction& f, const Limits& limits) {
  const int n = f.n(), k = f.k();
  const auto& young = young_elements(n, k, limits);
  std::set<ColoringFunction> orbit;
  for (const auto& s : young) orbit.insert(f.compose_right(s));
  OrbitData data;
  data.orbit_size = orbit.size();
  Integer formula = 1;
  for (int i = 0; i < n; ++i) formula *= factorial_integer(static_cast<unsigned>(k));
  for (const auto& row : f.multiplicity_matrix())
    for (int m : row) formula /= factorial_integer(static_cast<unsigned>(m));
  data.orbit_size_formula = formula.get_ui();
  bool mixed = false;
  for (const auto& member : orbit) {
    if (!member.is_product_type()) continue;
    int sign = 1;
    for (const auto& w : member.column_permutations()) sign *= w.sign();
    if (data.intersection == 0) {
      data.base_sign = sign;
    } else if (data.base_sign != sign) {
      mixed = true;
    }
    ++data.intersection;
    data.signed_intersection += sign;
  }
  if (mixed) data.base_sign = 0;
  return data;
}

bool det_power_identity_check(const ColoringFunction& f, const RationalMatrix& a, const Limits& limits) {
  const int n = f.n(), k = f.k();
  if (a.rows() != static_cast<std::size_t>(n) || a.cols() != static_cast<std::size_t>(n)) {
    throw ShapeError("identity check needs an n x n matrix");
  }
  const Rational lhs = nk_sign(f, limits) * power(determinant(a), k);
  const auto& table = coloring_table(n, k, limits);
  Rational rhs(0);
  for (std::size_t c = 0; c < table.colorings.size(); ++c) {
    if (is_zero(table.signs[c])) continue;
    Rational term = table.signs[c];
    const auto& h = table.colorings[c];
    for (int i = 1; i <= n * k; ++i) term *= a(static_cast<std::size_t>(f(i) - 1), static_cast<std::size_t>(h(i) - 1));
    rhs += term;
  }
  return lhs == rhs;
}

Rational pf_coefficient(const ColoringFunction& f, const Limits& limits) {
  const int n = f.n(), k = f.k();
  const auto& young = young_elements(n, k, limits);
  Polynomial p(0);
  const Polynomial weight(Rational(1) / Rational(Integer(static_cast<unsigned long>(young.size()))));
  for (const auto& s : young) {
    std::vector<std::pair<Variable, unsigned>> factors;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= k; ++j) factors.push_back({Variable{"x", f.view(i, j), s((i - 1) * k + j) - (i - 1) * k}, 1});
    p += Polynomial(Monomial::from_factors(std::move(factors))) * weight;
  }
  std::vector<std::pair<Variable, unsigned>> target;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= k; ++j) target.push_back({Variable{"x", i, j}, 1});
  return p.coefficient(Monomial::from_factors(std::move(target)));
}

template Rational tdet(const RationalMatrix&, const StandardTableau&);
template Polynomial tdet(const PolynomialMatrix&, const StandardTableau&);
template Rational wrdet_direct(const RationalMatrix&, int, const Limits&);
template Polynomial wrdet_direct(const PolynomialMatrix&, int, const Limits&);
template Rational wrdet_tableaux(const RationalMatrix&, int, const Limits&);
template Polynomial wrdet_tableaux(const PolynomialMatrix&, int, const Limits&);
template Rational wrdet_tableaux_dual(const RationalMatrix&, int, const Limits&);
template Polynomial wrdet_tableaux_dual(const PolynomialMatrix&, int, const Limits&);
template Rational wrdet_symmetric(const RationalMatrix&, int, const Limits&);
template Polynomial wrdet_symmetric(const PolynomialMatrix&, int, const Limits&);
template Rational wrdet_monomial(const RationalMatrix&, int, const Limits&);
template Polynomial wrdet_monomial(const PolynomialMatrix&, int, const Limits&);
template Rational wrdet(const RationalMatrix&, int, WrdetMethod, const Limits&);
template Polynomial wrdet(const PolynomialMatrix&, int, WrdetMethod, const Limits&);

}  // namespace wreathdet
