#include "wreathdet/symfun.hpp"

#include <algorithm>
#include <functional>

#include "wreathdet/alphadet.hpp"
#include "wreathdet/wreath.hpp"

namespace wreathdet {

namespace {

void check_points(const std::vector<Rational>& x, int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("n and k must be positive");
  if (x.size() != static_cast<std::size_t>(n * k)) throw ShapeError("expected kn points");
}

Rational pow_int(const Rational& base, int e) { return power(base, e); }

}  // namespace

ExponentVector delta_shift(int n, int k) {
  ExponentVector a;
  for (int j = 1; j <= n * k; ++j) a.push_back(n - 1 - (j - 1) / k);
  return a;
}

Rational difference_product(const std::vector<Rational>& y) {
  Rational out(1);
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = i + 1; j < y.size(); ++j) out *= y[i] - y[j];
  return out;
}

RationalMatrix vandermonde_matrix(const std::vector<Rational>& x, int n) {
  RationalMatrix v(x.size(), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (int j = 1; j <= n; ++j) v(i, static_cast<std::size_t>(j - 1)) = pow_int(x[i], n - j);
  return v;
}

Rational wreath_vandermonde(const std::vector<Rational>& x, int n, int k) {
  check_points(x, n, k);
  return wrdet_direct(vandermonde_matrix(x, n), k);
}

Rational d_nk(const std::vector<Rational>& x, const ExponentVector& a, int k) {
  if (a.size() != x.size()) throw ShapeError("exponent vector length differs from the number of points");
  if (k < 1 || x.size() % static_cast<std::size_t>(k) != 0) throw ShapeError("number of points is not a multiple of k");
  RationalMatrix m(x.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = pow_int(x[i], a[j]);
  return adet<Rational>(m, Rational(-1, k));
}

CauchyCheck cauchy_check(const std::vector<Rational>& x, const std::vector<Rational>& y, int k) {
  const int n = static_cast<int>(y.size());
  check_points(x, n, k);
  RationalMatrix c(x.size(), y.size());
  RationalMatrix variant(x.size(), y.size());
  Rational poles(1);
  Rational variant_poles(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      const Rational sum = x[i] + y[j];
      const Rational one_minus = 1 - x[i] * y[j];
      if (sum == 0 || one_minus == 0) throw PoleError("pole at x" + std::to_string(i + 1) + ", y" + std::to_string(j + 1));
      c(i, j) = 1 / sum;
      variant(i, j) = 1 / one_minus;
      poles *= sum;
      variant_poles *= one_minus;
    }
  const Rational common = pow_int(difference_product(y), k) * wreath_vandermonde(x, n, k);
  CauchyCheck check;
  check.cauchy = wrdet_direct(c, k) == common / poles;
  check.variant = wrdet_direct(variant, k) == common / variant_poles;
  return check;
}

std::vector<ExponentVector> distinct_rearrangements(const Partition& lambda, int length, std::uint64_t cap) {
  if (lambda.depth() > length) throw ShapeError("partition " + lambda.to_string() + " is deeper than " + std::to_string(length));
  ExponentVector v(static_cast<std::size_t>(length), 0);
  for (int i = 0; i < lambda.depth(); ++i) v[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)];
  std::sort(v.begin(), v.end());
  // multinomial count before enumerating
  Integer count = factorial_integer(static_cast<unsigned>(length));
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    count /= factorial_integer(static_cast<unsigned>(j - i));
    i = j;
  }
  if (count > Integer(static_cast<unsigned long>(cap))) throw CapExceeded("coset enumeration", count.get_ui(), cap);
  std::vector<ExponentVector> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

KdetRatios::KdetRatios(std::vector<Rational> x, int n, int k) : x_(std::move(x)), n_(n), k_(k) {
  check_points(x_, n, k);
  vandermonde_ = wreath_vandermonde(x_, n, k);
  if (vandermonde_ == 0) throw VanishingVandermonde("wrdet V_{n,k}(x) vanishes at the given points");
}

Rational KdetRatios::d(const ExponentVector& a) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(a); it != cache_.end()) return it->second;
  }
  const Rational value = d_nk(x_, a, k_);
  std::lock_guard lock(mutex_);
  cache_.emplace(a, value);
  return value;
}

Rational KdetRatios::shifted_sum(const std::vector<ExponentVector>& shifts) {
  const auto delta = delta_shift(n_, k_);
  Rational total(0);
  for (const auto& shift : shifts) {
    ExponentVector a = delta;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += shift[i];
    total += d(a);
  }
  return total / vandermonde_;
}

Rational KdetRatios::monomial(const Partition& lambda) {
  if (lambda.depth() > n_ * k_) return 0;
  return shifted_sum(distinct_rearrangements(lambda, n_ * k_));
}

Rational KdetRatios::schur(const Partition& lambda) {
  Rational total(0);
  for (const auto& mu : partitions_of(lambda.size())) {
    if (mu.depth() > n_ * k_ || !lambda.dominates(mu)) continue;
    const auto kostka_number = kostka(lambda, mu);
    if (kostka_number == 0) continue;
    total += Rational(Integer(static_cast<unsigned long>(kostka_number))) * monomial(mu);
  }
  return total;
}

Rational KdetRatios::power_kind(PowerKind kind, int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  const std::size_t size = x_.size();
  std::vector<ExponentVector> shifts;
  if (kind == PowerKind::power) {
    for (std::size_t i = 0; i < size; ++i) {
      ExponentVector s(size, 0);
      s[i] = degree;
      shifts.push_back(std::move(s));
    }
    if (degree == 0) shifts.resize(size);
  } else {
    const bool strict = kind == PowerKind::elementary;
    ExponentVector s(size, 0);
    std::function<void(int, std::size_t)> go = [&](int left, std::size_t start) {
      if (left == 0) {
        shifts.push_back(s);
        return;
      }
      for (std::size_t i = start; i < size; ++i) {
        ++s[i];
        go(left - 1, strict ? i + 1 : i);
        --s[i];
      }
    };
    go(degree, 0);
  }
  return shifted_sum(shifts);
}

Rational monomial_via_kdet(const Partition& lambda, const std::vector<Rational>& x, int n, int k) {
  return KdetRatios(x, n, k).monomial(lambda);
}

Rational schur_via_kdet(const Partition& lambda, const std::vector<Rational>& x, int n, int k) {
  return KdetRatios(x, n, k).schur(lambda);
}

Rational pde_via_kdet(PowerKind kind, int degree, const std::vector<Rational>& x, int n, int k) {
  return KdetRatios(x, n, k).power_kind(kind, degree);
}

namespace classical {

Rational monomial(const Partition& lambda, const std::vector<Rational>& x) {
  if (lambda.depth() > static_cast<int>(x.size())) return 0;
  Rational total(0);
  for (const auto& a : distinct_rearrangements(lambda, static_cast<int>(x.size()))) {
    Rational term(1);
    for (std::size_t i = 0; i < x.size(); ++i) term *= pow_int(x[i], a[i]);
    total += term;
  }
  return total;
}

Rational schur(const Partition& lambda, const std::vector<Rational>& x) {
  const int big_n = static_cast<int>(x.size());
  if (lambda.depth() > big_n) return 0;
  RationalMatrix numerator(x.size(), x.size());
  RationalMatrix denominator(x.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (int j = 1; j <= big_n; ++j) {
      numerator(i, static_cast<std::size_t>(j - 1)) = pow_int(x[i], lambda[static_cast<std::size_t>(j - 1)] + big_n - j);
      denominator(i, static_cast<std::size_t>(j - 1)) = pow_int(x[i], big_n - j);
    }
  const Rational d = determinant(denominator);
  if (d == 0) throw VanishingVandermonde("bialternant denominator vanishes");
  return determinant(numerator) / d;
}

Rational power_kind(PowerKind kind, int degree, const std::vector<Rational>& x) {
  if (kind == PowerKind::power) {
    Rational total(0);
    for (const auto& v : x) total += pow_int(v, degree);
    return total;
  }
  // h_d and e_d by the recurrences over the number of variables.
  std::vector<Rational> table(static_cast<std::size_t>(degree) + 1, Rational(0));
  table[0] = 1;
  for (const auto& v : x) {
    if (kind == PowerKind::complete) {
      for (int d = 1; d <= degree; ++d) table[static_cast<std::size_t>(d)] += v * table[static_cast<std::size_t>(d - 1)];
    } else {
      for (int d = degree; d >= 1; --d) table[static_cast<std::size_t>(d)] += v * table[static_cast<std::size_t>(d - 1)];
    }
  }
  return table[static_cast<std::size_t>(degree)];
}

}  // namespace classical

Rational h_series_term(int n, int k, int d, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  check_points(x, n, k);
  if (y.size() != static_cast<std::size_t>(n)) throw ShapeError("expected n values of y");
  const int columns = n * k;
  const int total = d + k * n * (n - 1) / 2;
  ExponentVector exponents(static_cast<std::size_t>(columns), 0);
  Rational sum(0);
  std::function<void(int, int)> go = [&](int column, int left) {
    if (column == columns - 1) {
      exponents[static_cast<std::size_t>(column)] = left;
      Rational weight(1);
      for (int c = 0; c < columns; ++c) weight *= pow_int(y[static_cast<std::size_t>(c / k)], exponents[static_cast<std::size_t>(c)]);
      sum += weight * d_nk(x, exponents, k);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      exponents[static_cast<std::size_t>(column)] = e;
      go(column + 1, left - e);
    }
  };
  go(0, total);
  return sum;
}

Rational h_series_schur(int n, int k, int d, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  check_points(x, n, k);
  if (y.size() != static_cast<std::size_t>(n)) throw ShapeError("expected n values of y");
  Rational sum(0);
  for (const auto& lambda : partitions_of(d, n)) sum += classical::schur(lambda, x) * classical::schur(lambda, y);
  return pow_int(difference_product(y), k) * wreath_vandermonde(x, n, k) * sum;
}

bool h_series_check(int n, int k, int d_max, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  for (int d = 0; d <= d_max; ++d)
    if (h_series_term(n, k, d, x, y) != h_series_schur(n, k, d, x, y)) return false;
  return true;
}

Rational delta_nk(const std::vector<Rational>& x, int n, int k) {
  check_points(x, n, k);
  Rational out(1);
  std::vector<Rational> column(static_cast<std::size_t>(n));
  for (int l = 0; l < k; ++l) {
    for (int i = 0; i < n; ++i) column[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(l + i * k)];
    out *= difference_product(column);
  }
  return out;
}

Rational symmetric_orbit_sum(const std::vector<Rational>& x, int n, int k, const Limits& limits) {
  check_points(x, n, k);
  Rational total(0);
  std::vector<Rational> moved(x.size());
  for (const auto& s : young_subgroup_elements(n, k, limits)) {
    for (int i = 1; i <= n * k; ++i) moved[static_cast<std::size_t>(i - 1)] = x[static_cast<std::size_t>(s(i) - 1)];
    total += delta_nk(moved, n, k);
  }
  return total / power(Rational(k), n * k);
}

bool symmetric_sum_vdm_check(const std::vector<Rational>& x, int n, int k, const Limits& limits) {
  return symmetric_orbit_sum(x, n, k, limits) == wreath_vandermonde(x, n, k);
}

Rational specht_polynomial(const StandardTableau& t, const std::vector<Rational>& x) {
  if (x.size() != static_cast<std::size_t>(t.size())) throw ShapeError("expected one point per tableau cell");
  Rational out(1);
  const auto shape = t.shape();
  for (int l = 1; l <= shape[0]; ++l) {
    std::vector<Rational> column;
    for (int v : t.column(l)) column.push_back(x[static_cast<std::size_t>(v - 1)]);
    out *= difference_product(column);
  }
  return out;
}

namespace {
Rational specht_sum(const std::vector<Rational>& x, const TableauBasis& basis, const std::vector<Rational>& coefficients) {
  Rational total(0);
  for (std::size_t t = 0; t < basis.tableaux.size(); ++t)
    if (!is_zero(coefficients[t])) total += coefficients[t] * specht_polynomial(basis.tableaux[t], x);
  return total;
}
}  // namespace

Rational specht_expansion(const std::vector<Rational>& x, int n, int k, const Limits& limits) {
  check_points(x, n, k);
  const auto& basis = tableau_basis(n, k, limits);
  return specht_sum(x, basis, basis.coefficients);
}

Rational specht_expansion_dual(const std::vector<Rational>& x, int n, int k, const Limits& limits) {
  check_points(x, n, k);
  const auto& basis = tableau_basis(n, k, limits);
  return specht_sum(x, basis, basis.dual_coefficients);
}

}  // namespace wreathdet
