#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wreathdet/wreath.hpp"

using namespace wreathdet;

namespace {
// wrdet as the brute-force kdet of the column-plexed matrix.
Rational oracle_wrdet(const RationalMatrix& a, int k) {
  return oracle::adet(column_k_plex(a, k), Rational(-1, k));
}

RationalMatrix p_matrix(std::initializer_list<std::initializer_list<Rational>> rows) { return RationalMatrix::from_rows(rows); }

Rational unit(int k) { return Rational(factorial_integer(static_cast<unsigned>(k))) / power(Rational(k), k); }

const std::vector<std::pair<int, int>> kPairs = {{2, 2}, {3, 2}, {2, 3}, {4, 2}, {2, 4}};
}  // namespace

TEST_CASE("column and row plexing") {
  const auto a = symbolic_matrix(3, 2, "a");
  const auto two = column_k_plex(a, 2);
  REQUIRE(two.cols() == 4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(two(i, j) == a(i, j / 2));
  CHECK(column_k_plex(a, 3).cols() == 6);
  std::mt19937_64 rng(40);
  const auto r = oracle::random_matrix(rng, 3, 2);
  const auto p = oracle::random_matrix(rng, 3, 3);
  const auto q = oracle::random_matrix(rng, 2, 2);
  CHECK(column_k_plex(p * r, 2) == p * column_k_plex(r, 2));
  CHECK(row_k_plex(r * q, 2) == row_k_plex(r, 2) * q);
  for (const auto& s : enumerate_group(3)) CHECK(column_k_plex(act_rows(s, r), 2) == act_rows(s, column_k_plex(r, 2)));
}

TEST_CASE("coloring functions") {
  CHECK_THROWS_AS(ColoringFunction(2, 2, {1, 1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ColoringFunction(2, 2, {1, 2, 3, 2}), std::invalid_argument);
  const auto iota = ColoringFunction::canonical(3, 2);
  CHECK(iota.values() == std::vector<int>{1, 1, 2, 2, 3, 3});
  CHECK(iota.lift().is_identity());
  CHECK(all_colorings(2, 2).size() == 6);
  CHECK(all_colorings(3, 2).size() == 90);
  CHECK(coloring_count(2, 4) == 70);
  for (const auto& f : all_colorings(3, 2)) {
    const auto h = f.lift();
    for (int x = 1; x <= 6; ++x) CHECK(f(x) == (h(x) - 1) / 2 + 1);
    CHECK(f.indicator_matrix() == act_rows(h.inverse(), iota.indicator_matrix()));
  }
  Limits limits;
  limits.max_colorings = 10;
  CHECK_THROWS_AS(all_colorings(3, 2, limits), CapExceeded);
}

TEST_CASE("tableau matrices of shape (2,2,2)") {
  const auto& basis = tableau_basis(3, 2);
  REQUIRE(basis.tableaux.size() == 5);
  const std::vector<std::vector<int>> column_of_row = {
      {1, 1, 2, 2, 3, 3}, {1, 1, 2, 3, 2, 3}, {1, 2, 1, 2, 3, 3}, {1, 2, 1, 3, 2, 3}, {1, 2, 3, 1, 2, 3}};
  for (std::size_t p = 0; p < 5; ++p) {
    RationalMatrix expected(6, 3);
    for (std::size_t r = 0; r < 6; ++r) expected(r, static_cast<std::size_t>(column_of_row[p][r] - 1)) = 1;
    CHECK(tableau_matrix(basis.tableaux[p]) == expected);
    CHECK(ColoringFunction::from_tableau(basis.tableaux[p]).indicator_matrix() == expected);
  }
  CHECK(basis.coefficients == std::vector<Rational>{Rational(1, 8), Rational(-1, 16), Rational(-1, 16), Rational(1, 32), Rational(1, 32)});
  for (std::size_t p = 0; p < 5; ++p) {
    CHECK(oracle_wrdet(tableau_matrix(basis.tableaux[p]), 2) == basis.coefficients[p]);
    CHECK(wrdet_direct(tableau_matrix(basis.tableaux[p]), 2) == basis.coefficients[p]);
    CHECK(nk_sign(ColoringFunction::from_tableau(basis.tableaux[p])) == basis.coefficients[p]);
  }
}

TEST_CASE("tableau pairing is unitriangular, not diagonal") {
  for (auto [n, k] : kPairs) {
    const auto& basis = tableau_basis(n, k);
    const auto count = basis.tableaux.size();
    std::size_t off_diagonal = 0;
    for (std::size_t u = 0; u < count; ++u) {
      const auto image = tableau_matrix(basis.tableaux[u]);
      for (std::size_t t = 0; t < count; ++t) {
        const auto value = tdet(image, basis.tableaux[t]);
        CHECK(basis.pairing(u, t) == value);
        if (t == u) CHECK(value == 1);
        if (t > u) CHECK(value == 0);
        if (t < u && value != 0) ++off_diagonal;
      }
    }
    CHECK((off_diagonal > 0) == (n * k > 4));
  }
  const auto& basis = tableau_basis(3, 2);
  CHECK(tdet(tableau_matrix(basis.tableaux[4]), basis.tableaux[0]) == 1);
  CHECK(tdet(row_k_plex(RationalMatrix::identity(3), 2), basis.tableaux[0]) == 1);
  std::mt19937_64 rng(41);
  const auto a = oracle::random_matrix(rng, 6, 3);
  const auto p = oracle::random_matrix(rng, 3, 3);
  for (const auto& t : basis.tableaux) CHECK(tdet(a * p, t) == power(determinant(p), 2) * tdet(a, t));
}

TEST_CASE("solved tableau coefficients") {
  CHECK(tableau_basis(2, 2).dual_coefficients == tableau_basis(2, 2).coefficients);
  CHECK(tableau_basis(3, 2).dual_coefficients ==
        std::vector<Rational>{Rational(1, 8), Rational(-1, 16), Rational(-1, 16), Rational(1, 32), Rational(-3, 32)});
  CHECK(tableau_basis(2, 3).coefficients ==
        std::vector<Rational>{Rational(4, 81), Rational(-4, 243), Rational(-4, 243), Rational(-4, 243), Rational(-4, 243)});
  CHECK(tableau_basis(2, 3).dual_coefficients ==
        std::vector<Rational>{Rational(4, 81), Rational(-4, 243), Rational(-4, 243), Rational(-4, 243), Rational(8, 243)});
}

TEST_CASE("wreath determinant special values") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) {
      const auto a = row_k_plex(RationalMatrix::identity(static_cast<std::size_t>(n)), k);
      CHECK(wrdet_direct(a, k) == power(unit(k), n));
      CHECK(wrdet_symmetric(a, k) == power(unit(k), n));
    }
  CHECK(wrdet_direct(row_k_plex(RationalMatrix::identity(3), 2), 2) == Rational(1, 8));
  std::mt19937_64 rng(42);
  const auto a = oracle::random_matrix(rng, 4, 4);
  CHECK(wrdet_direct(a, 1) == determinant(a));
  CHECK_THROWS_AS(wrdet_direct(RationalMatrix(5, 2), 2), ShapeError);
}

TEST_CASE("four evaluation paths agree") {
  std::mt19937_64 rng(43);
  for (auto [n, k] : kPairs) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto a = oracle::random_matrix(rng, static_cast<std::size_t>(n * k), static_cast<std::size_t>(n));
      const auto direct = wrdet_direct(a, k);
      CHECK(wrdet_tableaux_dual(a, k) == direct);
      CHECK(wrdet_symmetric(a, k) == direct);
      CHECK(wrdet_monomial(a, k) == direct);
      if (n * k <= 6) CHECK(oracle_wrdet(a, k) == direct);
    }
  }
}

TEST_CASE("literal tableau expansion is exact only for (2,2)") {
  std::mt19937_64 rng(47);
  for (auto [n, k] : kPairs) {
    bool all_equal = true;
    for (int trial = 0; trial < 4; ++trial) {
      const auto a = oracle::random_matrix(rng, static_cast<std::size_t>(n * k), static_cast<std::size_t>(n));
      all_equal = all_equal && wrdet_tableaux(a, k) == wrdet_direct(a, k);
    }
    CHECK(all_equal == (n == 2 && k == 2));
  }
}

TEST_CASE("symbolic expansion for (n,k) = (3,2)") {
  const auto x = symbolic_matrix(6, 3);
  const auto& basis = tableau_basis(3, 2);
  const auto t = [&](std::size_t i) { return tdet(x, basis.tableaux[i]); };
  const auto solved = Polynomial(Rational(1, 8)) * t(0) - Polynomial(Rational(1, 16)) * t(1) - Polynomial(Rational(1, 16)) * t(2) +
                      Polynomial(Rational(1, 32)) * t(3) - Polynomial(Rational(3, 32)) * t(4);
  const auto literal = solved + Polynomial(Rational(1, 8)) * t(4);
  const auto direct = wrdet_direct(x, 2);
  CHECK(direct == solved);
  CHECK(wrdet_monomial(x, 2) == solved);
  CHECK(wrdet_tableaux_dual(x, 2) == solved);
  CHECK(wrdet_tableaux(x, 2) == literal);
  CHECK(direct != literal);
}

TEST_CASE("piled 2 by 2 blocks") {
  const auto a = symbolic_matrix(2, 2, "a");
  const auto b = symbolic_matrix(2, 2, "b");
  const auto mixed1 = PolynomialMatrix::from_rows({{a(0, 0), a(0, 1)}, {b(0, 0), b(0, 1)}});
  const auto mixed2 = PolynomialMatrix::from_rows({{a(1, 0), a(1, 1)}, {b(1, 0), b(1, 1)}});
  const auto expected = Polynomial(Rational(1, 4)) * determinant(mixed1) * determinant(mixed2) -
                        Polynomial(Rational(1, 8)) * determinant(a) * determinant(b);
  CHECK(wrdet_tableaux(pile(a, b), 2) == expected);
  CHECK(wrdet_monomial(pile(a, b), 2) == expected);
  CHECK(wrdet_direct(pile(a, b), 2) == expected);
}

TEST_CASE("relative invariance") {
  std::mt19937_64 rng(44);
  for (auto [n, k] : kPairs) {
    const auto a = oracle::random_matrix(rng, static_cast<std::size_t>(n * k), static_cast<std::size_t>(n));
    const auto p = oracle::random_matrix(rng, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    const auto w = wrdet_tableaux(a, k);
    CHECK(wrdet_tableaux(a * p, k) == power(determinant(p), k) * w);
    for (const auto& s : enumerate_group(n)) CHECK(wrdet_tableaux(act_columns(a, s), k) == Rational(k % 2 ? s.sign() : 1) * w);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto c = oracle::random_rational(rng, 100);
        auto b = a;
        for (std::size_t r = 0; r < b.rows(); ++r) b(r, static_cast<std::size_t>(i)) += c * a(r, static_cast<std::size_t>(j));
        CHECK(wrdet_tableaux(b, k) == w);
      }
      const auto c = oracle::random_rational(rng, 100);
      auto scaled = a;
      for (std::size_t r = 0; r < scaled.rows(); ++r) scaled(r, static_cast<std::size_t>(i)) *= c;
      CHECK(wrdet_tableaux(scaled, k) == power(c, k) * w);
    }
  }
}

TEST_CASE("wreath group invariance") {
  std::mt19937_64 rng(45);
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}}) {
    const auto group = wreath_group(n, k);
    CHECK(group.size() == static_cast<std::size_t>(std::pow(factorial(k), n)) * factorial(n));
    const auto a = oracle::random_matrix(rng, static_cast<std::size_t>(n * k), static_cast<std::size_t>(n));
    const auto w = wrdet_direct(a, k);
    std::set<Permutation> images;
    for (const auto& g : group) {
      images.insert(g.embed());
      CHECK(wrdet_direct(act_rows(g.embed(), a), k) == power(Rational(g.character()), k) * w);
    }
    CHECK(images.size() == group.size());
  }
}

TEST_CASE("(n,k)-sign") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) CHECK(nk_sign(ColoringFunction::canonical(n, k)) == power(unit(k), n));
  for (const auto& f : all_colorings(4, 1)) {
    CHECK(nk_sign(f) == Permutation(f.values()).sign());
  }
  const ColoringFunction u4 = ColoringFunction::from_tableau(StandardTableau({{1, 3}, {2, 5}, {4, 6}}));
  CHECK(nk_sign(u4) == Rational(1, 32));
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    for (const auto& f : all_colorings(n, k)) {
      CHECK(nk_sign(f) == wrdet_direct(f.indicator_matrix(), k));
      for (const auto& tau : enumerate_group(n)) CHECK(nk_sign(f.act_left(tau)) == power(Rational(tau.sign()), k) * nk_sign(f));
    }
  }
}

TEST_CASE("orbit data") {
  const ColoringFunction u4 = ColoringFunction::from_tableau(StandardTableau({{1, 3}, {2, 5}, {4, 6}}));
  CHECK(u4.multiplicity_matrix() == std::vector<std::vector<int>>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  const auto data = orbit_data(u4);
  CHECK(data.orbit_size == 8);
  CHECK(data.orbit_size_formula == 8);
  CHECK(data.intersection == 2);
  CHECK(data.base_sign == 1);
  CHECK(data.reconstructed_sign(3, 2) == Rational(1, 32));
  const auto iota = orbit_data(ColoringFunction::canonical(3, 2));
  CHECK(iota.orbit_size == 1);
  CHECK(iota.intersection == 1);
  CHECK(iota.base_sign == 1);
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
    for (const auto& f : all_colorings(n, k)) {
      const auto d = orbit_data(f);
      CHECK(d.orbit_size == d.orbit_size_formula);
      CHECK(d.reconstructed_sign(n, k) == nk_sign(f));
      if (d.intersection == 0) CHECK(nk_sign(f) == 0);
      if (d.sign_is_constant())
        CHECK(nk_sign(f) == Rational(d.base_sign) * power(unit(k), n) * make_rational(d.intersection, d.orbit_size));
      if (n == 2 || k == 2) CHECK(d.sign_is_constant() == (d.intersection > 0));
    }
  }
  const ColoringFunction latin(3, 3, {1, 2, 3, 1, 2, 3, 1, 2, 3});
  const auto mixed = orbit_data(latin);
  CHECK(mixed.intersection == 12);
  CHECK(mixed.base_sign == 0);
  CHECK_FALSE(mixed.sign_is_constant());
  CHECK(mixed.reconstructed_sign(3, 3) == nk_sign(latin));
}

TEST_CASE("determinant power identity") {
  std::mt19937_64 rng(46);
  for (auto [n, k] : {std::pair{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    const auto a = oracle::random_matrix(rng, static_cast<std::size_t>(n), static_cast<std::size_t>(n), 1000);
    for (const auto& f : all_colorings(n, k)) {
      CHECK(det_power_identity_check(f, a));
      CHECK(det_power_identity_check(f, RationalMatrix::identity(static_cast<std::size_t>(n))));
    }
  }
}

TEST_CASE("P_f coefficient") {
  const ColoringFunction u4 = ColoringFunction::from_tableau(StandardTableau({{1, 3}, {2, 5}, {4, 6}}));
  CHECK(pf_coefficient(u4) == Rational(1, 4));
  CHECK(pf_coefficient(ColoringFunction::canonical(3, 2)) == 1);
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    for (const auto& f : all_colorings(n, k)) {
      const auto d = orbit_data(f);
      CHECK(pf_coefficient(f) == make_rational(d.intersection, d.orbit_size));
    }
  }
}

TEST_CASE("singular degeneration of the plexed product") {
  const auto a = symbolic_matrix(4, 2, "a");
  const auto p = to_polynomial(p_matrix({{1, 1}, {0, 1}}));
  const Polynomial al = Polynomial::variable(alpha_variable());
  const auto diff = adet(column_k_plex(a * p, 2), al) - adet(column_k_plex(a, 2), al);
  auto x = [&](int i, int j) { return Polynomial::variable("a", i, j); };
  const Polynomial one(1);
  const auto expected = (one + al) * (one + Polynomial(2) * al) *
                        ((one + Polynomial(3) * al) * x(1, 1) * x(2, 1) * x(3, 1) * x(4, 1) +
                         Polynomial(2) * al * (x(1, 2) * x(2, 1) + x(1, 1) * x(2, 2)) * x(3, 1) * x(4, 1) +
                         (one + al) * x(1, 1) * x(2, 1) * (x(3, 2) * x(4, 1) + x(3, 1) * x(4, 2)));
  CHECK(diff == expected);
  for (int j = 1; j <= 6; ++j) CHECK(diff.substitute(alpha_variable(), Rational(-1, j)).is_zero() == (j <= 2));
}
