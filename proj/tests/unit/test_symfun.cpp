#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wreathdet/sampling.hpp"
#include "wreathdet/symfun.hpp"
#include "wreathdet/wreath.hpp"

using namespace wreathdet;

namespace {
using Points = std::vector<Rational>;

Points points(std::uint64_t seed, std::size_t count) { return sample_points(count, 0, seed).x; }

Rational vdm(const Points& x) {
  Rational out(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) out *= x[i] - x[j];
  return out;
}

// Distinct rearrangements through a set of all permutations of the padded vector.
Rational oracle_monomial(const std::vector<int>& lambda, const Points& x) {
  std::vector<int> padded = lambda;
  padded.resize(x.size(), 0);
  std::sort(padded.begin(), padded.end());
  std::set<std::vector<int>> seen;
  Rational total(0);
  do {
    if (!seen.insert(padded).second) continue;
    Rational term(1);
    for (std::size_t i = 0; i < x.size(); ++i) term *= oracle::rpow(x[i], padded[i]);
    total += term;
  } while (std::next_permutation(padded.begin(), padded.end()));
  return total;
}

// Sum over semistandard fillings with entries in [1, |x|].
Rational oracle_schur(const std::vector<int>& shape, const Points& x) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(shape.size()); ++r)
    for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
  std::vector<std::vector<int>> filling(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) filling[r].assign(static_cast<std::size_t>(shape[r]), 0);
  const int max_entry = static_cast<int>(x.size());
  Rational total(0);
  std::function<void(std::size_t, const Rational&)> place = [&](std::size_t index, const Rational& weight) {
    if (index == cells.size()) {
      total += weight;
      return;
    }
    const auto [r, c] = cells[index];
    int low = 1;
    if (c > 0) low = std::max(low, filling[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) low = std::max(low, filling[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = low; v <= max_entry; ++v) {
      filling[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      place(index + 1, weight * x[static_cast<std::size_t>(v - 1)]);
    }
  };
  place(0, Rational(1));
  return total;
}

Rational oracle_power(const Points& x, int d) {
  Rational total(0);
  for (const auto& v : x) total += oracle::rpow(v, d);
  return total;
}

// Multisets (complete) or subsets (elementary) of size d.
Rational oracle_index_sum(const Points& x, int d, bool strict) {
  Rational total(0);
  std::function<void(int, std::size_t, const Rational&)> go = [&](int left, std::size_t start, const Rational& weight) {
    if (left == 0) {
      total += weight;
      return;
    }
    for (std::size_t i = start; i < x.size(); ++i) go(left - 1, strict ? i + 1 : i, weight * x[i]);
  };
  go(d, 0, Rational(1));
  return total;
}

const std::vector<std::pair<int, int>> kSmall = {{2, 2}, {3, 2}, {2, 3}};
}  // namespace

TEST_CASE("shift vector") {
  CHECK(delta_shift(3, 2) == ExponentVector{2, 2, 1, 1, 0, 0});
  CHECK(delta_shift(2, 3) == ExponentVector{1, 1, 1, 0, 0, 0});
  CHECK(delta_shift(1, 4) == ExponentVector{0, 0, 0, 0});
}

TEST_CASE("wreath Vandermonde") {
  for (int k = 1; k <= 4; ++k) {
    const auto x = points(60 + static_cast<std::uint64_t>(k), static_cast<std::size_t>(k));
    CHECK(wreath_vandermonde(x, 1, k) == Rational(factorial_integer(static_cast<unsigned>(k))) / oracle::rpow(Rational(k), k));
  }
  for (int n = 1; n <= 4; ++n) {
    const auto x = points(64 + static_cast<std::uint64_t>(n), static_cast<std::size_t>(n));
    CHECK(wreath_vandermonde(x, n, 1) == vdm(x));
  }
  for (auto [n, k] : kSmall) {
    const auto x = points(70, static_cast<std::size_t>(n * k));
    CHECK(wreath_vandermonde(x, n, k) == oracle::adet(column_k_plex(vandermonde_matrix(x, n), k), Rational(-1, k)));
    CHECK(d_nk(x, delta_shift(n, k), k) == wreath_vandermonde(x, n, k));
  }
  CHECK_THROWS_AS(wreath_vandermonde(points(1, 5), 2, 2), ShapeError);
}

TEST_CASE("power-matrix determinants") {
  const Points x = {Rational(3), Rational(7)};
  CHECK(d_nk(x, {1, 0}, 1) == Rational(-4));
  const auto y = points(71, 6);
  CHECK(d_nk(y, {3, 3, 3, 1, 0, 2}, 2) == 0);
  CHECK(d_nk(y, {3, 3, 1, 1, 0, 2}, 2) != 0);
  CHECK(d_nk(y, {3, 3, 1, 1, 0, 2}, 2) == oracle::adet(RationalMatrix::from_rows({
      {oracle::rpow(y[0], 3), oracle::rpow(y[0], 3), y[0], y[0], 1, oracle::rpow(y[0], 2)},
      {oracle::rpow(y[1], 3), oracle::rpow(y[1], 3), y[1], y[1], 1, oracle::rpow(y[1], 2)},
      {oracle::rpow(y[2], 3), oracle::rpow(y[2], 3), y[2], y[2], 1, oracle::rpow(y[2], 2)},
      {oracle::rpow(y[3], 3), oracle::rpow(y[3], 3), y[3], y[3], 1, oracle::rpow(y[3], 2)},
      {oracle::rpow(y[4], 3), oracle::rpow(y[4], 3), y[4], y[4], 1, oracle::rpow(y[4], 2)},
      {oracle::rpow(y[5], 3), oracle::rpow(y[5], 3), y[5], y[5], 1, oracle::rpow(y[5], 2)}}), Rational(-1, 2)));
  CHECK_THROWS_AS(d_nk(y, {1, 0}, 2), ShapeError);
}

TEST_CASE("Cauchy-type identity") {
  {
    const Points x = {Rational(2)}, y = {Rational(5)};
    CHECK(cauchy_check(x, y, 1).ok());
  }
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 3; ++trial) {
    const auto sample = sample_points(3, 3, 73 + static_cast<std::uint64_t>(trial));
    RationalMatrix c(3, 3);
    Rational poles(1);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        c(i, j) = 1 / (sample.x[i] + sample.y[j]);
        poles *= sample.x[i] + sample.y[j];
      }
    CHECK(oracle::det(c) == vdm(sample.x) * vdm(sample.y) / poles);
    CHECK(cauchy_check(sample.x, sample.y, 1).ok());
  }
  for (auto [n, k] : kSmall) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto sample = sample_points(static_cast<std::size_t>(n * k), static_cast<std::size_t>(n), 80 + seed);
      const auto check = cauchy_check(sample.x, sample.y, k);
      CHECK(check.cauchy);
      CHECK(check.variant);
    }
  }
  CHECK_THROWS_AS(cauchy_check({Rational(1), Rational(2)}, {Rational(-2)}, 2), PoleError);
  CHECK_THROWS_AS(cauchy_check({Rational(1), Rational(2)}, {Rational(1, 2)}, 2), PoleError);
}

TEST_CASE("rearrangements") {
  CHECK(distinct_rearrangements(Partition({2, 1}), 3).size() == 6);
  CHECK(distinct_rearrangements(Partition({1, 1}), 4).size() == 6);
  CHECK(distinct_rearrangements(Partition(), 4) == std::vector<ExponentVector>{{0, 0, 0, 0}});
  CHECK(distinct_rearrangements(Partition({1, 1}), 4).front() == ExponentVector{0, 0, 1, 1});
  CHECK_THROWS_AS(distinct_rearrangements(Partition({1, 1, 1}), 2), ShapeError);
  CHECK_THROWS_AS(distinct_rearrangements(Partition({1}), 8, 3), CapExceeded);
}

TEST_CASE("monomial symmetric functions") {
  CHECK(monomial_via_kdet(Partition(), points(90, 4), 2, 2) == 1);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto x = points(91 + seed, 2);
    CHECK(monomial_via_kdet(Partition({1, 1}), x, 1, 2) == x[0] * x[1]);
    const auto y = points(94 + seed, 4);
    CHECK(monomial_via_kdet(Partition({2, 1}), y, 2, 2) == oracle_monomial({2, 1}, y));
    CHECK(classical::monomial(Partition({2, 1}), y) == oracle_monomial({2, 1}, y));
  }
}

TEST_CASE("Schur functions") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto x = points(100 + seed, 4);
    KdetRatios ratios(x, 2, 2);
    CHECK(ratios.schur(Partition({1})) == oracle_power(x, 1));
    CHECK(ratios.schur(Partition({2, 1})) == oracle_schur({2, 1}, x));
    CHECK(ratios.schur(Partition({2, 2})) == oracle_schur({2, 2}, x));
    CHECK(classical::schur(Partition({2, 2}), x) == oracle_schur({2, 2}, x));
    CHECK(schur_via_kdet(Partition({2, 1}), x, 2, 2) == oracle_schur({2, 1}, x));
  }
  for (auto [n, k] : kSmall) {
    const auto x = points(110, static_cast<std::size_t>(n * k));
    KdetRatios ratios(x, n, k);
    for (int size = 0; size <= 4; ++size)
      for (const auto& lambda : partitions_of(size)) CHECK(ratios.schur(lambda) == oracle_schur(lambda.parts(), x));
  }
}

TEST_CASE("power, complete and elementary") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto x = points(120 + seed, 4);
    CHECK(pde_via_kdet(PowerKind::power, 2, x, 2, 2) == oracle_power(x, 2));
    CHECK(pde_via_kdet(PowerKind::complete, 2, x, 2, 2) == oracle_index_sum(x, 2, false));
    CHECK(pde_via_kdet(PowerKind::elementary, 5, x, 2, 2) == 0);
  }
  for (auto [n, k] : kSmall) {
    const auto x = points(130, static_cast<std::size_t>(n * k));
    KdetRatios ratios(x, n, k);
    for (int d = 1; d <= 4; ++d) {
      CHECK(ratios.power_kind(PowerKind::power, d) == oracle_power(x, d));
      CHECK(ratios.power_kind(PowerKind::complete, d) == oracle_index_sum(x, d, false));
      CHECK(ratios.power_kind(PowerKind::elementary, d) == oracle_index_sum(x, d, true));
      CHECK(classical::power_kind(PowerKind::elementary, d, x) == oracle_index_sum(x, d, true));
    }
  }
}

TEST_CASE("vanishing Vandermonde") {
  const Points same(4, Rational(3));
  CHECK(wreath_vandermonde(same, 2, 2) == 0);
  CHECK_THROWS_AS(KdetRatios(same, 2, 2), VanishingVandermonde);
}

TEST_CASE("H-series slices") {
  const auto sample = sample_points(4, 2, 140);
  const Rational base = oracle::rpow(vdm(sample.y), 2) * wreath_vandermonde(sample.x, 2, 2);
  CHECK(h_series_term(2, 2, 0, sample.x, sample.y) == base);
  CHECK(h_series_schur(2, 2, 0, sample.x, sample.y) == base);
  CHECK(h_series_check(2, 2, 2, sample.x, sample.y));
  const auto small = sample_points(2, 2, 141);
  CHECK(h_series_check(2, 1, 2, small.x, small.y));
  // degree-2 slice of the classical Cauchy expansion of det(1/(1 - x_i y_j))
  const auto& x = small.x;
  const auto& y = small.y;
  const Rational slice = vdm(x) * vdm(y) *
                         (oracle_schur({2}, x) * oracle_schur({2}, y) + oracle_schur({1, 1}, x) * oracle_schur({1, 1}, y));
  CHECK(h_series_term(2, 1, 2, x, y) == slice);
}

TEST_CASE("symmetric orbit sum") {
  for (int n = 1; n <= 4; ++n) {
    const auto x = points(150 + static_cast<std::uint64_t>(n), static_cast<std::size_t>(n));
    CHECK(symmetric_orbit_sum(x, n, 1) == vdm(x));
    CHECK(delta_nk(x, n, 1) == vdm(x));
  }
  for (auto [n, k] : kSmall) {
    const auto x = points(160, static_cast<std::size_t>(n * k));
    CHECK(symmetric_sum_vdm_check(x, n, k));
    CHECK(symmetric_orbit_sum(x, n, k) == wreath_vandermonde(x, n, k));
  }
}

TEST_CASE("Specht expansion") {
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 1}, {1, 3}}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto x = points(170 + seed, static_cast<std::size_t>(n * k));
      const auto value = wreath_vandermonde(x, n, k);
      CHECK(specht_expansion_dual(x, n, k) == value);
      CHECK((specht_expansion(x, n, k) == value) == (n * k <= 4 || n == 1 || k == 1));
    }
  }
  const StandardTableau t({{1, 3}, {2, 4}});
  const Points x = {Rational(1), Rational(2), Rational(4), Rational(8)};
  CHECK(specht_polynomial(t, x) == (x[0] - x[1]) * (x[2] - x[3]));
}
