#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wreathdet/alphadet.hpp"
#include "wreathdet/perm.hpp"

using namespace wreathdet;

TEST_CASE("cycle_count on small examples") {
  CHECK(cycle_count(Permutation::identity(4)) == 4);
  CHECK(cycle_count(Permutation::from_cycles(4, {{1, 2}})) == 3);
  CHECK(cycle_count(Permutation::from_cycles(4, {{1, 2, 3, 4}})) == 1);
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_NOTHROW(Permutation({2, 3, 1}));
}

TEST_CASE("composition acts as functions") {
  const Permutation p({2, 3, 1});
  const Permutation q({2, 1, 3});
  const auto pq = p * q;
  for (int x = 1; x <= 3; ++x) CHECK(pq(x) == p(q(x)));
  CHECK((p * p.inverse()).is_identity());
}

TEST_CASE("enumerate_group sizes and ranks") {
  CHECK(enumerate_group(3).size() == 6);
  const auto one = enumerate_group(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_identity());
  const auto s4 = enumerate_group(4);
  CHECK(s4.size() == 24);
  std::set<std::uint64_t> ranks;
  for (std::size_t i = 0; i < s4.size(); ++i) {
    ranks.insert(rank_of(s4[i]));
    CHECK(rank_of(s4[i]) == i);
    CHECK(permutation_from_rank(4, i) == s4[i]);
  }
  CHECK(ranks.size() == 24);
}

TEST_CASE("rank range slicing covers the group exactly once") {
  std::vector<Permutation> pieces;
  for (std::uint64_t start = 0; start < 120; start += 17) {
    for_each_permutation(5, [&](const Permutation& p) { pieces.push_back(p); }, RankRange{start, start + 17});
  }
  CHECK(pieces == enumerate_group(5));
}

TEST_CASE("enumeration cap is enforced") {
  Limits limits;
  limits.max_degree = 5;
  CHECK_THROWS_AS(enumerate_group(6, limits), CapExceeded);
  try {
    enumerate_group(6, limits);
  } catch (const CapExceeded& e) {
    CHECK(e.requested() == 6);
    CHECK(e.cap() == 5);
  }
}

TEST_CASE("cycle count is inversion invariant and matches the oracle") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_group(n)) {
      CHECK(cycle_count(p) == cycle_count(p.inverse()));
      std::vector<int> zero_based;
      for (int v : p.images()) zero_based.push_back(v - 1);
      CHECK(cycle_count(p) == oracle::cycles(zero_based));
      CHECK(p.sign() == oracle::inversion_sign(zero_based));
    }
  }
}

TEST_CASE("young subgroup") {
  CHECK(young_subgroup_elements(3, 2).size() == 8);
  CHECK(young_subgroup_elements(1, 4).size() == 24);
  const auto trivial = young_subgroup_elements(4, 1);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].is_identity());
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}, {2, 4}}) {
    const auto elements = young_subgroup_elements(n, k);
    CHECK(elements.size() == static_cast<std::size_t>(std::pow(factorial(k), n)));
    std::set<Permutation> distinct(elements.begin(), elements.end());
    CHECK(distinct.size() == elements.size());
    for (const auto& s : elements)
      for (int x = 1; x <= n * k; ++x) CHECK((s(x) - 1) / k == (x - 1) / k);
  }
  Limits limits;
  limits.max_young_order = 100;
  CHECK_THROWS_AS(young_subgroup_elements(3, 3, limits), CapExceeded);
}

TEST_CASE("psi embedding") {
  CHECK(psi_embed(Permutation::identity(3), 2).is_identity());
  CHECK(psi_embed(Permutation({2, 1}), 2) == Permutation({3, 4, 1, 2}));
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 3; ++k) {
      const auto group = enumerate_group(n);
      std::set<Permutation> images;
      for (const auto& s : group) {
        images.insert(psi_embed(s, k));
        for (const auto& t : group) CHECK(psi_embed(s * t, k) == psi_embed(s, k) * psi_embed(t, k));
      }
      CHECK(images.size() == group.size());
    }
  }
}

TEST_CASE("block embedding is a homomorphism") {
  std::mt19937_64 rng(5);
  const auto s3 = enumerate_group(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Permutation> a, b, ab;
    for (int i = 0; i < 2; ++i) {
      a.push_back(s3[rng() % 6]);
      b.push_back(s3[rng() % 6]);
      ab.push_back(a.back() * b.back());
    }
    CHECK(block_embed(ab) == block_embed(a) * block_embed(b));
  }
}

TEST_CASE("shifted cycle sum at the identity") {
  const Polynomial a = Polynomial::variable(alpha_variable());
  for (int n = 1; n <= 5; ++n) {
    SupportSet all;
    for (int i = 1; i <= n; ++i) all.members.push_back(i);
    const auto full = shifted_cycle_sum(Permutation::identity(n), all, a);
    Polynomial expected(1);
    for (int i = 1; i < n; ++i) expected = expected * (Polynomial(1) + Polynomial(i) * a);
    CHECK(full.value == expected);
    CHECK(full.m == 0);
    const auto empty = shifted_cycle_sum(Permutation::identity(n), SupportSet{}, a);
    CHECK(empty.value == Polynomial(1));
    CHECK(empty.m == 0);
  }
}

TEST_CASE("shifted cycle sum factors for every g and I") {
  const Polynomial a = Polynomial::variable(alpha_variable());
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : enumerate_group(n)) {
      for (unsigned mask = 0; mask < (1U << n); ++mask) {
        const auto support = SupportSet::from_mask(mask);
        const auto result = shifted_cycle_sum(g, support, a);
        Polynomial raw(0);
        for (const auto& w : support_subgroup(n, support)) raw += power(a, static_cast<unsigned>(n - cycle_count(g * w)));
        Polynomial factored = power(a, static_cast<unsigned>(result.m));
        for (std::size_t i = 1; i < support.size(); ++i) factored = factored * (Polynomial(1) + Polynomial(static_cast<int>(i)) * a);
        CHECK(result.value == raw);
        CHECK(raw == factored);
      }
    }
  }
}
