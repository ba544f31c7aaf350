#include "wreathdet/verify.hpp"

#include <functional>
#include <random>
#include <stdexcept>

#include "wreathdet/alphadet.hpp"
#include "wreathdet/sampling.hpp"
#include "wreathdet/spherical.hpp"
#include "wreathdet/symfun.hpp"
#include "wreathdet/wreath.hpp"

namespace wreathdet {

bool SuiteReport::passed() const { return first_failure() == nullptr; }

const CheckResult* SuiteReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed()) return &c;
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"alphadet", "wreath", "symfun", "spherical"};
  return names;
}

namespace {

CheckResult named(std::string name) {
  CheckResult c;
  c.name = std::move(name);
  return c;
}

void record(CheckResult& c, bool ok, const std::function<Fields()>& describe) {
  ++c.cases;
  if (ok) return;
  if (c.failures++ == 0) c.counterexample = describe();
}

std::string str(const Rational& r) { return to_string(r); }
std::string str(const RationalMatrix& a) { return to_string(a); }
std::string str(const std::vector<Rational>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}
std::string pair_str(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

Permutation random_permutation(std::mt19937_64& rng, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

Polynomial alpha_poly() { return Polynomial::variable(alpha_variable()); }

const std::vector<std::pair<int, int>> kWreathPairs = {{2, 2}, {3, 2}, {2, 3}, {4, 2}, {2, 4}};
const std::vector<std::pair<int, int>> kSmallPairs = {{2, 2}, {3, 2}, {2, 3}};

// ---------------------------------------------------------------- alphadet

SuiteReport alphadet_suite(std::uint64_t seed, const Limits& limits) {
  SuiteReport report{"alphadet", seed, {}};
  std::mt19937_64 rng(seed);

  CheckResult laplace = named("defining sum equals Laplace expansion along every column");
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto a = random_matrix(rng, n, n);
      const auto alpha = random_rational(rng, 100);
      const auto sum = adet_sum(a, alpha, limits);
      record(laplace, adet_memo(a, alpha) == sum, [&] { return Fields{{"matrix", str(a)}, {"alpha", str(alpha)}, {"path", "memo"}}; });
      for (int q = 1; q <= static_cast<int>(n); ++q)
        record(laplace, adet_laplace(a, alpha, q) == sum,
               [&] { return Fields{{"matrix", str(a)}, {"alpha", str(alpha)}, {"q", std::to_string(q)}}; });
    }
  }
  report.checks.push_back(laplace);

  CheckResult symbolic = named("Laplace expansion with symbolic alpha");
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto a = to_polynomial(random_matrix(rng, n, n));
    const auto al = alpha_poly();
    const auto sum = adet_sum(a, al, limits);
    for (int q = 1; q <= static_cast<int>(n); ++q)
      record(symbolic, adet_laplace(a, al, q) == sum, [&] { return Fields{{"n", std::to_string(n)}, {"q", std::to_string(q)}}; });
  }
  report.checks.push_back(symbolic);

  CheckResult ones = named("all-ones matrix gives prod (1 + i alpha)");
  for (std::size_t n = 1; n <= 6; ++n) {
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = 1;
    Polynomial expected(1);
    for (std::size_t i = 1; i < n; ++i) expected = expected * (Polynomial(1) + Polynomial(static_cast<int>(i)) * alpha_poly());
    const auto value = adet_symbolic(a, limits);
    record(ones, value == expected, [&] { return Fields{{"n", std::to_string(n)}, {"value", value.to_string()}}; });
  }
  report.checks.push_back(ones);

  CheckResult transpose_check = named("transpose invariance");
  CheckResult action = named("row and column actions agree");
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto a = random_matrix(rng, n, n);
    const auto value = adet_symbolic(a, limits);
    record(transpose_check, adet_symbolic(transpose(a), limits) == value, [&] { return Fields{{"matrix", str(a)}}; });
    if (n > 4) continue;
    for (const auto& w : enumerate_group(static_cast<int>(n), limits))
      record(action, adet_symbolic(act_rows(w, a), limits) == adet_symbolic(act_columns(a, w), limits),
             [&] { return Fields{{"matrix", str(a)}, {"w", w.to_string()}}; });
  }
  report.checks.push_back(transpose_check);
  report.checks.push_back(action);

  CheckResult linear = named("multilinearity in rows and columns");
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto a = random_matrix(rng, n, n);
    const auto b = random_matrix(rng, n, n);
    const auto c = random_rational(rng);
    const auto alpha = random_rational(rng, 100);
    const auto base = adet(a, alpha);
    for (std::size_t line = 0; line < n; ++line) {
      auto col_sum = a, col_b = a, row_sum = a, row_b = a;
      for (std::size_t i = 0; i < n; ++i) {
        col_sum(i, line) = a(i, line) + c * b(i, line);
        col_b(i, line) = b(i, line);
        row_sum(line, i) = a(line, i) + c * b(line, i);
        row_b(line, i) = b(line, i);
      }
      record(linear, adet(col_sum, alpha) == base + c * adet(col_b, alpha),
             [&] { return Fields{{"matrix", str(a)}, {"column", std::to_string(line + 1)}}; });
      record(linear, adet(row_sum, alpha) == base + c * adet(row_b, alpha),
             [&] { return Fields{{"matrix", str(a)}, {"row", std::to_string(line + 1)}}; });
    }
  }
  report.checks.push_back(linear);

  CheckResult shifted = named("shifted cycle sum factors as alpha^m prod (1 + i alpha)");
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : enumerate_group(n, limits)) {
      for (unsigned mask = 0; mask < (1U << n); ++mask) {
        const auto support = SupportSet::from_mask(mask);
        const auto result = shifted_cycle_sum(g, support, alpha_poly(), limits);
        Polynomial raw;
        for (const auto& w : support_subgroup(n, support, limits)) raw += power(alpha_poly(), static_cast<unsigned>(n - cycle_count(g * w)));
        Polynomial factored = power(alpha_poly(), static_cast<unsigned>(result.m));
        for (std::size_t i = 1; i < support.size(); ++i) factored = factored * (Polynomial(1) + Polynomial(static_cast<int>(i)) * alpha_poly());
        record(shifted, raw == factored && result.value == raw,
               [&] { return Fields{{"g", g.to_string()}, {"support_mask", std::to_string(mask)}, {"sum", raw.to_string()}}; });
      }
    }
  }
  report.checks.push_back(shifted);

  CheckResult equal_columns = named("k+1 equal columns annihilate kdet");
  CheckResult averaged = named("alternating sums over supports larger than k vanish");
  CheckResult column_add = named("adding a k-fold repeated column leaves kdet unchanged");
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int k = 1; k < static_cast<int>(n); ++k) {
      auto a = random_matrix(rng, n, n, 1000);
      for (std::size_t j = 1; j <= static_cast<std::size_t>(k); ++j)
        for (std::size_t i = 0; i < n; ++i) a(i, j) = a(i, 0);
      record(equal_columns, kdet(a, k) == 0 && kdet(transpose(a), k) == 0,
             [&] { return Fields{{"matrix", str(a)}, {"k", std::to_string(k)}}; });

      auto b = random_matrix(rng, n, n, 1000);
      for (std::size_t j = 1; j < static_cast<std::size_t>(k); ++j)
        for (std::size_t i = 0; i < n; ++i) b(i, j) = b(i, 0);
      const auto before = kdet(b, k);
      for (std::size_t target = static_cast<std::size_t>(k); target < n; ++target) {
        auto c = b;
        for (std::size_t i = 0; i < n; ++i) c(i, target) += b(i, 0);
        record(column_add, kdet(c, k) == before,
               [&] { return Fields{{"matrix", str(b)}, {"k", std::to_string(k)}, {"target", std::to_string(target + 1)}}; });
      }
    }
    if (n > 5) continue;
    const auto a = random_matrix(rng, n, n, 1000);
    for (int k = 1; k < static_cast<int>(n); ++k) {
      for (unsigned mask = 0; mask < (1U << n); ++mask) {
        const auto support = SupportSet::from_mask(mask);
        if (static_cast<int>(support.size()) <= k) continue;
        Rational total(0);
        for (const auto& w : support_subgroup(static_cast<int>(n), support, limits)) total += kdet(act_columns(a, w), k);
        record(averaged, total == 0,
               [&] { return Fields{{"matrix", str(a)}, {"k", std::to_string(k)}, {"support_mask", std::to_string(mask)}}; });
      }
    }
  }
  report.checks.push_back(equal_columns);
  report.checks.push_back(averaged);
  report.checks.push_back(column_add);

  CheckResult block = named("block upper triangular multiplicativity");
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t q = 1; q <= 3; ++q) {
      const auto a11 = random_matrix(rng, p, p);
      const auto a12 = random_matrix(rng, p, q);
      const auto a22 = random_matrix(rng, q, q);
      const auto alpha = random_rational(rng, 100);
      record(block, block_adet_check(a11, a12, a22, alpha),
             [&] { return Fields{{"a11", str(a11)}, {"a12", str(a12)}, {"a22", str(a22)}, {"alpha", str(alpha)}}; });
    }
  }
  report.checks.push_back(block);
  return report;
}

// ------------------------------------------------------------------ wreath

SuiteReport wreath_suite(std::uint64_t seed, const Limits& limits) {
  SuiteReport report{"wreath", seed, {}};
  std::mt19937_64 rng(seed);

  CheckResult paths = named("direct, symmetric, monomial and solved-tableau paths agree");
  CheckResult literal = named("tableau expansion with coefficients wrdet I(T)");
  CheckResult gl = named("relative invariance wrdet(AP) = det(P)^k wrdet(A)");
  CheckResult columns = named("column operations and column permutations");
  for (auto [n, k] : kWreathPairs) {
    const auto rows = static_cast<std::size_t>(n * k);
    const auto cols = static_cast<std::size_t>(n);
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = random_matrix(rng, rows, cols);
      const auto direct = wrdet_direct(a, k, limits);
      const auto symmetric = wrdet_symmetric(a, k, limits);
      const auto monomial = wrdet_monomial(a, k, limits);
      const auto dual = wrdet_tableaux_dual(a, k, limits);
      record(paths, symmetric == direct && monomial == direct && dual == direct, [&] {
        return Fields{{"pair", pair_str(n, k)}, {"matrix", str(a)}, {"direct", str(direct)}, {"symmetric", str(symmetric)},
                      {"monomial", str(monomial)}, {"tableaux_dual", str(dual)}};
      });
      const auto claimed = wrdet_tableaux(a, k, limits);
      record(literal, claimed == direct, [&] {
        return Fields{{"pair", pair_str(n, k)}, {"matrix", str(a)}, {"direct", str(direct)}, {"tableaux", str(claimed)}};
      });
    }
    const auto a = random_matrix(rng, rows, cols);
    const auto p = random_matrix(rng, cols, cols);
    const auto w = wrdet_direct(a, k, limits);
    record(gl, wrdet_direct(a * p, k, limits) == power(determinant(p), k) * w,
           [&] { return Fields{{"pair", pair_str(n, k)}, {"matrix", str(a)}, {"P", str(p)}}; });
    for (const auto& s : enumerate_group(n, limits))
      record(columns, wrdet_direct(act_columns(a, s), k, limits) == Rational(k % 2 ? s.sign() : 1) * w,
             [&] { return Fields{{"pair", pair_str(n, k)}, {"matrix", str(a)}, {"sigma", s.to_string()}}; });
    for (int i = 0; i < n; ++i) {
      const auto c = random_rational(rng, 100);
      auto added = a;
      auto scaled = a;
      const auto j = static_cast<std::size_t>((i + 1) % n);
      for (std::size_t r = 0; r < rows; ++r) {
        added(r, static_cast<std::size_t>(i)) += c * a(r, j);
        scaled(r, static_cast<std::size_t>(i)) *= c;
      }
      record(columns, wrdet_direct(added, k, limits) == w && wrdet_direct(scaled, k, limits) == power(c, k) * w,
             [&] { return Fields{{"pair", pair_str(n, k)}, {"matrix", str(a)}, {"column", std::to_string(i + 1)}, {"c", str(c)}}; });
    }
  }
  report.checks.push_back(paths);
  report.checks.push_back(literal);

  CheckResult duality = named("tdet_T(I(U)) = delta_TU");
  for (auto [n, k] : kWreathPairs) {
    const auto& basis = tableau_basis(n, k, limits);
    for (std::size_t u = 0; u < basis.tableaux.size(); ++u)
      for (std::size_t t = 0; t < basis.tableaux.size(); ++t)
        record(duality, basis.pairing(u, t) == (u == t ? 1 : 0), [&] {
          return Fields{{"pair", pair_str(n, k)}, {"T", basis.tableaux[t].to_string()}, {"U", basis.tableaux[u].to_string()},
                        {"tdet_T(I(U))", str(basis.pairing(u, t))}};
        });
  }
  report.checks.push_back(duality);
  report.checks.push_back(gl);
  report.checks.push_back(columns);

  CheckResult group = named("wreath group acts by chi^k");
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}}) {
    const auto a = random_matrix(rng, static_cast<std::size_t>(n * k), static_cast<std::size_t>(n));
    const auto w = wrdet_direct(a, k, limits);
    for (const auto& g : wreath_group(n, k, limits))
      record(group, wrdet_direct(act_rows(g.embed(), a), k, limits) == power(Rational(g.character()), k) * w,
             [&] { return Fields{{"pair", pair_str(n, k)}, {"matrix", str(a)}, {"g", g.embed().to_string()}}; });
  }
  report.checks.push_back(group);

  CheckResult orbit = named("(n,k)-sign from signed orbit counts");
  CheckResult constancy = named("sgn(w) constant on the orbit intersection");
  CheckResult pf = named("P_f coefficient equals intersection over orbit");
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
    for (const auto& f : all_colorings(n, k, limits)) {
      const auto d = orbit_data(f, limits);
      const auto sign = nk_sign(f, limits);
      record(orbit, d.orbit_size == d.orbit_size_formula && d.reconstructed_sign(n, k) == sign, [&] {
        return Fields{{"f", f.to_string()}, {"orbit", std::to_string(d.orbit_size)}, {"formula", std::to_string(d.orbit_size_formula)},
                      {"nk_sign", str(sign)}};
      });
      if (d.intersection > 0)
        record(constancy, d.sign_is_constant(), [&] {
          return Fields{{"f", f.to_string()}, {"intersection", std::to_string(d.intersection)},
                        {"signed_intersection", std::to_string(d.signed_intersection)}};
        });
      if (n * k <= 6)
        record(pf, pf_coefficient(f, limits) == make_rational(d.intersection, d.orbit_size),
               [&] { return Fields{{"f", f.to_string()}}; });
    }
  }
  report.checks.push_back(orbit);
  report.checks.push_back(constancy);
  report.checks.push_back(pf);

  CheckResult power_identity = named("sgn(f) det(A)^k = sum_h sgn(h) prod a_{f(i) h(i)}");
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    const auto a = random_matrix(rng, static_cast<std::size_t>(n), static_cast<std::size_t>(n), 1000);
    for (const auto& f : all_colorings(n, k, limits))
      record(power_identity, det_power_identity_check(f, a, limits), [&] { return Fields{{"f", f.to_string()}, {"A", str(a)}}; });
  }
  report.checks.push_back(power_identity);

  CheckResult singular = named("plexed product discrepancy vanishes exactly at alpha = -1, -1/2");
  {
    const auto x = symbolic_matrix(4, 2, "a");
    const auto p = to_polynomial(RationalMatrix::from_rows({{1, 1}, {0, 1}}));
    const auto al = alpha_poly();
    const auto diff = adet(column_k_plex(x * p, 2), al, AdetMethod::automatic, limits) - adet(column_k_plex(x, 2), al, AdetMethod::automatic, limits);
    for (int j = 1; j <= 6; ++j)
      record(singular, diff.substitute(alpha_variable(), Rational(-1, j)).is_zero() == (j <= 2),
             [&] { return Fields{{"alpha", "-1/" + std::to_string(j)}, {"difference", diff.to_string()}}; });
  }
  report.checks.push_back(singular);
  return report;
}

// ------------------------------------------------------------------ symfun

SuiteReport symfun_suite(std::uint64_t seed, const Limits& limits) {
  SuiteReport report{"symfun", seed, {}};
  CheckResult cauchy = named("Cauchy-type identity");
  CheckResult variant = named("Cauchy-type identity, 1/(1 - xy) variant");
  CheckResult shift = named("D(x; delta) equals wrdet V(x)");
  CheckResult orbit = named("symmetric orbit sum of Delta_{n,k}");
  CheckResult specht = named("Specht expansion with coefficients wrdet I(T)");
  CheckResult specht_dual = named("Specht expansion with solved coefficients");
  CheckResult monomial = named("monomial symmetric functions as kdet ratios");
  CheckResult schur = named("Schur functions as kdet ratios");
  CheckResult pde = named("power, complete and elementary functions as kdet ratios");
  CheckResult h_series = named("H-series degree slices");
  std::uint64_t next = seed;
  auto describe = [](int n, int k, const std::vector<Rational>& x) { return Fields{{"pair", pair_str(n, k)}, {"x", str(x)}}; };
  for (auto [n, k] : kSmallPairs) {
    const auto kn = static_cast<std::size_t>(n * k);
    for (int point = 0; point < 5; ++point) {
      const auto sample = sample_points(kn, static_cast<std::size_t>(n), next);
      next = sample.seed + 1;
      const auto check = cauchy_check(sample.x, sample.y, k);
      record(cauchy, check.cauchy, [&] { return Fields{{"pair", pair_str(n, k)}, {"x", str(sample.x)}, {"y", str(sample.y)}}; });
      record(variant, check.variant, [&] { return Fields{{"pair", pair_str(n, k)}, {"x", str(sample.x)}, {"y", str(sample.y)}}; });
      if (point >= 3) continue;
      const auto& x = sample.x;
      KdetRatios ratios(x, n, k);
      const auto v = ratios.vandermonde();
      record(shift, ratios.d(delta_shift(n, k)) == v, [&] { return describe(n, k, x); });
      record(orbit, symmetric_orbit_sum(x, n, k, limits) == v, [&] { return describe(n, k, x); });
      const auto claimed = specht_expansion(x, n, k, limits);
      record(specht, claimed == v, [&] {
        auto f = describe(n, k, x);
        f.emplace_back("wrdet_V", str(v));
        f.emplace_back("expansion", str(claimed));
        return f;
      });
      record(specht_dual, specht_expansion_dual(x, n, k, limits) == v, [&] { return describe(n, k, x); });
      for (int size = 0; size <= 4; ++size) {
        for (const auto& lambda : partitions_of(size)) {
          record(monomial, ratios.monomial(lambda) == classical::monomial(lambda, x), [&] {
            auto f = describe(n, k, x);
            f.emplace_back("lambda", lambda.to_string());
            return f;
          });
          record(schur, ratios.schur(lambda) == classical::schur(lambda, x), [&] {
            auto f = describe(n, k, x);
            f.emplace_back("lambda", lambda.to_string());
            return f;
          });
        }
      }
      for (int d = 1; d <= 4; ++d) {
        for (auto kind : {PowerKind::power, PowerKind::complete, PowerKind::elementary}) {
          record(pde, ratios.power_kind(kind, d) == classical::power_kind(kind, d, x), [&] {
            auto f = describe(n, k, x);
            f.emplace_back("kind", kind == PowerKind::power ? "p" : kind == PowerKind::complete ? "h" : "e");
            f.emplace_back("d", std::to_string(d));
            return f;
          });
        }
      }
    }
  }
  for (auto [n, k] : {std::pair{2, 2}, {2, 1}}) {
    const auto sample = sample_points(static_cast<std::size_t>(n * k), static_cast<std::size_t>(n), next);
    next = sample.seed + 1;
    record(h_series, h_series_check(n, k, 2, sample.x, sample.y),
           [&] { return Fields{{"pair", pair_str(n, k)}, {"x", str(sample.x)}, {"y", str(sample.y)}}; });
  }
  report.checks = {cauchy, variant, shift, orbit, specht, specht_dual, monomial, schur, pde, h_series};
  return report;
}

// --------------------------------------------------------------- spherical

SuiteReport spherical_suite(std::uint64_t seed, const Limits& limits) {
  SuiteReport report{"spherical", seed, {}};
  std::mt19937_64 rng(seed);

  CheckResult invariance = named("phi is symmetric and S_k^n-biinvariant");
  for (auto [n, k] : kSmallPairs) {
    const auto young = young_subgroup_elements(n, k, limits);
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = random_permutation(rng, n * k);
      const auto& s = young[rng() % young.size()];
      const auto& t = young[rng() % young.size()];
      const auto value = phi(g, n, k, limits);
      record(invariance, phi(g.inverse(), n, k, limits) == value && phi_by_kdet(s * g * t, n, k, limits) == value,
             [&] { return Fields{{"pair", pair_str(n, k)}, {"g", g.to_string()}}; });
    }
  }
  report.checks.push_back(invariance);

  CheckResult shape = named("Xi is symmetric with unit diagonal");
  CheckResult definite = named("Xi is positive definite");
  for (auto [n, k] : kWreathPairs) {
    const auto xi = xi_matrix(n, k, limits);
    bool ok = true;
    for (std::size_t s = 0; s < xi.order(); ++s) {
      ok = ok && xi.entries(s, s) == 1;
      for (std::size_t t = 0; t < xi.order(); ++t) ok = ok && xi.entries(s, t) == xi.entries(t, s);
    }
    record(shape, ok, [&] { return Fields{{"pair", pair_str(n, k)}, {"Xi", str(xi.entries)}}; });
    const auto d = sylvester(xi.entries);
    record(definite, d.positive_definite, [&] { return Fields{{"pair", pair_str(n, k)}, {"leading_minors", str(d.leading_minors)}}; });
  }
  report.checks.push_back(shape);
  report.checks.push_back(definite);

  CheckResult element = named("phi as a matrix element of wrdet");
  for (const auto& g : enumerate_group(4, limits))
    record(element, phi_matrix_element_check(g, 2, 2, limits).ok(), [&] { return Fields{{"pair", "(2,2)"}, {"g", g.to_string()}}; });
  for (int trial = 0; trial < 3; ++trial) {
    const auto g = random_permutation(rng, 6);
    record(element, phi_matrix_element_check(g, 3, 2, limits).ok(), [&] { return Fields{{"pair", "(3,2)"}, {"g", g.to_string()}}; });
  }
  report.checks.push_back(element);

  CheckResult characters = named("phi as a combination of zonal spherical functions");
  for (const auto& g : enumerate_group(4, limits))
    record(characters, phi_by_characters(g, 2, 2, limits) == phi(g, 2, 2, limits), [&] { return Fields{{"pair", "(2,2)"}, {"g", g.to_string()}}; });
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_permutation(rng, 6);
    record(characters, phi_by_characters(g, 3, 2, limits) == phi(g, 3, 2, limits), [&] { return Fields{{"pair", "(3,2)"}, {"g", g.to_string()}}; });
  }
  report.checks.push_back(characters);

  CheckResult frobenius = named("Frobenius specialization");
  for (int big_n = 1; big_n <= 6; ++big_n)
    record(frobenius, frobenius_specialization_check(big_n), [&] { return Fields{{"N", std::to_string(big_n)}}; });
  report.checks.push_back(frobenius);

  CheckResult content = named("content polynomial at -1/k counts semistandard tableaux");
  for (int size = 1; size <= 8; ++size)
    for (int k = 1; k <= size; ++k)
      if (size % k == 0)
        record(content, content_count_check(size / k, k), [&] { return Fields{{"pair", pair_str(size / k, k)}}; });
  report.checks.push_back(content);

  CheckResult d_literal = named("D_T expansion through phi");
  CheckResult d_dual = named("D_T expansion with solved coefficients");
  {
    const auto x = symbolic_matrix(4, 2);
    for (const auto& t : tableau_basis(2, 2, limits).tableaux) {
      const auto lhs = d_tableau(x, t, limits);
      record(d_literal, lhs == d_tableau_expansion(x, t, limits), [&] { return Fields{{"pair", "(2,2)"}, {"T", t.to_string()}}; });
      record(d_dual, lhs == d_tableau_dual_expansion(x, t, limits), [&] { return Fields{{"pair", "(2,2)"}, {"T", t.to_string()}}; });
    }
  }
  for (auto [n, k] : {std::pair{3, 2}, {2, 3}}) {
    const auto a = random_matrix(rng, static_cast<std::size_t>(n * k), static_cast<std::size_t>(n));
    for (const auto& t : tableau_basis(n, k, limits).tableaux) {
      const auto lhs = d_tableau(a, t, limits);
      const auto claimed = d_tableau_expansion(a, t, limits);
      record(d_literal, lhs == claimed, [&] {
        return Fields{{"pair", pair_str(n, k)}, {"T", t.to_string()}, {"X", str(a)}, {"D_T", str(lhs)}, {"expansion", str(claimed)}};
      });
      record(d_dual, lhs == d_tableau_dual_expansion(a, t, limits), [&] { return Fields{{"pair", pair_str(n, k)}, {"T", t.to_string()}, {"X", str(a)}}; });
    }
  }
  report.checks.push_back(d_literal);
  report.checks.push_back(d_dual);
  return report;
}

}  // namespace

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, const Limits& limits) {
  if (suite == "alphadet") return alphadet_suite(seed, limits);
  if (suite == "wreath") return wreath_suite(seed, limits);
  if (suite == "symfun") return symfun_suite(seed, limits);
  if (suite == "spherical") return spherical_suite(seed, limits);
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace wreathdet
