#include "wreathdet/alphadet.hpp"

#include <cstdint>
#include <functional>
#include <unordered_map>

#include "wreathdet/parallel.hpp"

namespace wreathdet {

Variable alpha_variable() { return Variable{"a", 0, 0}; }

AlphaParam AlphaParam::symbolic() { return AlphaParam(); }

AlphaParam AlphaParam::value(const Rational& v) {
  AlphaParam p;
  p.value_ = v;
  return p;
}

AlphaParam AlphaParam::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text == "symbolic" || text == "a") return symbolic();
  return value(parse_rational(text));
}

const Rational& AlphaParam::rational() const {
  if (!value_) throw std::logic_error("symbolic alpha has no rational value");
  return *value_;
}

int AlphaParam::singular_order() const {
  if (!value_ || sgn(*value_) >= 0) return 0;
  if (value_->get_num() != -1) return 0;
  const Integer& den = value_->get_den();
  if (!den.fits_sint_p()) return 0;
  return static_cast<int>(den.get_si());
}

Polynomial AlphaParam::as_polynomial() const {
  return value_ ? Polynomial(*value_) : Polynomial::variable(alpha_variable());
}

std::string AlphaParam::to_string() const { return value_ ? wreathdet::to_string(*value_) : "symbolic"; }

namespace {

// Depth-first walk over permutations column by column. Partial maps are
// disjoint paths; path_start/path_end let each step update the cycle count in
// constant time.
template <class S>
class CycleWalker {
 public:
  CycleWalker(const std::vector<S>& entries, std::size_t n)
      : entries_(entries), n_(n), used_(n, false), path_start_(n), path_end_(n), sums_(n + 1, S(0)) {
    for (std::size_t i = 0; i < n; ++i) path_start_[i] = path_end_[i] = i;
    prefix_.assign(n + 1, S(1));
  }

  void run_from(std::size_t first_row) {
    if (n_ == 0) {
      sums_[0] += S(1);
      return;
    }
    step(0, first_row, 0);
  }

  void run_all() {
    if (n_ == 0) {
      sums_[0] += S(1);
      return;
    }
    for (std::size_t i = 0; i < n_; ++i) step(0, i, 0);
  }

  std::vector<S>& sums() { return sums_; }

 private:
  const S& entry(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }

  // Assign w(col) = row, then continue with the next column.
  void step(std::size_t col, std::size_t row, int cycles) {
    if (is_zero(entry(row, col))) return;
    const std::size_t s = path_start_[col];
    const std::size_t e = path_end_[row];
    const bool closes = s == row;
    const std::size_t saved_end = path_end_[s];
    const std::size_t saved_start = path_start_[e];
    if (closes) {
      ++cycles;
    } else {
      path_end_[s] = e;
      path_start_[e] = s;
    }
    used_[row] = true;
    prefix_[col + 1] = prefix_[col] * entry(row, col);
    if (col + 1 == n_) {
      sums_[static_cast<std::size_t>(cycles)] += prefix_[col + 1];
    } else {
      for (std::size_t next = 0; next < n_; ++next)
        if (!used_[next]) step(col + 1, next, cycles);
    }
    used_[row] = false;
    path_end_[s] = saved_end;
    path_start_[e] = saved_start;
  }

  const std::vector<S>& entries_;
  std::size_t n_;
  std::vector<bool> used_;
  std::vector<std::size_t> path_start_;
  std::vector<std::size_t> path_end_;
  std::vector<S> prefix_;
  std::vector<S> sums_;
};

template <class S>
std::vector<S> walk_cycle_sums(const std::vector<S>& entries, std::size_t n) {
  if (n < 6) {
    CycleWalker<S> walker(entries, n);
    walker.run_all();
    return walker.sums();
  }
  auto parts = parallel_map<std::vector<S>>(n, [&](std::size_t row) {
    CycleWalker<S> walker(entries, n);
    walker.run_from(row);
    return walker.sums();
  });
  std::vector<S> total(n + 1, S(0));
  for (const auto& part : parts)
    for (std::size_t c = 0; c <= n; ++c) total[c] += part[c];
  return total;
}

void check_square(std::size_t rows, std::size_t cols, const char* what) {
  if (rows != cols) throw ShapeError(std::string(what) + " requires a square matrix");
}

void check_degree(std::size_t n, const Limits& limits) {
  if (n > static_cast<std::size_t>(limits.max_degree)) {
    throw CapExceeded("permutation sum degree", n, static_cast<std::uint64_t>(limits.max_degree));
  }
}

template <class R>
R horner(const std::vector<R>& sums, const R& alpha) {
  // sum_c alpha^{n-c} S_c = S_n + alpha (S_{n-1} + alpha (...)).
  const std::size_t n = sums.size() - 1;
  R value = sums[0];
  for (std::size_t c = 1; c <= n; ++c) value = value * alpha + sums[c];
  return value;
}

}  // namespace

template <>
std::vector<Rational> cycle_class_sums(const RationalMatrix& a, const Limits& limits) {
  check_square(a.rows(), a.cols(), "adet");
  const std::size_t n = a.rows();
  check_degree(n, limits);
  // Scale column j by the lcm L_j of its denominators; adet is linear in each
  // column, so S_c(A) = S_c(B) / prod L_j.
  std::vector<Integer> scale(n, Integer(1));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      mpz_lcm(scale[j].get_mpz_t(), scale[j].get_mpz_t(), a(i, j).get_den_mpz_t());
  std::vector<Integer> entries(n * n);
  Integer total_scale = 1;
  for (std::size_t j = 0; j < n; ++j) {
    total_scale *= scale[j];
    for (std::size_t i = 0; i < n; ++i) entries[i * n + j] = scale[j] / a(i, j).get_den() * a(i, j).get_num();
  }
  const auto integer_sums = walk_cycle_sums(entries, n);
  std::vector<Rational> sums(n + 1);
  for (std::size_t c = 0; c <= n; ++c) {
    sums[c] = Rational(integer_sums[c], total_scale);
    sums[c].canonicalize();
  }
  return sums;
}

template <>
std::vector<Polynomial> cycle_class_sums(const PolynomialMatrix& a, const Limits& limits) {
  check_square(a.rows(), a.cols(), "adet");
  const std::size_t n = a.rows();
  check_degree(n, limits);
  return walk_cycle_sums(a.entries(), n);
}

template <class R>
R adet_sum(const Matrix<R>& a, const R& alpha, const Limits& limits) {
  return horner(cycle_class_sums(a, limits), alpha);
}

template <class R>
R adet_memo(const Matrix<R>& a, const R& alpha) {
  check_square(a.rows(), a.cols(), "adet");
  const std::size_t n = a.rows();
  if (n > 24) throw CapExceeded("Laplace recursion size", n, 24);
  const std::size_t none = n;
  std::unordered_map<std::uint64_t, R> memo;
  // State: indices still present (mask), and optionally one slot p whose row
  // holds the entries of the deleted original row r.
  std::function<R(std::uint32_t, std::size_t, std::size_t)> value =
      [&](std::uint32_t mask, std::size_t p, std::size_t r) -> R {
    if (mask == 0) return R(1);
    const std::uint64_t key = (static_cast<std::uint64_t>(mask) * (n + 1) + p) * (n + 1) + r;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    R total(0);
    if (p == none) {
      const auto s = static_cast<std::size_t>(__builtin_ctz(mask));
      const std::uint32_t rest = mask & ~(1U << s);
      for (std::size_t row = 0; row < n; ++row) {
        if (!((mask >> row) & 1U) || is_zero(a(row, s))) continue;
        if (row == s) {
          total += a(row, s) * value(rest, none, none);
        } else {
          total += alpha * a(row, s) * value(rest, row, s);
        }
      }
    } else {
      const std::uint32_t rest = mask & ~(1U << p);
      for (std::size_t row = 0; row < n; ++row) {
        if (!((mask >> row) & 1U)) continue;
        if (row == p) {
          if (!is_zero(a(r, p))) total += a(r, p) * value(rest, none, none);
        } else if (!is_zero(a(row, p))) {
          total += alpha * a(row, p) * value(rest, row, r);
        }
      }
    }
    memo.emplace(key, total);
    return total;
  };
  return value(n == 32 ? ~0U : (1U << n) - 1U, none, none);
}

template <class R>
R adet(const Matrix<R>& a, const R& alpha, AdetMethod method, const Limits& limits) {
  check_square(a.rows(), a.cols(), "adet");
  if (method == AdetMethod::sum || (method == AdetMethod::automatic && a.rows() <= 8)) {
    return adet_sum(a, alpha, limits);
  }
  check_degree(a.rows(), limits);
  return adet_memo(a, alpha);
}

Rational adet(const RationalMatrix& a, const Rational& alpha) {
  return adet<Rational>(a, alpha, AdetMethod::automatic, Limits{});
}

Polynomial adet_symbolic(const RationalMatrix& a, const Limits& limits) {
  const auto sums = cycle_class_sums(a, limits);
  const std::size_t n = a.rows();
  std::vector<Rational> coefficients(n + 1);
  for (std::size_t d = 0; d <= n; ++d) coefficients[d] = sums[n - d];
  return Polynomial::from_univariate(alpha_variable(), coefficients);
}

Polynomial adet(const PolynomialMatrix& a, const AlphaParam& alpha, const Limits& limits) {
  return adet<Polynomial>(a, alpha.as_polynomial(), AdetMethod::automatic, limits);
}

template <class R>
std::vector<LaplaceTerm<R>> laplace_terms(const Matrix<R>& a, int q) {
  check_square(a.rows(), a.cols(), "adet_laplace");
  const int n = static_cast<int>(a.rows());
  if (q < 1 || q > n) throw std::out_of_range("Laplace column " + std::to_string(q) + " out of range");
  const auto qq = static_cast<std::size_t>(q - 1);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (i != qq) kept.push_back(i);
  std::vector<LaplaceTerm<R>> terms;
  for (std::size_t p = 0; p < a.rows(); ++p) {
    LaplaceTerm<R> term;
    term.row = static_cast<int>(p) + 1;
    term.alpha_power = p == qq ? 0 : 1;
    term.entry = a(p, qq);
    term.minor = Matrix<R>(kept.size(), kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
      const std::size_t source = (kept[i] == p && p != qq) ? qq : kept[i];
      for (std::size_t j = 0; j < kept.size(); ++j) term.minor(i, j) = a(source, kept[j]);
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

template <class R>
R adet_laplace(const Matrix<R>& a, const R& alpha, int q) {
  check_square(a.rows(), a.cols(), "adet_laplace");
  if (a.rows() == 0) return R(1);
  R total(0);
  for (const auto& term : laplace_terms(a, q)) {
    if (is_zero(term.entry)) continue;
    R value = term.entry * adet_memo(term.minor, alpha);
    if (term.alpha_power == 1) value = alpha * value;
    total += value;
  }
  return total;
}

Rational kdet(const RationalMatrix& a, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  return adet(a, Rational(-1, k));
}

Polynomial kdet(const PolynomialMatrix& a, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  return adet<Polynomial>(a, Polynomial(Rational(-1, k)));
}

namespace {
template <class R>
bool block_check(const Matrix<R>& a11, const Matrix<R>& a12, const Matrix<R>& a22, const R& alpha) {
  const auto whole = block_upper(a11, a12, a22);
  return adet(whole, alpha) == adet(a11, alpha) * adet(a22, alpha);
}
}  // namespace

bool block_adet_check(const RationalMatrix& a11, const RationalMatrix& a12, const RationalMatrix& a22,
                      const Rational& alpha) {
  return block_check(a11, a12, a22, alpha);
}

bool block_adet_check(const PolynomialMatrix& a11, const PolynomialMatrix& a12,
                      const PolynomialMatrix& a22, const Polynomial& alpha) {
  return block_check(a11, a12, a22, alpha);
}

template Rational adet_sum(const RationalMatrix&, const Rational&, const Limits&);
template Polynomial adet_sum(const PolynomialMatrix&, const Polynomial&, const Limits&);
template Rational adet_memo(const RationalMatrix&, const Rational&);
template Polynomial adet_memo(const PolynomialMatrix&, const Polynomial&);
template Rational adet(const RationalMatrix&, const Rational&, AdetMethod, const Limits&);
template Polynomial adet(const PolynomialMatrix&, const Polynomial&, AdetMethod, const Limits&);
template std::vector<LaplaceTerm<Rational>> laplace_terms(const RationalMatrix&, int);
template std::vector<LaplaceTerm<Polynomial>> laplace_terms(const PolynomialMatrix&, int);
template Rational adet_laplace(const RationalMatrix&, const Rational&, int);
template Polynomial adet_laplace(const PolynomialMatrix&, const Polynomial&, int);

}  // namespace wreathdet
