#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wreathdet/rational.hpp"

namespace wreathdet {

/// A polynomial indeterminate: a symbol name plus an optional index pair,
/// e.g. the parameter "a" or the matrix entry x[1,2]. Index 0 means "absent".
struct Variable {
  std::string name;
  int row = 0;
  int col = 0;

  auto operator<=>(const Variable&) const = default;
  bool operator==(const Variable&) const = default;

  std::string to_string() const;
};

/// Product of variables with positive exponents, kept sorted by variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const Variable& v, unsigned exponent = 1);
  /// Builds from arbitrary factors; repeated variables are merged.
  static Monomial from_factors(std::vector<std::pair<Variable, unsigned>> factors);

  unsigned degree() const { return degree_; }
  unsigned exponent_of(const Variable& v) const;
  const std::vector<std::pair<Variable, unsigned>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

  std::string to_string() const;

 private:
  std::vector<std::pair<Variable, unsigned>> factors_;
  unsigned degree_ = 0;
};

/// Graded order: total degree first, then lexicographic on the factor list.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// stored in the graded monomial order, which is also the printing order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  Polynomial() = default;
  Polynomial(int constant);  // NOLINT(google-explicit-constructor): ring literal
  Polynomial(const Rational& constant);  // NOLINT
  Polynomial(const Monomial& m, const Rational& coefficient = Rational(1));

  static Polynomial variable(const Variable& v);
  static Polynomial variable(std::string name, int row = 0, int col = 0);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  unsigned degree_in(const Variable& v) const;
  std::vector<Variable> variables() const;

  /// Coefficients c_0..c_d of a polynomial in the single variable v; throws
  /// std::invalid_argument if any other variable occurs.
  std::vector<Rational> univariate_coefficients(const Variable& v) const;
  static Polynomial from_univariate(const Variable& v, const std::vector<Rational>& coefficients);

  Polynomial substitute(const Variable& v, const Rational& value) const;
  Polynomial substitute(const Variable& v, const Polynomial& value) const;
  Rational evaluate(const std::map<Variable, Rational>& values) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// e.g. "1 + 3*a + 2*a^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

Polynomial power(const Polynomial& base, unsigned exponent);

}  // namespace wreathdet
