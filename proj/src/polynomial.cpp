#include "wreathdet/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wreathdet {

std::string Variable::to_string() const {
  if (row == 0 && col == 0) return name;
  if (col == 0) return name + "[" + std::to_string(row) + "]";
  return name + "[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

Monomial::Monomial(const Variable& v, unsigned exponent) {
  if (exponent > 0) {
    factors_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

Monomial Monomial::from_factors(std::vector<std::pair<Variable, unsigned>> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Monomial m;
  for (auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(std::move(v), e);
    }
    m.degree_ += e;
  }
  return m;
}

unsigned Monomial::exponent_of(const Variable& v) const {
  for (const auto& [var, e] : factors_) {
    if (var == v) return e;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    s += v.to_string();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.factors() < b.factors();
}

Polynomial::Polynomial(int constant) : Polynomial(Rational(constant)) {}

Polynomial::Polynomial(const Rational& constant) {
  if (!wreathdet::is_zero(constant)) terms_.emplace(Monomial{}, constant).first->second.canonicalize();
}

Polynomial::Polynomial(const Monomial& m, const Rational& coefficient) {
  if (!wreathdet::is_zero(coefficient)) terms_.emplace(m, coefficient).first->second.canonicalize();
}

Polynomial Polynomial::variable(const Variable& v) { return Polynomial(Monomial(v)); }

Polynomial Polynomial::variable(std::string name, int row, int col) {
  return variable(Variable{std::move(name), row, col});
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const { return coefficient(Monomial{}); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::degree_in(const Variable& v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(v));
  return d;
}

std::vector<Variable> Polynomial::variables() const {
  std::set<Variable> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) vars.insert(v);
  }
  return {vars.begin(), vars.end()};
}

std::vector<Rational> Polynomial::univariate_coefficients(const Variable& v) const {
  std::vector<Rational> out(degree_in(v) + 1, Rational(0));
  for (const auto& [m, c] : terms_) {
    if (m.factors().size() > 1 || (m.factors().size() == 1 && m.factors()[0].first != v)) {
      throw std::invalid_argument("polynomial is not univariate in " + v.to_string());
    }
    out[m.exponent_of(v)] = c;
  }
  return out;
}

Polynomial Polynomial::from_univariate(const Variable& v, const std::vector<Rational>& coefficients) {
  Polynomial p;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    p.add_term(Monomial(v, static_cast<unsigned>(i)), coefficients[i]);
  }
  return p;
}

Polynomial Polynomial::substitute(const Variable& v, const Rational& value) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    std::vector<std::pair<Variable, unsigned>> rest;
    unsigned e = 0;
    for (const auto& f : m.factors()) {
      if (f.first == v) {
        e = f.second;
      } else {
        rest.push_back(f);
      }
    }
    out.add_term(Monomial::from_factors(std::move(rest)), c * power(value, static_cast<int>(e)));
  }
  return out;
}

Polynomial Polynomial::substitute(const Variable& v, const Polynomial& value) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    std::vector<std::pair<Variable, unsigned>> rest;
    unsigned e = 0;
    for (const auto& f : m.factors()) {
      if (f.first == v) {
        e = f.second;
      } else {
        rest.push_back(f);
      }
    }
    out += Polynomial(Monomial::from_factors(std::move(rest)), c) * power(value, e);
  }
  return out;
}

Rational Polynomial::evaluate(const std::map<Variable, Rational>& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw std::invalid_argument("no value for " + v.to_string());
      term *= power(it->second, static_cast<int>(e));
    }
    total += term;
  }
  return total;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (wreathdet::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (wreathdet::is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << wreathdet::to_string(mag);
    } else if (mag == 1) {
      os << m.to_string();
    } else {
      os << wreathdet::to_string(mag) << "*" << m.to_string();
    }
  }
  return os.str();
}

Polynomial power(const Polynomial& base, unsigned exponent) {
  Polynomial result(1);
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

}  // namespace wreathdet
