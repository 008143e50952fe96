#ifndef LRALG_POLYNOMIAL_HPP
#define LRALG_POLYNOMIAL_HPP

#include <lralg/errors.hpp>
#include <lralg/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lralg {

using Var = std::uint32_t;

/// Monomial stored as the sorted multiset of its variables, so x0^2 x3 is
/// {0, 0, 3}. Graded lexicographic order with variable 0 largest.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Var> vars) : v_(std::move(vars)) { std::sort(v_.begin(), v_.end()); }
  static Monomial var(Var x) { return Monomial(std::vector<Var>{x}); }

  std::size_t degree() const { return v_.size(); }
  bool is_one() const { return v_.empty(); }
  const std::vector<Var>& vars() const { return v_; }

  /// (variable, exponent) pairs in increasing variable order.
  std::vector<std::pair<Var, unsigned>> powers() const {
    std::vector<std::pair<Var, unsigned>> out;
    for (Var x : v_) {
      if (!out.empty() && out.back().first == x)
        ++out.back().second;
      else
        out.push_back({x, 1});
    }
    return out;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.v_.resize(a.v_.size() + b.v_.size());
    std::merge(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(), m.v_.begin());
    return m;
  }

  bool divides(const Monomial& b) const { return std::includes(b.v_.begin(), b.v_.end(), v_.begin(), v_.end()); }

  /// b / a, assuming a divides b.
  friend Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial m;
    std::set_difference(b.v_.begin(), b.v_.end(), a.v_.begin(), a.v_.end(), std::back_inserter(m.v_));
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    std::set_union(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(), std::back_inserter(m.v_));
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    auto i = a.v_.begin(), j = b.v_.begin();
    while (i != a.v_.end() && j != b.v_.end()) {
      if (*i == *j) return false;
      if (*i < *j)
        ++i;
      else
        ++j;
    }
    return true;
  }

  /// -1, 0, 1 under graded lex.
  friend int compare(const Monomial& a, const Monomial& b) {
    if (a.v_.size() != b.v_.size()) return a.v_.size() < b.v_.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.v_.size(); ++i)
      if (a.v_[i] != b.v_[i]) return a.v_[i] < b.v_[i] ? 1 : -1;
    return 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.v_ == b.v_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

 private:
  std::vector<Var> v_;
};

struct Term {
  Rational coeff;
  Monomial mono;
};

using VarNamer = std::function<std::string(Var)>;

inline std::string default_var_name(Var v) { return "x" + std::to_string(v); }

/// Polynomial over Q. Terms are nonzero, distinct, and sorted by decreasing
/// graded lex order of their monomials.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& c) {
    if (!c.is_zero()) t_.push_back({c, Monomial()});
  }
  static Polynomial constant(const Rational& c) { return Polynomial(c); }
  static Polynomial variable(Var x, const Rational& c = Rational(1)) {
    Polynomial p;
    if (!c.is_zero()) p.t_.push_back({c, Monomial::var(x)});
    return p;
  }
  static Polynomial monomial(const Rational& c, Monomial m) {
    Polynomial p;
    if (!c.is_zero()) p.t_.push_back({c, std::move(m)});
    return p;
  }
  /// Arbitrary terms; combines duplicates and sorts.
  static Polynomial from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
    Polynomial p;
    for (auto& t : terms) {
      if (!p.t_.empty() && p.t_.back().mono == t.mono)
        p.t_.back().coeff += t.coeff;
      else {
        if (!p.t_.empty() && p.t_.back().coeff.is_zero()) p.t_.pop_back();
        p.t_.push_back(std::move(t));
      }
    }
    if (!p.t_.empty() && p.t_.back().coeff.is_zero()) p.t_.pop_back();
    return p;
  }

  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].mono.is_one()); }
  /// Nonzero constant: the polynomial generates the unit ideal.
  bool is_unit() const { return t_.size() == 1 && t_[0].mono.is_one(); }
  std::size_t degree() const { return t_.empty() ? 0 : t_.front().mono.degree(); }
  bool is_linear() const { return degree() <= 1; }

  const Term& leading() const { return t_.front(); }
  const Monomial& leading_monomial() const { return t_.front().mono; }
  const Rational& leading_coeff() const { return t_.front().coeff; }

  /// All terms but the leading one.
  Polynomial tail() const {
    Polynomial p;
    if (!t_.empty()) p.t_.assign(t_.begin() + 1, t_.end());
    return p;
  }

  Rational constant_term() const {
    if (!t_.empty() && t_.back().mono.is_one()) return t_.back().coeff;
    return Rational(0);
  }
  Rational coeff_of(const Monomial& m) const {
    for (const auto& t : t_)
      if (t.mono == m) return t.coeff;
    return Rational(0);
  }

  /// Sorted list of variables that occur.
  std::vector<Var> variables() const {
    std::vector<Var> out;
    for (const auto& t : t_) out.insert(out.end(), t.mono.vars().begin(), t.mono.vars().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Polynomial monic() const {
    if (t_.empty() || t_.front().coeff.is_one()) return *this;
    Rational inv = t_.front().coeff.inverse();
    Polynomial p = *this;
    for (auto& t : p.t_) t.coeff *= inv;
    return p;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.t_) t.coeff = -t.coeff;
    return p;
  }

  /// this + c * m * q, by merging sorted term lists.
  Polynomial add_scaled(const Rational& c, const Monomial& m, const Polynomial& q) const {
    if (c.is_zero() || q.is_zero()) return *this;
    Polynomial out;
    out.t_.reserve(t_.size() + q.t_.size());
    auto i = t_.begin();
    auto j = q.t_.begin();
    Monomial mj;
    bool have_mj = false;
    while (i != t_.end() || j != q.t_.end()) {
      if (j == q.t_.end()) {
        out.t_.push_back(*i++);
        continue;
      }
      if (!have_mj) {
        mj = m.is_one() ? j->mono : m * j->mono;
        have_mj = true;
      }
      int cmp = i == t_.end() ? -1 : compare(i->mono, mj);
      if (cmp > 0) {
        out.t_.push_back(*i++);
      } else if (cmp < 0) {
        out.t_.push_back({c * j->coeff, std::move(mj)});
        ++j;
        have_mj = false;
      } else {
        Rational s = i->coeff;
        s.add_product(c, j->coeff);
        if (!s.is_zero()) out.t_.push_back({std::move(s), std::move(mj)});
        ++i;
        ++j;
        have_mj = false;
      }
    }
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.add_scaled(Rational(1), Monomial(), b); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.add_scaled(Rational(-1), Monomial(), b); }
  friend Polynomial operator*(const Rational& c, const Polynomial& a) {
    if (c.is_zero()) return Polynomial();
    Polynomial p = a;
    for (auto& t : p.t_) t.coeff *= c;
    return p;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Term> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& s : a.t_)
      for (const auto& t : b.t_) terms.push_back({s.coeff * t.coeff, s.mono * t.mono});
    return from_terms(std::move(terms));
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (a.t_[i].coeff != b.t_[i].coeff || !(a.t_[i].mono == b.t_[i].mono)) return false;
    return true;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational s;
    for (const auto& t : t_) {
      Rational m = t.coeff;
      for (Var x : t.mono.vars()) {
        if (x >= point.size()) throw IncompleteAssignment("no value for variable " + std::to_string(x));
        m *= point[x];
        if (m.is_zero()) break;
      }
      s += m;
    }
    return s;
  }

  /// Replaces every variable x with images(x); variables mapped to nullopt
  /// stay as they are.
  Polynomial substitute(const std::function<const Polynomial*(Var)>& images) const {
    std::vector<Term> plain;
    Polynomial acc;
    bool touched = false;
    for (const auto& t : t_) {
      bool hit = false;
      for (Var x : t.mono.vars())
        if (images(x)) {
          hit = true;
          break;
        }
      if (!hit) {
        plain.push_back(t);
        continue;
      }
      touched = true;
      Polynomial prod = Polynomial::constant(t.coeff);
      std::vector<Var> kept;
      for (Var x : t.mono.vars()) {
        if (const Polynomial* img = images(x))
          prod = prod * *img;
        else
          kept.push_back(x);
      }
      if (!kept.empty()) prod = prod * Polynomial::monomial(Rational(1), Monomial(std::move(kept)));
      acc += prod;
    }
    if (!touched) return *this;
    return from_terms(std::move(plain)) + acc;
  }

  std::string str(const VarNamer& name = default_var_name) const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : t_) {
      Rational c = t.coeff;
      if (first) {
        if (c.sign() < 0) {
          s += "-";
          c = -c;
        }
      } else {
        s += c.sign() < 0 ? " - " : " + ";
        if (c.sign() < 0) c = -c;
      }
      first = false;
      if (t.mono.is_one()) {
        s += c.str();
        continue;
      }
      if (!c.is_one()) s += c.str() + "*";
      bool firstv = true;
      for (const auto& [x, e] : t.mono.powers()) {
        if (!firstv) s += "*";
        firstv = false;
        s += name(x);
        if (e > 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  std::vector<Term> t_;
};

/// Remainder of p on division by a list of polynomials (full reduction).
inline Polynomial normal_form(Polynomial p, const std::vector<Polynomial>& divisors) {
  std::vector<Term> rest;
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    bool reduced = false;
    for (const auto& g : divisors) {
      if (g.is_zero() || !g.leading_monomial().divides(lt.mono)) continue;
      Rational c = -(lt.coeff / g.leading_coeff());
      p = p.add_scaled(c, quotient(lt.mono, g.leading_monomial()), g);
      reduced = true;
      break;
    }
    if (!reduced) {
      rest.push_back(lt);
      p = p.tail();
    }
  }
  return Polynomial::from_terms(std::move(rest));
}

}  // namespace lralg

#endif  // LRALG_POLYNOMIAL_HPP
