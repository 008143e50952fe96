#ifndef LRALG_CONSTRAINTS_HPP
#define LRALG_CONSTRAINTS_HPP

#include <lralg/groebner.hpp>
#include <lralg/lie_algebra.hpp>
#include <lralg/lr_algebra.hpp>
#include <lralg/polynomial.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lralg {

/// Unknown x^i_{j,k} = L(e_i)_{j,k}, i.e. the e_j-coefficient of e_i . e_k.
/// Indices here are 0-based.
inline Var lr_var(std::size_t n, std::size_t i, std::size_t j, std::size_t k) { return Var((i * n + j) * n + k); }

struct LRVarIndex {
  std::size_t i, j, k;
};
inline LRVarIndex lr_var_index(std::size_t n, Var v) { return {v / (n * n), (v / n) % n, v % n}; }

/// "x[i][j][k]" with 1-based indices.
inline std::string lr_var_name(std::size_t n, Var v) {
  auto [i, j, k] = lr_var_index(n, v);
  return "x[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "][" + std::to_string(k + 1) + "]";
}

struct Equation {
  Polynomial poly;
  std::string tag;
};

/// x = value, where value only involves variables that were not eliminated.
struct Elimination {
  Var var;
  Polynomial value;
  std::string tag;
};

/// Polynomial equations in the n^3 unknowns x^i_{j,k} whose common zeros
/// are exactly the LR-structures on a fixed Lie algebra.
struct ConstraintSystem {
  std::size_t n = 0;
  std::vector<Equation> equations;
  std::vector<Equation> structural;          ///< linear constraints added by structural_reduce
  std::map<Var, std::string> forced_zero;    ///< variable -> tag of the constraint that forced it
  std::vector<Elimination> eliminated;       ///< variables expressed through the others
  bool reduced = false;

  std::size_t num_vars() const { return n * n * n; }
  std::size_t reduced_count() const { return forced_zero.size() + eliminated.size(); }
  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& e : equations) d = std::max(d, e.poly.degree());
    return d;
  }
  std::vector<Polynomial> polynomials() const {
    std::vector<Polynomial> out;
    for (const auto& e : equations) out.push_back(e.poly);
    return out;
  }
  VarNamer namer() const {
    std::size_t m = n;
    return [m](Var v) { return lr_var_name(m, v); };
  }
};

namespace detail {

inline std::string idx(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    s += (first ? "" : ",") + std::to_string(x + 1);
    first = false;
  }
  return s + ")";
}

/// Builds sum of c * x_a * x_b (+ c * x_a, + c) from a flat term list.
struct TermBuilder {
  std::vector<Term> terms;
  void add(const Rational& c, std::initializer_list<Var> vars) {
    if (!c.is_zero()) terms.push_back({c, Monomial(std::vector<Var>(vars))});
  }
  Polynomial done() { return Polynomial::from_terms(std::move(terms)); }
};

}  // namespace detail

/// Compatibility (linear), LR1 as [L_i, L_j] = 0 and LR2 as [R_i, R_j] = 0
/// with R_i = L_i - ad(e_i); all of degree at most 2. Zero polynomials are
/// dropped.
inline ConstraintSystem generate_lr_system(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  ConstraintSystem s;
  s.n = n;
  auto x = [n](std::size_t i, std::size_t j, std::size_t k) { return lr_var(n, i, j, k); };
  auto ad = [&g](std::size_t i, std::size_t r, std::size_t c) -> const Rational& { return g.c(i, c, r); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        detail::TermBuilder b;
        b.add(Rational(1), {x(i, r, j)});
        b.add(Rational(-1), {x(j, r, i)});
        b.add(-g.c(i, j, r), {});
        Polynomial p = b.done();
        if (!p.is_zero()) s.equations.push_back({std::move(p), "compat" + detail::idx({i, j}) + "[" + std::to_string(r + 1) + "]"});
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          detail::TermBuilder b;
          for (std::size_t m = 0; m < n; ++m) {
            b.add(Rational(1), {x(i, r, m), x(j, m, c)});
            b.add(Rational(-1), {x(j, r, m), x(i, m, c)});
          }
          Polynomial p = b.done();
          if (!p.is_zero()) s.equations.push_back({std::move(p), "LR1" + detail::idx({i, j}) + detail::idx({r, c})});
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          // (L_i - A_i)(L_j - A_j) - (L_j - A_j)(L_i - A_i) at (r, c)
          detail::TermBuilder b;
          for (std::size_t m = 0; m < n; ++m) {
            b.add(Rational(1), {x(i, r, m), x(j, m, c)});
            b.add(-ad(j, m, c), {x(i, r, m)});
            b.add(-ad(i, r, m), {x(j, m, c)});
            b.add(ad(i, r, m) * ad(j, m, c), {});
            b.add(Rational(-1), {x(j, r, m), x(i, m, c)});
            b.add(ad(i, m, c), {x(j, r, m)});
            b.add(ad(j, r, m), {x(i, m, c)});
            b.add(-(ad(j, r, m) * ad(i, m, c)), {});
          }
          Polynomial p = b.done();
          if (!p.is_zero()) s.equations.push_back({std::move(p), "LR2" + detail::idx({i, j}) + detail::idx({r, c})});
        }
  return s;
}

// ---------------------------------------------------------------------------
// Assignments
// ---------------------------------------------------------------------------

/// Variable values of a product tensor: x^i_{j,k} = p[i][k][j].
inline std::vector<Rational> assignment_from_product(const BilinearTable& p) {
  const std::size_t n = p.dim();
  std::vector<Rational> a(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) a[lr_var(n, i, j, k)] = p(i, k, j);
  return a;
}

inline BilinearTable product_from_assignment(std::size_t n, const std::vector<Rational>& a) {
  if (a.size() != n * n * n) throw IncompleteAssignment("assignment has " + std::to_string(a.size()) + " values, need " +
                                                        std::to_string(n * n * n));
  std::vector<Rational> d(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d[(i * n + k) * n + j] = a[lr_var(n, i, j, k)];
  return BilinearTable(n, std::move(d));
}

/// Exact evaluation of every equation, added constraint and recorded
/// elimination. Violations are named by the equation tag; indices hold the
/// 1-based position in the respective list.
inline VerificationReport evaluate_candidate(const ConstraintSystem& s, const std::vector<Rational>& assignment) {
  if (assignment.size() != s.num_vars())
    throw IncompleteAssignment("assignment has " + std::to_string(assignment.size()) + " values, need " +
                               std::to_string(s.num_vars()));
  VerificationReport rep;
  for (std::size_t k = 0; k < s.equations.size(); ++k) {
    Rational v = s.equations[k].poly.evaluate(assignment);
    if (!v.is_zero()) rep.add(s.equations[k].tag, {int(k + 1)}, {v});
  }
  for (std::size_t k = 0; k < s.structural.size(); ++k) {
    Rational v = s.structural[k].poly.evaluate(assignment);
    if (!v.is_zero()) rep.add(s.structural[k].tag, {int(k + 1)}, {v});
  }
  for (const auto& [v, tag] : s.forced_zero)
    if (!assignment[v].is_zero()) rep.add("forced-zero " + tag, {int(v + 1)}, {assignment[v]});
  for (const auto& e : s.eliminated) {
    Rational r = assignment[e.var] - e.value.evaluate(assignment);
    if (!r.is_zero()) rep.add("eliminated " + e.tag, {int(e.var + 1)}, {r});
  }
  return rep;
}

/// Substitutes images[v] (when present) for each variable of every equation
/// and returns the nonzero results, deduplicated up to scaling.
inline std::vector<Polynomial> substitute_system(const ConstraintSystem& s,
                                                 const std::vector<std::optional<Polynomial>>& images) {
  auto img = [&](Var v) -> const Polynomial* { return v < images.size() && images[v] ? &*images[v] : nullptr; };
  std::vector<Polynomial> out;
  for (const auto& e : s.equations) {
    Polynomial p = e.poly.substitute(img).monic();
    if (p.is_zero()) continue;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structural reduction
// ---------------------------------------------------------------------------

namespace detail {

using ExprVec = std::vector<Polynomial>;

/// u . v as a vector of linear forms in the unknowns.
inline ExprVec product_expr(std::size_t n, const Vector& u, const Vector& v) {
  std::vector<std::vector<Term>> comps(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (v[c].is_zero()) continue;
      Rational w = u[i] * v[c];
      for (std::size_t r = 0; r < n; ++r) comps[r].push_back({w, Monomial::var(lr_var(n, i, r, c))});
    }
  }
  ExprVec out(n);
  for (std::size_t r = 0; r < n; ++r) out[r] = Polynomial::from_terms(std::move(comps[r]));
  return out;
}

inline ExprVec add(ExprVec a, const ExprVec& b, const Rational& s = Rational(1)) {
  for (std::size_t r = 0; r < a.size(); ++r) a[r] = a[r].add_scaled(s, Monomial(), b[r]);
  return a;
}

inline ExprVec constant_expr(const Vector& v) {
  ExprVec out;
  for (const auto& x : v) out.push_back(Polynomial::constant(x));
  return out;
}

/// [w, e_y] for a symbolic vector w.
inline ExprVec bracket_right(const LieAlgebra& g, const ExprVec& w, std::size_t y) {
  const std::size_t n = g.dim();
  ExprVec out(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (w[r].is_zero()) continue;
    for (const auto& t : g.structure().terms(r, y)) out[t.index] = out[t.index].add_scaled(t.value, Monomial(), w[r]);
  }
  return out;
}

/// [e_x, w]
inline ExprVec bracket_left(const LieAlgebra& g, std::size_t x, const ExprVec& w) {
  ExprVec out = bracket_right(g, w, x);
  for (auto& p : out) p = -p;
  return out;
}

class LinearCollector {
 public:
  explicit LinearCollector(std::vector<Equation>& out) : out_(out) {}

  void zero(const ExprVec& w, const std::string& tag) {
    for (std::size_t r = 0; r < w.size(); ++r)
      if (!w[r].is_zero()) out_.push_back({w[r], tag + "[" + std::to_string(r + 1) + "]"});
  }

  /// w must lie in the subspace with the given annihilator rows.
  void member(const ExprVec& w, const std::vector<Vector>& annihilator, const std::string& tag) {
    for (std::size_t a = 0; a < annihilator.size(); ++a) {
      Polynomial p;
      for (std::size_t r = 0; r < w.size(); ++r)
        if (!annihilator[a][r].is_zero()) p = p.add_scaled(annihilator[a][r], Monomial(), w[r]);
      if (!p.is_zero()) out_.push_back({std::move(p), tag + "{" + std::to_string(a + 1) + "}"});
    }
  }

 private:
  std::vector<Equation>& out_;
};

/// Linear identities valid in every LR-algebra on g, written in the unknowns.
inline std::vector<Equation> structural_constraints(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Equation> out;
  LinearCollector col(out);
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  auto prod = [n](const Vector& u, const Vector& v) { return product_expr(n, u, v); };
  auto bvec = [&g](std::size_t i, std::size_t j) { return g.bracket(i, j); };

  SeriesReport gam = lower_central_series(g);
  SeriesReport zs = upper_central_series(g);
  auto is_trivial = [n](const Subspace& s) { return s.is_zero() || s.dim() == n; };

  // gamma_i and Z_i are two-sided ideals.
  auto ideal = [&](const Subspace& s, const std::string& name) {
    if (is_trivial(s)) return;
    auto ann = s.annihilator();
    auto basis = s.basis_vectors();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < basis.size(); ++b) {
        std::string where = "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
        col.member(prod(e(a), basis[b]), ann, name + "-left-ideal" + where);
        col.member(prod(basis[b], e(a)), ann, name + "-right-ideal" + where);
      }
  };
  for (std::size_t i = 1; i < gam.terms.size(); ++i) ideal(gam.terms[i], "gamma" + std::to_string(i + 1));
  for (std::size_t i = 0; i < zs.terms.size(); ++i) ideal(zs.terms[i], "Z" + std::to_string(i + 1));

  // Z(A) . [A,A] = [A,A] . Z(A) = 0
  {
    auto z = zs.terms.front().basis_vectors();
    auto d = gam.terms.size() > 1 ? gam.terms[1].basis_vectors() : std::vector<Vector>{};
    for (std::size_t a = 0; a < z.size(); ++a)
      for (std::size_t b = 0; b < d.size(); ++b) {
        std::string where = "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
        col.zero(prod(z[a], d[b]), "center-times-derived" + where);
        col.zero(prod(d[b], z[a]), "derived-times-center" + where);
      }
  }

  // gamma_{i+1} . gamma_{j+1} in gamma_{i+j+1}
  auto gamma = [&](std::size_t k) { return gam.terms[std::min(k, gam.terms.size()) - 1]; };
  for (std::size_t i = 1; i < gam.terms.size(); ++i)
    for (std::size_t j = 1; j < gam.terms.size(); ++j) {
      Subspace target = gamma(i + j + 1);
      if (target.dim() == n) continue;
      auto ann = target.annihilator();
      auto bu = gamma(i + 1).basis_vectors(), bv = gamma(j + 1).basis_vectors();
      for (std::size_t a = 0; a < bu.size(); ++a)
        for (std::size_t b = 0; b < bv.size(); ++b)
          col.member(prod(bu[a], bv[b]), ann,
                     "gamma-grading(" + std::to_string(i) + "," + std::to_string(j) + ")(" + std::to_string(a + 1) + "," +
                         std::to_string(b + 1) + ")");
    }

  // Cyclic identities on basis triples.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        ExprVec l = add(add(prod(bvec(i, j), e(k)), prod(bvec(j, k), e(i))), prod(bvec(k, i), e(j)));
        col.zero(l, "cyclic-left" + idx({i, j, k}));
        ExprVec r = add(add(prod(e(i), bvec(j, k)), prod(e(j), bvec(k, i))), prod(e(k), bvec(i, j)));
        col.zero(r, "cyclic-right" + idx({i, j, k}));
      }

  // Operator identities ad([x,y]) = [ad x, L y] + [L x, ad y] and its
  // right-multiplication counterpart, column by column.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t c = 0; c < n; ++c) {
        // ad([e_i,e_j]) e_c - [e_i, e_j . e_c] + e_j . [e_i, e_c] - e_i . [e_j, e_c] + [e_j, e_i . e_c]
        ExprVec w = constant_expr(bracket_vec(g, bvec(i, j), e(c)));
        w = add(w, bracket_left(g, i, prod(e(j), e(c))), Rational(-1));
        w = add(w, prod(e(j), bvec(i, c)));
        w = add(w, prod(e(i), bvec(j, c)), Rational(-1));
        w = add(w, bracket_left(g, j, prod(e(i), e(c))));
        col.zero(w, "operator-left" + idx({i, j, c}));
        // ad([x,y]) + [ad x, R y] + [R x, ad y] with R(y) z = z . y
        ExprVec v = constant_expr(bracket_vec(g, bvec(i, j), e(c)));
        v = add(v, bracket_left(g, i, prod(e(c), e(j))));
        v = add(v, prod(bvec(i, c), e(j)), Rational(-1));
        v = add(v, prod(bvec(j, c), e(i)));
        v = add(v, bracket_left(g, j, prod(e(c), e(i))), Rational(-1));
        col.zero(v, "operator-right" + idx({i, j, c}));
      }

  // L(a) and R(a) are derivations of g.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        ExprVec l = prod(e(a), bvec(x, y));
        l = add(l, bracket_right(g, prod(e(a), e(x)), y), Rational(-1));
        l = add(l, bracket_left(g, x, prod(e(a), e(y))), Rational(-1));
        col.zero(l, "left-derivation" + idx({a, x, y}));
        ExprVec r = prod(bvec(x, y), e(a));
        r = add(r, bracket_right(g, prod(e(x), e(a)), y), Rational(-1));
        r = add(r, bracket_left(g, x, prod(e(y), e(a))), Rational(-1));
        col.zero(r, "right-derivation" + idx({a, x, y}));
      }
  return out;
}

/// Incremental sparse Gaussian elimination on affine equations, keeping every
/// pivot expression fully reduced.
class LinearEliminator {
 public:
  explicit LinearEliminator(std::size_t nvars) : value_(nvars), tag_(nvars), users_(nvars) {}

  const Polynomial* image(Var v) const { return v < value_.size() && value_[v] ? &*value_[v] : nullptr; }

  Polynomial reduce(const Polynomial& p) const {
    return p.substitute([this](Var v) { return image(v); });
  }

  /// Returns false if the equation reduces to a nonzero constant.
  bool add(const Polynomial& eq, const std::string& tag) {
    Polynomial p = reduce(eq);
    if (p.is_zero()) return true;
    if (p.is_unit()) return false;
    // Pivot on the leading variable: v = -(rest) / c
    const Term& lt = p.leading();
    Var v = lt.mono.vars().front();
    Polynomial val = (-(lt.coeff.inverse())) * p.tail();
    auto single = [&](Var x) -> const Polynomial* { return x == v ? &val : nullptr; };
    std::vector<Var> users = std::move(users_[v]);
    users_[v].clear();
    std::sort(users.begin(), users.end());
    users.erase(std::unique(users.begin(), users.end()), users.end());
    for (Var u : users) {
      Polynomial nu = value_[u]->substitute(single);
      if (nu == *value_[u]) continue;
      value_[u] = std::move(nu);
      for (Var w : value_[u]->variables()) users_[w].push_back(u);
    }
    for (Var w : val.variables()) users_[w].push_back(v);
    value_[v] = std::move(val);
    tag_[v] = tag;
    order_.push_back(v);
    return true;
  }

  const std::vector<Var>& pivots() const { return order_; }
  const Polynomial& value(Var v) const { return *value_[v]; }
  const std::string& tag(Var v) const { return tag_[v]; }

 private:
  std::vector<std::optional<Polynomial>> value_;
  std::vector<std::string> tag_;
  std::vector<std::vector<Var>> users_;  ///< pivots whose value may mention a variable
  std::vector<Var> order_;
};

}  // namespace detail

/// Adds the linear constraints that hold in every LR-algebra on g (ideal
/// properties of the lower and upper central series, center annihilating the
/// derived algebra, the gamma grading, the cyclic and operator identities and
/// the derivation property), then eliminates variables by linear
/// substitution and feeds back every equation that becomes linear (including
/// c * x^k = 0, which forces x = 0) until nothing changes.
inline ConstraintSystem structural_reduce(const ConstraintSystem& s, const LieAlgebra& g, bool use_identities = true) {
  if (s.n != g.dim()) throw DimensionMismatch("constraint system and Lie algebra differ in dimension");
  ConstraintSystem out;
  out.n = s.n;
  out.structural = s.structural;
  if (use_identities) {
    std::vector<Equation> added = detail::structural_constraints(g);
    out.structural.insert(out.structural.end(), added.begin(), added.end());
  }

  detail::LinearEliminator elim(s.num_vars());
  bool inconsistent = false;
  std::string bad_tag;
  auto feed = [&](const Polynomial& p, const std::string& tag) {
    if (!elim.add(p, tag) && !inconsistent) {
      inconsistent = true;
      bad_tag = tag;
    }
  };
  for (const auto& e : s.eliminated) feed(Polynomial::variable(e.var) - e.value, e.tag);
  for (const auto& [v, tag] : s.forced_zero) feed(Polynomial::variable(v), tag);
  for (const auto& e : out.structural) feed(e.poly, e.tag);

  std::vector<Equation> pending;
  for (const auto& e : s.equations) {
    if (e.poly.is_linear())
      feed(e.poly, e.tag);
    else
      pending.push_back(e);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Equation> next;
    for (auto& e : pending) {
      Polynomial p = elim.reduce(e.poly);
      if (p.is_zero()) continue;
      if (p.is_linear()) {
        feed(p, e.tag);
        changed = true;
        continue;
      }
      if (p.size() == 1) {
        // c * m = 0 forces every variable of m to vanish when m is a pure power
        const auto& vars = p.leading_monomial().vars();
        if (vars.front() == vars.back()) {
          feed(Polynomial::variable(vars.front()), e.tag + "/power");
          changed = true;
          continue;
        }
      }
      next.push_back({p.monic(), e.tag});
    }
    pending = std::move(next);
  }

  out.reduced = true;
  if (inconsistent) out.equations.push_back({Polynomial::constant(Rational(1)), "linear-contradiction " + bad_tag});
  for (Var v : elim.pivots()) {
    const Polynomial& val = elim.value(v);
    if (val.is_zero())
      out.forced_zero[v] = elim.tag(v);
    else
      out.eliminated.push_back({v, val, elim.tag(v)});
  }
  for (auto& e : pending) {
    Polynomial p = elim.reduce(e.poly).monic();
    if (p.is_zero()) continue;
    bool dup = false;
    for (const auto& q : out.equations)
      if (q.poly == p) {
        dup = true;
        break;
      }
    if (!dup) out.equations.push_back({std::move(p), e.tag});
  }
  return out;
}

}  // namespace lralg

#endif  // LRALG_CONSTRAINTS_HPP
