#ifndef LRALG_GROEBNER_HPP
#define LRALG_GROEBNER_HPP

#include <lralg/polynomial.hpp>

#include <chrono>
#include <limits>
#include <set>
#include <string>
#include <vector>

namespace lralg {

struct BuchbergerLimits {
  std::size_t max_basis_size = 20000;  ///< total polynomials ever added
  std::size_t max_degree = 8;          ///< S-pairs with a higher lcm degree are not processed
  double time_budget = 60.0;           ///< seconds
};

enum class CertifyStatus { Inconsistent, SolutionsMayExist, BudgetExhausted };

inline const char* to_string(CertifyStatus s) {
  switch (s) {
    case CertifyStatus::Inconsistent: return "Inconsistent";
    case CertifyStatus::SolutionsMayExist: return "SolutionsMayExist";
    case CertifyStatus::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

/// One polynomial added to the working basis. Inputs have parents (-1, -1)
/// and `input` set; S-polynomial results name the two basis indices.
struct TraceStep {
  std::size_t index = 0;
  long input = -1;
  long parent_a = -1;
  long parent_b = -1;
  Monomial leading;
  std::size_t terms = 0;
};

struct CertifyResult {
  CertifyStatus status = CertifyStatus::BudgetExhausted;
  std::string reason;                ///< why the budget ran out, empty otherwise
  std::vector<TraceStep> trace;      ///< every basis addition, in order
  std::vector<std::size_t> certificate;  ///< basis indices the unit element descends from, ascending
  std::vector<Polynomial> basis;     ///< reduced Groebner basis when the run completed
  std::size_t pairs_processed = 0;
  std::size_t pairs_skipped_degree = 0;
  double seconds = 0;
};

namespace detail {

class Buchberger {
 public:
  explicit Buchberger(BuchbergerLimits lim) : lim_(lim), start_(std::chrono::steady_clock::now()) {}

  CertifyResult run(const std::vector<Polynomial>& input) {
    std::vector<std::pair<Polynomial, std::size_t>> in;
    for (std::size_t k = 0; k < input.size(); ++k)
      if (!input[k].is_zero()) in.push_back({input[k].monic(), k});
    std::sort(in.begin(), in.end(),
              [](const auto& a, const auto& b) { return compare(a.first.leading_monomial(), b.first.leading_monomial()) < 0; });
    for (auto& [p, k] : in) {
      if (out_of_time()) return finish(CertifyStatus::BudgetExhausted, "time budget exhausted");
      Polynomial h = reduce(p);
      if (h.is_zero()) continue;
      if (add(h.monic(), long(k), -1, -1)) return finish_unit();
      if (polys_.size() >= lim_.max_basis_size) return finish(CertifyStatus::BudgetExhausted, "basis size limit reached");
    }
    while (!pairs_.empty()) {
      if (out_of_time()) return finish(CertifyStatus::BudgetExhausted, "time budget exhausted");
      Pair pr = pop_pair();
      if (pr.lcm.degree() > lim_.max_degree) {
        ++skipped_degree_;
        continue;
      }
      ++processed_;
      Polynomial s = spoly(pr.a, pr.b);
      Polynomial h = reduce(s);
      if (timed_out_) return finish(CertifyStatus::BudgetExhausted, "time budget exhausted");
      if (h.is_zero()) continue;
      if (add(h.monic(), -1, long(pr.a), long(pr.b))) return finish_unit();
      if (polys_.size() >= lim_.max_basis_size) return finish(CertifyStatus::BudgetExhausted, "basis size limit reached");
    }
    if (skipped_degree_ > 0)
      return finish(CertifyStatus::BudgetExhausted,
                    std::to_string(skipped_degree_) + " S-pair(s) above the degree limit were not processed");
    return finish(CertifyStatus::SolutionsMayExist, "");
  }

 private:
  struct Pair {
    std::size_t a, b;
    Monomial lcm;
  };

  bool out_of_time() {
    if (timed_out_) return true;
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (s > lim_.time_budget) timed_out_ = true;
    return timed_out_;
  }

  const Polynomial* find_reducer(const Monomial& m) const {
    Var last = std::numeric_limits<Var>::max();
    for (Var x : m.vars()) {
      if (x == last) continue;
      last = x;
      if (x >= by_var_.size()) continue;
      for (std::size_t g : by_var_[x])
        if (active_[g] && polys_[g].leading_monomial().divides(m)) return &polys_[g];
    }
    return nullptr;
  }

  /// Full reduction by the active basis.
  Polynomial reduce(Polynomial p) {
    std::size_t k = 0;
    std::size_t steps = 0;
    while (k < p.size()) {
      if ((++steps & 255) == 0 && out_of_time()) return p;
      const Term& t = p.terms()[k];
      const Polynomial* g = find_reducer(t.mono);
      if (!g) {
        ++k;
        continue;
      }
      Rational c = -(t.coeff / g->leading_coeff());
      p = p.add_scaled(c, quotient(t.mono, g->leading_monomial()), *g);
    }
    return p;
  }

  Polynomial spoly(std::size_t a, std::size_t b) const {
    const Polynomial& f = polys_[a];
    const Polynomial& g = polys_[b];
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial s = Polynomial().add_scaled(Rational(1), quotient(l, f.leading_monomial()), f.tail());
    return s.add_scaled(-Rational(1), quotient(l, g.leading_monomial()), g.tail());
  }

  Pair pop_pair() {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pairs_.size(); ++i)
      if (compare(pairs_[i].lcm, pairs_[best].lcm) < 0) best = i;
    Pair p = std::move(pairs_[best]);
    pairs_[best] = std::move(pairs_.back());
    pairs_.pop_back();
    return p;
  }

  /// Adds h with Gebauer-Moeller pair management; true if h is a unit.
  bool add(Polynomial h, long input, long pa, long pb) {
    const std::size_t hi = polys_.size();
    TraceStep st;
    st.index = hi;
    st.input = input;
    st.parent_a = pa;
    st.parent_b = pb;
    st.leading = h.leading_monomial();
    st.terms = h.size();
    trace_.push_back(st);
    polys_.push_back(std::move(h));
    active_.push_back(true);
    if (polys_[hi].is_unit()) return true;
    const Monomial& lh = polys_[hi].leading_monomial();

    // New pairs (h, g), pruned by the chain criterion among themselves.
    std::vector<Pair> cand;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) cand.push_back({g, hi, lcm(polys_[g].leading_monomial(), lh)});
    std::vector<bool> keep(cand.size(), true);
    std::vector<bool> is_coprime(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) is_coprime[i] = coprime(polys_[cand[i].a].leading_monomial(), lh);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (is_coprime[i]) continue;
      for (std::size_t j = 0; j < cand.size(); ++j) {
        if (i == j || !keep[j]) continue;
        if (cand[j].lcm.divides(cand[i].lcm) && (!(cand[j].lcm == cand[i].lcm) || j < i)) {
          keep[i] = false;
          break;
        }
      }
    }
    // Old pairs made redundant by h.
    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(lcm(polys_[p.a].leading_monomial(), lh) == p.lcm) &&
                  !(lcm(polys_[p.b].leading_monomial(), lh) == p.lcm);
      if (!drop) old.push_back(std::move(p));
    }
    pairs_ = std::move(old);
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (keep[i] && !is_coprime[i]) pairs_.push_back(std::move(cand[i]));

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    Var first = lh.vars().front();
    if (by_var_.size() <= first) by_var_.resize(first + 1);
    by_var_[first].push_back(hi);
    return false;
  }

  CertifyResult finish_unit() {
    CertifyResult r = finish(CertifyStatus::Inconsistent, "");
    std::set<std::size_t> seen;
    std::vector<std::size_t> stack{polys_.size() - 1};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      if (!seen.insert(i).second) continue;
      if (trace_[i].parent_a >= 0) stack.push_back(std::size_t(trace_[i].parent_a));
      if (trace_[i].parent_b >= 0) stack.push_back(std::size_t(trace_[i].parent_b));
    }
    r.certificate.assign(seen.begin(), seen.end());
    r.basis = {Polynomial::constant(Rational(1))};
    return r;
  }

  CertifyResult finish(CertifyStatus s, std::string reason) {
    CertifyResult r;
    r.status = s;
    r.reason = std::move(reason);
    r.trace = trace_;
    r.pairs_processed = processed_;
    r.pairs_skipped_degree = skipped_degree_;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (s == CertifyStatus::SolutionsMayExist) r.basis = reduced_basis();
    return r;
  }

  std::vector<Polynomial> reduced_basis() {
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) g.push_back(polys_[i]);
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(g[j]);
      Polynomial lead = Polynomial::monomial(g[i].leading_coeff(), g[i].leading_monomial());
      out.push_back((lead + normal_form(g[i].tail(), others)).monic());
    }
    std::sort(out.begin(), out.end(),
              [](const Polynomial& a, const Polynomial& b) { return compare(a.leading_monomial(), b.leading_monomial()) < 0; });
    return out;
  }

  BuchbergerLimits lim_;
  std::chrono::steady_clock::time_point start_;
  bool timed_out_ = false;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<std::vector<std::size_t>> by_var_;
  std::vector<Pair> pairs_;
  std::vector<TraceStep> trace_;
  std::size_t processed_ = 0;
  std::size_t skipped_degree_ = 0;
};

}  // namespace detail

/// Buchberger's algorithm under graded lex with hard limits. Inconsistent
/// means 1 was derived in the ideal; SolutionsMayExist means a complete
/// Groebner basis without a unit was reached (never a claim of existence over
/// a particular field); BudgetExhausted means neither was reached.
inline CertifyResult buchberger_certify(const std::vector<Polynomial>& system, BuchbergerLimits limits = {}) {
  for (const auto& p : system)
    if (p.is_unit()) {
      detail::Buchberger b(limits);
      return b.run({p});
    }
  detail::Buchberger b(limits);
  return b.run(system);
}

/// Reduced Groebner basis, or nullopt when the limits were hit.
inline std::optional<std::vector<Polynomial>> groebner_basis(const std::vector<Polynomial>& system,
                                                             BuchbergerLimits limits = {}) {
  CertifyResult r = buchberger_certify(system, limits);
  if (r.status == CertifyStatus::BudgetExhausted) return std::nullopt;
  return r.basis;
}

/// Ideal membership through a reduced Groebner basis.
inline bool ideal_contains(const std::vector<Polynomial>& groebner, const Polynomial& p) {
  return normal_form(p, groebner).is_zero();
}

}  // namespace lralg

#endif  // LRALG_GROEBNER_HPP
