#ifndef LRALG_IO_HPP
#define LRALG_IO_HPP

#include <lralg/constraints.hpp>
#include <lralg/errors.hpp>
#include <lralg/extensions.hpp>
#include <lralg/lr_algebra.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace lralg {

/// Parsed algebra file. Tensors are raw: Jacobi and the LR axioms are checked
/// only when lie() / lr() are called.
struct AlgebraFile {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::pair<std::string, Rational>> params;
  BilinearTable bracket;
  std::optional<BilinearTable> product;

  LieAlgebra lie() const { return LieAlgebra::from_tensor(bracket); }
  bool has_product() const { return product.has_value(); }
  LRAlgebra lr() const {
    if (!product) throw SpecViolation("algebra file '" + name + "' has no product section");
    return LRAlgebra::create(lie(), *product);
  }
};

/// Extension datum file: Lie algebra b, action phi and cocycle Omega, plus an
/// optional LR-product on b used for split extensions.
struct ExtensionFile {
  std::string name;
  ExtensionData data;
  std::optional<BilinearTable> b_product;
};

namespace detail {

/// Cursor over one line; columns are 1-based for error messages.
class LineLexer {
 public:
  LineLexer(std::string_view text, int line) : s_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, int(pos_) + 1, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const { throw ParseError(line_, int(pos) + 1, what); }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  std::size_t pos() const { return pos_; }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing text");
  }

  std::string word() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && s_[pos_] != ' ' && s_[pos_] != '\t' && s_[pos_] != '\r') ++pos_;
    if (b == pos_) fail("expected a word");
    return std::string(s_.substr(b, pos_ - b));
  }

  std::size_t number() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a number");
    if (pos_ - b > 9) fail_at(b, "number too large");
    return std::stoul(std::string(s_.substr(b, pos_ - b)));
  }

  /// Unsigned rational p or p/q.
  Rational rational() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    std::string_view tok = s_.substr(b, pos_ - b);
    if (tok.empty()) fail("expected a rational");
    try {
      return Rational::parse(tok);
    } catch (const std::invalid_argument& e) {
      fail_at(b, e.what());
    }
  }

  /// Signed rational with optional leading '-' or '+'.
  Rational signed_rational() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Rational r = rational();
    return neg ? -r : r;
  }

  /// TERM (+ TERM)* with TERM := RATIONAL? '*'? PREFIX INDEX, or a bare "0".
  Vector linear_combination(std::size_t n, char prefix) {
    Vector v(n);
    bool first = true;
    while (true) {
      bool neg = false;
      if (accept('-'))
        neg = true;
      else if (!accept('+') && !first)
        break;
      first = false;
      Rational c(1);
      skip_ws();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        c = rational();
        if (peek() != prefix && !accept('*')) {
          if (c.is_zero() && at_end() && v == Vector(n)) return v;
          fail(std::string("expected '*' or '") + prefix + "'");
        }
      }
      if (!accept(prefix)) fail(std::string("expected basis symbol '") + prefix + "'");
      std::size_t ib = pos_;
      std::size_t idx = number();
      if (idx < 1 || idx > n) fail_at(ib, "basis index " + std::to_string(idx) + " out of range 1.." + std::to_string(n));
      v[idx - 1] += neg ? -c : c;
    }
    return v;
  }

  /// "(i,j)" or "[i,j]" with 1-based indices bounded by n; returns 0-based.
  std::pair<std::size_t, std::size_t> index_pair(char open, char close, std::size_t n) {
    expect(open);
    std::size_t p1 = (skip_ws(), pos_);
    std::size_t i = number();
    expect(',');
    std::size_t p2 = (skip_ws(), pos_);
    std::size_t j = number();
    expect(close);
    if (i < 1 || i > n) fail_at(p1, "index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
    if (j < 1 || j > n) fail_at(p2, "index " + std::to_string(j) + " out of range 1.." + std::to_string(n));
    return {i - 1, j - 1};
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

inline std::string strip_comment(const std::string& line) {
  auto h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

/// Accumulates an antisymmetric table from [i,j] entries.
class BracketBuilder {
 public:
  explicit BracketBuilder(std::size_t n) : n_(n), d_(n * n * n), seen_(n * n, false) {}

  void set(LineLexer& lx, std::size_t at, std::size_t i, std::size_t j, const Vector& v) {
    if (i == j) {
      if (!is_zero(v)) lx.fail_at(at, "bracket [" + std::to_string(i + 1) + "," + std::to_string(i + 1) + "] must be zero");
      return;
    }
    for (std::size_t k = 0; k < n_; ++k)
      if (seen_[i * n_ + j] && d_[(i * n_ + j) * n_ + k] != v[k])
        lx.fail_at(at, "bracket [" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           "] conflicts with an earlier entry");
    for (std::size_t k = 0; k < n_; ++k) {
      d_[(i * n_ + j) * n_ + k] = v[k];
      d_[(j * n_ + i) * n_ + k] = -v[k];
    }
    seen_[i * n_ + j] = seen_[j * n_ + i] = true;
  }

  BilinearTable table() const { return BilinearTable(n_, d_); }

 private:
  std::size_t n_;
  std::vector<Rational> d_;
  std::vector<bool> seen_;
};

class ProductBuilder {
 public:
  explicit ProductBuilder(std::size_t n) : n_(n), d_(n * n * n), seen_(n * n, false) {}

  void set(LineLexer& lx, std::size_t at, std::size_t i, std::size_t j, const Vector& v) {
    if (seen_[i * n_ + j])
      lx.fail_at(at, "product (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") given twice");
    seen_[i * n_ + j] = true;
    for (std::size_t k = 0; k < n_; ++k) d_[(i * n_ + j) * n_ + k] = v[k];
  }

  BilinearTable table() const { return BilinearTable(n_, d_); }

 private:
  std::size_t n_;
  std::vector<Rational> d_;
  std::vector<bool> seen_;
};

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) lines.push_back(l);
  return lines;
}

}  // namespace detail

inline AlgebraFile parse_algebra(const std::string& text) {
  AlgebraFile f;
  std::optional<detail::BracketBuilder> brackets;
  std::optional<detail::ProductBuilder> products;
  bool have_name = false;
  auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string body = detail::strip_comment(lines[ln]);
    detail::LineLexer lx(body, int(ln) + 1);
    if (lx.at_end()) continue;
    char c = lx.peek();
    if (c == '[' || c == '(') {
      if (!brackets) lx.fail("'dim' must precede table entries");
      std::size_t at = lx.pos();
      if (c == '[' && products) lx.fail("bracket entry after the 'product' header");
      if (c == '(' && !products) lx.fail("product entry before the 'product' header");
      auto [i, j] = lx.index_pair(c, c == '[' ? ']' : ')', f.dim);
      lx.expect('=');
      Vector v = lx.linear_combination(f.dim, 'e');
      lx.expect_end();
      if (c == '[')
        brackets->set(lx, at, i, j, v);
      else
        products->set(lx, at, i, j, v);
      continue;
    }
    std::size_t at = lx.pos();
    std::string kw = lx.word();
    if (kw == "algebra") {
      if (have_name) lx.fail_at(at, "duplicate 'algebra' header");
      f.name = lx.word();
      have_name = true;
    } else if (kw == "dim") {
      if (brackets) lx.fail_at(at, "duplicate 'dim' header");
      f.dim = lx.number();
      if (f.dim == 0) lx.fail_at(at, "dimension must be positive");
      brackets.emplace(f.dim);
    } else if (kw == "param") {
      std::string pname = lx.word();
      lx.expect('=');
      f.params.push_back({pname, lx.signed_rational()});
    } else if (kw == "product") {
      if (!brackets) lx.fail_at(at, "'dim' must precede the 'product' header");
      if (products) lx.fail_at(at, "duplicate 'product' header");
      products.emplace(f.dim);
    } else {
      lx.fail_at(at, "unknown keyword '" + kw + "'");
    }
    lx.expect_end();
  }
  int last = int(lines.size()) + 1;
  if (!have_name) throw ParseError(last, 1, "missing 'algebra' header");
  if (!brackets) throw ParseError(last, 1, "missing 'dim' header");
  f.bracket = brackets->table();
  if (products) f.product = products->table();
  return f;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AlgebraFile load_algebra(const std::string& path) { return parse_algebra(read_text_file(path)); }

namespace detail {

inline void print_table(std::ostringstream& out, const BilinearTable& t, bool antisymmetric, char prefix = 'e') {
  const std::size_t n = t.dim();
  const std::string open = antisymmetric ? "[" : "(", close = antisymmetric ? "]" : ")";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = antisymmetric ? i + 1 : 0; j < n; ++j) {
      Vector v = t.basis_value(i, j);
      if (is_zero(v)) continue;
      out << open << i + 1 << "," << j + 1 << close << " = " << format_vector(v, std::string(1, prefix)) << "\n";
    }
}

}  // namespace detail

inline std::string print_algebra(const std::string& name, const BilinearTable& bracket,
                                 const std::optional<BilinearTable>& product,
                                 const std::vector<std::pair<std::string, Rational>>& params = {}) {
  std::ostringstream out;
  out << "algebra " << name << "\n";
  out << "dim " << bracket.dim() << "\n";
  for (const auto& [p, v] : params) out << "param " << p << " = " << v.str() << "\n";
  detail::print_table(out, bracket, true);
  if (product) {
    out << "product\n";
    detail::print_table(out, *product, false);
  }
  return out.str();
}

inline std::string print_algebra(const AlgebraFile& f) { return print_algebra(f.name, f.bracket, f.product, f.params); }

inline std::string print_algebra(const std::string& name, const LRAlgebra& a,
                                 const std::vector<std::pair<std::string, Rational>>& params = {}) {
  return print_algebra(name, a.lie().structure(), a.product(), params);
}

inline std::string print_algebra(const std::string& name, const LieAlgebra& g) {
  return print_algebra(name, g.structure(), std::nullopt);
}

/// Extension file:
///   extension NAME
///   a_dim K
///   b_dim M
///   [i,j] = x..        brackets of b
///   phi(i)[r,c] = Q    entries of the action of x_i on a
///   Omega(i,j) = a..   cocycle values; Omega(j,i) follows by antisymmetry
///   product            optional LR-product on b, lines (i,j) = x..
inline ExtensionFile parse_extension(const std::string& text) {
  ExtensionFile f;
  std::size_t a = 0, m = 0;
  bool have_a = false, have_b = false, have_name = false;
  std::optional<detail::BracketBuilder> brackets;
  std::optional<detail::ProductBuilder> products;
  std::vector<Matrix> phi;
  std::vector<Vector> omega;
  std::vector<bool> omega_seen;
  auto lines = detail::split_lines(text);
  auto need_dims = [&](detail::LineLexer& lx) {
    if (!have_a || !have_b) lx.fail("'a_dim' and 'b_dim' must precede data lines");
    if (!brackets) {
      brackets.emplace(m);
      phi.assign(m, Matrix(a, a));
      omega.assign(m * m, Vector(a));
      omega_seen.assign(m * m, false);
    }
  };
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string body = detail::strip_comment(lines[ln]);
    detail::LineLexer lx(body, int(ln) + 1);
    if (lx.at_end()) continue;
    char c = lx.peek();
    std::size_t at = lx.pos();
    if (c == '[' || c == '(') {
      need_dims(lx);
      if (c == '[' && products) lx.fail("bracket entry after the 'product' header");
      if (c == '(' && !products) lx.fail("product entry before the 'product' header");
      auto [i, j] = lx.index_pair(c, c == '[' ? ']' : ')', m);
      lx.expect('=');
      Vector v = lx.linear_combination(m, 'x');
      lx.expect_end();
      if (c == '[')
        brackets->set(lx, at, i, j, v);
      else
        products->set(lx, at, i, j, v);
      continue;
    }
    std::string kw;
    {
      std::size_t p = at;
      while (p < body.size() && std::isalpha(static_cast<unsigned char>(body[p]))) ++p;
      kw = body.substr(at, p - at);
    }
    if (kw == "phi") {
      need_dims(lx);
      for (char ch : std::string("phi")) lx.expect(ch);
      lx.expect('(');
      std::size_t ip = (lx.skip_ws(), lx.pos());
      std::size_t i = lx.number();
      lx.expect(')');
      if (i < 1 || i > m) lx.fail_at(ip, "index " + std::to_string(i) + " out of range 1.." + std::to_string(m));
      auto [r, col] = lx.index_pair('[', ']', a);
      lx.expect('=');
      phi[i - 1](r, col) = lx.signed_rational();
      lx.expect_end();
      continue;
    }
    if (kw == "Omega") {
      need_dims(lx);
      for (char ch : std::string("Omega")) lx.expect(ch);
      auto [i, j] = lx.index_pair('(', ')', m);
      lx.expect('=');
      Vector v = lx.linear_combination(a, 'a');
      lx.expect_end();
      if (i == j) {
        if (!is_zero(v)) lx.fail_at(at, "Omega(i,i) must be zero");
        continue;
      }
      Vector neg(a);
      for (std::size_t k = 0; k < a; ++k) neg[k] = -v[k];
      if (omega_seen[i * m + j] && omega[i * m + j] != v) lx.fail_at(at, "Omega entry conflicts with an earlier one");
      omega[i * m + j] = v;
      omega[j * m + i] = neg;
      omega_seen[i * m + j] = omega_seen[j * m + i] = true;
      continue;
    }
    std::string w = lx.word();
    if (w == "extension") {
      if (have_name) lx.fail_at(at, "duplicate 'extension' header");
      f.name = lx.word();
      have_name = true;
    } else if (w == "a_dim") {
      if (have_a) lx.fail_at(at, "duplicate 'a_dim'");
      a = lx.number();
      have_a = true;
    } else if (w == "b_dim") {
      if (have_b) lx.fail_at(at, "duplicate 'b_dim'");
      m = lx.number();
      if (m == 0) lx.fail_at(at, "b_dim must be positive");
      have_b = true;
    } else if (w == "product") {
      need_dims(lx);
      if (products) lx.fail_at(at, "duplicate 'product' header");
      products.emplace(m);
    } else {
      lx.fail_at(at, "unknown keyword '" + w + "'");
    }
    lx.expect_end();
  }
  int last = int(lines.size()) + 1;
  if (!have_name) throw ParseError(last, 1, "missing 'extension' header");
  if (!have_a || !have_b) throw ParseError(last, 1, "missing 'a_dim' or 'b_dim'");
  if (!brackets) {
    brackets.emplace(m);
    phi.assign(m, Matrix(a, a));
    omega.assign(m * m, Vector(a));
  }
  f.data.a_dim = a;
  f.data.b = LieAlgebra::from_tensor(brackets->table());
  f.data.phi = std::move(phi);
  f.data.omega = std::move(omega);
  if (products) f.b_product = products->table();
  return f;
}

inline ExtensionFile load_extension(const std::string& path) { return parse_extension(read_text_file(path)); }

inline std::string print_extension(const std::string& name, const ExtensionData& d,
                                   const std::optional<BilinearTable>& b_product = std::nullopt) {
  std::ostringstream out;
  const std::size_t m = d.b_dim();
  out << "extension " << name << "\n";
  out << "a_dim " << d.a_dim << "\n";
  out << "b_dim " << m << "\n";
  detail::print_table(out, d.b.structure(), true, 'x');
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 0; r < d.a_dim; ++r)
      for (std::size_t c = 0; c < d.a_dim; ++c)
        if (!d.phi[i](r, c).is_zero())
          out << "phi(" << i + 1 << ")[" << r + 1 << "," << c + 1 << "] = " << d.phi[i](r, c).str() << "\n";
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!is_zero(d.cocycle(i, j)))
        out << "Omega(" << i + 1 << "," << j + 1 << ") = " << format_vector(d.cocycle(i, j), "a") << "\n";
  if (b_product) {
    out << "product\n";
    detail::print_table(out, *b_product, false, 'x');
  }
  return out.str();
}

/// One polynomial as "c * v^e * ... + ...", terms in decreasing graded lex order.
inline std::string format_equation(const Polynomial& p, const VarNamer& name) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    s += abs(c).str();
    for (const auto& [x, e] : t.mono.powers()) {
      s += " * " + name(x);
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

/// Polynomial emission: a header comment, then one "... = 0" line per
/// polynomial, the polynomials sorted by decreasing leading monomial.
inline std::string emit_polynomials(const std::string& header, std::vector<Polynomial> polys, const VarNamer& name) {
  std::sort(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) {
    int c = compare(a.leading_monomial(), b.leading_monomial());
    if (c != 0) return c > 0;
    return a.str() < b.str();
  });
  std::ostringstream out;
  std::istringstream hs(header);
  std::string l;
  while (std::getline(hs, l)) out << "# " << l << "\n";
  for (const auto& p : polys) out << format_equation(p, name) << " = 0\n";
  return out.str();
}

}  // namespace lralg

#endif  // LRALG_IO_HPP
