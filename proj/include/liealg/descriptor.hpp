#pragma once

// Automorphism-group descriptors in the compact table notation, and the
// reconstruction B = (prod A_j(eps_j)) Delta (prod exp(alpha_i D_i)) (block diagonal).
//
// Notation accepted by the parsers:
//   block pattern   "(ab^2,ab,a,b)"  "(1,S_{23},1)"  "(S_{12},aS_{12})"
//   discrete        "p12"  "p_{245}"  "(-X1,X3,X2,-X4)"  "((-X3,-X2,-X1))" (Weyl reflection)
//   outer           "E_1^1+E_3^3"  "2E_1^1+E_2^2+E_3^3"  "[E_1^1+E_2^2]_u"

#include "liealg/automorphisms.hpp"
#include "liealg/expr.hpp"
#include "liealg/io.hpp"

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace liealg {

using MultiIndex = std::vector<std::size_t>;  // 1-based

inline std::string multi_index_text(const MultiIndex& m) {
  std::string s;
  const bool wide = std::any_of(m.begin(), m.end(), [](std::size_t i) { return i > 9; });
  for (std::size_t n = 0; n < m.size(); ++n) {
    if (wide && n) s += ',';
    s += std::to_string(m[n]);
  }
  return s;
}

/// Product of powers of named nonzero scalars; empty means 1.
struct Monomial {
  std::vector<std::pair<std::string, int>> factors;

  bool is_one() const noexcept { return factors.empty(); }
  Rational eval(const Env& values) const {
    Rational r = 1;
    for (const auto& [sym, power] : factors) {
      auto it = values.find(sym);
      if (it == values.end()) throw Error("missing scalar assignment for '" + sym + "'");
      if (it->second == 0) throw Error("scalar '" + sym + "' must be nonzero");
      for (int k = 0; k < power; ++k) r *= it->second;
    }
    return r;
  }
  std::string str() const {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto& [sym, power] : factors) {
      s += sym;
      if (power != 1) s += "^" + std::to_string(power);
    }
    return s;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// A scalar slot (monomial) or a monomial times an SL(n) block named by a contiguous multi-index.
struct BlockEntry {
  Monomial coeff;
  std::optional<MultiIndex> sl;

  std::size_t size() const { return sl ? sl->size() : 1; }
  std::string str() const {
    if (!sl) return coeff.str();
    return (coeff.is_one() ? std::string() : coeff.str()) + "S_{" + multi_index_text(*sl) + "}";
  }
  friend bool operator==(const BlockEntry&, const BlockEntry&) = default;
};

struct BlockPattern {
  std::vector<BlockEntry> entries;

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.size();
    return n;
  }
  std::set<std::string> symbols() const {
    std::set<std::string> out;
    for (const auto& e : entries)
      for (const auto& f : e.coeff.factors) out.insert(f.first);
    return out;
  }
  /// Distinct SL block names in order of first appearance.
  std::vector<MultiIndex> sl_blocks() const {
    std::vector<MultiIndex> out;
    for (const auto& e : entries)
      if (e.sl && std::find(out.begin(), out.end(), *e.sl) == out.end()) out.push_back(*e.sl);
    return out;
  }
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? "," : "") + entries[i].str();
    return s + ")";
  }
  static BlockPattern identity(std::size_t n) {
    BlockPattern p;
    p.entries.resize(n);
    return p;
  }
  friend bool operator==(const BlockPattern&, const BlockPattern&) = default;
};

struct SignMaskGen {
  MultiIndex indices;
  friend bool operator==(const SignMaskGen&, const SignMaskGen&) = default;
};
struct TupleGen {
  std::vector<SignedBasis> images;
  friend bool operator==(const TupleGen&, const TupleGen&) = default;
};
struct MatrixGen {
  std::string name;
  Matrix<Rational> matrix;
  friend bool operator==(const MatrixGen&, const MatrixGen&) = default;
};

struct DiscreteGen {
  std::variant<SignMaskGen, TupleGen, MatrixGen> form;
  bool weyl_reflection = false;

  Matrix<Rational> matrix(std::size_t dim) const {
    if (auto* s = std::get_if<SignMaskGen>(&form)) return sign_mask(s->indices, dim);
    if (auto* t = std::get_if<TupleGen>(&form)) {
      if (t->images.size() != dim) throw Error("tuple generator has the wrong length");
      return signed_permutation(t->images);
    }
    const auto& m = std::get<MatrixGen>(form).matrix;
    if (m.rows() != dim || m.cols() != dim) throw Error("explicit generator has the wrong size");
    return m;
  }

  std::string str() const {
    if (auto* s = std::get_if<SignMaskGen>(&form)) {
      const bool wide = std::any_of(s->indices.begin(), s->indices.end(), [](auto i) { return i > 9; });
      return wide ? "p_{" + multi_index_text(s->indices) + "}" : "p" + multi_index_text(s->indices);
    }
    if (auto* t = std::get_if<TupleGen>(&form)) {
      std::string s = weyl_reflection ? "((" : "(";
      for (std::size_t i = 0; i < t->images.size(); ++i) {
        if (i) s += ",";
        s += (t->images[i].sign < 0 ? "-X" : "X") + std::to_string(t->images[i].index);
      }
      return s + (weyl_reflection ? "))" : ")");
    }
    return std::get<MatrixGen>(form).name;
  }
  friend bool operator==(const DiscreteGen&, const DiscreteGen&) = default;
};

/// Generator of a one-parameter group of outer automorphisms in the Weyl basis.
struct OuterDer {
  std::vector<WeylTerm> terms;
  std::optional<std::string> range_symbol;  // the u of [.]_u; metadata only

  Matrix<Rational> matrix(std::size_t dim) const { return weyl_combo(terms, dim); }

  std::string str() const {
    std::string s;
    for (std::size_t n = 0; n < terms.size(); ++n) {
      const auto& t = terms[n];
      Rational c = t.c;
      if (c < 0) {
        s += "-";
        c = -c;
      } else if (n) {
        s += "+";
      }
      if (c != 1) s += to_string(c);
      const auto idx = [](std::size_t i) { return i > 9 ? "{" + std::to_string(i) + "}" : std::to_string(i); };
      s += "E_" + idx(t.i) + "^" + idx(t.j);
    }
    return range_symbol ? "[" + s + "]_" + *range_symbol : s;
  }
  friend bool operator==(const OuterDer&, const OuterDer&) = default;
};

/// Explicit parameterized matrix family, e.g. the B_1/B_3 shapes of A_{5,17}.
struct MatrixFamily {
  std::string name;
  std::vector<std::vector<Expr>> entries;
  Env bound;  // algebra parameters already fixed (e.g. w)

  std::set<std::string> free_symbols() const {
    std::set<std::string> out;
    for (const auto& row : entries)
      for (const auto& e : row)
        for (const auto& s : e.symbols())
          if (!bound.count(s)) out.insert(s);
    return out;
  }

  Matrix<Rational> instantiate(const Env& values) const {
    Env env = bound;
    for (const auto& [k, v] : values) env[k] = v;
    const std::size_t n = entries.size();
    Matrix<Rational> m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (entries[r].size() != n) throw Error("matrix family '" + name + "' is not square");
      for (std::size_t c = 0; c < n; ++c) m(r, c) = entries[r][c].eval(env);
    }
    return m;
  }
};

/// Generating data for Aut(L): discrete generators, outer one-parameter groups,
/// a block-diagonal pattern (or an explicit matrix family in its place).
struct AutDescriptor {
  std::size_t dim = 0;
  std::vector<DiscreteGen> discrete;
  std::vector<OuterDer> outer;
  BlockPattern block;
  std::optional<MatrixFamily> family;
  std::vector<std::string> notes;
};

// ---------------------------------------------------------------------------
// Parsers.

namespace detail {

class NotationScanner {
 public:
  explicit NotationScanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  /// '-' or the UTF-8 minus sign.
  bool accept_minus() { return accept("-") || accept("\xE2\x88\x92"); }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in '" + std::string(s_) + "'", pos_);
  }
  std::size_t number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }
  /// A single index: one digit, or a braced number ("{12}").
  std::size_t index() {
    skip_ws();
    if (accept("{")) {
      const std::size_t v = number();
      expect("}");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return s_[pos_++] - '0';
    fail("expected an index");
  }
  /// Multi-index: "12", "{123}", "_{12}", or "{1,10}".
  MultiIndex multi_index() {
    accept("_");
    MultiIndex m;
    if (accept("{")) {
      if (peek() == '}') fail("empty multi-index");
      const std::size_t start = pos_;
      std::string body;
      while (pos_ < s_.size() && s_[pos_] != '}') body += s_[pos_++];
      expect("}");
      if (body.find(',') != std::string::npos) {
        std::istringstream in(body);
        std::string part;
        while (std::getline(in, part, ',')) {
          part = std::string(trim(part));
          if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad multi-index '" + body + "'", start);
          m.push_back(std::stoul(part));
        }
      } else {
        for (char c : body) {
          if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad multi-index '" + body + "'", start);
          m.push_back(static_cast<std::size_t>(c - '0'));
        }
      }
      return m;
    }
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      m.push_back(static_cast<std::size_t>(s_[pos_++] - '0'));
    if (m.empty()) fail("expected a multi-index");
    return m;
  }
  std::size_t pos() const noexcept { return pos_; }
  std::string_view rest() const { return s_.substr(pos_); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline Monomial parse_monomial(NotationScanner& in) {
  Monomial m;
  if (in.peek() == '1') {
    in.accept("1");
    return m;
  }
  while (std::islower(static_cast<unsigned char>(in.peek()))) {
    std::string sym(1, in.peek());
    in.accept(sym);
    int power = 1;
    if (in.accept("^")) power = static_cast<int>(in.number());
    if (power < 1) in.fail("exponent must be positive");
    auto it = std::find_if(m.factors.begin(), m.factors.end(), [&](auto& f) { return f.first == sym; });
    if (it != m.factors.end())
      it->second += power;
    else
      m.factors.emplace_back(sym, power);
  }
  return m;
}

inline SignedBasis parse_signed_term(NotationScanner& in) {
  SignedBasis t;
  if (in.accept_minus())
    t.sign = -1;
  else
    in.accept("+");
  if (!in.accept("X")) in.fail("expected a basis symbol X<i>");
  in.accept("_");
  t.index = in.peek() == '{' ? in.index() : in.number();
  return t;
}

}  // namespace detail

inline BlockPattern parse_block_pattern(std::string_view text, std::size_t dim) {
  detail::NotationScanner in(text);
  BlockPattern p;
  in.expect("(");
  do {
    BlockEntry e;
    const std::size_t at = in.pos();
    const char c = in.peek();
    if (c != 'S') e.coeff = detail::parse_monomial(in);
    if (in.accept("S")) {
      e.sl = in.multi_index();
    } else if (e.coeff.is_one() && c != '1') {
      in.fail("expected a monomial or SL block");
    }
    (void)at;
    p.entries.push_back(std::move(e));
  } while (in.accept(","));
  in.expect(")");
  if (!in.done()) in.fail("unexpected trailing input");
  if (p.size() != dim)
    throw ParseError("block pattern '" + std::string(text) + "' has size " + std::to_string(p.size()) +
                         ", expected " + std::to_string(dim),
                     0);
  // SL blocks: contiguous indices; the first occurrence sits on its own rows.
  std::size_t position = 1;
  std::set<MultiIndex> placed;
  for (const auto& e : p.entries) {
    if (e.sl) {
      const auto& m = *e.sl;
      for (std::size_t k = 1; k < m.size(); ++k)
        if (m[k] != m[k - 1] + 1) throw ParseError("SL multi-index must be contiguous", 0);
      if (m.size() < 2) throw ParseError("SL block needs at least two rows", 0);
      if (placed.insert(m).second && m.front() != position)
        throw ParseError("SL block S_{" + multi_index_text(m) + "} first appears at row " +
                             std::to_string(position),
                         0);
    }
    position += e.size();
  }
  return p;
}

inline DiscreteGen parse_discrete(std::string_view text, std::size_t dim) {
  detail::NotationScanner in(text);
  DiscreteGen g;
  if (in.accept("p")) {
    SignMaskGen s;
    s.indices = in.multi_index();
    for (auto i : s.indices)
      if (i < 1 || i > dim) throw ParseError("sign mask index out of range in '" + std::string(text) + "'", 1);
    g.form = std::move(s);
  } else if (in.accept("(")) {
    g.weyl_reflection = in.accept("(");
    TupleGen t;
    do t.images.push_back(detail::parse_signed_term(in));
    while (in.accept(","));
    in.expect(")");
    if (g.weyl_reflection) in.expect(")");
    if (t.images.size() != dim)
      throw ParseError("tuple '" + std::string(text) + "' has " + std::to_string(t.images.size()) +
                           " entries, expected " + std::to_string(dim),
                       0);
    signed_permutation(t.images);  // validates bijectivity
    g.form = std::move(t);
  } else {
    in.fail("expected p<indices> or a tuple");
  }
  if (!in.done()) in.fail("unexpected trailing input");
  return g;
}

inline OuterDer parse_weyl(std::string_view text, std::size_t dim) {
  detail::NotationScanner in(text);
  OuterDer d;
  const bool bracketed = in.accept("[");
  bool first = true;
  for (;;) {
    Rational sign = 1;
    if (in.accept_minus())
      sign = -1;
    else if (!in.accept("+") && !first)
      break;
    first = false;
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
      coeff = Rational(static_cast<long>(in.number()));
      if (in.accept("/")) coeff /= static_cast<long>(in.number());
    }
    in.expect("E_");
    WeylTerm t;
    t.i = in.index();
    in.expect("^");
    t.j = in.index();
    t.c = sign * coeff;
    if (t.i < 1 || t.j < 1 || t.i > dim || t.j > dim)
      throw ParseError("Weyl index out of range in '" + std::string(text) + "'", in.pos());
    d.terms.push_back(t);
    if (in.done()) break;
    const char c = in.peek();
    if (c != '+' && c != '-' && !in.rest().starts_with("\xE2\x88\x92")) break;
  }
  if (bracketed) {
    in.expect("]");
    in.expect("_");
    std::string sym;
    while (std::isalpha(static_cast<unsigned char>(in.peek()))) {
      sym += in.peek();
      in.accept(std::string(1, sym.back()));
    }
    if (sym.empty()) in.fail("expected a range symbol after ]_");
    d.range_symbol = sym;
  }
  if (!in.done()) in.fail("unexpected trailing input");
  return d;
}

// ---------------------------------------------------------------------------
// Reconstruction.

struct ReconstructionChoice {
  std::vector<FlowParam> inner;     // eps_1..eps_R; empty means all zero
  std::vector<std::size_t> word;    // 0-based discrete generator indices, multiplied left to right
  std::vector<FlowParam> outer;     // alpha_i; empty means all zero
  Env scalars;                      // block-pattern symbols -> nonzero rationals
  std::map<MultiIndex, Matrix<Rational>> sl_blocks;
  Env family;                       // values of the matrix family's free symbols
};

/// The block-diagonal matrix selected by `scalars` and `sl_blocks`.
inline Matrix<Rational> block_instance(const BlockPattern& pattern, const Env& scalars,
                                       const std::map<MultiIndex, Matrix<Rational>>& sl_blocks) {
  const std::size_t n = pattern.size();
  Matrix<Rational> m(n, n);
  std::size_t at = 0;
  for (const auto& e : pattern.entries) {
    const Rational coeff = e.coeff.eval(scalars);
    if (!e.sl) {
      m(at, at) = coeff;
      ++at;
      continue;
    }
    auto it = sl_blocks.find(*e.sl);
    Matrix<Rational> s = it == sl_blocks.end() ? Matrix<Rational>::identity(e.sl->size()) : it->second;
    if (s.rows() != e.sl->size() || !s.is_square())
      throw Error("SL block S_{" + multi_index_text(*e.sl) + "} has the wrong size");
    if (det(s) != 1) throw Error("SL block S_{" + multi_index_text(*e.sl) + "} must have determinant 1");
    m.set_block(at, at, coeff * s);
    at += e.size();
  }
  return m;
}

/// B = (prod_j A_j(eps_j)) Delta(word) (prod_i exp(alpha_i D_i)) (block or family instance).
inline GroupElement reconstruct(const LieAlgebra& l, const AutDescriptor& desc, const ReconstructionChoice& choice) {
  const std::size_t n = l.dim();
  if (desc.dim != n) throw Error("descriptor dimension does not match the algebra");
  if (!choice.inner.empty() && choice.inner.size() != n) throw Error("need one inner parameter per basis element");
  if (!choice.outer.empty() && choice.outer.size() != desc.outer.size())
    throw Error("need one parameter per outer derivation");

  GroupElement b = GroupElement::identity(n);
  for (std::size_t j = 0; j < choice.inner.size(); ++j)
    if (!choice.inner[j].is_identity()) b = b * inner_one_param(l, j + 1, choice.inner[j]);

  Matrix<Rational> delta = Matrix<Rational>::identity(n);
  for (auto g : choice.word) {
    if (g >= desc.discrete.size()) throw Error("unknown discrete generator index " + std::to_string(g));
    delta = delta * desc.discrete[g].matrix(n);
  }
  b = b * GroupElement::from_exact(delta);

  for (std::size_t i = 0; i < choice.outer.size(); ++i)
    if (!choice.outer[i].is_identity()) b = b * exp_flow(desc.outer[i].matrix(n), choice.outer[i]);

  if (desc.family) {
    Matrix<Rational> f = desc.family->instantiate(choice.family);
    b = b * GroupElement::from_exact(std::move(f));
  } else {
    b = b * GroupElement::from_exact(block_instance(desc.block, choice.scalars, choice.sl_blocks));
  }
  return b;
}

// ---------------------------------------------------------------------------
// JSON serialization.

inline Json descriptor_to_json(const AutDescriptor& d) {
  Json j;
  j["dim"] = d.dim;
  Json discrete = Json::array();
  for (const auto& g : d.discrete) {
    if (auto* m = std::get_if<MatrixGen>(&g.form)) {
      Json e{{"name", m->name}, {"matrix", matrix_to_json(m->matrix)}};
      if (g.weyl_reflection) e["weyl"] = true;
      discrete.push_back(std::move(e));
    } else {
      discrete.push_back(g.str());
    }
  }
  j["discrete"] = std::move(discrete);
  Json outer = Json::array();
  for (const auto& o : d.outer) {
    Json terms = Json::array();
    for (const auto& t : o.terms) terms.push_back(Json{{"i", t.i}, {"j", t.j}, {"c", to_string(t.c)}});
    Json e{{"terms", std::move(terms)}};
    if (o.range_symbol) e["range"] = *o.range_symbol;
    outer.push_back(std::move(e));
  }
  j["outer"] = std::move(outer);
  j["block"] = d.block.str();
  if (d.family) {
    Json rows = Json::array();
    for (const auto& row : d.family->entries) {
      Json r = Json::array();
      for (const auto& e : row) r.push_back(e.text());
      rows.push_back(std::move(r));
    }
    Json bound = Json::object();
    for (const auto& [k, v] : d.family->bound) bound[k] = to_string(v);
    j["family"] = Json{{"name", d.family->name}, {"matrix", std::move(rows)}, {"params", std::move(bound)}};
  }
  if (!d.notes.empty()) j["notes"] = d.notes;
  return j;
}

inline AutDescriptor descriptor_from_json(const Json& j) {
  AutDescriptor d;
  d.dim = j.at("dim").get<std::size_t>();
  if (j.contains("discrete"))
    for (const auto& g : j.at("discrete")) {
      if (g.is_string()) {
        d.discrete.push_back(parse_discrete(g.get<std::string>(), d.dim));
      } else {
        DiscreteGen gen;
        gen.form = MatrixGen{g.value("name", std::string("matrix")), matrix_from_json(g.at("matrix"))};
        gen.weyl_reflection = g.value("weyl", false);
        gen.matrix(d.dim);
        d.discrete.push_back(std::move(gen));
      }
    }
  if (j.contains("outer"))
    for (const auto& o : j.at("outer")) {
      if (o.is_string()) {
        d.outer.push_back(parse_weyl(o.get<std::string>(), d.dim));
        continue;
      }
      OuterDer der;
      for (const auto& t : o.at("terms"))
        der.terms.push_back({t.at("i").get<std::size_t>(), t.at("j").get<std::size_t>(), rational_from_json(t.at("c"))});
      if (o.contains("range")) der.range_symbol = o.at("range").get<std::string>();
      der.matrix(d.dim);
      d.outer.push_back(std::move(der));
    }
  d.block = j.contains("block") ? parse_block_pattern(j.at("block").get<std::string>(), d.dim)
                                : BlockPattern::identity(d.dim);
  if (j.contains("family")) {
    const Json& f = j.at("family");
    MatrixFamily fam;
    fam.name = f.value("name", std::string("family"));
    for (const auto& row : f.at("matrix")) {
      std::vector<Expr> r;
      for (const auto& e : row) r.push_back(Expr::parse(e.get<std::string>()));
      fam.entries.push_back(std::move(r));
    }
    if (f.contains("params"))
      for (const auto& [k, v] : f.at("params").items()) fam.bound[k] = rational_from_json(v);
    if (fam.entries.size() != d.dim) throw Error("matrix family has the wrong size");
    d.family = std::move(fam);
  }
  if (j.contains("notes")) d.notes = j.at("notes").get<std::vector<std::string>>();
  return d;
}

}  // namespace liealg
