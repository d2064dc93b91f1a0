#pragma once

// Parameterized catalog of indecomposable algebras with their automorphism
// descriptors, and a verifier that checks every row against the determining
// equations.

#include "liealg/catalog_data.hpp"
#include "liealg/decomposition.hpp"
#include "liealg/direct_sum.hpp"
#include "liealg/sampling.hpp"

#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace liealg {

class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

/// "u=1/2, v=-3" -> {u: 1/2, v: -3}.
inline Env parse_params(std::string_view text) {
  Env env;
  std::string_view body = detail::trim(text);
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
  std::string item;
  std::istringstream in{std::string(body)};
  while (std::getline(in, item, ',')) {
    const auto t = detail::trim(item);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected name=value in '" + std::string(t) + "'", 0);
    const std::string key(detail::trim(t.substr(0, eq)));
    if (key.empty()) throw ParseError("empty parameter name in '" + std::string(t) + "'", 0);
    if (env.count(key)) throw ParseError("parameter '" + key + "' given twice", 0);
    env[key] = parse_rational(detail::trim(t.substr(eq + 1)));
  }
  return env;
}

inline std::string format_params(const Env& env) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : env) {
    s += (first ? "" : ",") + k + "=" + to_string(v);
    first = false;
  }
  return s + "}";
}

struct CatalogBracket {
  std::size_t i, j, k;
  Expr c;
};

struct CatalogCase {
  Condition when;
  std::vector<std::string> discrete;
  std::optional<std::string> family;
};

/// A named generator checked at a given parameter point, with the expected verdict.
struct CatalogProbe {
  Env params;
  std::optional<std::string> generator;
  std::optional<std::string> family;
  Env values;  // family symbols not listed here are 0
  bool expect = true;

  std::string what() const {
    return generator ? *generator : *family + format_params(values);
  }
};

using ExprMatrix = std::vector<std::vector<Expr>>;

struct CatalogEntry {
  std::string name;
  std::string note;
  bool modified_basis = false;
  std::size_t dim = 0;
  std::vector<std::string> params;
  std::vector<Condition> constraints;
  std::vector<CatalogBracket> brackets;
  std::vector<std::string> discrete;
  std::vector<std::string> outer;
  std::string block;
  std::map<std::string, ExprMatrix> families;
  std::map<std::string, ExprMatrix> generators;
  std::optional<std::string> family;
  std::vector<CatalogCase> cases;
  std::vector<Env> grid;
  std::vector<CatalogProbe> probes;

  /// Name without the parameter superscript, e.g. "A_{4,5}".
  std::string base_name() const { return name.substr(0, name.find('^')); }
  std::string display_name() const { return modified_basis ? name + "(*)" : name; }

  void check_params(const Env& env) const {
    for (const auto& p : params)
      if (!env.count(p)) throw ConstraintViolation(name + ": missing parameter '" + p + "'");
    for (const auto& [k, v] : env)
      if (std::find(params.begin(), params.end(), k) == params.end())
        throw ConstraintViolation(name + ": unknown parameter '" + k + "'");
    for (const auto& c : constraints)
      if (!c.eval(env)) throw ConstraintViolation(name + ": parameters " + format_params(env) + " violate " + c.text());
  }

  LieAlgebra instantiate(const Env& env) const {
    check_params(env);
    std::vector<BracketEntry> entries;
    for (const auto& b : brackets) entries.push_back({b.i, b.j, b.k, b.c.eval(env)});
    std::string label = name;
    if (!params.empty()) label += " " + format_params(env);
    return LieAlgebra::create(dim, entries, label);
  }

  /// An explicit named generator, or a notation string such as "p245".
  Matrix<Rational> generator_matrix(const std::string& gen, const Env& env) const {
    if (auto it = generators.find(gen); it != generators.end()) return evaluate(it->second, env);
    return parse_discrete(gen, dim).matrix(dim);
  }

  MatrixFamily family_template(const std::string& fam, const Env& env) const {
    auto it = families.find(fam);
    if (it == families.end()) throw Error(name + ": no matrix family '" + fam + "'");
    return MatrixFamily{fam, it->second, env};
  }

  /// Family member with unspecified symbols set to 0.
  Matrix<Rational> family_instance(const std::string& fam, const Env& env, const Env& values) const {
    MatrixFamily f = family_template(fam, env);
    Env full = values;
    for (const auto& s : f.free_symbols()) full.emplace(s, Rational(0));
    return f.instantiate(full);
  }

  AutDescriptor descriptor(const Env& env) const {
    check_params(env);
    AutDescriptor d;
    d.dim = dim;
    std::vector<std::string> disc = discrete;
    std::optional<std::string> fam = family;
    for (const auto& c : cases)
      if (c.when.eval(env)) {
        disc.insert(disc.end(), c.discrete.begin(), c.discrete.end());
        if (c.family) fam = c.family;
        d.notes.push_back("case " + c.when.text());
      }
    for (const auto& g : disc) {
      if (auto it = generators.find(g); it != generators.end()) {
        DiscreteGen gen;
        gen.form = MatrixGen{g, evaluate(it->second, env)};
        d.discrete.push_back(std::move(gen));
      } else {
        d.discrete.push_back(parse_discrete(g, dim));
      }
    }
    for (const auto& o : outer) d.outer.push_back(parse_weyl(o, dim));
    d.block = block.empty() ? BlockPattern::identity(dim) : parse_block_pattern(block, dim);
    if (fam) d.family = family_template(*fam, env);
    return d;
  }

  /// Grid points, or the single empty point for rows without parameters.
  std::vector<Env> grid_points() const { return params.empty() ? std::vector<Env>{Env{}} : grid; }

 private:
  Matrix<Rational> evaluate(const ExprMatrix& m, const Env& env) const {
    Matrix<Rational> out(m.size(), m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (m[r].size() != m.size()) throw Error(name + ": explicit matrix is not square");
      for (std::size_t c = 0; c < m.size(); ++c) out(r, c) = m[r][c].eval(env);
    }
    return out;
  }
};

namespace detail {

inline Env env_from_json(const Json& j) {
  Env env;
  for (const auto& [k, v] : j.items()) env[k] = rational_from_json(v);
  return env;
}

inline ExprMatrix expr_matrix_from_json(const Json& j) {
  ExprMatrix m;
  for (const auto& row : j) {
    std::vector<Expr> r;
    for (const auto& e : row) r.push_back(Expr::parse(e.is_string() ? e.get<std::string>() : e.dump()));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace detail

inline CatalogEntry catalog_entry_from_json(const Json& j) {
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.note = j.value("note", std::string());
  e.modified_basis = j.value("modified_basis", false);
  e.dim = j.at("dim").get<std::size_t>();
  if (j.contains("params")) e.params = j.at("params").get<std::vector<std::string>>();
  if (j.contains("constraints"))
    for (const auto& c : j.at("constraints")) e.constraints.push_back(Condition::parse(c.get<std::string>()));
  for (const auto& b : j.at("brackets"))
    e.brackets.push_back({b.at("i").get<std::size_t>(), b.at("j").get<std::size_t>(), b.at("k").get<std::size_t>(),
                          Expr::parse(b.at("c").get<std::string>())});
  if (j.contains("discrete")) e.discrete = j.at("discrete").get<std::vector<std::string>>();
  if (j.contains("outer")) e.outer = j.at("outer").get<std::vector<std::string>>();
  e.block = j.value("block", std::string());
  if (j.contains("families"))
    for (const auto& [k, v] : j.at("families").items()) e.families[k] = detail::expr_matrix_from_json(v);
  if (j.contains("generators"))
    for (const auto& [k, v] : j.at("generators").items()) e.generators[k] = detail::expr_matrix_from_json(v);
  if (j.contains("family")) e.family = j.at("family").get<std::string>();
  if (j.contains("cases"))
    for (const auto& c : j.at("cases")) {
      CatalogCase cc{Condition::parse(c.at("when").get<std::string>()), {}, {}};
      if (c.contains("discrete")) cc.discrete = c.at("discrete").get<std::vector<std::string>>();
      if (c.contains("family")) cc.family = c.at("family").get<std::string>();
      e.cases.push_back(std::move(cc));
    }
  if (j.contains("grid"))
    for (const auto& g : j.at("grid")) e.grid.push_back(detail::env_from_json(g));
  if (j.contains("probes"))
    for (const auto& p : j.at("probes")) {
      CatalogProbe probe;
      probe.params = detail::env_from_json(p.at("params"));
      if (p.contains("generator")) probe.generator = p.at("generator").get<std::string>();
      if (p.contains("family")) probe.family = p.at("family").get<std::string>();
      if (p.contains("values")) probe.values = detail::env_from_json(p.at("values"));
      probe.expect = p.value("expect", true);
      if (!probe.generator == !probe.family) throw Error(e.name + ": a probe needs exactly one of generator/family");
      e.probes.push_back(std::move(probe));
    }
  if (e.block.empty() && !e.family) throw Error(e.name + ": entry needs a block pattern or a matrix family");
  if (!e.block.empty()) parse_block_pattern(e.block, e.dim);
  return e;
}

inline std::vector<CatalogEntry> load_catalog(const Json& j) {
  std::vector<CatalogEntry> out;
  for (const auto& e : j.at("entries")) out.push_back(catalog_entry_from_json(e));
  return out;
}

inline const std::string& catalog_json_text() {
  static const std::string text(detail::kCatalogJson);
  return text;
}

/// The built-in catalog, parsed once.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = load_catalog(Json::parse(catalog_json_text()));
  return entries;
}

/// Exact name (with or without the "(*)" marker), or a base name such as
/// "A_{5,17}" when exactly one entry has it.
inline const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, std::string_view name) {
  std::string key(detail::trim(name));
  if (key.size() > 3 && key.ends_with("(*)")) key.resize(key.size() - 3);
  for (const auto& e : entries)
    if (e.name == key) return e;
  std::vector<const CatalogEntry*> matches;
  for (const auto& e : entries)
    if (e.base_name() == key) matches.push_back(&e);
  if (matches.size() == 1) return *matches.front();
  if (matches.size() > 1) {
    std::string names;
    for (const auto* m : matches) names += (names.empty() ? "" : ", ") + m->name;
    throw Error("catalog name '" + key + "' is ambiguous: " + names);
  }
  throw Error("no catalog entry named '" + key + "'");
}

inline const CatalogEntry& find_entry(std::string_view name) { return find_entry(catalog(), name); }

// ---------------------------------------------------------------------------
// Verification.

struct CheckLine {
  bool ok = true;
  std::string text;
};

struct RowReport {
  std::string name;
  std::vector<CheckLine> lines;
  bool ok() const {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok; });
  }
};

struct CatalogReport {
  std::vector<RowReport> rows;
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : rows)
      for (const auto& l : r.lines) n += !l.ok;
    return n;
  }
  std::size_t checks() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.lines.size();
    return n;
  }
};

namespace detail {

inline std::string violation_text(const AutomorphismReport<Rational>& r) {
  if (r.ok) return "ok";
  if (!r.brackets_ok && r.first_violation)
    return "violates (i,j,n)=(" + std::to_string(std::get<0>(*r.first_violation)) + "," +
           std::to_string(std::get<1>(*r.first_violation)) + "," + std::to_string(std::get<2>(*r.first_violation)) +
           ")";
  return "singular (det = 0)";
}

inline std::string violation_text(const AutomorphismReport<double>& r) {
  if (r.ok) return "ok";
  std::ostringstream s;
  s << "residual " << r.worst_residual << ", det " << r.det;
  return s.str();
}

inline RowReport verify_entry(const CatalogEntry& e, std::size_t samples, std::uint64_t seed) {
  RowReport row{e.display_name(), {}};
  auto add = [&row](bool ok, const std::string& where, const std::string& what) {
    row.lines.push_back({ok, where + " " + what});
  };
  std::uint64_t stream = seed;
  for (const auto& env : e.grid_points()) {
    const std::string where = e.display_name() + " " + format_params(env);
    LieAlgebra l;
    AutDescriptor d;
    try {
      l = e.instantiate(env);
      d = e.descriptor(env);
    } catch (const std::exception& ex) {
      add(false, where, std::string("instantiate: ") + ex.what());
      continue;
    }
    const std::size_t n = l.dim();
    add(check_jacobi(l).empty(), where, "jacobi");

    std::vector<Matrix<Rational>> discrete;
    for (const auto& g : d.discrete) {
      const Matrix<Rational> m = g.matrix(n);
      const auto r = is_automorphism(l, m);
      add(r.ok, where, "discrete " + g.str() + (g.weyl_reflection ? " (Weyl reflection)" : "") + ": " +
                           violation_text(r));
      discrete.push_back(m);
    }
    if (!discrete.empty()) {
      try {
        const auto group = group_closure(discrete);
        add(true, where, "discrete group order " + std::to_string(group.size()));
      } catch (const GroupTooLarge& ex) {
        add(false, where, std::string("discrete group: ") + ex.what());
      }
    }

    for (const auto& o : d.outer) {
      const Matrix<Rational> m = o.matrix(n);
      add(is_derivation(l, m), where, "outer " + o.str() + " is a derivation");
      if (!o.range_symbol) add(!is_inner_derivation(l, m), where, "outer " + o.str() + " is not inner");
      for (int alpha : {1, -1}) {
        const auto r = is_automorphism(l, expm(to_numeric(m) * static_cast<double>(alpha)));
        add(r.ok, where, "exp(" + std::to_string(alpha) + "*" + o.str() + "): " + violation_text(r));
      }
    }

    for (std::size_t j = 1; j <= n; ++j) {
      const auto a = inner_one_param(l, j, FlowParam::epsilon(1));
      const auto r = a.is_exact() ? is_automorphism(l, to_numeric(*a.exact)) : is_automorphism(l, a.numeric);
      add(r.ok, where, "A_" + std::to_string(j) + "(1): " + violation_text(r));
    }

    for (std::size_t s = 0; s < samples; ++s) {
      const auto exact = sample_automorphism(l, d, ++stream, SampleMode::Exact);
      const auto r = is_automorphism(l, *exact.exact);
      add(r.ok, where, "exact sample " + std::to_string(s + 1) + ": " + violation_text(r));
      const auto numeric = sample_automorphism(l, d, ++stream, SampleMode::Numeric);
      const auto rn = is_automorphism(l, numeric.numeric);
      add(rn.ok, where, "numeric sample " + std::to_string(s + 1) + ": " + violation_text(rn));
    }

    const auto zeta = zeta_space(l);
    const std::size_t expected = (n - derived_subalgebra(l).dim()) * center(l).dim();
    add(zeta.basis.size() == expected, where,
        "zeta space dim " + std::to_string(zeta.basis.size()) + " (expected " + std::to_string(expected) + ")");

    bool dichotomy = true;
    for (const auto& phi : normal_endomorphisms(l).basis) dichotomy = dichotomy && nilpotent_or_invertible(phi);
    add(dichotomy, where, "normal endomorphisms nilpotent or invertible");
  }

  for (const auto& p : e.probes) {
    const std::string where = e.display_name() + " " + format_params(p.params);
    try {
      const LieAlgebra l = e.instantiate(p.params);
      const Matrix<Rational> m =
          p.generator ? e.generator_matrix(*p.generator, p.params) : e.family_instance(*p.family, p.params, p.values);
      const auto r = is_automorphism(l, m);
      add(r.ok == p.expect, where,
          "probe " + p.what() + " expected " + (p.expect ? "automorphism" : "non-automorphism") + ", got " +
              (r.ok ? "automorphism" : "non-automorphism, " + violation_text(r)));
    } catch (const std::exception& ex) {
      add(false, where, std::string("probe ") + p.what() + ": " + ex.what());
    }
  }
  return row;
}

}  // namespace detail

/// Checks every row at every grid point; rows run concurrently, results keep row order.
inline CatalogReport verify_catalog(const std::vector<CatalogEntry>& entries, std::size_t samples_per_row,
                                    std::uint64_t seed, bool parallel = true) {
  CatalogReport report;
  std::vector<std::future<RowReport>> jobs;
  for (std::size_t r = 0; r < entries.size(); ++r) {
    const std::uint64_t row_seed = seed * 1000003ULL + r * 7919ULL;
    jobs.push_back(std::async(parallel ? std::launch::async : std::launch::deferred,
                              [&entries, r, samples_per_row, row_seed] {
                                return detail::verify_entry(entries[r], samples_per_row, row_seed);
                              }));
  }
  for (auto& j : jobs) report.rows.push_back(j.get());
  return report;
}

inline CatalogReport verify_catalog(std::size_t samples_per_row = 20, std::uint64_t seed = 1) {
  return verify_catalog(catalog(), samples_per_row, seed);
}

}  // namespace liealg
