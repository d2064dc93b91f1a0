#pragma once

// Command-line front end. Every check that fails prints a line starting with
// "FAIL "; the exit code is 0 when there are none, 1 otherwise, and 2 for
// usage or input errors.

#include "liealg/liealg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace liealg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class Report {
 public:
  Report(std::ostream& out, bool transpose) : out_(out), transpose_(transpose) {}

  std::ostream& out() { return out_; }
  void line(const std::string& text) { out_ << text << '\n'; }
  void fail(const std::string& text) {
    out_ << "FAIL " << text << '\n';
    ++failures_;
  }
  void check(bool ok, const std::string& what, const std::string& detail = "ok") {
    if (ok)
      line(what + ": " + detail);
    else
      fail(what + ": " + detail);
  }

  template <class T>
  void matrix(const Matrix<T>& m) {
    out_ << format_matrix(transpose_ ? m.transpose() : m);
  }
  void element(const GroupElement& g) {
    if (g.exact)
      matrix(*g.exact);
    else
      matrix(g.numeric);
  }

  int exit_code() const { return failures_ ? kExitFailure : kExitOk; }

 private:
  std::ostream& out_;
  bool transpose_;
  std::size_t failures_ = 0;
};

struct Options {
  bool transpose = false;
  std::string catalog_file;

  std::string file;
  std::vector<std::string> files;
  std::string matrix_file;
  std::string descriptor_file;
  std::string catalog_name;
  std::string params;
  std::string out_file;
  std::vector<std::string> components;
  std::string eps;
  std::size_t j = 1;
  std::uint64_t seed = 1;
  std::size_t count = 5;
  std::size_t samples = 20;
  std::size_t budget = kDefaultSweepBudget;
  bool numeric = false;
  bool json = false;
  bool verbose = false;
};

namespace detail {

inline std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

inline std::string vector_text(const Vector<Rational>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s + "]";
}

inline std::string dims_text(const std::vector<Subspace>& series) {
  std::string s;
  for (const auto& sub : series) s += (s.empty() ? "" : " ") + std::to_string(sub.dim());
  return s;
}

inline std::string algebra_name(const LieAlgebra& l, const std::string& fallback) {
  return l.label() ? *l.label() : fallback;
}

inline LieAlgebra load_algebra(const std::string& path) { return read_algebra(read_file(path)); }

template <class T>
Matrix<T> load_matrix(const Options& o, const std::string& path) {
  Matrix<T> m;
  if constexpr (std::is_same_v<T, double>)
    m = parse_numeric_matrix(read_file(path));
  else
    m = parse_matrix(read_file(path));
  return o.transpose ? m.transpose() : m;
}

inline const std::vector<CatalogEntry>& active_catalog(const Options& o) {
  if (o.catalog_file.empty()) return catalog();
  static std::vector<CatalogEntry> loaded;
  loaded = load_catalog(Json::parse(read_file(o.catalog_file)));
  return loaded;
}

template <class T>
void report_automorphism(Report& rep, const AutomorphismReport<T>& r, const std::string& what) {
  if (r.ok) {
    rep.line(what + ": automorphism");
    return;
  }
  if (!r.brackets_ok) {
    std::string text = what + ": bracket equation violated at (i,j,n)=" +
                       triple((*r.first_violation)[0], (*r.first_violation)[1], (*r.first_violation)[2]) + ", " +
                       std::to_string(r.violation_count) + " violation(s)";
    if constexpr (std::is_same_v<T, double>) {
      std::ostringstream s;
      s << ", worst residual " << r.worst_residual;
      text += s.str();
    }
    rep.fail(text);
  } else {
    std::ostringstream s;
    s << what << ": singular (det " << r.det << ")";
    rep.fail(s.str());
  }
}

/// "NAME" or "NAME@u=1,v=2".
inline std::pair<const CatalogEntry*, Env> component_spec(const std::vector<CatalogEntry>& entries,
                                                          const std::string& text) {
  const auto at = text.find('@');
  const CatalogEntry& e = find_entry(entries, text.substr(0, at));
  Env env = at == std::string::npos ? Env{} : parse_params(text.substr(at + 1));
  e.check_params(env);
  return {&e, env};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subcommands.

inline void cmd_validate(const Options& o, Report& rep) {
  const Json j = Json::parse(read_file(o.file));
  if (!j.is_object() || !j.contains("dim") || !j.contains("brackets"))
    throw Error("structure-constants file needs \"dim\" and \"brackets\"");
  const auto n = j.at("dim").get<std::size_t>();
  std::size_t bad = 0;
  for (const auto& b : j.at("brackets")) {
    const auto i = b.at("i").get<std::size_t>(), jj = b.at("j").get<std::size_t>(), k = b.at("k").get<std::size_t>();
    rational_from_json(b.at("c"));
    if (i < 1 || jj < 1 || k < 1 || i > n || jj > n || k > n) {
      rep.fail("antisymmetry: index out of range in c_{" + std::to_string(i) + "," + std::to_string(jj) + "}^" +
               std::to_string(k));
      ++bad;
    } else if (i >= jj) {
      rep.fail("antisymmetry: c_{" + std::to_string(i) + "," + std::to_string(jj) + "}^" + std::to_string(k) +
               " must be stored with i < j");
      ++bad;
    }
  }
  if (bad) return;
  const LieAlgebra l = algebra_from_json(j, false);
  rep.line("algebra: " + detail::algebra_name(l, o.file) + ", dim " + std::to_string(n) + ", " +
           std::to_string(l.tensor().entries().size()) + " nonzero constants");
  bool antisym = true;
  for (std::size_t a = 0; a < n && antisym; ++a)
    for (std::size_t b = 0; b < n && antisym; ++b)
      for (std::size_t k = 0; k < n && antisym; ++k) antisym = l.c(a, b, k) == -l.c(b, a, k);
  rep.check(antisym, "antisymmetry");
  const auto violations = check_jacobi(l);
  for (const auto& v : violations)
    rep.fail("jacobi: " + detail::triple(v.i, v.j, v.k) + " cyclic sum " + detail::vector_text(v.residual));
  if (violations.empty()) rep.line("jacobi: ok");
}

inline void cmd_invariants(const Options& o, Report& rep) {
  const LieAlgebra l = detail::load_algebra(o.file);
  rep.line("algebra: " + detail::algebra_name(l, o.file) + ", dim " + std::to_string(l.dim()));
  const Subspace z = center(l);
  rep.line("center: dim " + std::to_string(z.dim()));
  rep.out() << format_matrix(z.basis());
  const Subspace d = derived_subalgebra(l);
  rep.line("derived: dim " + std::to_string(d.dim()));
  rep.out() << format_matrix(d.basis());
  rep.line("derived series dims: " + detail::dims_text(derived_series(l)));
  rep.line("lower central series dims: " + detail::dims_text(lower_central_series(l)));
  rep.line("upper central series dims: " + detail::dims_text(upper_central_series(l)));
  rep.line("killing form:");
  rep.matrix(killing_form(l));
}

inline void cmd_decompose(const Options& o, Report& rep) {
  const LieAlgebra l = detail::load_algebra(o.file);
  const Decomposition d = decompose(l, o.seed, o.budget);
  if (o.json) {
    Json j = decomposition_to_json(d);
    if (o.transpose)
      for (auto& c : j["components"]) c["projection"] = matrix_to_json(matrix_from_json(c["projection"]).transpose());
    rep.out() << j.dump(2) << '\n';
  } else {
    rep.line("components: " + std::to_string(d.components.size()));
    for (std::size_t i = 0; i < d.components.size(); ++i) {
      rep.line("component " + std::to_string(i + 1) + ": dim " + std::to_string(d.components[i].dim()) +
               (d.central[i] ? ", central" : "") + " (" + d.transcript[i] + ")");
      rep.line("basis:");
      rep.out() << format_matrix(d.components[i].basis());
      rep.line("projection:");
      rep.matrix(d.projections[i]);
    }
  }
  for (const auto& p : projection_problems(d)) rep.fail("projection identities: " + p);
}

inline void cmd_aut_check(const Options& o, Report& rep) {
  const LieAlgebra l = detail::load_algebra(o.file);
  const std::string what = "automorphism check";
  if (o.numeric) {
    const auto b = detail::load_matrix<double>(o, o.matrix_file);
    const auto r = is_automorphism(l, b);
    std::ostringstream s;
    s << "determinant: " << r.det << ", worst residual: " << r.worst_residual;
    rep.line(s.str());
    detail::report_automorphism(rep, r, what);
    const auto nc = necessary_conditions(l, b);
    rep.line(std::string("necessary trace condition: ") + (nc.trace_ok ? "holds" : "violated"));
    rep.line(std::string("necessary killing condition: ") + (nc.killing_ok ? "holds" : "violated"));
    if (r.ok && !nc.ok) rep.fail("necessary conditions violated by an automorphism");
    return;
  }
  const auto b = detail::load_matrix<Rational>(o, o.matrix_file);
  const auto r = is_automorphism(l, b);
  rep.line("determinant: " + to_string(r.det));
  detail::report_automorphism(rep, r, what);
  const auto nc = necessary_conditions(l, b);
  rep.line(std::string("necessary trace condition: ") +
           (nc.trace_ok ? "holds" : "violated at j=" + std::to_string(*nc.first_trace_failure)));
  rep.line(std::string("necessary killing condition: ") + (nc.killing_ok ? "holds" : "violated"));
  if (r.ok && !nc.ok) rep.fail("necessary conditions violated by an automorphism");
}

inline void cmd_aut_sample(const Options& o, Report& rep) {
  LieAlgebra l;
  AutDescriptor desc;
  if (!o.catalog_name.empty()) {
    if (!o.file.empty()) throw Error("give either --catalog or FILE, not both");
    const CatalogEntry& e = find_entry(detail::active_catalog(o), o.catalog_name);
    const Env env = parse_params(o.params);
    l = e.instantiate(env);
    desc = e.descriptor(env);
  } else {
    if (o.file.empty() || o.descriptor_file.empty()) throw Error("aut-sample needs --catalog NAME or FILE --descriptor DFILE");
    l = detail::load_algebra(o.file);
    desc = descriptor_from_json(Json::parse(read_file(o.descriptor_file)));
  }
  rep.line("algebra: " + detail::algebra_name(l, o.file) + ", dim " + std::to_string(l.dim()));
  for (const auto& note : desc.notes) rep.line("note: " + note);
  std::mt19937_64 rng(o.seed);
  const SampleMode mode = o.numeric ? SampleMode::Numeric : SampleMode::Exact;
  for (std::size_t s = 1; s <= o.count; ++s) {
    const GroupElement g = reconstruct(l, desc, sample_choice(l, desc, rng, mode));
    rep.line("sample " + std::to_string(s) + (g.exact ? " (exact):" : " (numeric):"));
    rep.element(g);
    const std::string what = "sample " + std::to_string(s);
    if (g.exact)
      detail::report_automorphism(rep, is_automorphism(l, *g.exact), what);
    else
      detail::report_automorphism(rep, is_automorphism(l, g.numeric), what);
  }
}

inline void cmd_catalog_list(const Options& o, Report& rep) {
  for (const auto& e : detail::active_catalog(o)) {
    std::string params;
    for (const auto& p : e.params) params += (params.empty() ? "" : ",") + p;
    std::string constraints;
    for (const auto& c : e.constraints) constraints += (constraints.empty() ? "" : "; ") + c.text();
    std::string line = e.display_name() + "\tdim " + std::to_string(e.dim);
    if (!params.empty()) line += "\tparams " + params;
    if (!constraints.empty()) line += "\twhere " + constraints;
    if (!e.note.empty()) line += "\t" + e.note;
    rep.line(line);
  }
}

inline void cmd_catalog_verify(const Options& o, Report& rep) {
  const CatalogReport report = verify_catalog(detail::active_catalog(o), o.samples, o.seed);
  for (const auto& row : report.rows) {
    std::size_t bad = 0;
    for (const auto& l : row.lines) {
      if (!l.ok) {
        rep.fail(l.text);
        ++bad;
      } else if (o.verbose) {
        rep.line("ok " + l.text);
      }
    }
    rep.line("row " + row.name + ": " + (bad ? std::to_string(bad) + " failed of " : "all ") +
             std::to_string(row.lines.size()) + " checks" + (bad ? "" : " passed"));
  }
  rep.line("summary: " + std::to_string(report.rows.size()) + " rows, " + std::to_string(report.checks()) +
           " checks, " + std::to_string(report.failures()) + " failures");
}

inline void cmd_catalog_dump(const Options& o, Report& rep) {
  if (o.catalog_file.empty())
    rep.out() << Json::parse(catalog_json_text()).dump(2) << '\n';
  else
    rep.out() << Json::parse(read_file(o.catalog_file)).dump(2) << '\n';
}

inline void cmd_sum(const Options& o, Report& rep) {
  std::vector<LieAlgebra> parts;
  std::string label;
  for (const auto& f : o.files) {
    parts.push_back(detail::load_algebra(f));
    label += (label.empty() ? "" : " + ") + detail::algebra_name(parts.back(), f);
  }
  const SumStructure s = direct_sum(parts);
  const std::string text = write_algebra(s.total.with_label(label));
  if (o.out_file.empty()) {
    rep.out() << text;
    return;
  }
  write_file(o.out_file, text);
  rep.line("wrote " + o.out_file + ": dim " + std::to_string(s.dim()) + ", " + std::to_string(s.size()) +
           " components");
}

inline void cmd_sum_aut(const Options& o, Report& rep) {
  const LieAlgebra l = detail::load_algebra(o.file);
  const auto& entries = detail::active_catalog(o);
  std::vector<LieAlgebra> parts;
  std::vector<AutDescriptor> descs;
  for (const auto& item : o.components) {
    const auto [entry, env] = detail::component_spec(entries, item);
    parts.push_back(entry->instantiate(env));
    descs.push_back(entry->descriptor(env));
  }
  if (parts.empty()) throw Error("sum-aut needs at least one --components entry");
  const SumStructure sum = direct_sum(parts);
  if (!(sum.total == l)) {
    rep.fail("sum-aut: " + o.file + " is not the direct sum of the given components");
    return;
  }
  const SumAutDescriptor d = sum_descriptor(sum, descs);
  rep.line("components: " + std::to_string(sum.size()) + ", isomorphism classes: " +
           std::to_string(d.classes().size()) + ", zeta space dim: " + std::to_string(d.zeta.basis.size()));

  if (!o.matrix_file.empty()) {
    const auto b = detail::load_matrix<Rational>(o, o.matrix_file);
    detail::report_automorphism(rep, is_automorphism(l, b), "given matrix");
    const auto split = theta_zeta_split(sum, b);
    if (!split) {
      rep.fail("theta-zeta split: no block permutation gives theta + zeta");
      return;
    }
    std::string perm;
    for (auto p : split->perm) perm += (perm.empty() ? "" : " ") + std::to_string(p + 1);
    rep.line("permutation: " + perm);
    rep.line("theta:");
    rep.matrix(split->theta);
    rep.line("zeta:");
    rep.matrix(split->zeta);
    return;
  }

  std::mt19937_64 rng(o.seed);
  const auto perms = class_permutations(d);
  for (std::size_t s = 1; s <= o.count; ++s) {
    std::optional<GroupElement> g;
    std::vector<std::size_t> perm;
    for (int attempt = 0; attempt < 100 && !g; ++attempt) {
      std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
      perm = perms[pick(rng)];
      std::vector<ReconstructionChoice> choices;
      for (std::size_t i = 0; i < sum.size(); ++i) choices.push_back(sample_choice(sum.parts[i], d.parts[i], rng));
      std::vector<Rational> zeta;
      for (std::size_t k = 0; k < d.zeta.basis.size(); ++k) zeta.push_back(liealg::detail::random_entry(rng));
      try {
        g = synthesize(d, choices, perm, zeta);
      } catch (const SingularSynthesis&) {
      }
    }
    const std::string what = "synthesized " + std::to_string(s);
    if (!g) {
      rep.fail(what + ": every draw was singular");
      continue;
    }
    std::string ptext;
    for (auto p : perm) ptext += (ptext.empty() ? "" : " ") + std::to_string(p + 1);
    rep.line(what + " (permutation " + ptext + "):");
    rep.element(*g);
    detail::report_automorphism(rep, is_automorphism(l, *g->exact), what);
  }
}

inline void cmd_inner(const Options& o, Report& rep) {
  const LieAlgebra l = detail::load_algebra(o.file);
  if (o.j < 1 || o.j > l.dim()) throw Error("--j must lie in 1.." + std::to_string(l.dim()));
  const Rational eps = parse_rational(o.eps);
  const GroupElement a = inner_one_param(l, o.j, FlowParam::epsilon(eps));
  rep.line("A_" + std::to_string(o.j) + "(" + to_string(eps) + ")" + (a.exact ? " (exact):" : " (numeric):"));
  rep.element(a);
  const std::string what = "A_" + std::to_string(o.j) + " check";
  if (a.exact)
    detail::report_automorphism(rep, is_automorphism(l, *a.exact), what);
  else
    detail::report_automorphism(rep, is_automorphism(l, a.numeric), what);
}

// ---------------------------------------------------------------------------

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lie algebra structure constants, decompositions and automorphism checks", "liealg"};
  app.require_subcommand(1);
  app.add_flag("--transpose", o.transpose, "Read and write automorphism matrices transposed (column convention)");
  app.add_option("--catalog-file", o.catalog_file, "Use this catalog JSON instead of the built-in one")
      ->check(CLI::ExistingFile);

  auto* validate = app.add_subcommand("validate", "Antisymmetry and Jacobi report for a structure-constants file");
  validate->add_option("FILE", o.file)->required();

  auto* invariants = app.add_subcommand("invariants", "Centre, derived algebra, series and Killing form");
  invariants->add_option("FILE", o.file)->required();

  auto* decomp = app.add_subcommand("decompose", "Decompose into indecomposable ideals");
  decomp->add_option("FILE", o.file)->required();
  decomp->add_option("--seed", o.seed, "Random seed for the candidate sweep");
  decomp->add_option("--budget", o.budget, "Random candidates per level");
  decomp->add_flag("--json", o.json, "Emit JSON");

  auto* aut_check = app.add_subcommand("aut-check", "Check a matrix against the automorphism equations");
  aut_check->add_option("FILE", o.file)->required();
  aut_check->add_option("--matrix", o.matrix_file)->required();
  aut_check->add_flag("--numeric", o.numeric, "Floating-point check with tolerance 1e-9");

  auto* aut_sample = app.add_subcommand("aut-sample", "Reconstruct random automorphisms from a descriptor");
  aut_sample->add_option("FILE", o.file);
  aut_sample->add_option("--descriptor", o.descriptor_file);
  aut_sample->add_option("--catalog", o.catalog_name, "Catalog entry name");
  aut_sample->add_option("--params", o.params, "Parameter values, e.g. u=1/2,v=3");
  aut_sample->add_option("--seed", o.seed);
  aut_sample->add_option("--count", o.count);
  aut_sample->add_flag("--numeric", o.numeric, "Draw every flow parameter and exponentiate numerically");

  auto* catalog_list = app.add_subcommand("catalog-list", "List catalog entries");
  auto* catalog_verify = app.add_subcommand("catalog-verify", "Verify every catalog row over its grid");
  catalog_verify->add_option("--samples", o.samples, "Random samples per grid point and mode");
  catalog_verify->add_option("--seed", o.seed);
  catalog_verify->add_flag("--verbose", o.verbose, "Print passing checks too");
  auto* catalog_dump = app.add_subcommand("catalog-dump", "Print the catalog JSON");

  auto* sum = app.add_subcommand("sum", "Direct sum of structure-constants files");
  sum->add_option("FILES", o.files)->required();
  sum->add_option("--out", o.out_file);

  auto* sum_aut = app.add_subcommand("sum-aut", "Synthesize or split automorphisms of a direct sum");
  sum_aut->add_option("FILE", o.file)->required();
  sum_aut->add_option("--components", o.components, "Catalog components, NAME or NAME@k=v,...")->required();
  sum_aut->add_option("--seed", o.seed);
  sum_aut->add_option("--count", o.count);
  sum_aut->add_option("--matrix", o.matrix_file, "Split this automorphism as theta + zeta instead of sampling");

  auto* inner = app.add_subcommand("inner", "Print A_j(eps) = exp(eps C(j))");
  inner->add_option("FILE", o.file)->required();
  inner->add_option("--j", o.j)->required();
  inner->add_option("--eps", o.eps)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Report rep(out, o.transpose);
  try {
    if (*validate) cmd_validate(o, rep);
    else if (*invariants) cmd_invariants(o, rep);
    else if (*decomp) cmd_decompose(o, rep);
    else if (*aut_check) cmd_aut_check(o, rep);
    else if (*aut_sample) cmd_aut_sample(o, rep);
    else if (*catalog_list) cmd_catalog_list(o, rep);
    else if (*catalog_verify) cmd_catalog_verify(o, rep);
    else if (*catalog_dump) cmd_catalog_dump(o, rep);
    else if (*sum) cmd_sum(o, rep);
    else if (*sum_aut) cmd_sum_aut(o, rep);
    else if (*inner) cmd_inner(o, rep);
  } catch (const JacobiError& e) {
    out << "FAIL jacobi: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return rep.exit_code();
}

}  // namespace liealg::cli
