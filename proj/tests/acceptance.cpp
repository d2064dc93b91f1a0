// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "fixtures.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>

using namespace liealg;
using namespace fixtures;

namespace {

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::string s = std::to_string(checks_) + " checks, " + std::to_string(failed_) + " failed";
    for (const auto& f : failures_) s += "; " + f;
    return s;
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

bool exact_aut(const LieAlgebra& l, const Matrix<Rational>& b) {
  return is_automorphism(l, b).ok && oracle::is_automorphism(constants(l), oracle::to_grid(b));
}

bool exact_non_aut(const LieAlgebra& l, const Matrix<Rational>& b) {
  return !is_automorphism(l, b).ok && !oracle::is_automorphism(constants(l), oracle::to_grid(b));
}

void table_verification(Tally& t) {
  std::size_t rows = 0;
  for (const auto& e : catalog()) {
    if (e.dim > 4) continue;
    ++rows;
    for (const auto& p : e.grid_points()) {
      const auto l = e.instantiate(p);
      const auto d = e.descriptor(p);
      const auto c = constants(l);
      const std::string where = e.name + format_params(p);
      for (const auto& g : d.discrete) t.check(exact_aut(l, g.matrix(l.dim())), where + " discrete " + g.str());
      for (const auto& o : d.outer) {
        const auto m = o.matrix(l.dim());
        t.check(is_derivation(l, m) && oracle::is_derivation(c, oracle::to_grid(m)), where + " outer " + o.str());
        for (double alpha : {1.0, -1.0, 0.5})
          t.check(is_automorphism(l, expm(to_numeric(m) * alpha)).ok, where + " exp outer " + o.str());
      }
      for (std::size_t j = 1; j <= l.dim(); ++j) {
        const auto a = inner_one_param(l, j, FlowParam::epsilon(q(1, 2)));
        t.check(a.is_exact() ? exact_aut(l, *a.exact) : is_automorphism(l, a.numeric).ok,
                where + " A_" + std::to_string(j));
      }
      for (std::uint64_t s = 0; s < 10; ++s) {
        t.check(exact_aut(l, *sample_automorphism(l, d, 31 + s, SampleMode::Exact).exact), where + " exact sample");
        t.check(is_automorphism(l, sample_automorphism(l, d, 71 + s, SampleMode::Numeric).numeric).ok,
                where + " numeric sample");
      }
    }
  }
  t.check(rows == 27, "expected 27 table rows, found " + std::to_string(rows));
  const auto report = verify_catalog(20, 1);
  t.check(report.failures() == 0, "verify_catalog reported " + std::to_string(report.failures()) + " failures");
}

void a48_example(Tally& t) {
  const auto l = a48();
  for (int eps : {1, -1})
    for (const Rational& a : {q(1), q(-2), q(1, 3)})
      for (const Rational& b : {q(0), q(5)}) {
        const Matrix<Rational> b1{{eps * a, 0, 0, 0}, {0, eps, 0, 0}, {0, 0, a, 0}, {b, 0, 0, 1}};
        const Matrix<Rational> b2{{-eps * a, 0, 0, 0}, {0, 0, a, 0}, {0, eps, 0, 0}, {-b, 0, 0, -1}};
        const std::string at = " eps=" + std::to_string(eps) + " a=" + to_string(a) + " b=" + to_string(b);
        t.check(exact_aut(l, b1), "B1~" + at);
        t.check(exact_aut(l, b2), "B2~" + at);
      }
  const auto p12 = sign_mask({1, 2}, 4);
  const auto delta2 = signed_permutation({{-1, 1}, {1, 3}, {1, 2}, {-1, 4}});
  const auto group = group_closure({p12, delta2});
  t.check(group.size() == 8, "group order " + std::to_string(group.size()));
  t.check(oracle::closure_size({oracle::to_grid(p12), oracle::to_grid(delta2)}) == 8, "oracle group order");
  const auto r = p12 * delta2;
  t.check(power(r, 2) != Matrix<Rational>::identity(4) && power(r, 4) == Matrix<Rational>::identity(4),
          "rotation of order 4");
  t.check(p12 * delta2 != delta2 * p12, "non-abelian");
  for (const auto& g : group) t.check(exact_aut(l, g), "group element");
}

void eight_dim_example(Tally& t) {
  const auto sum = direct_sum({a21(), a31(), a31()});
  const auto l = sum.total;
  t.check(l.tensor() == example8().tensor(), "direct_sum brackets");
  t.check(l.c(0, 1, 0) == 1 && l.c(3, 4, 2) == 1 && l.c(6, 7, 5) == 1, "[X1,X2]=X1, [X4,X5]=X3, [X7,X8]=X6");
  t.check(center(l) == span_of(8, {3, 6}), "center");
  t.check(derived_subalgebra(l) == span_of(8, {1, 3, 6}), "derived algebra");
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto d = decompose(l, seed);
    std::vector<std::size_t> dims;
    for (const auto& c : d.components) dims.push_back(c.dim());
    t.check(dims == std::vector<std::size_t>{2, 3, 3}, "decompose seed " + std::to_string(seed));
  }
  const AutDescriptor d21 = find_entry("A_{2,1}").descriptor({}), d31 = find_entry("A_{3,1}").descriptor({});
  const auto desc = sum_descriptor(sum, {d21, d31, d31});
  ExampleParams generic;
  generic.a = 2, generic.b = 3, generic.c = 5, generic.d = 7, generic.f = 2, generic.g = 3;
  generic.i = 4, generic.j = 6, generic.l = 2, generic.m = 5;
  generic.alpha = 1, generic.beta = 2, generic.gamma = 3, generic.delta = 4, generic.epsilon = 5, generic.zeta = 6;
  std::mt19937_64 rng(2024);
  const std::vector<std::pair<std::vector<std::size_t>, Matrix<Rational>>> shapes{
      {{0, 1, 2}, example_family1(generic)}, {{0, 2, 1}, example_family2(generic)}};
  for (const auto& [perm, tmpl] : shapes) {
    const std::string name = perm[1] == 1 ? "first shape" : "second shape";
    Matrix<Rational> seen(8, 8);
    int draws = 0;
    while (draws < 10) {
      std::vector<ReconstructionChoice> choices;
      for (std::size_t i = 0; i < 3; ++i) choices.push_back(sample_choice(sum.parts[i], desc.parts[i], rng, SampleMode::Exact));
      std::vector<Rational> zeta;
      for (std::size_t k = 0; k < desc.zeta.basis.size(); ++k) zeta.push_back(oracle::random_rational(rng));
      Matrix<Rational> b;
      try {
        b = *synthesize(desc, choices, perm, zeta).exact;
      } catch (const SingularSynthesis&) {
        continue;
      }
      ++draws;
      t.check(det(b) != 0, name + " determinant");
      t.check(exact_aut(l, b), name + " AC draw " + std::to_string(draws));
      t.check(zero_where(b, tmpl), name + " zeros draw " + std::to_string(draws));
      for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c)
          if (b(r, c) != 0) seen(r, c) = 1;
    }
    t.check(same_zero_pattern(seen, tmpl), name + " zero pattern over draws");
  }
}

void a517_cases(Tally& t) {
  const auto& e = find_entry("A_{5,17}^{u,v,w}");
  auto env = [](const char* text) { return parse_params(text); };
  auto at = [&](const char* params, const Matrix<Rational>& m) { return exact_aut(e.instantiate(env(params)), m); };
  auto not_at = [&](const char* params, const Matrix<Rational>& m) {
    return exact_non_aut(e.instantiate(env(params)), m);
  };
  std::mt19937_64 rng(17);
  for (const char* p : {"u=2,v=3,w=5", "u=-1/2,v=1/3,w=3/2", "u=1,v=2,w=1", "u=0,v=0,w=-1", "u=1,v=-2,w=1"}) {
    Env values;
    for (const auto& s : e.family_template("B1", env(p)).free_symbols()) values[s] = detail::random_nonzero(rng);
    t.check(at(p, e.family_instance("B1", env(p), values)), std::string("B1 at ") + p);
  }
  auto b2 = [&](const char* p) { return e.generator_matrix("B2", env(p)); };
  t.check(at("u=1,v=-1,w=1", b2("u=1,v=-1,w=1")), "B2 at (1,-1,1)");
  t.check(at("u=2,v=-2,w=-1", b2("u=2,v=-2,w=-1")), "B2 at (2,-2,-1)");
  t.check(not_at("u=1,v=-2,w=1", b2("u=1,v=-2,w=1")), "B2 rejected at (1,-2,1)");
  const Env b3_values = env("a=1,c=1,g=1");
  t.check(at("u=1,v=1,w=1", e.family_instance("B3", env("u=1,v=1,w=1"), b3_values)), "B3 at (1,1,1)");
  t.check(not_at("u=1,v=2,w=1", e.family_instance("B3", env("u=1,v=2,w=1"), b3_values)), "B3 rejected at (1,2,1)");
  const auto p245 = sign_mask({2, 4, 5}, 5);
  t.check(at("u=0,v=0,w=2", p245), "p245 at (0,0,2)");
  t.check(not_at("u=1,v=1,w=2", p245), "p245 rejected at (1,1,2)");
}

void krull_schmidt(Tally& t) {
  const auto l = LieAlgebra::create(4, {{2, 3, 1, 1}}, "A_{3,1}+R");
  const auto m = make_decomposition(l, {span_of(4, {1, 2, 3}), span_of(4, {4})});
  const auto n1 = Subspace::span({e(4, 1), vadd(e(4, 2), e(4, 4)), e(4, 3)}, 4);
  const auto nd = make_decomposition(l, {n1, span_of(4, {4})});
  const auto rep = krull_schmidt_match(l, m, nd);
  t.check(rep.ok, "A_{3,1}+R pairing");
  t.check(!rep.components_identical, "shifted decomposition differs from the original");
  for (const auto& p : rep.pairs)
    t.check(p.pi_onto && p.psi_onto && p.isomorphic && p.derived_equal && p.within_center,
            "pair " + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1));
  t.check(rep.exchange_ok.size() == 1 && rep.exchange_ok[0], "exchange decomposition");
  // The exchange sum M_1 + N_2 spans L, checked by the oracle rank.
  oracle::Grid stacked;
  for (const auto* s : {&m.components[0], &nd.components[rep.pairing[1]]})
    for (const auto& row : oracle::to_grid(s->basis())) stacked.push_back(row);
  t.check(oracle::rank(stacked) == 4, "exchange rank");

  const auto simple = direct_sum({a38(), a39()}).total;
  const auto d1 = decompose(simple, 1), d2 = decompose(simple, 77);
  t.check(d1.components == d2.components, "A_{3,8}+A_{3,9} components identical");
  t.check(d1.components.size() == 2 && d1.components[0] == span_of(6, {1, 2, 3}), "A_{3,8} summand");
  const auto rep2 = krull_schmidt_match(simple, d1, d2);
  t.check(rep2.ok && rep2.uniqueness_applies && rep2.components_identical, "uniqueness when centreless");
}

void property_suites(Tally& t) {
  std::mt19937_64 rng(6);
  std::vector<std::pair<std::string, LieAlgebra>> algebras;
  std::vector<AutDescriptor> descriptors;
  for (const auto& e : catalog())
    for (const auto& p : e.grid_points()) {
      algebras.emplace_back(e.name + format_params(p), e.instantiate(p));
      descriptors.push_back(e.descriptor(p));
    }
  for (const auto& [where, l] : algebras) {
    const auto c = constants(l);
    t.check(oracle::jacobi_holds(c) && check_jacobi(l).empty(), where + " jacobi");
    const std::size_t expected = (l.dim() - oracle::derived_dim(c)) * oracle::center_dim(c);
    t.check(zeta_space(l).basis.size() == expected, where + " zeta dim");
    bool dichotomy = true;
    const auto s = normal_endomorphisms(l);
    for (int k = 0; k < 5; ++k) {
      Matrix<Rational> phi(l.dim(), l.dim());
      for (const auto& b : s.basis) phi += b * oracle::random_rational(rng, 3, 1);
      dichotomy = dichotomy && nilpotent_or_invertible(phi);
    }
    t.check(dichotomy, where + " nilpotent-or-invertible dichotomy");
    const auto d = decompose(l, 3);
    t.check(projection_problems(d).empty(), where + " projections");
  }
  for (int k = 0; k < 1000; ++k) {
    const auto& l = algebras[static_cast<std::size_t>(k) % algebras.size()].second;
    const auto x = oracle::random_vector(rng, l.dim()), y = oracle::random_vector(rng, l.dim());
    auto yx = bracket(l, y, x);
    for (auto& v : yx) v = -v;
    t.check(bracket(l, x, y) == yx && yx == oracle::bracket(constants(l), x, y), "antisymmetry");
  }
  for (const auto& l : {example8(), direct_sum({a38(), a21(), LieAlgebra::abelian(2)}).total}) {
    const auto d = decompose(l, 3);
    t.check(projection_problems(d).empty(), "projections on a sum");
  }
  std::size_t verified = 0;
  for (std::uint64_t seed = 1000; verified < 200; ++seed) {
    const std::size_t i = seed % algebras.size();
    const auto& l = algebras[i].second;
    const auto b = *sample_automorphism(l, descriptors[i], seed, SampleMode::Exact).exact;
    if (!oracle::is_automorphism(constants(l), oracle::to_grid(b))) {
      t.check(false, algebras[i].first + " sample not verified");
      continue;
    }
    ++verified;
    t.check(necessary_conditions(l, b).ok, algebras[i].first + " necessary conditions");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
      {"table verification", table_verification},
      {"A_{4,8} worked example", a48_example},
      {"8-dimensional example", eight_dim_example},
      {"A_{5,17} case table", a517_cases},
      {"Krull-Schmidt properties", krull_schmidt},
      {"property suites", property_suites},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(t);
    } catch (const std::exception& ex) {
      t.check(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && t.ok();
    std::cout << (t.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << t.summary() << ", " << secs << " s)\n";
  }
  return all ? 0 : 1;
}
