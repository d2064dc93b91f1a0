// Randomized property tests. Every seed is fixed, so failures reproduce.
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace liealg;
using namespace fixtures;

namespace {

struct Point {
  std::string where;
  LieAlgebra algebra;
  AutDescriptor descriptor;
};

/// Every catalog row at every grid point.
const std::vector<Point>& all_points() {
  static const std::vector<Point> points = [] {
    std::vector<Point> out;
    for (const auto& e : catalog())
      for (const auto& p : e.grid_points())
        out.push_back({e.name + " " + format_params(p), e.instantiate(p), e.descriptor(p)});
    return out;
  }();
  return points;
}

double max_diff(const Matrix<double>& a, const std::vector<std::vector<long double>>& b) {
  double m = 0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m = std::max(m, static_cast<double>(std::fabs(a(r, c) - b[r][c])));
  return m;
}

Matrix<double> numeric(const GroupElement& g) { return g.is_exact() ? to_numeric(*g.exact) : g.numeric; }

}  // namespace

TEST(Properties, JacobiSurvivesChangeOfBasis) {
  std::mt19937_64 rng(1);
  for (const auto& p : all_points()) {
    const auto c = constants(p.algebra);
    const auto moved = oracle::change_basis(c, oracle::random_invertible(rng, p.algebra.dim()));
    EXPECT_TRUE(oracle::jacobi_holds(moved)) << p.where;
    EXPECT_TRUE(check_jacobi(oracle::to_algebra(moved)).empty()) << p.where;
  }
}

TEST(Properties, JacobiCheckerAgreesWithOracleOnRandomTensors) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> coin(0, 3), idx(1, 4), val(-2, 2);
  int valid = 0, invalid = 0;
  for (int t = 0; t < 300; ++t) {
    std::vector<BracketEntry> entries;
    const int terms = 1 + coin(rng);
    for (int k = 0; k < terms; ++k) {
      std::size_t i = idx(rng), j = idx(rng);
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      entries.push_back({i, j, static_cast<std::size_t>(idx(rng)), Rational(val(rng))});
    }
    const auto l = LieAlgebra::unchecked(4, entries);
    const bool expect = oracle::jacobi_holds(constants(l));
    EXPECT_EQ(check_jacobi(l).empty(), expect);
    (expect ? valid : invalid)++;
  }
  EXPECT_GT(valid, 10);
  EXPECT_GT(invalid, 10);
}

TEST(Properties, BracketIsAntisymmetricAndMatchesOracle) {
  std::mt19937_64 rng(3);
  const auto& pts = all_points();
  for (int t = 0; t < 1000; ++t) {
    const auto& p = pts[static_cast<std::size_t>(t) % pts.size()];
    const auto c = constants(p.algebra);
    const auto x = oracle::random_vector(rng, p.algebra.dim()), y = oracle::random_vector(rng, p.algebra.dim());
    const auto xy = bracket(p.algebra, x, y);
    auto yx = bracket(p.algebra, y, x);
    for (auto& v : yx) v = -v;
    ASSERT_EQ(xy, yx) << p.where;
    ASSERT_EQ(xy, oracle::bracket(c, x, y)) << p.where;
  }
}

TEST(Properties, DecompositionProjectionIdentities) {
  // Checked with oracle matrix products rather than projection_problems().
  std::vector<LieAlgebra> algebras;
  for (const auto& p : all_points()) algebras.push_back(p.algebra);
  algebras.push_back(example8());
  algebras.push_back(direct_sum({a38(), a21(), LieAlgebra::abelian(2)}).total);
  for (const auto& l : algebras) {
    const auto d = decompose(l, 5);
    const std::size_t n = l.dim();
    oracle::Grid sum(n, oracle::Vec(n));
    for (std::size_t i = 0; i < d.projections.size(); ++i) {
      const auto pi = oracle::to_grid(d.projections[i]);
      EXPECT_EQ(oracle::multiply(pi, pi), pi);
      for (std::size_t j = 0; j < d.projections.size(); ++j)
        if (i != j) { EXPECT_EQ(oracle::multiply(pi, oracle::to_grid(d.projections[j])), oracle::Grid(n, oracle::Vec(n))); }
      EXPECT_EQ(oracle::rank(pi), d.components[i].dim());
      EXPECT_TRUE(is_ideal(l, d.components[i]));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) sum[a][b] += pi[a][b];
    }
    EXPECT_EQ(sum, oracle::identity(n)) << l.label().value_or("");
  }
}

TEST(Properties, SampledAutomorphismsSatisfyNecessaryConditions) {
  std::size_t verified = 0;
  std::uint64_t seed = 100;
  while (verified < 200) {
    for (const auto& p : all_points()) {
      const auto b = *sample_automorphism(p.algebra, p.descriptor, ++seed, SampleMode::Exact).exact;
      const auto c = constants(p.algebra);
      ASSERT_TRUE(oracle::is_automorphism(c, oracle::to_grid(b))) << p.where;
      const auto rep = necessary_conditions(p.algebra, b);
      EXPECT_TRUE(rep.ok) << p.where;
      // Killing form preservation through the oracle as well.
      const auto k = oracle::killing(c);
      const auto g = oracle::to_grid(b);
      oracle::Grid gt(g.size(), oracle::Vec(g.size()));
      for (std::size_t r = 0; r < g.size(); ++r)
        for (std::size_t s = 0; s < g.size(); ++s) gt[s][r] = g[r][s];
      EXPECT_EQ(oracle::multiply(oracle::multiply(g, k), gt), k) << p.where;
      if (++verified == 200) break;
    }
  }
}

TEST(Properties, NumericSamplesAreAutomorphismsWithinTolerance) {
  std::uint64_t seed = 500;
  for (const auto& p : all_points()) {
    const auto g = sample_automorphism(p.algebra, p.descriptor, ++seed, SampleMode::Numeric);
    const auto r = is_automorphism(p.algebra, g.numeric);
    EXPECT_TRUE(r.ok) << p.where << " residual " << r.worst_residual;
    EXPECT_TRUE(necessary_conditions(p.algebra, g.numeric).ok) << p.where;
  }
}

TEST(Properties, ExactAndNumericExponentialsAgree) {
  for (const auto& p : all_points()) {
    for (const auto& d : derivation_algebra(p.algebra)) {
      const auto dn = to_numeric(d);
      const auto reference = oracle::expm(oracle::to_long_double(dn));
      EXPECT_LT(max_diff(expm(dn), reference), 1e-10) << p.where;
      if (nilpotency_index(d)) { EXPECT_LT(max_diff(to_numeric(expm_exact(d)), reference), 1e-10) << p.where; }
    }
  }
}

TEST(Properties, InnerFlowsAreAdditive) {
  for (const auto& l : {a38(), a48(), example8(), find_entry("A_{4,6}^{u,v}").instantiate(parse_params("u=2,v=1"))}) {
    for (std::size_t j = 1; j <= l.dim(); ++j) {
      const auto a = numeric(inner_one_param(l, j, FlowParam::epsilon(q(1, 3))));
      const auto b = numeric(inner_one_param(l, j, FlowParam::epsilon(q(1, 2))));
      const auto ab = numeric(inner_one_param(l, j, FlowParam::epsilon(q(5, 6))));
      EXPECT_LT(max_abs(a * b - ab), 1e-10);
      const auto inv = numeric(inner_one_param(l, j, FlowParam::epsilon(q(-1, 3))));
      EXPECT_LT(max_abs(a * inv - Matrix<double>::identity(l.dim())), 1e-10);
      EXPECT_TRUE(is_automorphism(l, a).ok);
    }
  }
}

TEST(Properties, ScaleAndEpsilonFlowsAgree) {
  const auto l = find_entry("A_{4,10}").instantiate({});
  const auto d = parse_weyl("2E_1^1+E_2^2+E_3^3", 4).matrix(4);
  for (const auto& t : {q(2), q(1, 3), q(5, 2)}) {
    const auto g = exp_flow(d, FlowParam::scale(t));
    ASSERT_TRUE(g.is_exact());
    EXPECT_TRUE(is_automorphism(l, *g.exact).ok);
    const auto n = expm(to_numeric(d) * std::log(to_double(t)));
    EXPECT_LT(max_abs(to_numeric(*g.exact) - n), 1e-10);
  }
  EXPECT_THROW(FlowParam::scale(q(-5, 2)), Error);
  EXPECT_THROW(FlowParam::scale(q(0)), Error);
}

TEST(Properties, AutomorphismsCloseUnderProductAndInverse) {
  std::uint64_t seed = 900;
  for (const auto& p : all_points()) {
    const auto c = constants(p.algebra);
    const auto x = *sample_automorphism(p.algebra, p.descriptor, ++seed, SampleMode::Exact).exact;
    const auto y = *sample_automorphism(p.algebra, p.descriptor, ++seed, SampleMode::Exact).exact;
    EXPECT_TRUE(oracle::is_automorphism(c, oracle::to_grid(x * y))) << p.where;
    const auto xi = inverse(x);
    ASSERT_TRUE(xi.has_value());
    EXPECT_EQ(oracle::to_grid(*xi), oracle::inverse(oracle::to_grid(x)));
    EXPECT_TRUE(oracle::is_automorphism(c, oracle::to_grid(*xi))) << p.where;
  }
}

TEST(Properties, SignMaskAndWeylGeneratorsAreInvolutions) {
  for (const auto& p : all_points())
    for (const auto& g : p.descriptor.discrete) {
      const auto m = g.matrix(p.algebra.dim());
      if (std::holds_alternative<SignMaskGen>(g.form) || g.weyl_reflection) {
        EXPECT_EQ(m * m, Matrix<Rational>::identity(m.rows())) << p.where << " " << g.str();
      }
    }
}

TEST(Properties, DerivationExponentialsAreAutomorphisms) {
  for (const auto& p : all_points()) {
    const auto c = constants(p.algebra);
    for (const auto& d : derivation_algebra(p.algebra)) {
      ASSERT_TRUE(oracle::is_derivation(c, oracle::to_grid(d))) << p.where;
      for (double alpha : {1.0, -1.0, 0.5, -0.5}) {
        const auto r = is_automorphism(p.algebra, expm(to_numeric(d) * alpha));
        EXPECT_TRUE(r.ok) << p.where << " alpha " << alpha << " residual " << r.worst_residual;
      }
    }
  }
}

TEST(Properties, OuterDerivationsAreNotInner) {
  for (const auto& p : all_points())
    for (const auto& o : p.descriptor.outer)
      if (!o.range_symbol) { EXPECT_FALSE(is_inner_derivation(p.algebra, o.matrix(p.algebra.dim()))) << p.where; }
}

TEST(Properties, KillingFormIsSymmetricAndInvariant) {
  std::mt19937_64 rng(4);
  for (const auto& p : all_points()) {
    const auto k = killing_form(p.algebra);
    EXPECT_EQ(k, k.transpose()) << p.where;
    EXPECT_EQ(oracle::to_grid(k), oracle::killing(constants(p.algebra))) << p.where;
    // K([x,y],z) = K(x,[y,z]).
    const std::size_t n = p.algebra.dim();
    const auto x = oracle::random_vector(rng, n), y = oracle::random_vector(rng, n), z = oracle::random_vector(rng, n);
    auto form = [&](const oracle::Vec& u, const oracle::Vec& v) {
      Rational s = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) s += u[a] * k(a, b) * v[b];
      return s;
    };
    EXPECT_EQ(form(bracket(p.algebra, x, y), z), form(x, bracket(p.algebra, y, z))) << p.where;
  }
}

TEST(Properties, CenterAndDerivedAlgebraAreIdeals) {
  for (const auto& p : all_points()) {
    const auto& l = p.algebra;
    const auto c = constants(l);
    const auto z = center(l);
    const auto d = derived_subalgebra(l);
    EXPECT_EQ(z.dim(), oracle::center_dim(c)) << p.where;
    EXPECT_EQ(d.dim(), oracle::derived_dim(c)) << p.where;
    EXPECT_TRUE(is_ideal(l, z));
    EXPECT_TRUE(is_ideal(l, d));
    EXPECT_TRUE(bracket_span(l, z, Subspace::full(l.dim())).is_zero());
  }
}

TEST(Properties, NormalEndomorphismDichotomyOnCatalog) {
  // Every catalog row is indecomposable, so combinations are nilpotent or invertible.
  std::mt19937_64 rng(5);
  for (const auto& p : all_points()) {
    const auto s = normal_endomorphisms(p.algebra);
    for (int t = 0; t < 5; ++t) {
      Matrix<Rational> phi(p.algebra.dim(), p.algebra.dim());
      for (const auto& b : s.basis) phi += b * oracle::random_rational(rng, 3, 1);
      EXPECT_TRUE(nilpotent_or_invertible(phi)) << p.where;
    }
  }
}

TEST(Properties, ZetaPlusIdentityIsAnAutomorphism) {
  std::mt19937_64 rng(6);
  for (const auto& l : {example8(), a48(), a41(), direct_sum({a31(), a21()}).total}) {
    const auto z = zeta_space(l);
    for (int t = 0; t < 5; ++t) {
      Matrix<Rational> b = Matrix<Rational>::identity(l.dim());
      for (const auto& m : z.basis) b += m * oracle::random_rational(rng);
      if (det(b) == 0) continue;
      EXPECT_TRUE(oracle::is_automorphism(constants(l), oracle::to_grid(b)));
    }
  }
}
