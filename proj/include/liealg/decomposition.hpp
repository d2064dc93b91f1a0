#pragma once

// Direct-sum decomposition into indecomposable ideals through normal
// endomorphisms and Fitting splittings, plus Krull-Schmidt matching checks.

#include "liealg/algebra.hpp"
#include "liealg/io.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace liealg {

/// Linear maps phi with phi([X,Y]) = [phi X, Y] = [X, phi Y]; rows are images (row convention).
struct NormalEndoSpace {
  std::size_t dim = 0;
  std::vector<Matrix<Rational>> basis;
};

/// Both normality conditions as one linear map on the flattened R x R unknowns.
inline Matrix<Rational> normality_conditions(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  const std::size_t unknowns = n * n;
  std::vector<Vector<Rational>> rows;
  auto var = [n](std::size_t a, std::size_t b) { return a * n + b; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t) {
        // phi([X_i,X_j]) = c_ij^k m_k^t ;  [phi X_i, X_j] = m_i^l c_lj^t ;  [X_i, phi X_j] = m_j^l c_il^t
        Vector<Rational> left(unknowns, Rational(0));
        Vector<Rational> right(unknowns, Rational(0));
        for (std::size_t k = 0; k < n; ++k) {
          const Rational& c = l.c(i, j, k);
          if (c != 0) {
            left[var(k, t)] += c;
            right[var(k, t)] += c;
          }
        }
        for (std::size_t m = 0; m < n; ++m) {
          if (const Rational& c = l.c(m, j, t); c != 0) left[var(i, m)] -= c;
          if (const Rational& c = l.c(i, m, t); c != 0) right[var(j, m)] -= c;
        }
        if (!is_zero(left)) rows.push_back(std::move(left));
        if (!is_zero(right)) rows.push_back(std::move(right));
      }
  return Matrix<Rational>::from_rows(rows, unknowns);
}

inline NormalEndoSpace normal_endomorphisms(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  NormalEndoSpace space{n, {}};
  const Matrix<Rational> conditions = normality_conditions(l);
  if (conditions.rows() == 0) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Matrix<Rational> e(n, n);
        e(a, b) = 1;
        space.basis.push_back(std::move(e));
      }
    return space;
  }
  const Matrix<Rational> ns = nullspace(conditions);
  for (std::size_t r = 0; r < ns.rows(); ++r) {
    Matrix<Rational> m(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m(a, b) = ns(r, a * n + b);
    space.basis.push_back(std::move(m));
  }
  return space;
}

inline bool is_normal_endomorphism(const LieAlgebra& l, const Matrix<Rational>& phi) {
  const std::size_t n = l.dim();
  if (phi.rows() != n || phi.cols() != n) throw Error("normal endomorphism must be R x R");
  for (std::size_t i = 0; i < n; ++i) {
    const Vector<Rational> xi = unit_vector<Rational>(n, i);
    const Vector<Rational> pi = phi.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector<Rational> xj = unit_vector<Rational>(n, j);
      const Vector<Rational> lhs = bracket(l, xi, xj) * phi;
      if (lhs != bracket(l, pi, xj) || lhs != bracket(l, xi, phi.row(j))) return false;
    }
  }
  return true;
}

struct FittingSplit {
  Subspace kernel;  // Ker(phi^k)
  Subspace image;   // phi^k(L)
  std::size_t exponent = 1;
};

/// Smallest power k in 1, 2, 4, ... at which rank(phi^k) = rank(phi^2k); then
/// L = Ker(phi^k) + Im(phi^k). Returns the pair only when both parts are proper.
inline std::optional<FittingSplit> fitting_split(const LieAlgebra& l, const Matrix<Rational>& phi,
                                                 bool check_normal = true) {
  if (check_normal && !is_normal_endomorphism(l, phi)) throw Error("fitting_split: map is not a normal endomorphism");
  std::size_t k = 1;
  Matrix<Rational> pk = phi;
  for (;;) {
    Matrix<Rational> p2k = pk * pk;
    if (rank(pk) == rank(p2k) || k >= l.dim()) break;
    pk = std::move(p2k);
    k *= 2;
  }
  FittingSplit split{left_kernel(pk), row_space(pk), k};
  if (split.kernel.is_zero() || split.image.is_zero()) return std::nullopt;
  return split;
}

/// True when phi is nilpotent or invertible (the dichotomy on indecomposable algebras).
inline bool nilpotent_or_invertible(const Matrix<Rational>& phi) {
  return det(phi) != 0 || nilpotency_index(phi).has_value();
}

// ---------------------------------------------------------------------------
// Rational eigenvalues, used to shift candidates phi -> phi - lambda I.

/// Monic minimal polynomial, coefficients from degree 0 upward.
inline std::vector<Rational> minimal_polynomial(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  std::vector<Matrix<Rational>> powers{Matrix<Rational>::identity(n)};
  for (std::size_t d = 1; d <= n; ++d) {
    powers.push_back(powers.back() * m);
    Matrix<Rational> cols(n * n, powers.size());
    for (std::size_t p = 0; p < powers.size(); ++p)
      for (std::size_t e = 0; e < n * n; ++e) cols(e, p) = powers[p].data()[e];
    const Matrix<Rational> ns = nullspace(cols);
    if (ns.rows() == 0) continue;
    Vector<Rational> coeffs = ns.row(0);
    const Rational lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;
    return coeffs;
  }
  throw Error("minimal_polynomial: no relation found");  // unreachable by Cayley-Hamilton
}

namespace detail {

inline std::optional<std::vector<Integer>> small_divisors(Integer v) {
  if (v < 0) v = -v;
  static const Integer limit = Integer(10000000000LL);
  if (v == 0 || v > limit) return std::nullopt;
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  return out;
}

}  // namespace detail

/// Distinct rational roots of a polynomial (coefficients from degree 0). Roots
/// are found by the rational root test; very large coefficients are skipped.
inline std::vector<Rational> rational_roots(std::vector<Rational> poly) {
  std::vector<Rational> roots;
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  if (poly.size() < 2) return roots;
  if (poly.front() == 0) {
    roots.push_back(0);
    while (poly.size() > 1 && poly.front() == 0) poly.erase(poly.begin());
    if (poly.size() < 2) return roots;
  }
  Integer scale = 1;
  for (const auto& c : poly) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(c));
  std::vector<Integer> ints;
  for (const auto& c : poly) ints.push_back(boost::multiprecision::numerator(Rational(c * scale)));
  const auto ps = detail::small_divisors(ints.front());
  const auto qs = detail::small_divisors(ints.back());
  if (!ps || !qs) return roots;
  auto value = [&](const Rational& x) {
    Rational acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  std::set<Rational> found;
  for (const auto& p : *ps)
    for (const auto& q : *qs)
      for (int sign : {1, -1}) {
        const Rational x = Rational(Integer(p * sign), q);
        if (!found.count(x) && value(x) == 0) found.insert(x);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

// ---------------------------------------------------------------------------
// Decompositions.

struct Decomposition {
  std::vector<Subspace> components;
  std::vector<Matrix<Rational>> projections;
  std::vector<bool> central;
  std::vector<std::string> transcript;  // how each indecomposable component was settled
};

/// Builds projections and central flags for a list of ideals; throws if the
/// list is not a direct-sum decomposition of L into ideals.
inline Decomposition make_decomposition(const LieAlgebra& l, std::vector<Subspace> components) {
  const std::size_t n = l.dim();
  Decomposition d;
  std::vector<Vector<Rational>> rows;
  for (const auto& c : components) {
    if (c.ambient_dim() != n) throw Error("decomposition component has the wrong ambient dimension");
    if (c.is_zero()) throw Error("decomposition component is zero");
    if (!is_ideal(l, c)) throw Error("decomposition component is not an ideal");
    for (std::size_t r = 0; r < c.dim(); ++r) rows.push_back(c.basis_vector(r));
  }
  if (rows.size() != n) throw Error("component dimensions do not sum to the algebra dimension");
  const Matrix<Rational> p = Matrix<Rational>::from_rows(rows, n);
  const auto pinv = inverse(p);
  if (!pinv) throw Error("components are not linearly independent");
  for (std::size_t a = 0; a < components.size(); ++a)
    for (std::size_t b = a + 1; b < components.size(); ++b)
      if (!bracket_span(l, components[a], components[b]).is_zero())
        throw Error("components do not commute with each other");
  const Subspace z = center(l);
  std::size_t offset = 0;
  for (const auto& c : components) {
    Matrix<Rational> mask(n, n);
    for (std::size_t r = 0; r < c.dim(); ++r) mask(offset + r, offset + r) = 1;
    d.projections.push_back(*pinv * mask * p);
    d.central.push_back(z.contains(c));
    offset += c.dim();
  }
  d.components = std::move(components);
  return d;
}

/// Problems with the projection identities; empty when the decomposition is sound.
inline std::vector<std::string> projection_problems(const Decomposition& d) {
  std::vector<std::string> out;
  if (d.projections.empty()) return {"no projections"};
  const std::size_t n = d.projections.front().rows();
  Matrix<Rational> sum(n, n);
  for (std::size_t i = 0; i < d.projections.size(); ++i) {
    const auto& p = d.projections[i];
    if (p * p != p) out.push_back("pi_" + std::to_string(i + 1) + " is not idempotent");
    for (std::size_t j = 0; j < d.projections.size(); ++j)
      if (i != j && !(p * d.projections[j]).is_zero())
        out.push_back("pi_" + std::to_string(i + 1) + " pi_" + std::to_string(j + 1) + " is not zero");
    if (row_space(p) != d.components[i]) out.push_back("pi_" + std::to_string(i + 1) + " has the wrong image");
    sum += p;
  }
  if (sum != Matrix<Rational>::identity(n)) out.push_back("projections do not sum to the identity");
  return out;
}

inline constexpr std::size_t kDefaultSweepBudget = 64;

namespace detail {

inline std::vector<Matrix<Rational>> split_candidates(const NormalEndoSpace& space, std::mt19937_64& rng,
                                                      std::size_t budget) {
  const auto& b = space.basis;
  std::vector<Matrix<Rational>> out(b.begin(), b.end());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) out.push_back(b[i] + b[j]);
  if (b.size() > 1) {
    std::uniform_int_distribution<int> coeff(1, 6);
    for (std::size_t s = 0; s < budget; ++s) {
      Matrix<Rational> m(space.dim, space.dim);
      for (const auto& e : b) {
        const int c = coeff(rng);
        m += e * Rational(c <= 3 ? c - 4 : c - 3);
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

/// First proper Fitting split found among the candidates and their eigenvalue shifts.
inline std::optional<FittingSplit> find_split(const LieAlgebra& m, std::mt19937_64& rng, std::size_t budget,
                                              std::size_t& tried) {
  const NormalEndoSpace space = normal_endomorphisms(m);
  const auto id = Matrix<Rational>::identity(m.dim());
  for (const auto& phi : split_candidates(space, rng, budget)) {
    ++tried;
    if (auto s = fitting_split(m, phi, false)) return s;
    for (const auto& lambda : rational_roots(minimal_polynomial(phi))) {
      if (lambda == 0) continue;
      ++tried;
      if (auto s = fitting_split(m, phi - id * lambda, false)) return s;
    }
  }
  return std::nullopt;
}

/// Vectors given in the coordinates of `basis` mapped back to the ambient space.
inline Subspace lift(const Subspace& local, const Matrix<Rational>& basis) {
  if (local.is_zero()) return Subspace::zero(basis.cols());
  return Subspace::span(local.basis() * basis);
}

inline void split_recursive(const LieAlgebra& l, const Subspace& part, std::mt19937_64& rng, std::size_t budget,
                            std::vector<Subspace>& out, std::vector<std::string>& transcript) {
  if (part.dim() == 1) {
    out.push_back(part);
    transcript.push_back("dim 1: indecomposable");
    return;
  }
  const LieAlgebra m = restrict_to(l, part);
  std::size_t tried = 0;
  if (auto s = find_split(m, rng, budget, tried)) {
    split_recursive(l, lift(s->kernel, part.basis()), rng, budget, out, transcript);
    split_recursive(l, lift(s->image, part.basis()), rng, budget, out, transcript);
    return;
  }
  out.push_back(part);
  transcript.push_back("dim " + std::to_string(part.dim()) + ": no split among " + std::to_string(tried) +
                       " normal endomorphism candidates");
}

}  // namespace detail

/// Splits L into ideals that no candidate normal endomorphism splits further.
/// Deterministic for a given seed; components are ordered by leading pivot.
inline Decomposition decompose(const LieAlgebra& l, std::uint64_t seed = 0,
                               std::size_t sweep_budget = kDefaultSweepBudget) {
  std::mt19937_64 rng(seed);
  std::vector<Subspace> parts;
  std::vector<std::string> transcript;
  if (l.dim() == 0) return {};
  detail::split_recursive(l, Subspace::full(l.dim()), rng, sweep_budget, parts, transcript);
  std::vector<std::size_t> order(parts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return parts[a].pivots().front() < parts[b].pivots().front(); });
  std::vector<Subspace> sorted;
  std::vector<std::string> notes;
  for (auto i : order) {
    sorted.push_back(parts[i]);
    notes.push_back(transcript[i]);
  }
  Decomposition d = make_decomposition(l, std::move(sorted));
  d.transcript = std::move(notes);
  return d;
}

inline Json decomposition_to_json(const Decomposition& d) {
  Json j = Json::array();
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    Json c;
    c["dim"] = d.components[i].dim();
    c["central"] = static_cast<bool>(d.central[i]);
    c["basis"] = matrix_to_json(d.components[i].basis());
    c["projection"] = matrix_to_json(d.projections[i]);
    j.push_back(std::move(c));
  }
  return Json{{"components", std::move(j)}};
}

// ---------------------------------------------------------------------------
// Krull-Schmidt matching.

struct PairCheck {
  std::size_t i = 0, j = 0;  // 0-based: M_i of the first decomposition, N_j of the second
  bool pi_onto = false;      // pi_i(N_j) = M_i
  bool psi_onto = false;     // psi_j(M_i) = N_j
  bool isomorphic = false;   // psi_j restricted to M_i preserves brackets
  bool derived_equal = false;   // N_j' = M_i'
  bool within_center = false;   // N_j in M_i + Z(complement of M_i)
  bool ok() const { return pi_onto && psi_onto && isomorphic && derived_equal && within_center; }
};

struct KrullSchmidtReport {
  bool ok = false;
  bool same_count = false;
  std::vector<std::size_t> pairing;  // pairing[i] = j
  std::vector<PairCheck> pairs;
  std::vector<bool> exchange_ok;     // k = 1 .. r-1
  bool uniqueness_applies = false;   // Z(L) = 0 or L' = L
  bool components_identical = false; // M_i = N_pairing[i] for all i
  std::vector<std::string> failures;
};

namespace detail {

inline bool map_preserves_brackets(const LieAlgebra& l, const Subspace& s, const Matrix<Rational>& phi) {
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b) {
      const auto x = s.basis_vector(a), y = s.basis_vector(b);
      if (bracket(l, x, y) * phi != bracket(l, x * phi, y * phi)) return false;
    }
  return true;
}

inline PairCheck check_pair(const LieAlgebra& l, const Decomposition& m, const Decomposition& nd, std::size_t i,
                            std::size_t j, const Subspace& z) {
  PairCheck c;
  c.i = i;
  c.j = j;
  const Subspace& mi = m.components[i];
  const Subspace& nj = nd.components[j];
  c.pi_onto = image(nj, m.projections[i]) == mi;
  c.psi_onto = image(mi, nd.projections[j]) == nj;
  c.isomorphic = c.psi_onto && mi.dim() == nj.dim() && map_preserves_brackets(l, mi, nd.projections[j]);
  c.derived_equal = bracket_span(l, nj, nj) == bracket_span(l, mi, mi);
  Subspace complement = Subspace::zero(l.dim());
  for (std::size_t k = 0; k < m.components.size(); ++k)
    if (k != i) complement = complement + m.components[k];
  c.within_center = (mi + intersect(complement, z)).contains(nj);
  return c;
}

inline std::size_t stacked_rank(const std::vector<const Subspace*>& parts, std::size_t n) {
  Matrix<Rational> all(0, n);
  for (const auto* p : parts) all = vstack(all, p->basis());
  return all.rows() == 0 ? 0 : rank(all);
}

}  // namespace detail

/// Finds a pairing M_i <-> N_j satisfying every PairCheck condition such that each
/// exchange M_1 + ... + M_k + N_{k+1} + ... + N_r is again a direct sum.
inline KrullSchmidtReport krull_schmidt_match(const LieAlgebra& l, const Decomposition& m,
                                              const Decomposition& nd) {
  KrullSchmidtReport rep;
  const std::size_t r = m.components.size();
  const std::size_t n = l.dim();
  rep.same_count = r == nd.components.size();
  const Subspace z = center(l);
  rep.uniqueness_applies = z.is_zero() || derived_subalgebra(l).is_full();
  if (!rep.same_count) {
    rep.failures.push_back("component counts differ: " + std::to_string(r) + " vs " +
                           std::to_string(nd.components.size()));
    return rep;
  }

  std::vector<std::vector<std::optional<PairCheck>>> table(r, std::vector<std::optional<PairCheck>>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (m.components[i].dim() == nd.components[j].dim()) {
        PairCheck c = detail::check_pair(l, m, nd, i, j, z);
        if (c.ok()) table[i][j] = c;
      }

  std::vector<std::size_t> pairing(r);
  std::vector<bool> used(r, false);
  // Exchange check at depth k: M_1..M_k together with the N's not yet paired.
  auto exchange_valid = [&](std::size_t k) {
    std::vector<const Subspace*> parts;
    for (std::size_t a = 0; a < k; ++a) parts.push_back(&m.components[a]);
    for (std::size_t b = 0; b < r; ++b)
      if (!used[b]) parts.push_back(&nd.components[b]);
    return detail::stacked_rank(parts, n) == n;
  };
  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == r) return true;
    for (std::size_t j = 0; j < r; ++j) {
      if (used[j] || !table[i][j]) continue;
      used[j] = true;
      pairing[i] = j;
      if ((i + 1 == r || exchange_valid(i + 1)) && assign(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!assign(0)) {
    for (std::size_t i = 0; i < r; ++i)
      if (std::none_of(table[i].begin(), table[i].end(), [](const auto& c) { return c.has_value(); }))
        rep.failures.push_back("no summand of the second decomposition pairs with component " + std::to_string(i + 1));
    if (rep.failures.empty()) rep.failures.push_back("no pairing keeps every exchange decomposition direct");
    return rep;
  }

  rep.pairing = pairing;
  for (std::size_t i = 0; i < r; ++i) rep.pairs.push_back(*table[i][pairing[i]]);
  std::fill(used.begin(), used.end(), false);
  for (std::size_t k = 1; k < r; ++k) {
    used[pairing[k - 1]] = true;
    rep.exchange_ok.push_back(exchange_valid(k));
  }
  rep.components_identical = true;
  for (std::size_t i = 0; i < r; ++i)
    if (m.components[i] != nd.components[pairing[i]]) rep.components_identical = false;
  if (rep.uniqueness_applies && !rep.components_identical)
    rep.failures.push_back("decomposition should be unique but components differ");
  for (std::size_t k = 0; k < rep.exchange_ok.size(); ++k)
    if (!rep.exchange_ok[k]) rep.failures.push_back("exchange decomposition " + std::to_string(k + 1) + " is not direct");
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace liealg
