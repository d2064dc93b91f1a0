#pragma once

// Reference computations written directly from the index formulas, sharing no
// code with the library beyond the Rational type and plain containers. Tests
// compare library results against these.

#include "liealg/liealg.hpp"

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

using liealg::Rational;
using Grid = std::vector<std::vector<Rational>>;
using Vec = std::vector<Rational>;

/// c[i][j][k] for all ordered pairs, 0-based, antisymmetry filled in by hand.
struct Constants {
  std::size_t n = 0;
  std::vector<std::vector<std::vector<Rational>>> c;

  explicit Constants(std::size_t dim) : n(dim), c(dim, std::vector<std::vector<Rational>>(dim, Vec(dim, 0))) {}

  /// Entries (i, j, k, value), 1-based, i < j.
  static Constants from(std::size_t dim, const std::vector<std::tuple<int, int, int, Rational>>& entries) {
    Constants s(dim);
    for (const auto& [i, j, k, v] : entries) {
      s.c[i - 1][j - 1][k - 1] += v;
      s.c[j - 1][i - 1][k - 1] -= v;
    }
    return s;
  }

  /// Reads the constants of a library algebra through its public entry list.
  static Constants of(const liealg::LieAlgebra& l) {
    Constants s(l.dim());
    for (const auto& e : l.tensor().entries()) {
      s.c[e.i - 1][e.j - 1][e.k - 1] += e.c;
      s.c[e.j - 1][e.i - 1][e.k - 1] -= e.c;
    }
    return s;
  }
};

inline Grid to_grid(const liealg::Matrix<Rational>& m) {
  Grid g(m.rows(), Vec(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m(r, c);
  return g;
}

inline liealg::Matrix<Rational> from_grid(const Grid& g) {
  liealg::Matrix<Rational> m(g.size(), g.empty() ? 0 : g[0].size());
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t c = 0; c < g[r].size(); ++c) m(r, c) = g[r][c];
  return m;
}

inline Grid identity(std::size_t n) {
  Grid g(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
  return g;
}

inline Grid multiply(const Grid& a, const Grid& b) {
  Grid out(a.size(), Vec(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

/// [x, y]^k = x^i y^j c_ij^k.
inline Vec bracket(const Constants& s, const Vec& x, const Vec& y) {
  Vec out(s.n, 0);
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j)
      for (std::size_t k = 0; k < s.n; ++k) out[k] += x[i] * y[j] * s.c[i][j][k];
  return out;
}

/// [[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j] in components.
inline Vec jacobi_sum(const Constants& s, std::size_t i, std::size_t j, std::size_t k) {
  Vec out(s.n, 0);
  for (std::size_t l = 0; l < s.n; ++l)
    for (std::size_t m = 0; m < s.n; ++m)
      out[m] += s.c[i][j][l] * s.c[l][k][m] + s.c[j][k][l] * s.c[l][i][m] + s.c[k][i][l] * s.c[l][j][m];
  return out;
}

inline bool jacobi_holds(const Constants& s) {
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j)
      for (std::size_t k = 0; k < s.n; ++k)
        for (const auto& v : jacobi_sum(s, i, j, k))
          if (v != 0) return false;
  return true;
}

/// Residual of c_{lm}^n b_i^l b_j^m - c_{ij}^k b_k^n for 0-based (i, j, n).
inline Rational ac_residual(const Constants& s, const Grid& b, std::size_t i, std::size_t j, std::size_t n) {
  Rational lhs = 0, rhs = 0;
  for (std::size_t l = 0; l < s.n; ++l)
    for (std::size_t m = 0; m < s.n; ++m) lhs += s.c[l][m][n] * b[i][l] * b[j][m];
  for (std::size_t k = 0; k < s.n; ++k) rhs += s.c[i][j][k] * b[k][n];
  return lhs - rhs;
}

/// Laplace expansion along the first row.
inline Rational det(const Grid& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Grid minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vec row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(row);
    }
    const Rational term = m[0][c] * det(minor);
    total += (c % 2 ? -term : term);
  }
  return total;
}

/// All equations of the automorphism test plus invertibility.
inline bool is_automorphism(const Constants& s, const Grid& b) {
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j)
      for (std::size_t n = 0; n < s.n; ++n)
        if (ac_residual(s, b, i, j, n) != 0) return false;
  return det(b) != 0;
}

/// Same equations for a map between two algebras.
inline bool is_isomorphism(const Constants& from, const Constants& to, const Grid& b) {
  for (std::size_t i = 0; i < from.n; ++i)
    for (std::size_t j = 0; j < from.n; ++j)
      for (std::size_t n = 0; n < from.n; ++n) {
        Rational lhs = 0, rhs = 0;
        for (std::size_t l = 0; l < from.n; ++l)
          for (std::size_t m = 0; m < from.n; ++m) lhs += to.c[l][m][n] * b[i][l] * b[j][m];
        for (std::size_t k = 0; k < from.n; ++k) rhs += from.c[i][j][k] * b[k][n];
        if (lhs != rhs) return false;
      }
  return det(b) != 0;
}

/// K_ij = c_{ik}^l c_{jl}^k.
inline Grid killing(const Constants& s) {
  Grid k(s.n, Vec(s.n, 0));
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j)
      for (std::size_t a = 0; a < s.n; ++a)
        for (std::size_t b = 0; b < s.n; ++b) k[i][j] += s.c[i][a][b] * s.c[j][b][a];
  return k;
}

/// D c_ij = [D X_i, X_j] + [X_i, D X_j], row convention.
inline bool is_derivation(const Constants& s, const Grid& d) {
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j)
      for (std::size_t n = 0; n < s.n; ++n) {
        Rational lhs = 0, rhs = 0;
        for (std::size_t k = 0; k < s.n; ++k) lhs += s.c[i][j][k] * d[k][n];
        for (std::size_t l = 0; l < s.n; ++l) rhs += d[i][l] * s.c[l][j][n] + d[j][l] * s.c[i][l][n];
        if (lhs != rhs) return false;
      }
  return true;
}

/// Gaussian elimination rank, written independently of the library's rref.
inline std::size_t rank(Grid m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t q = 0; q < m.size(); ++q)
      if (q != r && m[q][c] != 0) {
        const Rational f = m[q][c] / m[r][c];
        for (std::size_t cc = c; cc < cols; ++cc) m[q][cc] -= f * m[r][cc];
      }
    ++r;
  }
  return r;
}

/// dim Z(L): the x with x^i c_ij^k = 0 for all j, k.
inline std::size_t center_dim(const Constants& s) {
  Grid conditions;
  for (std::size_t j = 0; j < s.n; ++j)
    for (std::size_t k = 0; k < s.n; ++k) {
      Vec row(s.n);
      for (std::size_t i = 0; i < s.n; ++i) row[i] = s.c[i][j][k];
      conditions.push_back(row);
    }
  return s.n - rank(conditions);
}

/// dim L': rank of all bracket images of basis pairs.
inline std::size_t derived_dim(const Constants& s) {
  Grid images;
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = i + 1; j < s.n; ++j) images.push_back(s.c[i][j]);
  return images.empty() ? 0 : rank(images);
}

/// exp(m) by Taylor series in long double with scaling and squaring.
inline std::vector<std::vector<long double>> expm(const std::vector<std::vector<long double>>& a) {
  const std::size_t n = a.size();
  long double norm = 0;
  for (const auto& row : a)
    for (auto x : row) norm = std::max(norm, std::fabs(x));
  int squarings = 0;
  while (norm * n > 0.5L) {
    norm /= 2;
    ++squarings;
  }
  const long double scale = std::ldexp(1.0L, -squarings);
  std::vector<std::vector<long double>> x(n, std::vector<long double>(n)), sum(n, std::vector<long double>(n, 0)),
      term(n, std::vector<long double>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) x[i][j] = a[i][j] * scale;
    sum[i][i] = term[i][i] = 1;
  }
  auto mul = [n](const auto& p, const auto& q) {
    std::vector<std::vector<long double>> r(n, std::vector<long double>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) r[i][j] += p[i][k] * q[k][j];
    return r;
  };
  for (int k = 1; k < 40; ++k) {
    term = mul(term, x);
    for (auto& row : term)
      for (auto& v : row) v /= k;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum[i][j] += term[i][j];
  }
  for (int s = 0; s < squarings; ++s) sum = mul(sum, sum);
  return sum;
}

inline std::vector<std::vector<long double>> to_long_double(const liealg::Matrix<double>& m) {
  std::vector<std::vector<long double>> out(m.rows(), std::vector<long double>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

/// Inverse by Gauss-Jordan on [m | I]; requires det != 0.
inline Grid inverse(const Grid& m) {
  const std::size_t n = m.size();
  Grid a = m, inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Rational f = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= f;
      inv[c][j] /= f;
    }
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && a[r][c] != 0) {
        const Rational g = a[r][c];
        for (std::size_t j = 0; j < n; ++j) {
          a[r][j] -= g * a[c][j];
          inv[r][j] -= g * inv[c][j];
        }
      }
  }
  return inv;
}

/// Constants in the basis Y_a = p_a^i X_i (rows of p): [Y_a, Y_b] = p_a^i p_b^j c_ij^k X_k, re-expressed in Y.
inline Constants change_basis(const Constants& s, const Grid& p) {
  const Grid q = inverse(p);
  Constants out(s.n);
  for (std::size_t a = 0; a < s.n; ++a)
    for (std::size_t b = 0; b < s.n; ++b) {
      const Vec v = bracket(s, p[a], p[b]);
      for (std::size_t d = 0; d < s.n; ++d)
        for (std::size_t k = 0; k < s.n; ++k) out.c[a][b][d] += v[k] * q[k][d];
    }
  return out;
}

inline liealg::LieAlgebra to_algebra(const Constants& s) {
  std::vector<liealg::BracketEntry> entries;
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = i + 1; j < s.n; ++j)
      for (std::size_t k = 0; k < s.n; ++k)
        if (s.c[i][j][k] != 0) entries.push_back({i + 1, j + 1, k + 1, s.c[i][j][k]});
  return liealg::LieAlgebra::create(s.n, entries);
}

/// Multiplicative closure by breadth-first search over printed keys.
inline std::size_t closure_size(const std::vector<Grid>& gens, std::size_t cap = 4096) {
  auto key = [](const Grid& g) {
    std::string s;
    for (const auto& row : g)
      for (const auto& v : row) s += liealg::to_string(v) + ",";
    return s;
  };
  std::set<std::string> seen;
  std::vector<Grid> queue;
  for (const auto& g : gens)
    if (seen.insert(key(g)).second) queue.push_back(g);
  for (std::size_t at = 0; at < queue.size() && seen.size() <= cap; ++at)
    for (const auto& g : gens) {
      Grid p = multiply(queue[at], g);
      if (seen.insert(key(p)).second) queue.push_back(p);
    }
  return seen.size();
}

inline Rational random_rational(std::mt19937_64& rng, int range = 6, int max_den = 3) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Vec random_vector(std::mt19937_64& rng, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

inline Grid random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Grid g(n, Vec(n));
    for (auto& row : g)
      for (auto& x : row) x = random_rational(rng, 3, 2);
    if (det(g) != 0) return g;
  }
}

}  // namespace oracle
