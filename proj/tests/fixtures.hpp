#pragma once

#include "liealg/liealg.hpp"
#include "oracles.hpp"

#include <string>
#include <vector>

namespace fixtures {

using liealg::LieAlgebra;
using liealg::Matrix;
using liealg::Rational;

inline Rational q(long p, long d = 1) { return Rational(p, d); }

/// Matrix from rational strings, e.g. mat({{"1", "0"}, {"-1/2", "3"}}).
inline Matrix<Rational> mat(const std::vector<std::vector<std::string>>& rows) {
  Matrix<Rational> m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = liealg::parse_rational(rows[r][c]);
  return m;
}

inline Matrix<Rational> diag(const std::vector<Rational>& d) {
  Matrix<Rational> m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

/// E_i^j in dimension n, 1-based.
inline Matrix<Rational> unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix<Rational> m(n, n);
  m(i - 1, j - 1) = 1;
  return m;
}

inline liealg::Vector<Rational> e(std::size_t n, std::size_t i) { return liealg::unit_vector<Rational>(n, i - 1); }

/// Componentwise sum of two coordinate vectors.
inline liealg::Vector<Rational> vadd(liealg::Vector<Rational> x, const liealg::Vector<Rational>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

inline LieAlgebra a21() { return LieAlgebra::create(2, {{1, 2, 1, 1}}, "A_{2,1}"); }
inline LieAlgebra a31() { return LieAlgebra::create(3, {{2, 3, 1, 1}}, "A_{3,1}"); }
inline LieAlgebra a32() { return LieAlgebra::create(3, {{1, 3, 1, 1}, {2, 3, 1, 1}, {2, 3, 2, 1}}, "A_{3,2}"); }
inline LieAlgebra a34() { return LieAlgebra::create(3, {{1, 3, 1, 1}, {2, 3, 2, -1}}, "A_{3,4}"); }
inline LieAlgebra a38() { return LieAlgebra::create(3, {{1, 2, 1, 1}, {2, 3, 3, 1}, {1, 3, 2, -2}}, "A_{3,8}"); }
inline LieAlgebra a39() { return LieAlgebra::create(3, {{1, 2, 3, 1}, {2, 3, 1, 1}, {1, 3, 2, -1}}, "A_{3,9}"); }
inline LieAlgebra a41() { return LieAlgebra::create(4, {{2, 4, 1, 1}, {3, 4, 2, 1}}, "A_{4,1}"); }
inline LieAlgebra a48() { return LieAlgebra::create(4, {{2, 3, 1, 1}, {2, 4, 2, 1}, {3, 4, 3, -1}}, "A_{4,8}"); }

/// [X1,X2]=X1, [X4,X5]=X3, [X7,X8]=X6.
inline LieAlgebra example8() {
  return LieAlgebra::create(8, {{1, 2, 1, 1}, {4, 5, 3, 1}, {7, 8, 6, 1}}, "example");
}

/// Parameters of the two displayed 8x8 automorphism families of example8().
struct ExampleParams {
  Rational a = 1, b = 0, c = 0, d = 0, e = 1, f = 0, g = 0, h = 1;
  Rational i = 0, j = 0, k = 1, l = 0, m = 0, n = 1;
  Rational alpha = 0, beta = 0, gamma = 0, delta = 0, epsilon = 0, zeta = 0;
};

/// The block-preserving family.
inline Matrix<Rational> example_family1(const ExampleParams& p) {
  const Rational z = 0;
  const Rational d1 = p.e * p.h - p.f * p.g, d2 = p.k * p.n - p.l * p.m;
  return Matrix<Rational>{{p.a, z, z, z, z, z, z, z},
                          {p.b, 1, p.alpha, z, z, p.beta, z, z},
                          {z, z, d1, z, z, z, z, z},
                          {z, z, p.c, p.e, p.g, p.gamma, z, z},
                          {z, z, p.d, p.f, p.h, p.delta, z, z},
                          {z, z, z, z, z, d2, z, z},
                          {z, z, p.epsilon, z, z, p.i, p.k, p.m},
                          {z, z, p.zeta, z, z, p.j, p.l, p.n}};
}

/// The family that swaps the two A_{3,1} summands.
inline Matrix<Rational> example_family2(const ExampleParams& p) {
  const Rational z = 0;
  const Rational d1 = p.e * p.h - p.f * p.g, d2 = p.k * p.n - p.l * p.m;
  return Matrix<Rational>{{p.a, z, z, z, z, z, z, z},
                          {p.b, 1, p.alpha, z, z, p.beta, z, z},
                          {z, z, z, z, z, d1, z, z},
                          {z, z, p.gamma, z, z, p.c, p.e, p.g},
                          {z, z, p.delta, z, z, p.d, p.f, p.h},
                          {z, z, d2, z, z, z, z, z},
                          {z, z, p.i, p.k, p.m, p.epsilon, z, z},
                          {z, z, p.j, p.l, p.n, p.zeta, z, z}};
}

/// True when both matrices have zeros in exactly the same places.
inline bool same_zero_pattern(const Matrix<Rational>& x, const Matrix<Rational>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      if ((x(r, c) == 0) != (y(r, c) == 0)) return false;
  return true;
}

/// True when x is zero wherever the template is zero.
inline bool zero_where(const Matrix<Rational>& x, const Matrix<Rational>& tmpl) {
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      if (tmpl(r, c) == 0 && x(r, c) != 0) return false;
  return true;
}

inline oracle::Constants constants(const LieAlgebra& l) { return oracle::Constants::of(l); }

inline liealg::Subspace span_of(std::size_t n, const std::vector<std::size_t>& basis_indices) {
  std::vector<liealg::Vector<Rational>> rows;
  for (auto i : basis_indices) rows.push_back(e(n, i));
  return liealg::Subspace::span(rows, n);
}

}  // namespace fixtures
