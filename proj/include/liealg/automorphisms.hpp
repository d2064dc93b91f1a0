#pragma once

#include "liealg/algebra.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace liealg {

/// Tolerance shared by every floating-point comparison.
inline constexpr double kDefaultTolerance = 1e-9;

template <class T>
struct AutomorphismReport {
  bool ok = false;
  bool brackets_ok = false;  // all R^2(R-1)/2 equations hold
  T det{};
  T worst_residual{};
  std::optional<std::array<std::size_t, 3>> first_violation;  // (i, j, n), 1-based
  std::size_t violation_count = 0;
};

namespace detail {

template <class T>
T absolute(const T& x) {
  return x < T(0) ? T(-x) : x;
}

/// Checks c1_{ij}^k b_k^n = c2_{lm}^n b_i^l b_j^m, i.e. B carries the bracket of
/// `source` onto the bracket of `target`. Numeric residuals are scaled by
/// max(1, |B|_max^2).
template <class T>
AutomorphismReport<T> check_bracket_map(const LieAlgebra& source, const LieAlgebra& target,
                                        const Matrix<T>& b, double tolerance) {
  const std::size_t n = source.dim();
  if (target.dim() != n || b.rows() != n || b.cols() != n)
    throw Error("dimension mismatch: algebra of dimension " + std::to_string(n) + " vs " +
                std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + " matrix");
  AutomorphismReport<T> report;
  T scale(1);
  if constexpr (std::is_same_v<T, double>) {
    const double m = max_abs(b);
    scale = std::max(1.0, m * m);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector<T> rhs = bracket(target, b.row(i), b.row(j));
      for (std::size_t col = 0; col < n; ++col) {
        T lhs(0);
        for (std::size_t k = 0; k < n; ++k) {
          const T c = source.tensor().template coeff<T>(i, j, k);
          if (c != T(0)) lhs += c * b(k, col);
        }
        T residual = absolute(T(lhs - rhs[col]));
        if constexpr (std::is_same_v<T, double>) residual /= scale;
        if (residual > report.worst_residual) report.worst_residual = residual;
        bool bad;
        if constexpr (std::is_same_v<T, double>)
          bad = residual > tolerance;
        else
          bad = residual != 0;
        if (bad) {
          if (!report.first_violation) report.first_violation = {i + 1, j + 1, col + 1};
          ++report.violation_count;
        }
      }
    }
  report.brackets_ok = report.violation_count == 0;
  report.det = det(b);
  bool invertible;
  if constexpr (std::is_same_v<T, double>)
    invertible = std::abs(report.det) > tolerance;
  else
    invertible = report.det != 0;
  report.ok = report.brackets_ok && invertible;
  return report;
}

}  // namespace detail

/// Exact check of c_{lm}^n b_i^l b_j^m = c_{ij}^k b_k^n and det(B) != 0.
inline AutomorphismReport<Rational> is_automorphism(const LieAlgebra& l, const Matrix<Rational>& b) {
  return detail::check_bracket_map(l, l, b, 0.0);
}

/// Floating-point check; residuals and |det| compared against `tolerance`.
inline AutomorphismReport<double> is_automorphism(const LieAlgebra& l, const Matrix<double>& b,
                                                  double tolerance = kDefaultTolerance) {
  return detail::check_bracket_map(l, l, b, tolerance);
}

/// B maps `source` isomorphically onto `target` (row i = image of X_i).
inline bool is_isomorphism(const Matrix<Rational>& b, const LieAlgebra& source, const LieAlgebra& target) {
  return detail::check_bracket_map(source, target, b, 0.0).ok;
}

template <class T>
struct NecessaryReport {
  bool ok = false;
  bool trace_ok = false;
  bool killing_ok = false;
  Vector<T> trace_residual;   // (B t - t)_j
  Matrix<T> killing_residual; // B K B^T - K
  std::optional<std::size_t> first_trace_failure;  // 1-based j
};

/// The trace condition c_{ln}^n b_j^l = c_{jn}^n and Killing-form preservation.
/// Passing is necessary, not sufficient.
template <class T>
NecessaryReport<T> necessary_conditions(const LieAlgebra& l, const Matrix<T>& b,
                                        double tolerance = kDefaultTolerance) {
  const std::size_t n = l.dim();
  if (b.rows() != n || b.cols() != n) throw Error("necessary_conditions: dimension mismatch");
  auto bad = [&](const T& x) {
    if constexpr (std::is_same_v<T, double>)
      return std::abs(x) > tolerance;
    else
      return x != 0;
  };
  NecessaryReport<T> report;
  const Vector<T> t = trace_vector<T>(l);
  report.trace_residual.assign(n, T(0));
  report.trace_ok = true;
  for (std::size_t j = 0; j < n; ++j) {
    T s(0);
    for (std::size_t k = 0; k < n; ++k) s += b(j, k) * t[k];
    report.trace_residual[j] = s - t[j];
    if (bad(report.trace_residual[j])) {
      if (report.trace_ok) report.first_trace_failure = j + 1;
      report.trace_ok = false;
    }
  }
  Matrix<T> killing;
  if constexpr (std::is_same_v<T, double>)
    killing = to_numeric(killing_form(l));
  else
    killing = killing_form(l);
  report.killing_residual = b * killing * b.transpose() - killing;
  report.killing_ok = true;
  for (const T& x : report.killing_residual.data())
    if (bad(x)) report.killing_ok = false;
  report.ok = report.trace_ok && report.killing_ok;
  return report;
}

/// D[X_i,X_j] = [D X_i, X_j] + [X_i, D X_j] for all i < j.
inline bool is_derivation(const LieAlgebra& l, const Matrix<Rational>& d) {
  const std::size_t n = l.dim();
  if (d.rows() != n || d.cols() != n) throw Error("is_derivation: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector<Rational> lhs(n, Rational(0));
      for (std::size_t k = 0; k < n; ++k)
        if (l.c(i, j, k) != 0)
          for (std::size_t m = 0; m < n; ++m) lhs[m] += l.c(i, j, k) * d(k, m);
      const auto r1 = bracket(l, d.row(i), unit_vector<Rational>(n, j));
      const auto r2 = bracket(l, unit_vector<Rational>(n, i), d.row(j));
      for (std::size_t m = 0; m < n; ++m)
        if (lhs[m] != r1[m] + r2[m]) return false;
    }
  return true;
}

namespace detail {

inline Vector<Rational> flatten(const Matrix<Rational>& m) { return m.data(); }

inline Matrix<Rational> unflatten(const Vector<Rational>& v, std::size_t n) {
  Matrix<Rational> m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
  return m;
}

}  // namespace detail

/// Span of the inner derivations C(1), ..., C(R), as flattened matrices.
inline Subspace inner_derivation_space(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Vector<Rational>> rows;
  for (std::size_t j = 1; j <= n; ++j) rows.push_back(detail::flatten(ad_matrix(l, j)));
  return Subspace::span(rows, n * n);
}

inline bool is_inner_derivation(const LieAlgebra& l, const Matrix<Rational>& d) {
  const std::size_t n = l.dim();
  if (d.rows() != n || d.cols() != n) throw Error("is_inner_derivation: dimension mismatch");
  return inner_derivation_space(l).contains(detail::flatten(d));
}

/// Basis of Der(L), from the linearized determining equations.
inline std::vector<Matrix<Rational>> derivation_algebra(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Vector<Rational>> equations;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t col = 0; col < n; ++col) {
        Vector<Rational> eq(n * n, Rational(0));
        for (std::size_t k = 0; k < n; ++k) eq[k * n + col] += l.c(i, j, k);
        for (std::size_t m = 0; m < n; ++m) {
          eq[i * n + m] -= l.c(m, j, col);
          eq[j * n + m] -= l.c(i, m, col);
        }
        if (!is_zero(eq)) equations.push_back(std::move(eq));
      }
  Matrix<Rational> basis = equations.empty() ? Matrix<Rational>::identity(n * n)
                                             : nullspace(Matrix<Rational>::from_rows(equations, n * n));
  std::vector<Matrix<Rational>> out;
  for (std::size_t r = 0; r < basis.rows(); ++r) out.push_back(detail::unflatten(basis.row(r), n));
  return out;
}

// ---------------------------------------------------------------------------
// One-parameter subgroups.

/// Parameter of exp(eps * D). Either eps itself, or the scale t = e^eps > 0,
/// which keeps exp(eps * D) rational when D is an integer diagonal matrix.
class FlowParam {
 public:
  FlowParam() = default;
  static FlowParam epsilon(Rational eps) { return FlowParam(std::move(eps), false); }
  static FlowParam scale(Rational t) {
    if (t <= 0) throw Error("flow scale must be positive");
    return FlowParam(std::move(t), true);
  }

  bool is_scale() const noexcept { return scale_; }
  const Rational& value() const noexcept { return value_; }
  bool is_identity() const { return scale_ ? value_ == 1 : value_ == 0; }
  double epsilon_value() const { return scale_ ? std::log(to_double(value_)) : to_double(value_); }

 private:
  FlowParam(Rational v, bool scale) : value_(std::move(v)), scale_(scale) {}
  Rational value_ = 0;
  bool scale_ = false;
};

/// A group element carried exactly when possible, always also as doubles.
struct GroupElement {
  std::optional<Matrix<Rational>> exact;
  Matrix<double> numeric;

  static GroupElement from_exact(Matrix<Rational> m) {
    GroupElement g;
    g.numeric = to_numeric(m);
    g.exact = std::move(m);
    return g;
  }
  static GroupElement from_numeric(Matrix<double> m) {
    GroupElement g;
    g.numeric = std::move(m);
    return g;
  }
  static GroupElement identity(std::size_t n) { return from_exact(Matrix<Rational>::identity(n)); }

  bool is_exact() const noexcept { return exact.has_value(); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (a.exact && b.exact) return from_exact(*a.exact * *b.exact);
    return from_numeric(a.numeric * b.numeric);
  }
};

inline bool is_integer_diagonal(const Matrix<Rational>& d) {
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) {
      if (r != c && d(r, c) != 0) return false;
      if (r == c && !is_integer(d(r, c))) return false;
    }
  return true;
}

/// exp(eps * D); exact for nilpotent D (finite series) or integer-diagonal D with a scale parameter.
inline GroupElement exp_flow(const Matrix<Rational>& d, const FlowParam& p) {
  const std::size_t n = d.rows();
  if (p.is_scale()) {
    if (!is_integer_diagonal(d)) throw Error("scale parameters need an integer diagonal generator");
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const long e = d(i, i).convert_to<long>();
      Rational v = 1;
      for (long k = 0; k < std::labs(e); ++k) v *= p.value();
      m(i, i) = e < 0 ? Rational(1 / v) : v;
    }
    return GroupElement::from_exact(std::move(m));
  }
  if (p.value() == 0 || d.is_zero()) return GroupElement::identity(n);
  if (nilpotency_index(d)) return GroupElement::from_exact(expm_exact(p.value() * d));
  return GroupElement::from_numeric(expm(to_numeric(d) * to_double(p.value())));
}

/// A_j(eps) = exp(eps C(j)); j is 1-based.
inline GroupElement inner_one_param(const LieAlgebra& l, std::size_t j, const FlowParam& p) {
  return exp_flow(ad_matrix(l, j), p);
}

// ---------------------------------------------------------------------------
// Finite groups of exact matrices.

struct MatrixLess {
  bool operator()(const Matrix<Rational>& a, const Matrix<Rational>& b) const {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    return std::lexicographical_compare(a.data().begin(), a.data().end(), b.data().begin(), b.data().end());
  }
};

class GroupTooLarge : public Error {
 public:
  explicit GroupTooLarge(std::size_t cap)
      : Error("group closure exceeded " + std::to_string(cap) + " elements") {}
};

inline constexpr std::size_t kDefaultClosureCap = 1024;

/// Closure of the generators under multiplication.
inline std::vector<Matrix<Rational>> group_closure(const std::vector<Matrix<Rational>>& generators,
                                                   std::size_t cap = kDefaultClosureCap) {
  std::set<Matrix<Rational>, MatrixLess> seen;
  std::vector<Matrix<Rational>> frontier;
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != generators.front().rows())
      throw Error("group_closure: generators must be square of equal size");
    if (seen.insert(g).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<Matrix<Rational>> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        Matrix<Rational> p = x * g;
        if (seen.insert(p).second) {
          if (seen.size() > cap) throw GroupTooLarge(cap);
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Notation builders.

/// p_m = diag(s_1..s_R) with s_i = -1 for i in m (1-based).
inline Matrix<Rational> sign_mask(const std::vector<std::size_t>& indices, std::size_t dim) {
  Matrix<Rational> m = Matrix<Rational>::identity(dim);
  for (auto i : indices) {
    if (i < 1 || i > dim) throw Error("sign mask index " + std::to_string(i) + " out of range");
    m(i - 1, i - 1) = -1;
  }
  return m;
}

/// A signed basis symbol such as -X_3.
struct SignedBasis {
  int sign = 1;
  std::size_t index = 0;  // 1-based
  friend bool operator==(const SignedBasis&, const SignedBasis&) = default;
};

/// Row i is the image of X_i, given as a signed basis element.
inline Matrix<Rational> signed_permutation(const std::vector<SignedBasis>& images) {
  const std::size_t n = images.size();
  Matrix<Rational> m(n, n);
  std::vector<bool> used(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& t = images[r];
    if (t.index < 1 || t.index > n) throw Error("signed permutation index out of range");
    if (used[t.index - 1]) throw Error("signed permutation is not a bijection (X" + std::to_string(t.index) + " repeated)");
    if (t.sign != 1 && t.sign != -1) throw Error("signed permutation sign must be +1 or -1");
    used[t.index - 1] = true;
    m(r, t.index - 1) = t.sign;
  }
  return m;
}

/// Coefficient times E_i^j, the matrix unit with a 1 in row i, column j.
struct WeylTerm {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational c = 1;
  friend bool operator==(const WeylTerm&, const WeylTerm&) = default;
};

inline Matrix<Rational> weyl_combo(const std::vector<WeylTerm>& terms, std::size_t dim) {
  Matrix<Rational> m(dim, dim);
  for (const auto& t : terms) {
    if (t.i < 1 || t.j < 1 || t.i > dim || t.j > dim) throw Error("Weyl basis index out of range");
    m(t.i - 1, t.j - 1) += t.c;
  }
  return m;
}

}  // namespace liealg
