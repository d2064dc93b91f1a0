#pragma once

#include "liealg/matrix.hpp"
#include "liealg/subspace.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

namespace liealg {

/// One structure constant c_{ij}^k with 1-based indices and i < j.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational c;

  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

/// Structure constants c_{ij}^k, stored sparsely for i < j only. A dense
/// antisymmetric copy (exact and double) is kept for the bracket kernels.
class StructureTensor {
 public:
  StructureTensor() = default;

  StructureTensor(std::size_t dim, const std::vector<BracketEntry>& entries) : dim_(dim) {
    for (const auto& e : entries) {
      if (e.i < 1 || e.j < 1 || e.k < 1 || e.i > dim || e.j > dim || e.k > dim)
        throw Error("structure constant index out of range: c_{" + std::to_string(e.i) +
                    std::to_string(e.j) + "}^" + std::to_string(e.k) + " in dimension " +
                    std::to_string(dim));
      if (e.i >= e.j)
        throw Error("structure constants must be given with i < j (got i=" + std::to_string(e.i) +
                    ", j=" + std::to_string(e.j) + "); negate to use antisymmetry");
      sparse_[{e.i, e.j}][e.k] += e.c;
    }
    for (auto it = sparse_.begin(); it != sparse_.end();) {
      auto& row = it->second;
      for (auto kt = row.begin(); kt != row.end();) kt = kt->second == 0 ? row.erase(kt) : std::next(kt);
      it = row.empty() ? sparse_.erase(it) : std::next(it);
    }
    dense_.assign(dim * dim * dim, Rational(0));
    for (const auto& [ij, row] : sparse_)
      for (const auto& [k, c] : row) {
        dense_[index(ij.first - 1, ij.second - 1, k - 1)] = c;
        dense_[index(ij.second - 1, ij.first - 1, k - 1)] = -c;
      }
    numeric_.resize(dense_.size());
    for (std::size_t n = 0; n < dense_.size(); ++n) numeric_[n] = to_double(dense_[n]);
  }

  std::size_t dim() const noexcept { return dim_; }

  /// c_{ij}^k with 0-based indices, any order of i, j.
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return dense_[index(i, j, k)];
  }

  template <class T>
  T coeff(std::size_t i, std::size_t j, std::size_t k) const {
    if constexpr (std::is_same_v<T, double>)
      return numeric_[index(i, j, k)];
    else
      return dense_[index(i, j, k)];
  }

  /// Canonical entry list sorted by (i, j, k); zeros omitted.
  std::vector<BracketEntry> entries() const {
    std::vector<BracketEntry> out;
    for (const auto& [ij, row] : sparse_)
      for (const auto& [k, c] : row) out.push_back({ij.first, ij.second, k, c});
    return out;
  }

  bool is_abelian() const noexcept { return sparse_.empty(); }

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.dim_ == b.dim_ && a.sparse_ == b.sparse_;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * dim_ + j) * dim_ + k;
  }

  std::size_t dim_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>> sparse_;
  std::vector<Rational> dense_;
  std::vector<double> numeric_;
};

struct JacobiViolation {
  std::size_t i, j, k;  // 1-based, i < j < k
  Vector<Rational> residual;
};

class LieAlgebra;
std::vector<JacobiViolation> check_jacobi(const LieAlgebra& algebra);

class JacobiError : public Error {
 public:
  explicit JacobiError(std::vector<JacobiViolation> v)
      : Error("Jacobi identity fails at (" + std::to_string(v.front().i) + "," +
              std::to_string(v.front().j) + "," + std::to_string(v.front().k) + ")"),
        violations_(std::move(v)) {}
  const std::vector<JacobiViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<JacobiViolation> violations_;
};

/// A real Lie algebra given by structure constants in a fixed basis X_1..X_R.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Validating constructor: throws JacobiError if the constants are inconsistent.
  static LieAlgebra create(std::size_t dim, const std::vector<BracketEntry>& brackets,
                           std::optional<std::string> label = std::nullopt) {
    LieAlgebra l = unchecked(dim, brackets, std::move(label));
    if (auto v = check_jacobi(l); !v.empty()) throw JacobiError(std::move(v));
    return l;
  }

  /// No Jacobi check; used to exercise the checker itself.
  static LieAlgebra unchecked(std::size_t dim, const std::vector<BracketEntry>& brackets,
                              std::optional<std::string> label = std::nullopt) {
    LieAlgebra l;
    l.tensor_ = StructureTensor(dim, brackets);
    l.label_ = std::move(label);
    return l;
  }

  static LieAlgebra abelian(std::size_t dim) { return unchecked(dim, {}); }

  std::size_t dim() const noexcept { return tensor_.dim(); }
  const StructureTensor& tensor() const noexcept { return tensor_; }
  const std::optional<std::string>& label() const noexcept { return label_; }

  std::vector<std::string> basis_names() const {
    if (!basis_names_.empty()) return basis_names_;
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= dim(); ++i) names.push_back("X" + std::to_string(i));
    return names;
  }
  LieAlgebra with_basis_names(std::vector<std::string> names) const {
    if (names.size() != dim()) throw Error("basis name count does not match dimension");
    LieAlgebra l = *this;
    l.basis_names_ = std::move(names);
    return l;
  }
  LieAlgebra with_label(std::string label) const {
    LieAlgebra l = *this;
    l.label_ = std::move(label);
    return l;
  }

  /// c_{ij}^k, 0-based.
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return tensor_(i, j, k); }

  /// Structural equality of the constants (labels ignored).
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.tensor_ == b.tensor_; }

 private:
  StructureTensor tensor_;
  std::optional<std::string> label_;
  std::vector<std::string> basis_names_;
};

/// [x, y] expanded through the structure constants.
template <class T>
Vector<T> bracket(const LieAlgebra& l, const Vector<T>& x, const Vector<T>& y) {
  const std::size_t n = l.dim();
  if (x.size() != n || y.size() != n) throw Error("bracket: vector length does not match dimension");
  Vector<T> out(n, T(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == T(0)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == T(0) || i == j) continue;
      const T xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const T c = l.tensor().coeff<T>(i, j, k);
        if (c != T(0)) out[k] += xy * c;
      }
    }
  }
  return out;
}

/// C(j) with (C(j))_i^k = c_{ij}^k; j is 1-based. Row i is [X_i, X_j].
inline Matrix<Rational> ad_matrix(const LieAlgebra& l, std::size_t j) {
  const std::size_t n = l.dim();
  if (j < 1 || j > n) throw Error("ad_matrix: index " + std::to_string(j) + " out of range");
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m(i, k) = l.c(i, j - 1, k);
  return m;
}

inline std::vector<JacobiViolation> check_jacobi(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<JacobiViolation> out;
  auto e = [n](std::size_t i) { return unit_vector<Rational>(n, i); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector<Rational> s = bracket(l, bracket(l, e(i), e(j)), e(k));
        const auto t2 = bracket(l, bracket(l, e(j), e(k)), e(i));
        const auto t3 = bracket(l, bracket(l, e(k), e(i)), e(j));
        for (std::size_t m = 0; m < n; ++m) s[m] += t2[m] + t3[m];
        if (!is_zero(s)) out.push_back({i + 1, j + 1, k + 1, std::move(s)});
      }
  return out;
}

/// span{[a, b] : a in A, b in B}.
inline Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b) {
  std::vector<Vector<Rational>> images;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t s = 0; s < b.dim(); ++s) images.push_back(bracket(l, a.basis_vector(r), b.basis_vector(s)));
  if (images.empty()) return Subspace::zero(l.dim());
  return Subspace::span(images, l.dim());
}

inline bool is_ideal(const LieAlgebra& l, const Subspace& s) {
  return s.contains(bracket_span(l, Subspace::full(l.dim()), s));
}

inline bool is_subalgebra(const LieAlgebra& l, const Subspace& s) {
  return s.contains(bracket_span(l, s, s));
}

inline Subspace derived_subalgebra(const LieAlgebra& l) {
  const auto full = Subspace::full(l.dim());
  return bracket_span(l, full, full);
}

/// L, L', L'', ... up to (not repeating) the stable term.
inline std::vector<Subspace> derived_series(const LieAlgebra& l) {
  std::vector<Subspace> series{Subspace::full(l.dim())};
  for (;;) {
    Subspace next = bracket_span(l, series.back(), series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

/// L, [L,L], [L,[L,L]], ... up to the stable term.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& l) {
  const auto full = Subspace::full(l.dim());
  std::vector<Subspace> series{full};
  for (;;) {
    Subspace next = bracket_span(l, full, series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

/// {x : [x, L] is contained in `below`}.
inline Subspace centralizer_modulo(const LieAlgebra& l, const Subspace& below) {
  const std::size_t n = l.dim();
  if (below.is_full()) return Subspace::full(n);
  const Matrix<Rational> ann = below.annihilator();  // rows w: v in below iff v.w = 0
  Matrix<Rational> conditions(n, n * ann.rows());
  for (std::size_t j = 1; j <= n; ++j) {
    const Matrix<Rational> cj = ad_matrix(l, j) * ann.transpose();
    conditions.set_block(0, (j - 1) * ann.rows(), cj);
  }
  return left_kernel(conditions);
}

inline Subspace center(const LieAlgebra& l) { return centralizer_modulo(l, Subspace::zero(l.dim())); }

/// 0, Z(L), Z_2(L), ... up to the stable term.
inline std::vector<Subspace> upper_central_series(const LieAlgebra& l) {
  std::vector<Subspace> series{Subspace::zero(l.dim())};
  for (;;) {
    Subspace next = centralizer_modulo(l, series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

/// K_ij = trace(C(i) C(j)).
inline Matrix<Rational> killing_form(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Matrix<Rational>> ad;
  for (std::size_t j = 1; j <= n; ++j) ad.push_back(ad_matrix(l, j));
  Matrix<Rational> k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = trace(ad[i] * ad[j]);
      k(j, i) = k(i, j);
    }
  return k;
}

/// t_l = sum_n c_{ln}^n (minus the trace of ad X_l).
template <class T = Rational>
Vector<T> trace_vector(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  Vector<T> t(n, T(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) t[i] += l.tensor().coeff<T>(i, k, k);
  return t;
}

/// The subalgebra s as a Lie algebra in its own (echelon) basis.
inline LieAlgebra restrict_to(const LieAlgebra& l, const Subspace& s) {
  if (!is_subalgebra(l, s)) throw Error("restrict_to: subspace is not a subalgebra");
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b) {
      const auto coords = s.coordinates(bracket(l, s.basis_vector(a), s.basis_vector(b)));
      for (std::size_t k = 0; k < s.dim(); ++k)
        if ((*coords)[k] != 0) entries.push_back({a + 1, b + 1, k + 1, (*coords)[k]});
    }
  return LieAlgebra::unchecked(s.dim(), entries);
}

}  // namespace liealg
