#pragma once

#include "liealg/matrix.hpp"

#include <cstddef>
#include <vector>

namespace liealg {

/// Linear subspace of Q^n held as a reduced row-echelon basis. The echelon
/// form is canonical, so equal subspaces compare equal structurally.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the rows of `spanning`.
  static Subspace span(const Matrix<Rational>& spanning) {
    Subspace s(spanning.cols());
    Echelon e = rref(spanning);
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
  }
  static Subspace span(const std::vector<Vector<Rational>>& vectors, std::size_t ambient_dim) {
    return span(Matrix<Rational>::from_rows(vectors, ambient_dim));
  }
  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n) { return span(Matrix<Rational>::identity(n)); }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }
  const Matrix<Rational>& basis() const noexcept { return basis_; }
  Vector<Rational> basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Coordinates of v in the echelon basis; nullopt when v is not in the subspace.
  std::optional<Vector<Rational>> coordinates(const Vector<Rational>& v) const {
    if (v.size() != ambient_) throw Error("vector length does not match subspace ambient dimension");
    Vector<Rational> coords(dim());
    Vector<Rational> rebuilt(ambient_, Rational(0));
    for (std::size_t r = 0; r < dim(); ++r) {
      coords[r] = v[pivots_[r]];
      if (coords[r] == 0) continue;
      for (std::size_t c = 0; c < ambient_; ++c) rebuilt[c] += coords[r] * basis_(r, c);
    }
    if (rebuilt != v) return std::nullopt;
    return coords;
  }

  bool contains(const Vector<Rational>& v) const { return coordinates(v).has_value(); }
  bool contains(const Subspace& other) const {
    for (std::size_t r = 0; r < other.dim(); ++r)
      if (!contains(other.basis_.row(r))) return false;
    return true;
  }

  /// Rows w spanning {w : b . w = 0 for every basis vector b}.
  Matrix<Rational> annihilator() const {
    if (dim() == 0) return Matrix<Rational>::identity(ambient_);
    return nullspace(basis_);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix<Rational> basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace operator+(const Subspace& a, const Subspace& b) {
  return Subspace::span(vstack(a.basis(), b.basis()));
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("subspace ambient mismatch");
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient_dim());
  const Matrix<Rational> constraints = vstack(a.annihilator(), b.annihilator());
  if (constraints.rows() == 0) return Subspace::full(a.ambient_dim());
  return Subspace::span(nullspace(constraints));
}

/// Image of the subspace under the row-convention map m (v -> v m).
inline Subspace image(const Subspace& s, const Matrix<Rational>& m) {
  if (s.is_zero()) return Subspace::zero(m.cols());
  return Subspace::span(s.basis() * m);
}

/// Row space of m: the image of the whole space under v -> v m.
inline Subspace row_space(const Matrix<Rational>& m) { return Subspace::span(m); }

/// {x : x m = 0}.
inline Subspace left_kernel(const Matrix<Rational>& m) {
  return Subspace::span(nullspace(m.transpose()));
}

}  // namespace liealg
