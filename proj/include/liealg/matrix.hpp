#pragma once

#include "liealg/rational.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace liealg {

template <class T>
using Vector = std::vector<T>;

/// Dense row-major matrix. Entry (r, c) is 0-based; in the algebra's notation
/// the lower index b_i is the row and the upper index b^l is the column, so
/// row i holds the image of basis element X_{i+1}.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<Vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  Vector<T> row(std::size_t r) const {
    return Vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  void set_row(std::size_t r, std::span<const T> values) {
    if (values.size() != cols_) throw Error("row length mismatch");
    std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T(0); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Copy of the rectangular block starting at (r0, c0).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (bkj == T(0)) continue;
          p(i, j) += aik * bkj;
        }
      }
    return p;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Row vector times matrix: the image of x under the map whose rows are images.
template <class T>
Vector<T> operator*(const Vector<T>& x, const Matrix<T>& m) {
  if (x.size() != m.rows()) throw Error("vector-matrix shape mismatch");
  Vector<T> out(m.cols(), T(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == T(0)) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
  }
  return out;
}

template <class T>
Vector<T> unit_vector(std::size_t n, std::size_t i) {
  Vector<T> v(n, T(0));
  v.at(i) = T(1);
  return v;
}

template <class T>
bool is_zero(const Vector<T>& v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return x == T(0); });
}

template <class T>
Matrix<T> power(const Matrix<T>& m, std::size_t k) {
  Matrix<T> result = Matrix<T>::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) result = result * m;
  return result;
}

template <class T>
T trace(const Matrix<T>& m) {
  T t(0);
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

/// Vertical concatenation; an empty operand is skipped.
template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw Error("vstack column mismatch");
  Matrix<T> s(a.rows() + b.rows(), a.cols());
  s.set_block(0, 0, a);
  s.set_block(a.rows(), 0, b);
  return s;
}

template <class T>
Matrix<T> block_diagonal(const std::vector<Matrix<T>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix<T> m(n, n);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    m.set_block(at, at, b);
    at += b.rows();
  }
  return m;
}

inline Matrix<double> to_numeric(const Matrix<Rational>& m) {
  Matrix<double> d(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d(r, c) = to_double(m(r, c));
  return d;
}

inline double max_abs(const Matrix<double>& m) {
  double best = 0.0;
  for (double x : m.data()) best = std::max(best, std::abs(x));
  return best;
}

// ---------------------------------------------------------------------------
// Exact elimination over the rationals.

struct Echelon {
  Matrix<Rational> reduced;          // reduced row-echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each remaining row
};

inline Echelon rref(Matrix<Rational> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = lead; r < rows; ++r)
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(pivot, k), m(lead, k));
    const Rational inv = 1 / m(lead, c);
    for (std::size_t k = c; k < cols; ++k)
      if (m(lead, k) != 0) m(lead, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (m(lead, k) != 0) m(r, k) -= f * m(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return {m.block(0, 0, pivots.size(), cols), std::move(pivots)};
}

inline std::size_t rank(const Matrix<Rational>& m) { return rref(m).pivots.size(); }

/// Basis (as rows, in reduced echelon form) of {x : m * x = 0}.
inline Matrix<Rational> nullspace(const Matrix<Rational>& m) {
  const Echelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector<Rational>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector<Rational> x(n, Rational(0));
    x[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(x));
  }
  if (basis.empty()) return Matrix<Rational>(0, n);
  return rref(Matrix<Rational>::from_rows(basis, n)).reduced;
}

inline Rational det(Matrix<Rational> m) {
  if (!m.is_square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t r = c; r < n; ++r)
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(pivot, k), m(c, k));
      d = -d;
    }
    d *= m(c, c);
    const Rational inv = 1 / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k)
        if (m(c, k) != 0) m(r, k) -= f * m(c, k);
    }
  }
  return d;
}

inline std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& m) {
  if (!m.is_square()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<Rational> aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix<Rational>::identity(n));
  const Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

// ---------------------------------------------------------------------------
// Floating-point kernels.

/// Determinant by partial-pivot LU.
inline double det(Matrix<double> m) {
  if (!m.is_square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  double d = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m(r, c)) > std::abs(m(pivot, c))) pivot = r;
    if (m(pivot, c) == 0.0) return 0.0;
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(pivot, k), m(c, k));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return d;
}

/// Solves a * x = b by Gaussian elimination with partial pivoting.
inline Matrix<double> solve(Matrix<double> a, Matrix<double> b) {
  const std::size_t n = a.rows();
  if (!a.is_square() || b.rows() != n) throw Error("solve shape mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a(r, c)) > std::abs(a(pivot, c))) pivot = r;
    if (a(pivot, c) == 0.0) throw Error("singular system");
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(pivot, k), a(c, k));
      for (std::size_t k = 0; k < b.cols(); ++k) std::swap(b(pivot, k), b(c, k));
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a(r, c) / a(c, c);
      if (f == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
      for (std::size_t k = 0; k < b.cols(); ++k) b(r, k) -= f * b(c, k);
    }
  }
  Matrix<double> x(n, b.cols());
  for (std::size_t k = 0; k < b.cols(); ++k)
    for (std::size_t ri = n; ri-- > 0;) {
      double s = b(ri, k);
      for (std::size_t j = ri + 1; j < n; ++j) s -= a(ri, j) * x(j, k);
      x(ri, k) = s / a(ri, ri);
    }
  return x;
}

// ---------------------------------------------------------------------------
// Matrix exponential.

class NotNilpotent : public Error {
 public:
  explicit NotNilpotent(std::size_t power)
      : Error("exact exponential needs a nilpotent matrix, but M^" + std::to_string(power) +
              " is nonzero"),
        power_(power) {}
  std::size_t power() const noexcept { return power_; }

 private:
  std::size_t power_;
};

/// Smallest k with m^k = 0, or nullopt if m is not nilpotent.
inline std::optional<std::size_t> nilpotency_index(const Matrix<Rational>& m) {
  if (!m.is_square()) throw Error("nilpotency of a non-square matrix");
  Matrix<Rational> p = Matrix<Rational>::identity(m.rows());
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    p = p * m;
    if (p.is_zero()) return k;
  }
  if (m.rows() == 0) return 0;
  return std::nullopt;
}

/// exp(m) as the finite series sum m^k / k!; throws NotNilpotent otherwise.
inline Matrix<Rational> expm_exact(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  if (!m.is_square()) throw Error("exponential of a non-square matrix");
  Matrix<Rational> sum = Matrix<Rational>::identity(n);
  Matrix<Rational> term = sum;
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * m;
    if (term.is_zero()) return sum;
    term *= Rational(1, k);
    sum += term;
  }
  throw NotNilpotent(n);
}

/// Padé-13 scaling and squaring (Higham 2005); relative accuracy ~1e-15.
inline Matrix<double> expm(const Matrix<double>& a) {
  if (!a.is_square()) throw Error("exponential of a non-square matrix");
  const std::size_t n = a.rows();
  static constexpr double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                 1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                 670442572800.0,      33522128640.0,       1323241920.0,
                                 40840800.0,          960960.0,            16380.0,
                                 182.0,               1.0};
  constexpr double theta13 = 5.371920351148152;

  double norm1 = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) s += std::abs(a(r, c));
    norm1 = std::max(norm1, s);
  }
  int squarings = 0;
  if (norm1 > theta13) squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
  const Matrix<double> x = a * std::ldexp(1.0, -squarings);
  const auto id = Matrix<double>::identity(n);
  const auto x2 = x * x;
  const auto x4 = x2 * x2;
  const auto x6 = x4 * x2;
  const auto u = x * (x6 * (b[13] * x6 + b[11] * x4 + b[9] * x2) + b[7] * x6 + b[5] * x4 +
                      b[3] * x2 + b[1] * id);
  const auto v = x6 * (b[12] * x6 + b[10] * x4 + b[8] * x2) + b[6] * x6 + b[4] * x4 +
                 b[2] * x2 + b[0] * id;
  Matrix<double> r = solve(v - u, v + u);
  for (int i = 0; i < squarings; ++i) r = r * r;
  return r;
}

}  // namespace liealg
