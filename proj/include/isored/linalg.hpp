#pragma once

// Dense matrices over an exact field (Gauss or RatFunc) and the elimination
// routines the rest of the library is built on.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "isored/error.hpp"
#include "isored/ratfield.hpp"

namespace isored {

template <class T>
using Vector = std::vector<T>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector<T> row(std::size_t i) const {
    return Vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  Vector<T> col(std::size_t j) const {
    Vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    Matrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x.is_zero(); });
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
      }
    return out;
  }
  friend Vector<T> operator*(const Matrix& a, const Vector<T>& x) {
    if (a.cols_ != x.size()) throw Error(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
    Vector<T> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!a(i, j).is_zero() && !x[j].is_zero()) out[i] += a(i, j) * x[j];
    return out;
  }
  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using GaussMatrix = Matrix<Gauss>;
using RatMatrix = Matrix<RatFunc>;
using GaussVector = Vector<Gauss>;

/// Pivot preference: any nonzero scalar is as good as another; for rational
/// functions prefer the lowest total degree to keep intermediates small.
inline std::size_t pivot_cost(const Gauss&) { return 0; }
inline std::size_t pivot_cost(const RatFunc& f) { return f.total_degree(); }

inline bool is_zero_vector(const GaussVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Gauss& x) { return x.is_zero(); });
}

/// Evaluates every entry at z; throws Error(PoleError) on a pole.
GaussMatrix evaluate(const RatMatrix& m, const Gauss& z);
RatMatrix to_ratmatrix(const GaussMatrix& m);
/// All entries constant.
bool is_constant(const RatMatrix& m);
/// M - λI
RatMatrix minus_lambda_identity(const RatMatrix& m);
/// M - z I
GaussMatrix shifted(const GaussMatrix& m, const Gauss& z);

namespace detail {

template <class T>
std::optional<std::size_t> choose_pivot(const Matrix<T>& m, std::size_t col, std::size_t from_row) {
  std::optional<std::size_t> best;
  std::size_t best_cost = 0;
  for (std::size_t r = from_row; r < m.rows(); ++r) {
    if (m(r, col).is_zero()) continue;
    const std::size_t cost = pivot_cost(m(r, col));
    if (!best || cost < best_cost) {
      best = r;
      best_cost = cost;
    }
  }
  return best;
}

template <class T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace detail

template <class T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    auto p = detail::choose_pivot(m, c, c);
    if (!p) return T();
    if (*p != c) {
      detail::swap_rows(m, *p, c);
      det = -det;
    }
    const T pivot = m(c, c);
    det *= pivot;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const T factor = m(r, c) / pivot;
      for (std::size_t j = c + 1; j < n; ++j) {
        if (!m(c, j).is_zero()) m(r, j) -= factor * m(c, j);
      }
      m(r, c) = T();
    }
  }
  return det;
}

/// Reduced row echelon form with the pivot column list.
template <class T>
struct RowEchelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

template <class T>
RowEchelon<T> row_echelon(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    auto p = detail::choose_pivot(m, c, row);
    if (!p) continue;
    detail::swap_rows(m, *p, row);
    const T inv = T(1) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      const T factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= factor * m(row, j);
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return row_echelon(m).rank();
}

/// Basis of the right nullspace; one vector per free column, with that
/// coordinate set to 1.
template <class T>
std::vector<Vector<T>> nullspace(const Matrix<T>& m) {
  const auto ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<Vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<T> v(m.cols());
    v[free] = T(1);
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) v[ech.pivot_cols[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of A x = b (free variables set to zero), or nullopt when b
/// is outside the column space.
template <class T>
std::optional<Vector<T>> solve_particular(const Matrix<T>& a, const Vector<T>& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "right-hand side size mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto ech = row_echelon(std::move(aug));
  if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == a.cols()) return std::nullopt;
  Vector<T> x(a.cols());
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) x[ech.pivot_cols[r]] = ech.reduced(r, a.cols());
  return x;
}

/// X with A X = B for square nonsingular A; nullopt when A is singular.
template <class T>
std::optional<Matrix<T>> solve(Matrix<T> a, Matrix<T> b) {
  if (!a.is_square() || a.rows() != b.rows()) throw Error(ErrorCode::InvalidArgument, "solve shape mismatch");
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  for (std::size_t c = 0; c < n; ++c) {
    auto p = detail::choose_pivot(a, c, c);
    if (!p) return std::nullopt;
    detail::swap_rows(a, *p, c);
    detail::swap_rows(b, *p, c);
    const T inv = T(1) / a(c, c);
    for (std::size_t j = c; j < n; ++j) a(c, j) *= inv;
    for (std::size_t j = 0; j < m; ++j) b(c, j) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      const T factor = a(r, c);
      for (std::size_t j = c; j < n; ++j)
        if (!a(c, j).is_zero()) a(r, j) -= factor * a(c, j);
      for (std::size_t j = 0; j < m; ++j)
        if (!b(c, j).is_zero()) b(r, j) -= factor * b(c, j);
    }
  }
  return b;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
  return solve(a, Matrix<T>::identity(a.rows()));
}

}  // namespace isored
