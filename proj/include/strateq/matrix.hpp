#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strateq/errors.hpp"
#include "strateq/scalar.hpp"

namespace strateq {

template <class T>
using Vector = std::vector<T>;

// Dense row-major matrix over an exact field (Rational or QuadExt).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw ShapeError("matrix data does not match its shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  Vector<T> row(std::size_t i) const {
    return Vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  Vector<T> col(std::size_t j) const {
    Vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!strateq::is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
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
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Rational -> QuadExt embedding.
inline Matrix<QuadExt> lift(const Matrix<Rational>& m) {
  std::vector<QuadExt> data(m.data().begin(), m.data().end());
  return Matrix<QuadExt>(m.rows(), m.cols(), std::move(data));
}
inline Vector<QuadExt> lift(const Vector<Rational>& v) { return Vector<QuadExt>(v.begin(), v.end()); }

template <class T>
Vector<T> unit_vector(std::size_t n, std::size_t k) {
  Vector<T> e(n, T(0));
  e.at(k) = T(1);
  return e;
}

template <class T>
bool is_zero_vector(const Vector<T>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class T>
T dot(const Vector<T>& a, const Vector<T>& b) {
  if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
  T s(0);
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

template <class T>
Vector<T> operator*(const Matrix<T>& m, const Vector<T>& x) {
  if (x.size() != m.cols()) throw ShapeError("matrix-vector: length mismatch");
  Vector<T> y(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

// y^T M as a vector of length cols.
template <class T>
Vector<T> left_multiply(const Vector<T>& y, const Matrix<T>& m) {
  if (y.size() != m.rows()) throw ShapeError("vector-matrix: length mismatch");
  Vector<T> r(m.cols(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += y[i] * m(i, j);
  return r;
}

template <class T>
Matrix<T> outer(const Vector<T>& left, const Vector<T>& right) {
  Matrix<T> m(left.size(), right.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) m(i, j) = left[i] * right[j];
  return m;
}

// M + sign * left * right^T.
template <class T>
Matrix<T> outer_add(Matrix<T> m, const Vector<T>& left, const Vector<T>& right, int sign) {
  if (left.size() != m.rows() || right.size() != m.cols())
    throw ShapeError("outer_add: vector lengths do not match the matrix");
  if (sign != 1 && sign != -1) throw InvalidArgument("outer_add: sign must be +1 or -1");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sign > 0)
        m(i, j) += left[i] * right[j];
      else
        m(i, j) -= left[i] * right[j];
    }
  return m;
}

// First (i, j) in row-major order with a nonzero entry.
template <class T>
std::optional<std::pair<std::size_t, std::size_t>> first_nonzero(const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return std::make_pair(i, j);
  return std::nullopt;
}

// Fraction-free (Bareiss) elimination. Works in place on a copy; for
// integer input every intermediate pivot is an integer minor.
template <class T>
std::size_t rank(Matrix<T> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  T prev(1);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = T(0);
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

// Row scaling by denominators does not change the rank; it keeps the
// Bareiss intermediates integral.
inline std::size_t rank(const Matrix<Rational>& m) {
  Matrix<Rational> scaled = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    if (l != 1)
      for (std::size_t j = 0; j < m.cols(); ++j) scaled(i, j) *= Rational(l);
  }
  return rank<Rational>(std::move(scaled));
}

template <class T>
struct RankOneFactor {
  Vector<T> left;
  Vector<T> right;

  Matrix<T> product() const { return outer(left, right); }
};

// Factor per the rank-1 characterisation: with (i, j) the first nonzero
// entry, left = column j and right = row i / m_ij. Absent when M is zero or
// the reconstruction fails, i.e. rank(M) != 1. O(mn).
template <class T>
std::optional<RankOneFactor<T>> is_rank_one(const Matrix<T>& m) {
  auto pivot = first_nonzero(m);
  if (!pivot) return std::nullopt;
  auto [i, j] = *pivot;
  const T& mij = m(i, j);
  // m_st * m_ij == m_sj * m_it for all s, t is the division-free form of
  // m == left * right^T.
  for (std::size_t s = 0; s < m.rows(); ++s)
    for (std::size_t t = 0; t < m.cols(); ++t)
      if (m(s, t) * mij != m(s, j) * m(i, t)) return std::nullopt;
  RankOneFactor<T> f{m.col(j), m.row(i)};
  T inv = T(1) / mij;
  for (auto& x : f.right) x *= inv;
  return f;
}

// (u, v) with M = 1_m u^T + v 1_n^T, gauge v_0 = 0; absent when M is not in
// that subspace.
template <class T>
std::optional<std::pair<Vector<T>, Vector<T>>> subspace_membership(const Matrix<T>& m) {
  Vector<T> u = m.row(0);
  Vector<T> v = m.col(0);
  T corner = m(0, 0);
  for (auto& x : v) x -= corner;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != u[j] + v[i]) return std::nullopt;
  return std::make_pair(std::move(u), std::move(v));
}

template <class T>
Matrix<T> ones_outer(std::size_t m, const Vector<T>& u) {  // 1_m u^T
  return outer(Vector<T>(m, T(1)), u);
}
template <class T>
Matrix<T> outer_ones(const Vector<T>& v, std::size_t n) {  // v 1_n^T
  return outer(v, Vector<T>(n, T(1)));
}

// All rows identical; returns that row.
template <class T>
std::optional<Vector<T>> common_row(const Matrix<T>& m) {
  for (std::size_t i = 1; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != m(0, j)) return std::nullopt;
  return m.row(0);
}

// All columns identical; returns that column.
template <class T>
std::optional<Vector<T>> common_col(const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 1; j < m.cols(); ++j)
      if (m(i, j) != m(i, 0)) return std::nullopt;
  return m.col(0);
}

enum class SolveStatus { unique, none, infinite };

template <class T>
struct LinearSolution {
  SolveStatus status;
  Vector<T> x;  // filled when status == unique
};

// Gauss-Jordan solve of M x = b over the field.
template <class T>
LinearSolution<T> solve(const Matrix<T>& m, const Vector<T>& b) {
  if (b.size() != m.rows()) throw ShapeError("solve: right-hand side length mismatch");
  const std::size_t rows = m.rows(), cols = m.cols();
  Matrix<T> aug(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(aug(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j <= cols; ++j) std::swap(aug(p, j), aug(r, j));
    T inv = T(1) / aug(r, c);
    for (std::size_t j = c; j <= cols; ++j) aug(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(aug(i, c))) continue;
      T f = aug(i, c);
      for (std::size_t j = c; j <= cols; ++j) aug(i, j) -= f * aug(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!is_zero(aug(i, cols))) return {SolveStatus::none, {}};
  if (r < cols) return {SolveStatus::infinite, {}};
  Vector<T> x(cols, T(0));
  for (std::size_t k = 0; k < r; ++k) x[pivot_cols[k]] = aug(k, cols);
  return {SolveStatus::unique, std::move(x)};
}

// z in colspan(M), decided by consistency of M x = z.
template <class T>
bool in_column_span(const Matrix<T>& m, const Vector<T>& z) {
  return solve(m, z).status != SolveStatus::none;
}

}  // namespace strateq
