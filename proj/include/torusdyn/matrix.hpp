#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusdyn/numeric.hpp"

namespace torusdyn {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("Matrix: data size mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      for (const auto& x : r) data_.push_back(x);
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

  const std::vector<T>& data() const { return data_; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<long>(i * cols_),
                          data_.begin() + static_cast<long>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!torusdyn::is_zero(x)) return false;
    return true;
  }
  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? T(1) : T(0))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix conj_transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = conj((*this)(i, j));
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix m(*this);
    for (auto& x : m.data_) x = -x;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& x = a(i, l);
        if (torusdyn::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(l, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("Matrix: vector shape mismatch");
    std::vector<T> r(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;
using GaussIntMatrix = Matrix<GaussInt>;
using GaussRatMatrix = Matrix<GaussRat>;

template <class T>
Matrix<T> power(const Matrix<T>& m, unsigned long e) {
  Matrix<T> result = Matrix<T>::identity(m.rows());
  Matrix<T> base = m;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

template <class To, class From, class F>
Matrix<To> map_matrix(const Matrix<From>& m, F f) {
  Matrix<To> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = f(m(i, j));
  return r;
}

inline GaussRatMatrix to_rat(const GaussIntMatrix& m) {
  return map_matrix<GaussRat>(m, [](const GaussInt& z) { return to_rat(z); });
}
inline RatMatrix to_rat(const IntMatrix& m) {
  return map_matrix<Rat>(m, [](const Int& z) { return Rat(z); });
}
inline GaussIntMatrix to_gauss(const IntMatrix& m) {
  return map_matrix<GaussInt>(m, [](const Int& z) { return GaussInt(z); });
}
inline GaussRatMatrix to_gauss(const RatMatrix& m) {
  return map_matrix<GaussRat>(m, [](const Rat& z) { return GaussRat(z); });
}

/// Fraction-free determinant (Bareiss) over an integral domain with exact division.
template <class T>
T bareiss_determinant(Matrix<T> m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  if (n == 0) return T(1);
  T sign(1);
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_div(v, prev);
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Reduced row echelon form over a field; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    T inv = inverse(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of the right kernel {x : m x = 0} over a field.
template <class T>
std::vector<std::vector<T>> kernel(Matrix<T> m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Inverse over a field; nullopt when singular.
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Solve m x = b over a field; nullopt when inconsistent. Free variables are set to zero.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  std::vector<T> x(m.cols(), T(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols());
  return x;
}

template <class T>
std::string to_string(const Matrix<T>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += to_string(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

/// k x k Gaussian integer matrix acting as a real 2k x 2k integer matrix on (Re, Im) coordinates.
IntMatrix realify(const GaussIntMatrix& a);

/// Exact inverse of a Gaussian integer matrix with unit determinant.
GaussIntMatrix unimodular_inverse(const GaussIntMatrix& a);

/// Exact inverse of an integer matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& a);

}  // namespace torusdyn
