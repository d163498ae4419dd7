#ifndef COXEX_LINEAR_ALGEBRA_HPP
#define COXEX_LINEAR_ALGEBRA_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace coxex {

using Rational = boost::rational<std::int64_t>;

template <class T>
using Vector = std::vector<T>;
template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Tolerance for real (non-crystallographic) arithmetic.
inline constexpr double kRealTolerance = 1e-9;

inline bool near_zero(const Rational& x) { return x.numerator() == 0; }
inline bool near_zero(double x) { return std::abs(x) < kRealTolerance; }

inline double to_double(const Rational& x) {
  return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}
inline double to_double(double x) { return x; }

std::string to_string(const Rational& x);

template <class T>
Matrix<T> identity_matrix(std::size_t n) {
  Matrix<T> m(n, Vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
  return m;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Matrix<T> c(n, Vector<T>(m, T(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (near_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

/// Row vector times matrix.
template <class T>
Vector<T> apply_right(const Vector<T>& v, const Matrix<T>& m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  Vector<T> out(cols, T(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (near_zero(v[i])) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] += v[i] * m[i][j];
  }
  return out;
}

template <class T>
T dot(const Vector<T>& u, const Matrix<T>& gram, const Vector<T>& v) {
  T s(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (near_zero(u[i])) continue;
    for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * gram[i][j] * v[j];
  }
  return s;
}

template <class T>
bool approx_equal(const Vector<T>& u, const Vector<T>& v) {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!near_zero(u[i] - v[i])) return false;
  return true;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& a) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = r;
    for (std::size_t i = r; i < rows; ++i) {
      if constexpr (std::is_floating_point_v<T>) {
        if (std::abs(a[i][c]) > std::abs(a[best][c])) best = i;
      } else if (!near_zero(a[i][c])) {
        best = i;
        break;
      }
    }
    if (near_zero(a[best][c])) continue;
    std::swap(a[r], a[best]);
    const T inv = T(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || near_zero(a[i][c])) continue;
      const T f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> a) {
  return row_reduce(a).size();
}

/// Basis of {v : a v = 0} (column-vector convention).
template <class T>
Matrix<T> null_space(Matrix<T> a, std::size_t cols) {
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<T> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector<T> v(cols, T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  Matrix<T> t(cols, Vector<T>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace coxex

#endif  // COXEX_LINEAR_ALGEBRA_HPP
