#pragma once

// Dense square matrices over an exact field (Rational or RatFunc).

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace negdim {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
Matrix<T> zero_matrix(std::size_t n) {
  return Matrix<T>(n, std::vector<T>(n, T(0)));
}

template <class T>
Matrix<T> identity_matrix(std::size_t n) {
  auto m = zero_matrix<T>(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
  return m;
}

template <class T, class U>
auto matmul(const Matrix<T>& a, const Matrix<U>& b) {
  using R = decltype(a[0][0] * b[0][0]);
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
  Matrix<R> out(n, std::vector<R>(m, R(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < inner; ++l) {
      if (a[i][l] == T(0)) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!(b[l][j] == U(0))) out[i][j] = out[i][j] + a[i][l] * b[l][j];
    }
  return out;
}

/// Gauss-Jordan inverse; throws if singular.
template <class T>
Matrix<T> invert(Matrix<T> a) {
  std::size_t n = a.size();
  auto inv = identity_matrix<T>(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == T(0)) ++piv;
    if (piv == n) throw std::domain_error("invert: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    T s = T(1) / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = a[col][j] * s;
      inv[col][j] = inv[col][j] * s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == T(0)) continue;
      T f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = a[r][j] - f * a[col][j];
        inv[r][j] = inv[r][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace negdim
