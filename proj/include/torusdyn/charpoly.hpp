#pragma once

#include "torusdyn/matrix.hpp"
#include "torusdyn/polynomial.hpp"

namespace torusdyn {

/// det(x I - M) by Berkowitz's division-free algorithm; works over any commutative ring.
template <class T>
Poly<T> charpoly(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("charpoly: non-square matrix");
  if (n == 0) return Poly<T>::constant(T(1));
  // Coefficients in descending order: vect[0] = 1.
  std::vector<T> vect{T(1), T(-m(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    // Leading (r+1)x(r+1) block = [[M, C], [R, a]] with M the previous block.
    const T& a = m(r, r);
    std::vector<T> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = m(i, r);
    // Toeplitz column: 1, -a, -R C, -R M C, ..., -R M^{r-1} C
    std::vector<T> t(r + 2);
    t[0] = T(1);
    t[1] = -a;
    std::vector<T> v = col;
    for (std::size_t s = 0; s < r; ++s) {
      T acc(0);
      for (std::size_t j = 0; j < r; ++j) acc += m(r, j) * v[j];
      t[s + 2] = -acc;
      if (s + 1 < r) {
        std::vector<T> w(r, T(0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) w[i] += m(i, j) * v[j];
        v = std::move(w);
      }
    }
    std::vector<T> next(r + 2, T(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += t[i - j] * vect[j];
    vect = std::move(next);
  }
  std::vector<T> asc(vect.rbegin(), vect.rend());
  return Poly<T>(std::move(asc));
}

}  // namespace torusdyn
