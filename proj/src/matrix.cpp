#include "torusdyn/matrix.hpp"

namespace torusdyn {

IntMatrix realify(const GaussIntMatrix& a) {
  const std::size_t k = a.rows();
  IntMatrix r(2 * k, 2 * k);
  // z = x + iy; (a + ib)(x + iy) = (ax - by) + i(bx + ay)
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      r(i, j) = a(i, j).re;
      r(i, k + j) = -a(i, j).im;
      r(k + i, j) = a(i, j).im;
      r(k + i, k + j) = a(i, j).re;
    }
  return r;
}

GaussIntMatrix unimodular_inverse(const GaussIntMatrix& a) {
  auto inv = inverse(to_rat(a));
  if (!inv) throw std::domain_error("unimodular_inverse: singular matrix");
  GaussIntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const GaussRat& z = (*inv)(i, j);
      if (z.re.get_den() != 1 || z.im.get_den() != 1)
        throw std::domain_error("unimodular_inverse: determinant is not a unit");
      r(i, j) = GaussInt(z.re.get_num(), z.im.get_num());
    }
  return r;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  auto inv = inverse(to_rat(a));
  if (!inv) throw std::domain_error("unimodular_inverse: singular matrix");
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rat& z = (*inv)(i, j);
      if (z.get_den() != 1) throw std::domain_error("unimodular_inverse: determinant is not +-1");
      r(i, j) = z.get_num();
    }
  return r;
}

}  // namespace torusdyn
