#include "torusdyn/alg_class.hpp"

namespace torusdyn {

AlgMatrix to_alg(const GaussRatMatrix& m) {
  return map_matrix<AlgNum>(m, [](const GaussRat& x) { return AlgNum(x); });
}

AlgClass to_alg(const CohomClass& c) { return AlgClass(c.k, c.p, to_alg(c.m)); }

int certified_sign(const AlgNum& x) {
  if (x.certified_zero()) return 0;
  if (!(x - x.conj()).certified_zero()) throw std::invalid_argument("certified_sign: number is not real");
  for (unsigned bits = 64; bits < (1U << 16); bits *= 2) {
    CBall b = x.enclose(bits);
    if (abs(b.mid.re) > b.rad) return sgn(b.mid.re);
  }
  throw std::runtime_error("certified_sign: no separation from zero");
}

bool certified_zero(const AlgMatrix& m) {
  for (const auto& x : m.data())
    if (!x.certified_zero()) return false;
  return true;
}

bool certified_equal(const AlgMatrix& a, const AlgMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return certified_zero(a - b);
}

AlgClass pullback(const TorusAutomorphism& f, const AlgClass& c) {
  if (f.k() != c.k) throw std::invalid_argument("pullback: dimension mismatch");
  AlgMatrix cp = to_alg(compound(to_rat(f.matrix()), c.p));
  return AlgClass(c.k, c.p, cp.conj_transpose() * c.m * cp);
}

std::optional<CohomClass> to_rational(const AlgClass& c) {
  GaussRatMatrix m(c.m.rows(), c.m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!c.m(i, j).is_constant()) return std::nullopt;
      m(i, j) = c.m(i, j).constant_term();
    }
  return CohomClass(c.k, c.p, m);
}

std::optional<bool> certified_nef(const AlgClass& c) {
  if (c.p != 1) throw std::invalid_argument("certified_nef: degree-1 classes only");
  if (auto r = to_rational(c)) return is_hermitian(r->m) && definiteness(r->m).psd;
  const std::size_t n = c.m.rows();
  if (!certified_equal(c.m, c.m.conj_transpose())) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (certified_sign(c.m(i, i)) < 0) return false;
  // rank <= 1: every 2x2 minor vanishes
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (!(c.m(i, a) * c.m(j, b) - c.m(i, b) * c.m(j, a)).certified_zero()) return std::nullopt;
  return true;
}

}  // namespace torusdyn
