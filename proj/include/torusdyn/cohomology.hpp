#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "torusdyn/matrix.hpp"

namespace torusdyn {

// Coordinates on H^{p,p}(T^k).
//
// Subsets S of {0..k-1} with |S| = p are bitmasks listed in lexicographic order of their sorted
// elements. With e_{S,T} := i^{p^2} dz_S ^ dzbar_T (ascending indices inside S and T), a class
// is stored as the matrix M with M(S,T) the coefficient of e_{T,S}. Then:
//   - real classes are exactly Hermitian M, and for p = 1 M is the Hermitian form of the class;
//   - e_{S,T} ^ e_{S',T'} = sgn(S,S') sgn(T,T') e_{S u S', T u T'}, where sgn(A,B) is the sign
//     of the shuffle sorting A followed by B (zero on overlap);
//   - the pullback by z -> Az is M -> C^* M C with C the p-th compound matrix of A;
//   - e_{[k],[k]} is a positive multiple of the volume form.

/// p-subsets of {0..k-1} as bitmasks, lexicographic order.
const std::vector<unsigned>& subsets(unsigned k, unsigned p);
/// Position of a p-subset in subsets(k, popcount).
std::size_t subset_index(unsigned k, unsigned mask);
/// Sign of the shuffle that sorts A followed by B; 0 when A and B intersect.
int shuffle_sign(unsigned a, unsigned b);
unsigned long binomial(unsigned n, unsigned r);

template <class T>
struct ClassT {
  unsigned k = 0;
  unsigned p = 0;
  Matrix<T> m;

  ClassT() = default;
  ClassT(unsigned k_, unsigned p_, Matrix<T> m_) : k(k_), p(p_), m(std::move(m_)) {
    const std::size_t n = binomial(k, p);
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("ClassT: coefficient matrix has wrong size");
  }
  static ClassT zero(unsigned k, unsigned p) {
    const std::size_t n = binomial(k, p);
    return ClassT(k, p, Matrix<T>(n, n));
  }
  static ClassT from_hermitian(const Matrix<T>& h) {
    return ClassT(static_cast<unsigned>(h.rows()), 1, h);
  }
  bool structurally_zero() const { return m.is_zero(); }
  ClassT& operator+=(const ClassT& o) {
    check(o);
    m += o.m;
    return *this;
  }
  friend ClassT operator+(ClassT a, const ClassT& b) { return a += b; }
  friend ClassT operator-(ClassT a, const ClassT& b) {
    a.check(b);
    a.m -= b.m;
    return a;
  }
  friend ClassT operator*(const T& s, ClassT a) {
    a.m *= s;
    return a;
  }
  friend bool operator==(const ClassT& a, const ClassT& b) { return a.k == b.k && a.p == b.p && a.m == b.m; }

 private:
  void check(const ClassT& o) const {
    if (k != o.k || p != o.p) throw std::invalid_argument("ClassT: degree mismatch");
  }
};

using CohomClass = ClassT<GaussRat>;

/// Exterior product of a (p1,p1)- and a (p2,p2)-class.
template <class T>
ClassT<T> wedge(const ClassT<T>& a, const ClassT<T>& b) {
  if (a.k != b.k) throw std::invalid_argument("wedge: dimension mismatch");
  if (a.p + b.p > a.k) throw std::invalid_argument("wedge: degree exceeds dimension");
  const unsigned k = a.k;
  ClassT<T> r = ClassT<T>::zero(k, a.p + b.p);
  const auto& sa = subsets(k, a.p);
  const auto& sb = subsets(k, b.p);
  for (std::size_t i = 0; i < sa.size(); ++i)
    for (std::size_t j = 0; j < sa.size(); ++j) {
      const T& x = a.m(i, j);
      if (is_zero(x)) continue;
      for (std::size_t u = 0; u < sb.size(); ++u) {
        int s1 = shuffle_sign(sa[i], sb[u]);
        if (s1 == 0) continue;
        std::size_t row = subset_index(k, sa[i] | sb[u]);
        for (std::size_t v = 0; v < sb.size(); ++v) {
          int s2 = shuffle_sign(sa[j], sb[v]);
          if (s2 == 0) continue;
          const T& y = b.m(u, v);
          if (is_zero(y)) continue;
          std::size_t col = subset_index(k, sa[j] | sb[v]);
          if (s1 * s2 > 0)
            r.m(row, col) += x * y;
          else
            r.m(row, col) -= x * y;
        }
      }
    }
  return r;
}

template <class T>
ClassT<T> wedge_all(const std::vector<ClassT<T>>& cs, unsigned k) {
  ClassT<T> acc(k, 0, Matrix<T>::identity(1));
  for (const auto& c : cs) acc = wedge(acc, c);
  return acc;
}

/// Coefficient of the top class e_{[k],[k]} of a wedge of classes of total degree k.
template <class T>
T volume_coefficient(const std::vector<ClassT<T>>& cs) {
  if (cs.empty()) throw std::invalid_argument("volume_coefficient: no classes");
  unsigned total = 0;
  for (const auto& c : cs) total += c.p;
  if (total != cs[0].k) throw std::invalid_argument("volume_coefficient: total degree differs from dimension");
  return wedge_all(cs, cs[0].k).m(0, 0);
}

/// d^k/dt_1..dt_k det(sum t_i H_i), by inclusion-exclusion over subsets of the slots.
template <class T>
T polarized_determinant(const std::vector<Matrix<T>>& hs) {
  const std::size_t k = hs.size();
  if (k == 0) return T(1);
  T acc(0);
  for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
    Matrix<T> s(k, k);
    int count = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1UL << i)) {
        s += hs[i];
        ++count;
      }
    T d = bareiss_determinant(s);
    if ((k - static_cast<std::size_t>(count)) % 2 == 0)
      acc += d;
    else
      acc -= d;
  }
  return acc;
}

/// Intersection number of classes of total degree k. For k classes of degree 1 this is the
/// polarized determinant of their Hermitian matrices (so omega_I^k = k!); otherwise the volume
/// coefficient of the wedge, which agrees with it on degree-1 inputs.
Rat intersection_number(const std::vector<CohomClass>& cs);

/// p-th compound matrix: entry (S,T) = det A[S,T].
template <class T>
Matrix<T> compound(const Matrix<T>& a, unsigned p) {
  const unsigned k = static_cast<unsigned>(a.rows());
  const auto& ss = subsets(k, p);
  Matrix<T> c(ss.size(), ss.size());
  for (std::size_t i = 0; i < ss.size(); ++i)
    for (std::size_t j = 0; j < ss.size(); ++j) {
      Matrix<T> sub(p, p);
      std::size_t r = 0;
      for (unsigned x = 0; x < k; ++x) {
        if (!(ss[i] >> x & 1U)) continue;
        std::size_t col = 0;
        for (unsigned y = 0; y < k; ++y)
          if (ss[j] >> y & 1U) sub(r, col++) = a(x, y);
        ++r;
      }
      c(i, j) = p == 0 ? T(1) : bareiss_determinant(sub);
    }
  return c;
}

/// Pullback of a class by the linear map z -> Az.
template <class T>
ClassT<T> pullback_by(const Matrix<T>& a, const ClassT<T>& c) {
  if (a.rows() != c.k) throw std::invalid_argument("pullback: dimension mismatch");
  Matrix<T> cp = compound(a, c.p);
  return ClassT<T>(c.k, c.p, cp.conj_transpose() * c.m * cp);
}

/// Rank-one class w w^*.
template <class T>
ClassT<T> rank_one_class(const std::vector<T>& w) {
  const std::size_t k = w.size();
  Matrix<T> m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = w[i] * conj(w[j]);
  return ClassT<T>(static_cast<unsigned>(k), 1, m);
}

bool is_hermitian(const GaussRatMatrix& h);

/// Exact semidefiniteness of a Hermitian (or real symmetric) matrix by pivoted elimination.
/// A failure of semidefiniteness comes with a witness v with v^* H v < 0.
template <class T>
struct DefinitenessResult {
  bool psd = false;
  bool pd = false;
  std::optional<std::vector<T>> witness;
  std::vector<T> pivots;  // positive pivots used, in order
};

template <class T>
DefinitenessResult<T> definiteness(const Matrix<T>& h) {
  const std::size_t n = h.rows();
  DefinitenessResult<T> out;
  if (n == 0) {
    out.psd = out.pd = true;
    return out;
  }
  auto re = [](const T& x) -> Rat {
    if constexpr (std::is_same_v<T, Rat>)
      return x;
    else
      return x.re;
  };
  for (std::size_t j = 0; j < n; ++j)
    if (sgn(re(h(j, j))) < 0) {
      std::vector<T> v(n, T(0));
      v[j] = T(1);
      out.witness = v;
      return out;
    }
  std::size_t piv = n;
  for (std::size_t j = 0; j < n && piv == n; ++j)
    if (sgn(re(h(j, j))) > 0) piv = j;
  if (piv == n) {
    // zero diagonal: PSD only if the matrix vanishes
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        if (!is_zero(h(j, l))) {
          std::vector<T> v(n, T(0));
          v[j] = T(1);
          v[l] = -conj(h(j, l));
          out.witness = v;
          return out;
        }
    out.psd = true;
    return out;
  }
  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < n; ++j)
    if (j != piv) rest.push_back(j);
  const T a = h(piv, piv);
  Matrix<T> s(n - 1, n - 1);
  for (std::size_t x = 0; x < rest.size(); ++x)
    for (std::size_t y = 0; y < rest.size(); ++y)
      s(x, y) = h(rest[x], rest[y]) - h(rest[x], piv) * h(piv, rest[y]) / a;
  DefinitenessResult<T> sub = definiteness(s);
  out.psd = sub.psd;
  out.pd = sub.pd;
  out.pivots.push_back(a);
  out.pivots.insert(out.pivots.end(), sub.pivots.begin(), sub.pivots.end());
  if (sub.witness) {
    std::vector<T> v(n, T(0));
    T dot(0);
    for (std::size_t x = 0; x < rest.size(); ++x) {
      v[rest[x]] = (*sub.witness)[x];
      dot += h(piv, rest[x]) * (*sub.witness)[x];
    }
    v[piv] = -dot / a;
    out.witness = v;
  }
  return out;
}

/// v^* H v.
template <class T>
T hermitian_value(const Matrix<T>& h, const std::vector<T>& v) {
  T acc(0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) acc += conj(v[i]) * h(i, j) * v[j];
  return acc;
}

/// Nef: positive semidefinite. Kahler: positive definite. Degree-1 classes only.
bool is_nef(const CohomClass& c);
bool is_kahler(const CohomClass& c);

// Real basis of N x N Hermitian matrices: E_jj (j ascending), then for each pair j < l in
// lexicographic order E_jl + E_lj followed by i (E_jl - E_lj).
std::vector<GaussRatMatrix> hermitian_basis(std::size_t n);
std::vector<Rat> hermitian_coordinates(const GaussRatMatrix& h);
GaussRatMatrix hermitian_from_coordinates(const std::vector<Rat>& x, std::size_t n);

}  // namespace torusdyn
