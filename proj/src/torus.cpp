#include "torusdyn/torus.hpp"

#include <algorithm>
#include <map>

#include "torusdyn/charpoly.hpp"
#include "torusdyn/cyclotomic.hpp"
#include "torusdyn/root_moduli.hpp"

namespace torusdyn {

TorusAutomorphism::TorusAutomorphism(GaussIntMatrix a, std::string name) : a_(std::move(a)), name_(std::move(name)) {
  if (!a_.is_square() || a_.rows() == 0) throw std::invalid_argument("TorusAutomorphism: matrix must be square, k >= 1");
  if (!is_gauss_unit(bareiss_determinant(a_)))
    throw std::invalid_argument("TorusAutomorphism: determinant is not a unit of Z[i]");
}

TorusAutomorphism TorusAutomorphism::from_int(const IntMatrix& a, std::string name) {
  return TorusAutomorphism(to_gauss(a), std::move(name));
}

TorusAutomorphism TorusAutomorphism::identity(unsigned k) {
  return TorusAutomorphism(GaussIntMatrix::identity(k), "identity");
}

TorusAutomorphism TorusAutomorphism::inverse() const {
  return TorusAutomorphism(unimodular_inverse(a_), name_.empty() ? "" : name_ + "^-1");
}

TorusAutomorphism TorusAutomorphism::power(long n) const {
  if (n < 0) return inverse().power(-n);
  return TorusAutomorphism(torusdyn::power(a_, static_cast<unsigned long>(n)), name_);
}

TorusAutomorphism operator*(const TorusAutomorphism& f, const TorusAutomorphism& g) {
  return TorusAutomorphism(f.a_ * g.a_);
}

IntMatrix hpp_matrix(const TorusAutomorphism& f, unsigned p) {
  const unsigned k = f.k();
  if (p > k) throw std::invalid_argument("hpp_matrix: p out of range");
  GaussRatMatrix c = to_rat(compound(f.matrix(), p));
  GaussRatMatrix cs = c.conj_transpose();
  const std::size_t n = c.rows();
  auto basis = hermitian_basis(n);
  IntMatrix out(n * n, n * n);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto x = hermitian_coordinates(cs * basis[j] * c);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].get_den() != 1) throw std::logic_error("hpp_matrix: non-integral entry");
      out(i, j) = x[i].get_num();
    }
  }
  return out;
}

CohomClass pullback(const TorusAutomorphism& f, const CohomClass& c) { return pullback_by(to_rat(f.matrix()), c); }

namespace {

GaussIntPoly charpoly_of(const TorusAutomorphism& f) { return charpoly(f.matrix()); }

// Eigenvalue moduli squared of A, descending, one entry per eigenvalue (with multiplicity).
std::vector<AlgebraicReal> moduli_squared_with_multiplicity(const TorusAutomorphism& f, const Rat& eps) {
  std::vector<AlgebraicReal> out;
  for (auto& e : root_moduli(charpoly_of(f), eps)) {
    e.modulus_squared.refine_to(eps);
    for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.modulus_squared);
  }
  return out;
}

}  // namespace

RatInterval closed_form_degree(const TorusAutomorphism& f, unsigned p, const Rat& eps) {
  if (p > f.k()) throw std::invalid_argument("closed_form_degree: p out of range");
  auto ms = moduli_squared_with_multiplicity(f, eps);
  RatInterval acc = RatInterval::point(Rat(1));
  for (unsigned i = 0; i < p; ++i) acc = acc * ms[i].interval();
  return acc;
}

AlgebraicReal dynamical_degree(const TorusAutomorphism& f, unsigned p) {
  if (p > f.k()) throw std::invalid_argument("dynamical_degree: p out of range");
  if (p == 0 || p == f.k()) return AlgebraicReal(Rat(1));
  IntPoly cp = squarefree_part(charpoly(hpp_matrix(f, p)));
  // f^* preserves the nef cone, so the spectral radius is the largest real eigenvalue. Sturm
  // counts against the closed-form enclosure show that no real eigenvalue lies above it and
  // exactly one lies inside; this isolates that eigenvalue without isolating all the others.
  SturmSequence sturm(cp);
  const Rat top = root_bound(cp);
  for (long e = 60; e <= 960; e *= 2) {
    Rat eps = pow2(-e);
    RatInterval cf = closed_form_degree(f, p, eps);
    Rat lo = cf.lo - eps, hi = cf.hi + eps;
    if (sign_at(cp, lo) == 0) continue;
    if (hi < top && sturm.count(hi, top) != 0)
      throw std::logic_error("dynamical_degree: real eigenvalue above the closed form");
    int n = sturm.count(lo, hi);
    if (n == 0) throw std::logic_error("dynamical_degree: spectral radius disagrees with closed form");
    if (n == 1) return AlgebraicReal::from_isolating_interval(cp, lo, hi);
  }
  throw std::runtime_error("dynamical_degree: eigenvalues not separated");
}

RatInterval entropy_from_eigenvalues(const TorusAutomorphism& f, unsigned bits) {
  RatInterval acc = RatInterval::point(Rat(0));
  for (const auto& e : root_moduli(charpoly_of(f), pow2(-static_cast<long>(bits)))) {
    if (e.modulus_squared.compare(Rat(1)) <= 0) continue;
    RatInterval l = e.modulus_squared.log(bits + 8);
    for (int i = 0; i < e.multiplicity; ++i) acc += l;
  }
  return acc;
}

EntropyValue entropy_from_degrees(const TorusAutomorphism& f, const std::vector<AlgebraicReal>& d, unsigned bits) {
  EntropyValue out;
  out.max_degree = d[0];
  out.argmax = 0;
  for (unsigned p = 1; p < d.size(); ++p)
    if (d[p] > out.max_degree) {
      out.max_degree = d[p];
      out.argmax = p;
    }
  out.zero = out.max_degree.compare(Rat(1)) == 0;
  out.value = out.zero ? RatInterval::point(Rat(0)) : out.max_degree.log(bits);
  RatInterval check = entropy_from_eigenvalues(f, bits);
  if (!check.overlaps(out.value)) throw std::logic_error("entropy: degree formula disagrees with eigenvalue formula");
  return out;
}

EntropyValue entropy(const TorusAutomorphism& f, unsigned bits) {
  std::vector<AlgebraicReal> d;
  for (unsigned p = 0; p <= f.k(); ++p) d.push_back(dynamical_degree(f, p));
  return entropy_from_degrees(f, d, bits);
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::positive_entropy:
      return "positive_entropy";
    case Classification::parabolic:
      return "parabolic";
    case Classification::finite_order_on_cohomology:
      return "finite_order_on_cohomology";
  }
  return "unknown";
}

Classification classify(const TorusAutomorphism& f) {
  IntMatrix h = h11_matrix(f);
  if (!is_cyclotomic_product(charpoly(h))) return Classification::positive_entropy;
  return matrix_order(h).finite ? Classification::finite_order_on_cohomology : Classification::parabolic;
}

DegreeProfile degree_profile(const TorusAutomorphism& f, unsigned bits) {
  DegreeProfile out;
  for (unsigned p = 0; p <= f.k(); ++p) out.degrees.push_back(dynamical_degree(f, p));
  out.entropy = entropy_from_degrees(f, out.degrees, bits);
  out.classification = classify(f);
  return out;
}

DegreeEnumeration enumerate_degree_values(unsigned k, long bound, bool include_negative_det, const Int& max_candidates) {
  if (k == 0) throw std::invalid_argument("enumerate_degree_values: k >= 1 required");
  if (bound < 0) throw std::invalid_argument("enumerate_degree_values: bound >= 0 required");
  Int total = 1;
  for (unsigned i = 0; i < k * k; ++i) total *= 2 * bound + 1;
  if (total > max_candidates)
    throw BudgetExceeded("enumerate_degree_values: " + to_string(total) + " candidate matrices exceed the budget of " +
                             to_string(max_candidates),
                         total);
  DegreeEnumeration out;
  out.k = k;
  out.bound = bound;
  out.values.push_back(AlgebraicReal(Rat(1)));
  std::map<std::vector<Int>, bool> seen_charpolys;
  const std::size_t n = k * k;
  std::vector<long> entries(n, -bound);
  for (;;) {
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < n; ++i) m(i / k, i % k) = entries[i];
    Int det = bareiss_determinant(m);
    if (det == 1 || (include_negative_det && det == -1)) {
      ++out.examined;
      // d_1 depends only on the eigenvalues of A
      IntPoly cp = charpoly(m);
      if (seen_charpolys.emplace(cp.coeffs(), true).second) {
        AlgebraicReal d = dynamical_degree(TorusAutomorphism::from_int(m), 1);
        bool fresh = std::none_of(out.values.begin(), out.values.end(), [&](const AlgebraicReal& v) { return v == d; });
        if (fresh) out.values.push_back(d);
      }
    }
    std::size_t i = 0;
    while (i < n && entries[i] == bound) entries[i++] = -bound;
    if (i == n) break;
    ++entries[i];
  }
  std::sort(out.values.begin(), out.values.end(), [](const AlgebraicReal& a, const AlgebraicReal& b) { return a < b; });
  for (const auto& v : out.values)
    if (v.compare(Rat(1)) > 0) {
      out.min_positive_entropy = v;
      break;
    }
  return out;
}

}  // namespace torusdyn
