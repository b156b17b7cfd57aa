#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusdyn/algebraic_real.hpp"
#include "torusdyn/cohomology.hpp"
#include "torusdyn/matrix.hpp"

namespace torusdyn {

/// Linear part A of an automorphism z -> Az + b of T^k = C^k / Z[i]^k. Translations act
/// trivially on cohomology and are not modeled.
class TorusAutomorphism {
 public:
  /// Throws std::invalid_argument unless A is square with det(A) a unit of Z[i].
  explicit TorusAutomorphism(GaussIntMatrix a, std::string name = "");
  static TorusAutomorphism from_int(const IntMatrix& a, std::string name = "");
  static TorusAutomorphism identity(unsigned k);

  unsigned k() const { return static_cast<unsigned>(a_.rows()); }
  const GaussIntMatrix& matrix() const { return a_; }
  const std::string& name() const { return name_; }
  TorusAutomorphism inverse() const;
  TorusAutomorphism power(long n) const;
  friend TorusAutomorphism operator*(const TorusAutomorphism& f, const TorusAutomorphism& g);
  friend bool operator==(const TorusAutomorphism& f, const TorusAutomorphism& g) { return f.a_ == g.a_; }

 private:
  GaussIntMatrix a_;
  std::string name_;
};

/// Action H -> A^* H A on N x N Hermitian matrices, N = C(k,p), in the integer basis
/// of hermitian_basis (A replaced by its p-th compound). Square matrix of size N^2.
IntMatrix hpp_matrix(const TorusAutomorphism& f, unsigned p);
inline IntMatrix h11_matrix(const TorusAutomorphism& f) { return hpp_matrix(f, 1); }

/// Pullback f^* c.
CohomClass pullback(const TorusAutomorphism& f, const CohomClass& c);

/// d_p(f): spectral radius of f^* on H^{p,p}, as the largest real root of charpoly(hpp_matrix),
/// certified against (product of the p largest |eigenvalues of A|)^2 by Sturm counts.
AlgebraicReal dynamical_degree(const TorusAutomorphism& f, unsigned p);

/// Enclosure of (product of the p largest eigenvalue moduli of A)^2.
RatInterval closed_form_degree(const TorusAutomorphism& f, unsigned p, const Rat& eps = pow2(-60));

struct EntropyValue {
  AlgebraicReal max_degree;  // max_p d_p; the entropy is its logarithm
  unsigned argmax = 0;       // smallest p attaining it
  RatInterval value;         // enclosure of the entropy
  bool zero = false;         // exact: max_degree == 1
};

/// h(f) = max_p log d_p, cross-checked against sum over |lambda| > 1 of log |lambda|^2.
EntropyValue entropy(const TorusAutomorphism& f, unsigned bits = 60);

/// Same, with d_0..d_k already computed.
EntropyValue entropy_from_degrees(const TorusAutomorphism& f, const std::vector<AlgebraicReal>& d, unsigned bits = 60);

/// Enclosure of sum_{|lambda| > 1} log |lambda|^2 over the eigenvalues of A.
RatInterval entropy_from_eigenvalues(const TorusAutomorphism& f, unsigned bits = 60);

enum class Classification { positive_entropy, parabolic, finite_order_on_cohomology };
std::string to_string(Classification c);

/// Exact: cyclotomic test on charpoly(h11), then order of h11.
Classification classify(const TorusAutomorphism& f);

struct DegreeProfile {
  std::vector<AlgebraicReal> degrees;  // d_0 .. d_k
  EntropyValue entropy;
  Classification classification;
};
DegreeProfile degree_profile(const TorusAutomorphism& f, unsigned bits = 60);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, Int estimate) : std::runtime_error(what), estimate(std::move(estimate)) {}
  Int estimate;
};

struct DegreeEnumeration {
  unsigned k = 0;
  long bound = 0;
  Int examined = 0;       // matrices with unit determinant that were processed
  std::vector<AlgebraicReal> values;  // distinct d_1 values, ascending
  std::optional<AlgebraicReal> min_positive_entropy;
};

/// Distinct d_1 over integer matrices with entries in [-bound, bound] and determinant +1
/// (also -1 when include_negative_det). The identity is always included. Throws
/// BudgetExceeded when (2 bound + 1)^(k^2) exceeds max_candidates.
DegreeEnumeration enumerate_degree_values(unsigned k, long bound, bool include_negative_det = false,
                                          const Int& max_candidates = Int(2000000));

}  // namespace torusdyn
