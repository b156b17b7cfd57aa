#pragma once

#include <optional>

#include "torusdyn/algebraic_number.hpp"
#include "torusdyn/cohomology.hpp"
#include "torusdyn/torus.hpp"

namespace torusdyn {

// Classes whose coefficients are algebraic numbers, such as w w^* for an eigenvector w.
using AlgMatrix = Matrix<AlgNum>;
using AlgClass = ClassT<AlgNum>;

AlgMatrix to_alg(const GaussRatMatrix& m);
AlgClass to_alg(const CohomClass& c);

/// Sign of a real algebraic number (imaginary part must certify to zero).
int certified_sign(const AlgNum& x);

bool certified_zero(const AlgMatrix& m);
inline bool certified_zero(const AlgClass& c) { return certified_zero(c.m); }
bool certified_equal(const AlgMatrix& a, const AlgMatrix& b);

/// f^* c, with the compound matrix computed exactly over Q(i) first.
AlgClass pullback(const TorusAutomorphism& f, const AlgClass& c);

/// Nef test for degree-1 classes. Constant classes are decided by exact elimination; others
/// must certify as Hermitian of rank <= 1 with nonnegative diagonal (that is, w w^*).
/// Returns nullopt when neither route applies.
std::optional<bool> certified_nef(const AlgClass& c);

/// Rational class when every coefficient is constant.
std::optional<CohomClass> to_rational(const AlgClass& c);

}  // namespace torusdyn
