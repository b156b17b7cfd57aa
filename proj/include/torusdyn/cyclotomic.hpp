#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "torusdyn/matrix.hpp"
#include "torusdyn/polynomial.hpp"

namespace torusdyn {

unsigned long euler_phi(unsigned long m);

/// The m-th cyclotomic polynomial.
IntPoly cyclotomic(unsigned long m);

/// Cyclotomic factorization (m, multiplicity) of a monic polynomial, or nullopt when some
/// irreducible factor is not cyclotomic. Throws std::invalid_argument on non-monic input.
std::optional<std::vector<std::pair<unsigned long, int>>> cyclotomic_factors(const IntPoly& p);

/// True iff every irreducible factor of the monic polynomial p is cyclotomic.
bool is_cyclotomic_product(const IntPoly& p);

/// lcm{ m : phi(m) <= d }, the largest possible order of a finite-order d x d integer matrix.
Int finite_order_bound(unsigned long d);

struct MatrixOrder {
  bool finite = false;
  Int order = 0;  // meaningful when finite
};

/// Multiplicative order of an integer matrix. Orders above `bound` are reported as infinite;
/// the default bound is finite_order_bound(dim).
MatrixOrder matrix_order(const IntMatrix& m, std::optional<Int> bound = std::nullopt);

/// Order of a Gaussian integer matrix, computed on its realification.
MatrixOrder matrix_order(const GaussIntMatrix& m, std::optional<Int> bound = std::nullopt);

/// p(M) by Horner's rule.
IntMatrix evaluate(const IntPoly& p, const IntMatrix& m);

}  // namespace torusdyn
