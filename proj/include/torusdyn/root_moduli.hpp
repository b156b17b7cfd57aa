#pragma once

#include <vector>

#include "torusdyn/algebraic_real.hpp"
#include "torusdyn/polynomial.hpp"

namespace torusdyn {

struct ModulusEntry {
  AlgebraicReal modulus;          // |lambda|
  AlgebraicReal modulus_squared;  // |lambda|^2, the quantity compared exactly
  int multiplicity = 0;
};

/// Moduli of all complex roots of p, sorted descending, equal moduli merged exactly and
/// multiplicities summed; each modulus refined to width <= eps.
///
/// |lambda|^2 is certified as a root of the polynomial whose roots are the pairwise products
/// lambda_a lambda_b (a <= b) of a squarefree factor; equal moduli are detected exactly.
std::vector<ModulusEntry> root_moduli(const IntPoly& p, const Rat& eps);

/// Moduli of the roots of a Gaussian integer polynomial (via p * conj(p)).
std::vector<ModulusEntry> root_moduli(const GaussIntPoly& p, const Rat& eps);

/// Polynomial (primitive, squarefree) whose roots include all lambda_a lambda_b, a <= b, for
/// the roots lambda of p.
IntPoly pair_products_poly(const IntPoly& p);

}  // namespace torusdyn
