#pragma once

#include <optional>
#include <vector>

#include "torusdyn/matrix.hpp"

namespace torusdyn {

/// Row Hermite normal form H = U * A: echelon, positive pivots, entries above each pivot
/// reduced into [0, pivot). U is unimodular.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};
HermiteForm hermite_form(const IntMatrix& a);

/// Smith normal form D = P * A * Q with d_1 | d_2 | ... on the diagonal, all d_i >= 0.
struct SmithForm {
  IntMatrix D;
  IntMatrix P;
  IntMatrix Q;
  std::vector<Int> invariants() const;  // nonzero diagonal entries
};
SmithForm smith_form(const IntMatrix& a);

/// LLL reduction of the rows of b (assumed linearly independent), exact rational
/// Gram-Schmidt, Lovasz parameter delta.
IntMatrix lll_reduce(IntMatrix b, const Rat& delta = Rat(99, 100));

/// Z-basis (rows, LLL-reduced) of { x in Z^n : A x = 0 }.
IntMatrix integer_kernel(const IntMatrix& a);

/// Z-basis of the saturation (Q-span intersected with Z^n) of the row lattice of b.
IntMatrix saturate(const IntMatrix& b);

/// True when v lies in the row lattice of basis.
bool in_row_lattice(const IntMatrix& basis, const std::vector<Int>& v);

/// Candidate integer relations sum_j e_j v_j ~ 0 among n real vectors of length m, given by
/// rational approximations accurate to about 2^-bits. Candidates are unverified; every
/// coordinate is bounded by height_cap and the residual by about |e|_1 2^-bits.
std::vector<std::vector<Int>> integer_relation_candidates(const std::vector<std::vector<Rat>>& v, unsigned bits,
                                                          const Int& height_cap = Int(1000000));

/// Integer matrix whose rows are the given vectors.
IntMatrix rows_to_matrix(const std::vector<std::vector<Int>>& rows, std::size_t cols);

}  // namespace torusdyn
