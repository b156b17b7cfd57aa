#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "torusdyn/group.hpp"

namespace torusdyn {

/// Catalog: cat_T2, pell_T2, parabolic_T2, torsion_i, pell_plus_torsion, cubic_T3.
const std::vector<std::string>& builtin_names();
/// Throws std::invalid_argument for an unknown name.
GroupSpec builtin(const std::string& name);

/// Z[theta] for a monic irreducible totally real integer polynomial, in the power basis.
struct NumberFieldSpec {
  IntPoly min_poly;
  std::vector<AlgebraicReal> embeddings;  // the real roots, ascending
  unsigned degree() const { return static_cast<unsigned>(min_poly.degree()); }
  /// Multiplication by theta on the power basis (columns are images of 1, theta, ...).
  IntMatrix companion() const;
};

/// Throws std::invalid_argument when p is not monic of degree >= 2, is reducible over Q
/// (exact Kronecker search), or has a non-real root (Sturm count).
NumberFieldSpec make_number_field(const IntPoly& p);

/// Exact irreducibility over Q by Kronecker's interpolation method; desk-scale degrees only.
bool is_irreducible(const IntPoly& p);

struct UnitSystem {
  std::vector<std::vector<Int>> units;             // power-basis coefficients
  std::vector<std::vector<RatInterval>> log_embedding;  // log |sigma_i(u)| per unit, per embedding
  long coeff_bound = 0;
  std::size_t examined = 0;   // elements enumerated
  std::size_t unit_count = 0; // elements of norm +-1 other than +-1
};

class UnitSearchFailure : public std::runtime_error {
 public:
  UnitSearchFailure(const std::string& what, long bound) : std::runtime_error(what), bound(bound) {}
  long bound;
};

/// Units sum a_i theta^i with |a_i| <= coeff_bound and norm +-1, reduced to degree - 1
/// multiplicatively independent ones; independence is certified by a log-embedding minor
/// bounded away from zero. Throws UnitSearchFailure when too few are found.
UnitSystem unit_search(const NumberFieldSpec& field, long coeff_bound);

/// Multiplication by u on the power basis.
IntMatrix multiplication_matrix(const std::vector<Int>& u, const NumberFieldSpec& field);
/// Same, as a torus automorphism; throws std::invalid_argument unless u is a unit.
TorusAutomorphism regular_representation(const std::vector<Int>& u, const NumberFieldSpec& field,
                                         std::string name = "");

/// Norm of u, det of its multiplication matrix.
Int field_norm(const std::vector<Int>& u, const NumberFieldSpec& field);

/// Enclosure of sigma_i(u) for the i-th real embedding.
RatInterval embed(const std::vector<Int>& u, const NumberFieldSpec& field, std::size_t i, unsigned bits = 80);

/// Enclosure of 2 sum_{|sigma(u)| > 1} log |sigma(u)|.
RatInterval embedding_entropy(const std::vector<Int>& u, const NumberFieldSpec& field, unsigned bits = 80);

struct ForgedGroup {
  NumberFieldSpec field;
  UnitSystem units;
  GroupSpec spec;
  CharacterTable characters;
  PiRank pi;
  DecompositionResult decomposition;
};

/// Group of the degree - 1 unit matrices (negated to determinant +1 when the degree is odd)
/// with the full group analysis; throws std::logic_error unless r = degree - 1.
ForgedGroup build_max_rank_group(const NumberFieldSpec& field, long coeff_bound = 4);

}  // namespace torusdyn
