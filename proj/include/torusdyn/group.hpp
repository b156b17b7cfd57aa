#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torusdyn/alg_class.hpp"
#include "torusdyn/algebraic_real.hpp"
#include "torusdyn/hodge_riemann.hpp"
#include "torusdyn/torus.hpp"

namespace torusdyn {

// Finitely generated commutative groups of torus automorphisms. Elements are handled as words:
// an exponent vector e in Z^n stands for g_1^{e_1} ... g_n^{e_n}.

using Word = std::vector<long>;

struct GroupSpec {
  unsigned k = 0;
  std::vector<TorusAutomorphism> generators;
  std::vector<std::string> labels;

  GroupSpec() = default;
  /// Throws std::invalid_argument on an empty list or mixed dimensions. Commutativity is not
  /// required here; see check_commuting.
  explicit GroupSpec(std::vector<TorusAutomorphism> gens, std::vector<std::string> labels = {});
  std::size_t size() const { return generators.size(); }
};

struct CommutingCheck {
  bool commuting = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // first non-commuting pair
};
CommutingCheck check_commuting(const GroupSpec& spec);

/// Matrix of the word e, exactly.
TorusAutomorphism word_element(const GroupSpec& spec, const Word& e);

/// True iff the word acts on H^{1,1} with a product-of-cyclotomics characteristic polynomial,
/// that is, has zero entropy.
bool verify_zero_entropy_word(const GroupSpec& spec, const Word& e);

class UnsupportedSpectrum : public std::runtime_error {
 public:
  UnsupportedSpectrum() : std::runtime_error("degenerate_spectrum_unsupported") {}
};

struct Character {
  std::vector<AlgebraicReal> modulus2;  // |mu_j|^2 = exp(tau(g_j)), per generator
  std::vector<AlgNum> eigenvalue;       // mu_j with A_j^* w = mu_j w
  std::vector<AlgNum> eigenvector;      // w
  AlgClass representative;              // w w^*
  /// Enclosure of tau(g_j) = log |mu_j|^2.
  RatInterval tau(std::size_t j, unsigned bits = 60) const { return modulus2[j].log(bits); }
};

struct CharacterTable {
  unsigned k = 0;
  std::vector<Character> characters;
  /// False when the family is not simultaneously diagonalizable; only accepted when every
  /// generator has zero entropy, so every character vanishes.
  bool semisimple = true;
  std::size_t m() const { return characters.size(); }
};

/// Characters from the common eigenvectors of the adjoints A_j^*. Throws UnsupportedSpectrum
/// for a family that is not simultaneously diagonalizable and has positive entropy.
CharacterTable find_characters(const GroupSpec& spec);

struct PiRank {
  std::size_t n = 0;
  std::size_t r = 0;
  IntMatrix kernel;                    // rows: Z-basis of the zero-entropy words, each verified
  std::vector<std::vector<RatInterval>> image;  // pi(g_j) per generator, one entry per character
  std::size_t certified_image_rank = 0;         // from a minor bounded away from zero
  unsigned bits = 0;                   // precision of the accepted relation search
};

/// r = n - rank(ker pi). Kernel candidates come from lattice reduction and are promoted only
/// through verify_zero_entropy_word; r is certified by matching it with a nonzero minor of the
/// image matrix.
PiRank pi_rank(const GroupSpec& spec, const CharacterTable& table);

enum class Status { pass, fail, vacuous };
std::string to_string(Status s);

struct Assertion {
  std::string name;
  Status status = Status::vacuous;
  std::string detail;
};

struct UPart {
  std::vector<Word> generators;   // zero-entropy words
  bool finite = false;
  std::optional<Int> order;       // when finite
  IntMatrix relations;            // rows: relation lattice in U-generator coordinates
  bool enumeration_capped = false;
};

struct DecompositionResult {
  std::size_t r = 0;
  std::vector<Word> free_part;    // words for a basis of the positive-entropy complement
  UPart u;
  /// Change of basis: row i of `basis` is the word of the i-th U or free generator, U first.
  IntMatrix basis;
};

/// G' = U x G: U is the zero-entropy subgroup, G a free complement carried injectively by pi.
DecompositionResult decompose(const GroupSpec& spec, const PiRank& pi);
DecompositionResult decompose(const GroupSpec& spec);

struct StructureReport {
  std::size_t r = 0;
  unsigned k = 0;
  Status positive_entropy_hypothesis = Status::vacuous;
  std::vector<Assertion> assertions;
  bool violated() const;
};

/// Rank bound r <= k - 1, the binomial bounds C(r, n) <= C(k, n)^2 (minus one when n | r),
/// the nonzero wedge of r + 1 eigenclasses, and finiteness of U at maximal rank.
StructureReport assert_structure_theorems(const GroupSpec& spec, const CharacterTable& table, const PiRank& pi,
                                          const DecompositionResult& dec);

/// Eigenclass test for a class with algebraic coefficients: f^* c is a multiple of c.
bool is_eigenclass(const TorusAutomorphism& f, const AlgClass& c);

/// Given k - 1 nef classes preserved by every generator with nonzero wedge, checks that the
/// group is commutative, free, and of rank <= k - 1. Positive entropy of every non-identity
/// element is checked on the words with |e_i| <= sample_radius; a failed hypothesis is vacuous.
LemmaReport check_preserved_classes_theorem(const GroupSpec& spec, const std::vector<AlgClass>& classes,
                                            long sample_radius = 2);

}  // namespace torusdyn
