#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torusdyn/alg_class.hpp"
#include "torusdyn/cohomology.hpp"

namespace torusdyn {

// Quadratic-form checks on H^{1,1}(T^k, R). Real classes are handled in the coordinates of
// hermitian_basis(k), so every Gram matrix below is an exact rational k^2 x k^2 matrix.

/// The k^2 real basis classes of H^{1,1}, in hermitian_basis order.
const std::vector<CohomClass>& real_basis(unsigned k);
CohomClass class_from_coordinates(unsigned k, const std::vector<Rat>& x);

/// q(c, c') = -intersection(c, c', c_1, ..., c_{k-2}).
Rat q_form(const CohomClass& c, const CohomClass& cp, const std::vector<CohomClass>& context);

struct QForm {
  unsigned k = 0;
  std::vector<CohomClass> context;  // k - 2 classes
  RatMatrix gram;                   // symmetric, in real basis coordinates
  Rat operator()(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
};
QForm make_q_form(unsigned k, const std::vector<CohomClass>& context);

/// Classes c with c ^ c_1 ^ ... ^ c_{k-1} = 0.
struct PrimitiveSpace {
  unsigned k = 0;
  CohomClass context_wedge;
  bool degenerate = false;         // context wedge is zero; basis is then the whole space
  std::vector<Rat> functional;     // c -> intersection(c, c_1, ..., c_{k-1}) in coordinates
  RatMatrix basis;                 // rows span the space
  std::size_t dimension() const { return basis.rows(); }
  bool contains(const CohomClass& c) const;
};
PrimitiveSpace primitive_space(unsigned k, const std::vector<CohomClass>& context);

struct PositivityReport {
  unsigned k = 0;
  bool degenerate = false;  // zero context wedge: flagged and skipped
  bool holds = false;       // definite (Hodge-Riemann) or semidefinite (mixed version)
  std::size_t dimension = 0;
  std::size_t rank = 0;     // rank of q restricted to the primitive space
  std::vector<Rat> pivots;  // pivots of the exact elimination, all positive
  Rat min_pivot{0};
  /// On failure: real coordinates of a primitive class w with q(w, w) < 0, or q(w, w) = 0 and
  /// w != 0 when definiteness was required.
  std::optional<std::vector<Rat>> witness;
};

/// q with context (omega, ..., omega) is positive definite on P(omega^{k-1}).
/// Throws std::invalid_argument unless omega is Kahler.
PositivityReport check_hodge_riemann_definite(const CohomClass& omega);

/// q with context c_1, ..., c_{k-2} is positive semidefinite on P(c_1 ^ ... ^ c_{k-1}), for
/// k - 1 nef classes with nonzero wedge. Throws std::invalid_argument on non-nef input.
PositivityReport check_gromov_semipositive(const std::vector<CohomClass>& context);

enum class ContextDraw { positive_definite, nef };

struct SemipositivitySweep {
  unsigned k = 0;
  std::uint64_t seed = 0;
  ContextDraw draw = ContextDraw::positive_definite;
  std::size_t samples = 0, passed = 0, failed = 0, degenerate = 0;
  Rat smallest_pivot{0};  // over all passing samples
  std::optional<std::vector<CohomClass>> first_failure;
};

/// Random context for one draw; entries of the integer matrices are small. Draw i of a sweep
/// uses context_for_draw(k, seed, i, draw), so any sample can be replayed on its own.
std::vector<CohomClass> context_for_draw(unsigned k, std::uint64_t seed, std::size_t i, ContextDraw draw);

/// Runs check_gromov_semipositive over seeded random contexts. Only the contexts are random;
/// each decision is exact.
SemipositivitySweep sweep_gromov(unsigned k, std::size_t samples, std::uint64_t seed,
                                 ContextDraw draw = ContextDraw::positive_definite);

enum class PairRelation { colinear, wedge_nonzero, violation };
std::string to_string(PairRelation r);

struct ColinearityResult {
  PairRelation relation = PairRelation::wedge_nonzero;
  std::optional<Rat> ratio;  // c' = ratio * c, when c != 0 and the pair is colinear
  CohomClass wedge;          // c ^ c'
};

/// For nef c, c': if c ^ c' = 0 then the pair must be colinear; a zero wedge without
/// colinearity is reported as a violation. Throws std::invalid_argument on non-nef input.
ColinearityResult colinearity_witness(const CohomClass& c, const CohomClass& cp);

enum class AbStatus { solved, hypothesis_violated, violation };
std::string to_string(AbStatus s);

struct AbPair {
  AbStatus status = AbStatus::hypothesis_violated;
  Rat a{0}, b{0};                  // primitive integer direction, first nonzero entry positive
  std::size_t kernel_dimension = 0;
  bool uniqueness_required = false;  // c ^ c_1 ^ ... ^ c_m != 0
  std::size_t constraints = 0;       // rows of the constraint matrix
  std::string detail;
};

/// Nef c, c', c_1..c_m (m <= k - 2) with c ^ c' ^ c_1 ^ ... ^ c_m = 0: finds (a, b) != 0 with
/// (a c + b c') ^ c_1 ^ ... ^ c_m ^ c'_1 ^ ... ^ c'_{k-m-2} = 0 for all classes c'_j. The
/// quantifier is discharged over multisets of real basis classes, which span by multilinearity
/// and symmetry. Throws std::invalid_argument on non-nef input or m > k - 2.
AbPair solve_ab_pair(const CohomClass& c, const CohomClass& cp, const std::vector<CohomClass>& context);

enum class Verdict { holds, vacuous, violation };
std::string to_string(Verdict v);

struct LemmaReport {
  Verdict verdict = Verdict::vacuous;
  std::string reason;  // the failed hypothesis when vacuous
};

/// Instance check for: nef c, c', c_1..c_m, an automorphism g with
///   g^*(W ^ c) = lambda (W ^ c), g^*(W ^ c') = lambda' (W ^ c'), W = c_1 ^ ... ^ c_m,
///   lambda != lambda' positive, W ^ c != 0 and W ^ c ^ c' = 0
/// implies W ^ c' = 0. Every hypothesis is verified exactly; a failed one makes the instance
/// vacuous.
LemmaReport check_eigenclass_wedge_lemma(const TorusAutomorphism& g, const AlgClass& c, const AlgClass& cp,
                                         const std::vector<AlgClass>& context, const AlgNum& lambda,
                                         const AlgNum& lambda_p);

}  // namespace torusdyn
