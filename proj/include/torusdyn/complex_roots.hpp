#pragma once

#include <optional>
#include <vector>

#include "torusdyn/interval.hpp"
#include "torusdyn/polynomial.hpp"

namespace torusdyn {

/// Closed disc D(center, radius) in C.
struct RootDisc {
  GaussRat center;
  Rat radius{0};

  bool contains(const GaussRat& z) const;
  /// True if the closed discs may intersect (conservative).
  bool may_overlap(const RootDisc& o) const;
  /// True if o lies inside this disc.
  bool contains_disc(const RootDisc& o) const;
  RootDisc conj() const { return RootDisc{center.conj(), radius}; }
  CBall ball() const { return CBall(center, radius); }
};

enum class RealStatus { real, nonreal, undecided };

/// Certified isolation of all complex roots of a squarefree polynomial over Q(i).
///
/// Approximations come from Aberth iterations in MPFR; each approximation z_i receives the
/// Weierstrass inclusion radius n |f(z_i)| / |lc prod_{j != i}(z_i - z_j)|, computed exactly.
/// When these discs are pairwise disjoint each contains exactly one root.
class RootIsolation {
 public:
  explicit RootIsolation(GaussRatPoly f, unsigned min_bits = 64);
  explicit RootIsolation(const IntPoly& f, unsigned min_bits = 64);

  const GaussRatPoly& poly() const { return f_; }
  std::size_t size() const { return discs_.size(); }
  const std::vector<RootDisc>& discs() const { return discs_; }
  const RootDisc& disc(std::size_t i) const { return discs_[i]; }
  unsigned precision() const { return prec_; }

  /// Doubles the working precision and recertifies.
  void refine();
  /// Refines until every radius is at most r.
  void refine_until(const Rat& r);

  /// For polynomials with real coefficients: whether root i is real.
  RealStatus real_status(std::size_t i) const;
  /// Refines until every root is classified real or nonreal.
  void classify_real();
  /// Index of the disc holding the complex conjugate of root i (real-coefficient input).
  std::optional<std::size_t> conjugate_index(std::size_t i) const;
  /// Rational interval isolating real root i among all real roots, when certifiable at the
  /// current precision.
  std::optional<RatInterval> real_root_interval(std::size_t i) const;

 private:
  bool certify();

  GaussRatPoly f_;
  unsigned prec_;
  std::vector<GaussRat> approx_;
  std::vector<RootDisc> discs_;
};

}  // namespace torusdyn
