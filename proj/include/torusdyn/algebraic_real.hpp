#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "torusdyn/interval.hpp"
#include "torusdyn/polynomial.hpp"

namespace torusdyn {

/// A real algebraic number: a squarefree primitive integer polynomial together with a
/// rational interval holding exactly one of its real roots.
///
/// Either lo == hi (the number is that rational) or lo < hi, neither endpoint is a root and
/// the polynomial changes sign across the interval. Refinement bisects; it mutates only the
/// cached interval, so const objects can be refined.
class AlgebraicReal {
 public:
  AlgebraicReal() : AlgebraicReal(Rat(0)) {}
  explicit AlgebraicReal(const Rat& r);

  /// Trusted constructor: the caller has certified that [lo, hi] isolates one root of `poly`.
  /// Only the sign-change condition is re-checked here.
  static AlgebraicReal from_isolating_interval(const IntPoly& poly, const Rat& lo, const Rat& hi);
  /// Checked constructor: verifies isolation with a Sturm count.
  static AlgebraicReal isolate(const IntPoly& poly, const Rat& lo, const Rat& hi);

  /// All real roots of p in increasing order.
  static std::vector<AlgebraicReal> real_roots(const IntPoly& p);

  const IntPoly& poly() const { return poly_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  RatInterval interval() const { return RatInterval(lo_, hi_); }
  Rat width() const { return Rat(hi_ - lo_); }
  bool is_rational() const { return lo_ == hi_; }
  /// Binary digits of accuracy currently held: floor(-log2(width)), or a large value when exact.
  long precision_bits() const;

  /// Halves the isolating interval.
  void refine() const;
  /// Refines until width <= w.
  void refine_to(const Rat& w) const;
  double approx() const;
  std::string decimal(int digits = 15) const;

  int sign() const;
  int compare(const Rat& r) const;
  /// Exact three-way comparison.
  int compare(const AlgebraicReal& o) const;
  /// Exact equality via the gcd of the defining polynomials.
  bool equals(const AlgebraicReal& o) const;

  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return a.equals(b); }
  friend bool operator!=(const AlgebraicReal& a, const AlgebraicReal& b) { return !a.equals(b); }
  friend bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return a.compare(b) < 0; }
  friend bool operator>(const AlgebraicReal& a, const AlgebraicReal& b) { return a.compare(b) > 0; }
  friend bool operator<=(const AlgebraicReal& a, const AlgebraicReal& b) { return a.compare(b) <= 0; }
  friend bool operator>=(const AlgebraicReal& a, const AlgebraicReal& b) { return a.compare(b) >= 0; }

  /// The square of this number.
  AlgebraicReal square() const;
  /// Square root of a nonnegative number.
  AlgebraicReal sqrt() const;
  /// Power x^n for n >= 0.
  AlgebraicReal pow(unsigned n) const;

  /// Certified enclosure of log(x) for x > 0 with width below 2^-bits.
  RatInterval log(unsigned bits = 60) const;

 private:
  AlgebraicReal(IntPoly poly, Rat lo, Rat hi, bool unchecked);

  IntPoly poly_;
  mutable Rat lo_, hi_;
  mutable int sign_lo_ = 0;  // sign of poly at lo when lo < hi
};

/// Picks, among the real roots of some polynomial, the one a numerical enclosure points to.
/// The caller guarantees the target value is one of `roots`; `enclose()` returns an enclosure
/// of the target and must shrink on repeated calls. Returns the index; candidates touched by
/// the search are refined in place.
template <class EncloseFn>
std::size_t identify_root(std::vector<AlgebraicReal>& roots, EncloseFn enclose) {
  for (int round = 0; round < 4096; ++round) {
    RatInterval e = enclose();
    std::size_t hits = 0, last = 0;
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (roots[i].interval().overlaps(e)) {
        ++hits;
        last = i;
      }
    if (hits == 1) return last;
    if (hits == 0) throw std::logic_error("identify_root: enclosure misses every candidate root");
    for (auto& r : roots)
      if (r.interval().overlaps(e)) r.refine();
  }
  throw std::runtime_error("identify_root: no separation after many refinements");
}

/// Polynomial whose roots are the n-th powers of the roots of p (same degree, primitive).
IntPoly power_roots_poly(const IntPoly& p, unsigned n);

}  // namespace torusdyn
