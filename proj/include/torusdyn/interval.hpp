#pragma once

#include <string>
#include <vector>

#include "torusdyn/numeric.hpp"

namespace torusdyn {

/// Closed rational interval [lo, hi].
struct RatInterval {
  Rat lo{0};
  Rat hi{0};

  RatInterval() = default;
  RatInterval(Rat l, Rat h);
  static RatInterval point(const Rat& x) { return RatInterval(x, x); }

  Rat width() const { return Rat(hi - lo); }
  Rat mid() const { return Rat((lo + hi) / 2); }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool overlaps(const RatInterval& o) const { return !(hi < o.lo || o.hi < lo); }
  bool is_positive() const { return sgn(lo) > 0; }
  bool is_negative() const { return sgn(hi) < 0; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  Rat mag() const;  // max |x| over the interval

  RatInterval operator-() const { return RatInterval(Rat(-hi), Rat(-lo)); }
  friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return RatInterval(Rat(a.lo + b.lo), Rat(a.hi + b.hi));
  }
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return RatInterval(Rat(a.lo - b.hi), Rat(a.hi - b.lo));
  }
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b);
  friend RatInterval operator*(const RatInterval& a, const Rat& s);
  RatInterval& operator+=(const RatInterval& o) { return *this = *this + o; }
};

/// Certified enclosure of log(x) for a positive interval, via MPFR with directed rounding.
RatInterval log_enclosure(const RatInterval& x, unsigned bits = 128);

/// Decimal rendering "m ± e" with e an upper bound on the distance to any point of the interval.
std::string decimal_approx(const RatInterval& x, int digits = 15);
double to_double(const Rat& x);

/// Complex ball: center in Q(i), nonnegative rational radius.
struct CBall {
  GaussRat mid;
  Rat rad{0};

  CBall() = default;
  CBall(GaussRat m, Rat r = Rat(0)) : mid(std::move(m)), rad(std::move(r)) {}  // NOLINT

  bool contains_zero() const;
  bool excludes_zero() const { return !contains_zero(); }
  /// Round the center to 2^-bits, absorbing the error into the radius.
  CBall rounded(unsigned bits) const;
  RatInterval abs_interval(unsigned bits = 64) const;

  friend CBall operator+(const CBall& a, const CBall& b) { return CBall(a.mid + b.mid, Rat(a.rad + b.rad)); }
  friend CBall operator-(const CBall& a, const CBall& b) { return CBall(a.mid - b.mid, Rat(a.rad + b.rad)); }
  friend CBall operator*(const CBall& a, const CBall& b);
  CBall operator-() const { return CBall(-mid, rad); }
  CBall conj() const { return CBall(mid.conj(), rad); }
  CBall& operator+=(const CBall& o) { return *this = *this + o; }
  CBall& operator-=(const CBall& o) { return *this = *this - o; }
  CBall& operator*=(const CBall& o) { return *this = *this * o; }
};

/// Reciprocal of a ball that excludes zero.
CBall reciprocal(const CBall& b, unsigned bits = 64);

/// Determinant of a square interval matrix by cofactor expansion (small sizes only).
RatInterval interval_determinant(const std::vector<std::vector<RatInterval>>& a);
/// Largest rho such that some rho x rho minor is bounded away from zero.
std::size_t certified_rank(const std::vector<std::vector<RatInterval>>& a);

}  // namespace torusdyn
