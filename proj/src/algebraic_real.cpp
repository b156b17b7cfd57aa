#include "torusdyn/algebraic_real.hpp"

#include <algorithm>

#include "torusdyn/complex_roots.hpp"

namespace torusdyn {

AlgebraicReal::AlgebraicReal(const Rat& r)
    : poly_(primitive_part(RatPoly{Rat(-r), Rat(1)})), lo_(r), hi_(r) {}

AlgebraicReal::AlgebraicReal(IntPoly poly, Rat lo, Rat hi, bool /*unchecked*/)
    : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ < hi_) sign_lo_ = sign_at(poly_, lo_);
}

AlgebraicReal AlgebraicReal::from_isolating_interval(const IntPoly& poly, const Rat& lo, const Rat& hi) {
  if (hi < lo) throw std::invalid_argument("AlgebraicReal: empty interval");
  IntPoly p = squarefree_part(poly);
  if (lo == hi) {
    if (sign_at(p, lo) != 0) throw std::invalid_argument("AlgebraicReal: point is not a root");
    return AlgebraicReal(lo);
  }
  int sl = sign_at(p, lo), sh = sign_at(p, hi);
  if (sl == 0) return AlgebraicReal(lo);
  if (sh == 0) return AlgebraicReal(hi);
  if (sl == sh) throw std::invalid_argument("AlgebraicReal: no sign change on isolating interval");
  return AlgebraicReal(p, lo, hi, true);
}

AlgebraicReal AlgebraicReal::isolate(const IntPoly& poly, const Rat& lo, const Rat& hi) {
  IntPoly p = squarefree_part(poly);
  if (lo == hi) return from_isolating_interval(p, lo, hi);
  int sl = sign_at(p, lo);
  int n = SturmSequence(p).count(lo, hi) + (sl == 0 ? 1 : 0);
  if (n != 1) throw std::invalid_argument("AlgebraicReal: interval holds " + std::to_string(n) + " roots");
  return from_isolating_interval(p, lo, hi);
}

std::vector<AlgebraicReal> AlgebraicReal::real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
  std::vector<AlgebraicReal> out;
  IntPoly sq = squarefree_part(p);
  if (sq.low_order() > 0) {
    out.emplace_back(Rat(0));
    sq = sq.strip_low_order();
  }
  if (sq.degree() >= 1) {
    RootIsolation iso(sq);
    iso.classify_real();
    for (std::size_t i = 0; i < iso.size(); ++i) {
      if (iso.real_status(i) != RealStatus::real) continue;
      for (;;) {
        auto iv = iso.real_root_interval(i);
        if (iv) {
          out.push_back(from_isolating_interval(sq, iv->lo, iv->hi));
          break;
        }
        iso.refine();
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const AlgebraicReal& a, const AlgebraicReal& b) { return a.compare(b) < 0; });
  return out;
}

long AlgebraicReal::precision_bits() const {
  if (lo_ == hi_) return 1L << 20;
  Rat w = width();
  long bits = static_cast<long>(mpz_sizeinbase(w.get_den_mpz_t(), 2)) -
              static_cast<long>(mpz_sizeinbase(w.get_num_mpz_t(), 2));
  return bits;
}

void AlgebraicReal::refine() const {
  if (lo_ == hi_) return;
  Rat m = (lo_ + hi_) / 2;
  int s = sign_at(poly_, m);
  if (s == 0) {
    lo_ = hi_ = m;
    return;
  }
  if (s == sign_lo_)
    lo_ = m;
  else
    hi_ = m;
}

void AlgebraicReal::refine_to(const Rat& w) const {
  if (sgn(w) <= 0) throw std::invalid_argument("refine_to: width must be positive");
  while (hi_ - lo_ > w) refine();
}

double AlgebraicReal::approx() const {
  refine_to(pow2(-60) * std::max(Rat(1), abs(lo_)));
  return to_double(interval().mid());
}

std::string AlgebraicReal::decimal(int digits) const {
  refine_to(pow2(-4 * digits) * std::max(Rat(1), abs(lo_)));
  return decimal_approx(interval(), digits);
}

int AlgebraicReal::sign() const { return compare(Rat(0)); }

int AlgebraicReal::compare(const Rat& r) const {
  for (;;) {
    if (r < lo_) return 1;
    if (r > hi_) return -1;
    if (lo_ == hi_) return 0;
    if (sign_at(poly_, r) == 0) return 0;  // the unique root inside the interval
    refine();
  }
}

bool AlgebraicReal::equals(const AlgebraicReal& o) const {
  if (is_rational()) return o.compare(lo_) == 0;
  if (o.is_rational()) return compare(o.lo_) == 0;
  if (!interval().overlaps(o.interval())) return false;
  IntPoly g = gcd(poly_, o.poly_);
  if (g.degree() < 1) return false;
  auto is_root_of_g = [&g](const AlgebraicReal& x) { return sign_at(g, x.lo_) * sign_at(g, x.hi_) < 0; };
  if (!is_root_of_g(*this) || !is_root_of_g(o)) return false;
  // Both are roots of g; each interval isolates its number among the roots of g.
  for (;;) {
    if (!interval().overlaps(o.interval())) return false;
    if (interval().contains(o.interval()) || o.interval().contains(interval())) return true;
    if (width() >= o.width())
      refine();
    else
      o.refine();
    if (is_rational() || o.is_rational()) return is_rational() ? o.compare(lo_) == 0 : compare(o.lo_) == 0;
  }
}

int AlgebraicReal::compare(const AlgebraicReal& o) const {
  if (equals(o)) return 0;
  for (;;) {
    if (hi_ < o.lo_) return -1;
    if (o.hi_ < lo_) return 1;
    refine();
    o.refine();
  }
}

IntPoly power_roots_poly(const IntPoly& p, unsigned n) {
  if (p.degree() < 1) throw std::invalid_argument("power_roots_poly: degree >= 1 required");
  const std::size_t d = static_cast<std::size_t>(p.degree());
  std::vector<Rat> s = power_sums(to_rat(p), d * n);
  std::vector<Rat> t(d);
  for (std::size_t i = 1; i <= d; ++i) t[i - 1] = s[i * n - 1];
  return primitive_part(from_power_sums(t, d));
}

AlgebraicReal AlgebraicReal::pow(unsigned n) const {
  if (n == 0) return AlgebraicReal(Rat(1));
  if (n == 1) return *this;
  if (is_rational()) {
    Rat r = 1;
    for (unsigned i = 0; i < n; ++i) r *= lo_;
    return AlgebraicReal(r);
  }
  IntPoly q = squarefree_part(power_roots_poly(poly_, n));
  SturmSequence sturm(q);
  for (;;) {
    if (lo_ <= 0 && hi_ >= 0 && n % 2 == 0) {
      refine();
      continue;
    }
    Rat a = 1, b = 1;
    for (unsigned i = 0; i < n; ++i) {
      a *= lo_;
      b *= hi_;
    }
    if (b < a) std::swap(a, b);
    if (sign_at(q, a) != 0 && sign_at(q, b) != 0 && sturm.count(a, b) == 1)
      return from_isolating_interval(q, a, b);
    refine();
  }
}

AlgebraicReal AlgebraicReal::square() const { return pow(2); }

AlgebraicReal AlgebraicReal::sqrt() const {
  if (sign() < 0) throw std::domain_error("AlgebraicReal::sqrt of a negative number");
  if (is_rational()) {
    Int n = lo_.get_num(), d = lo_.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
      Int rn, rd;
      mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
      return AlgebraicReal(Rat(rn, rd));
    }
    IntPoly q{Int(-n), Int(0), d};
    auto [a, b] = sqrt_bounds(lo_, 64);
    return from_isolating_interval(q, a, b);
  }
  IntPoly h = squarefree_part(poly_.compose(IntPoly{Int(0), Int(0), Int(1)}));
  for (;;) {
    if (sgn(lo_) > 0) {
      Rat a = sqrt_upper(lo_, 64 + static_cast<unsigned>(std::max(0L, precision_bits())));
      Rat b = sqrt_lower(hi_, 64 + static_cast<unsigned>(std::max(0L, precision_bits())));
      if (a < b) {
        int sa = sign_at(h, a), sb = sign_at(h, b);
        if (sa == 0) return AlgebraicReal(a);
        if (sb == 0) return AlgebraicReal(b);
        if (sa != sb) return from_isolating_interval(h, a, b);
      }
    }
    refine();
  }
}

RatInterval AlgebraicReal::log(unsigned bits) const {
  if (sign() <= 0) throw std::domain_error("AlgebraicReal::log of a non-positive number");
  Rat target = pow2(-static_cast<long>(bits));
  for (;;) {
    RatInterval e = log_enclosure(interval(), bits + 20);
    if (e.width() <= target) return e;
    refine_to(Rat(width() / 4));
  }
}

}  // namespace torusdyn
