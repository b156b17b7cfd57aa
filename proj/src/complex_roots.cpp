#include "torusdyn/complex_roots.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace torusdyn {

bool RootDisc::contains(const GaussRat& z) const { return (z - center).norm() <= radius * radius; }

bool RootDisc::may_overlap(const RootDisc& o) const {
  Rat r = radius + o.radius;
  return (center - o.center).norm() <= r * r;
}

bool RootDisc::contains_disc(const RootDisc& o) const {
  if (o.radius > radius) return false;
  Rat slack = radius - o.radius;
  return (center - o.center).norm() <= slack * slack;
}

namespace {

// Minimal RAII wrapper over mpfr_t for the Aberth iteration.
class BF {
 public:
  explicit BF(mpfr_prec_t p) { mpfr_init2(v_, p); mpfr_set_zero(v_, 1); }
  BF(const BF& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BF(BF&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BF& operator=(const BF& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BF& operator=(BF&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BF() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

struct Cx {
  BF re, im;
  explicit Cx(mpfr_prec_t p) : re(p), im(p) {}
};

mpfr_prec_t prec_of(const Cx& a, const Cx& b) { return std::max(a.re.prec(), b.re.prec()); }

Cx operator+(const Cx& a, const Cx& b) {
  Cx r(prec_of(a, b));
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Cx operator-(const Cx& a, const Cx& b) {
  Cx r(prec_of(a, b));
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Cx operator*(const Cx& a, const Cx& b) {
  mpfr_prec_t p = prec_of(a, b);
  Cx r(p);
  BF t(p);
  mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
  return r;
}

Cx operator/(const Cx& a, const Cx& b) {
  mpfr_prec_t p = prec_of(a, b);
  BF d(p), t(p);
  mpfr_sqr(d.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(d.get(), d.get(), t.get(), MPFR_RNDN);
  Cx conj_b(p);
  mpfr_set(conj_b.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_neg(conj_b.im.get(), b.im.get(), MPFR_RNDN);
  Cx r = a * conj_b;
  mpfr_div(r.re.get(), r.re.get(), d.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), d.get(), MPFR_RNDN);
  return r;
}

bool is_finite(const Cx& a) { return mpfr_number_p(a.re.get()) && mpfr_number_p(a.im.get()); }
bool is_zero_cx(const Cx& a) { return mpfr_zero_p(a.re.get()) && mpfr_zero_p(a.im.get()); }

Cx from_gauss(const GaussRat& z, mpfr_prec_t p) {
  Cx r(p);
  mpfr_set_q(r.re.get(), z.re.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(r.im.get(), z.im.get_mpq_t(), MPFR_RNDN);
  return r;
}

// log2 of max(|re|, |im|), or a very negative number for zero.
long magnitude_exp(const Cx& a) {
  long e = std::numeric_limits<long>::min() / 4;
  if (!mpfr_zero_p(a.re.get())) e = std::max<long>(e, mpfr_get_exp(a.re.get()));
  if (!mpfr_zero_p(a.im.get())) e = std::max<long>(e, mpfr_get_exp(a.im.get()));
  return e;
}

Rat mpfr_exact(mpfr_srcptr x) {
  Rat r;
  mpfr_get_q(r.get_mpq_t(), x);
  return r;
}

// Aberth-Ehrlich iteration starting from z, in place.
void aberth(const GaussRatPoly& f, std::vector<Cx>& z, mpfr_prec_t prec) {
  const std::size_t n = z.size();
  std::vector<Cx> a;
  for (const auto& c : f.coeffs()) a.push_back(from_gauss(c, prec));
  Cx one(prec);
  mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
  const int max_iter = 60 + 8 * static_cast<int>(n) + static_cast<int>(prec / 16);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      Cx p = a[n];
      Cx dp(prec);
      for (std::size_t j = n; j-- > 0;) {
        dp = dp * z[i] + p;
        p = p * z[i] + a[j];
      }
      if (is_zero_cx(p)) continue;
      Cx w(prec);
      if (is_zero_cx(dp)) {
        // Stationary point: nudge.
        mpfr_set_d(w.re.get(), 1e-3, MPFR_RNDN);
        mpfr_set_d(w.im.get(), 1e-3, MPFR_RNDN);
      } else {
        Cx ratio = p / dp;
        Cx sum(prec);
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          Cx diff = z[i] - z[j];
          if (is_zero_cx(diff)) continue;
          sum = sum + one / diff;
        }
        Cx denom = one - ratio * sum;
        w = is_zero_cx(denom) ? ratio : ratio / denom;
      }
      if (!is_finite(w)) continue;
      z[i] = z[i] - w;
      long ez = std::max<long>(1, magnitude_exp(z[i]));
      if (magnitude_exp(w) > ez - static_cast<long>(prec) + 8) converged = false;
    }
    if (converged) break;
  }
}

std::vector<Cx> initial_points(const GaussRatPoly& f, mpfr_prec_t prec) {
  const std::size_t n = static_cast<std::size_t>(f.degree());
  GaussRat lead = f.lead();
  GaussRat center = -(f.coeff(n - 1) / (lead * GaussRat(Rat(static_cast<long>(n)))));
  // Fujiwara-style radius from coefficient magnitudes.
  double log_r = -1e300;
  for (std::size_t j = 0; j < n; ++j) {
    GaussRat q = f.coeff(j) / lead;
    if (q.is_zero()) continue;
    Rat nrm = q.norm();
    double l2 = 0.5 * (std::log2(to_double(Rat(nrm.get_num()))) - std::log2(to_double(Rat(nrm.get_den()))));
    if (!std::isfinite(l2)) {
      long en = static_cast<long>(mpz_sizeinbase(nrm.get_num_mpz_t(), 2));
      long ed = static_cast<long>(mpz_sizeinbase(nrm.get_den_mpz_t(), 2));
      l2 = 0.5 * static_cast<double>(en - ed);
    }
    log_r = std::max(log_r, l2 / static_cast<double>(n - j));
  }
  double r = log_r < -1e299 ? 1.0 : 2.0 * std::exp2(std::min(log_r, 1000.0));
  if (!(r > 0) || !std::isfinite(r)) r = 1.0;
  std::vector<Cx> z;
  for (std::size_t j = 0; j < n; ++j) {
    double theta = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n) + 0.4;
    GaussRat p = center + GaussRat(Rat(r * std::cos(theta)), Rat(r * std::sin(theta)));
    z.push_back(from_gauss(p, prec));
  }
  return z;
}

// Upper bound on sqrt(num/den) as a dyadic rational with about 60 significant bits.
Rat dyadic_sqrt_upper(const Int& num, const Int& den) {
  if (sgn(num) == 0) return Rat(0);
  long shift = 120 - static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) +
               static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  if (shift % 2 != 0) ++shift;
  // q = ceil(num * 2^shift / den), s = ceil(sqrt(q)); sqrt(num/den) <= s * 2^(-shift/2)
  Int scaled = num;
  Int d = den;
  if (shift >= 0)
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  else
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), d.get_mpz_t());
  Int s;
  mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
  if (s * s < q) s += 1;
  return Rat(s) * pow2(-shift / 2);
}

}  // namespace

RootIsolation::RootIsolation(GaussRatPoly f, unsigned min_bits) : f_(std::move(f)), prec_(std::max(64u, min_bits)) {
  if (f_.degree() < 1) throw std::invalid_argument("RootIsolation: polynomial of degree >= 1 required");
  if (f_.degree() == 1) {
    discs_.push_back(RootDisc{-(f_.coeff(0) / f_.coeff(1)), Rat(0)});
    approx_.push_back(discs_[0].center);
    return;
  }
  std::vector<Cx> z = initial_points(f_, prec_);
  for (;;) {
    aberth(f_, z, prec_);
    approx_.clear();
    for (auto& c : z) approx_.emplace_back(mpfr_exact(c.re.get()), mpfr_exact(c.im.get()));
    if (certify()) return;
    if (prec_ > (1u << 17)) throw std::runtime_error("RootIsolation: precision limit reached (input not squarefree?)");
    prec_ *= 2;
    std::vector<Cx> zz;
    for (const auto& c : approx_) zz.push_back(from_gauss(c, prec_));
    z = std::move(zz);
  }
}

RootIsolation::RootIsolation(const IntPoly& f, unsigned min_bits) : RootIsolation(to_gauss_rat(f), min_bits) {}

bool RootIsolation::certify() {
  const std::size_t n = approx_.size();
  // Integer model: F = f scaled to Gaussian integer coefficients, z_i = Z_i / 2^e.
  Int den_lcm = 1;
  for (const auto& c : f_.coeffs()) {
    den_lcm = lcm(den_lcm, c.re.get_den());
    den_lcm = lcm(den_lcm, c.im.get_den());
  }
  std::vector<GaussInt> F;
  for (const auto& c : f_.coeffs()) {
    F.emplace_back(Int(c.re.get_num() * (den_lcm / c.re.get_den())), Int(c.im.get_num() * (den_lcm / c.im.get_den())));
  }
  Int common_den = 1;
  for (const auto& z : approx_) {
    common_den = lcm(common_den, z.re.get_den());
    common_den = lcm(common_den, z.im.get_den());
  }
  // Approximations are dyadic, so common_den is a power of two.
  const long e = static_cast<long>(mpz_sizeinbase(common_den.get_mpz_t(), 2)) - 1;
  std::vector<GaussInt> Z;
  for (const auto& z : approx_)
    Z.emplace_back(Int(z.re.get_num() * (common_den / z.re.get_den())), Int(z.im.get_num() * (common_den / z.im.get_den())));

  std::vector<Rat> radius(n);
  const Int lead_norm = F.back().norm();
  for (std::size_t i = 0; i < n; ++i) {
    // num = 2^(e n) F(z_i)
    GaussInt acc = F[n];
    for (std::size_t j = n; j-- > 0;) {
      acc *= Z[i];
      GaussInt term = F[j];
      mpz_mul_2exp(term.re.get_mpz_t(), term.re.get_mpz_t(), static_cast<mp_bitcnt_t>(e * static_cast<long>(n - j)));
      mpz_mul_2exp(term.im.get_mpz_t(), term.im.get_mpz_t(), static_cast<mp_bitcnt_t>(e * static_cast<long>(n - j)));
      acc += term;
    }
    if (acc.is_zero()) {
      radius[i] = 0;
      continue;
    }
    // |W_i|^2 = |num|^2 / (2^(2e) |lc|^2 prod |Z_i - Z_j|^2)
    Int prod = lead_norm;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Int d = (Z[i] - Z[j]).norm();
      if (sgn(d) == 0) return false;
      prod *= d;
    }
    mpz_mul_2exp(prod.get_mpz_t(), prod.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * e));
    Int num = acc.norm() * Int(static_cast<long>(n * n));
    radius[i] = dyadic_sqrt_upper(num, prod);
  }
  std::vector<RootDisc> discs;
  for (std::size_t i = 0; i < n; ++i) discs.push_back(RootDisc{approx_[i], radius[i]});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (discs[i].may_overlap(discs[j])) return false;
  // Deterministic order: by real part, then imaginary part of the center.
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (discs[a].center.re != discs[b].center.re) return discs[a].center.re < discs[b].center.re;
    return discs[a].center.im < discs[b].center.im;
  });
  discs_.clear();
  std::vector<GaussRat> sorted_approx;
  for (auto i : idx) {
    discs_.push_back(discs[i]);
    sorted_approx.push_back(approx_[i]);
  }
  approx_ = std::move(sorted_approx);
  return true;
}

void RootIsolation::refine() {
  if (f_.degree() == 1) return;
  const std::vector<RootDisc> old = discs_;
  const std::size_t n = old.size();
  for (;;) {
    if (prec_ > (1u << 18)) throw std::runtime_error("RootIsolation: precision limit reached");
    prec_ *= 2;
    std::vector<Cx> z;
    for (const auto& c : approx_) z.push_back(from_gauss(c, prec_));
    aberth(f_, z, prec_);
    approx_.clear();
    for (auto& c : z) approx_.emplace_back(mpfr_exact(c.re.get()), mpfr_exact(c.im.get()));
    if (!certify()) continue;
    // Keep the index of every root stable: new disc j must meet exactly one old disc.
    std::vector<std::size_t> slot(n, n);
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      std::size_t hit = n;
      for (std::size_t i = 0; i < n; ++i)
        if (discs_[j].may_overlap(old[i])) {
          if (hit != n) ok = false;
          hit = i;
        }
      if (hit == n || slot[hit] != n) ok = false;
      if (ok) slot[hit] = j;
    }
    if (!ok) continue;
    std::vector<RootDisc> d(n);
    std::vector<GaussRat> a(n);
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = discs_[slot[i]];
      a[i] = approx_[slot[i]];
    }
    discs_ = std::move(d);
    approx_ = std::move(a);
    return;
  }
}

void RootIsolation::refine_until(const Rat& r) {
  for (;;) {
    bool ok = true;
    for (const auto& d : discs_)
      if (d.radius > r) ok = false;
    if (ok) return;
    refine();
  }
}

RealStatus RootIsolation::real_status(std::size_t i) const {
  for (const auto& c : f_.coeffs())
    if (c.im != 0) throw std::logic_error("real_status: polynomial has non-real coefficients");
  const RootDisc& d = discs_[i];
  if (d.center.im * d.center.im > d.radius * d.radius) return RealStatus::nonreal;
  if (sgn(d.radius) == 0) return RealStatus::real;
  RootDisc m = d.conj();
  for (std::size_t j = 0; j < discs_.size(); ++j)
    if (j != i && m.may_overlap(discs_[j])) return RealStatus::undecided;
  return RealStatus::real;
}

void RootIsolation::classify_real() {
  for (;;) {
    bool done = true;
    for (std::size_t i = 0; i < discs_.size(); ++i)
      if (real_status(i) == RealStatus::undecided) done = false;
    if (done) return;
    refine();
  }
}

std::optional<std::size_t> RootIsolation::conjugate_index(std::size_t i) const {
  if (real_status(i) == RealStatus::real) return i;
  if (real_status(i) != RealStatus::nonreal) return std::nullopt;
  RootDisc m = discs_[i].conj();
  std::optional<std::size_t> found;
  for (std::size_t j = 0; j < discs_.size(); ++j) {
    if (j == i || !m.may_overlap(discs_[j])) continue;
    if (found) return std::nullopt;
    found = j;
  }
  return found;
}

std::optional<RatInterval> RootIsolation::real_root_interval(std::size_t i) const {
  if (real_status(i) != RealStatus::real) return std::nullopt;
  const RootDisc& d = discs_[i];
  if (sgn(d.radius) == 0) return RatInterval::point(d.center.re);
  Rat h2 = d.radius * d.radius - d.center.im * d.center.im;
  if (sgn(h2) < 0) return std::nullopt;
  Rat s = sqrt_upper(h2, 64);
  Rat a = d.center.re - s, b = d.center.re + s;
  for (std::size_t j = 0; j < discs_.size(); ++j) {
    if (j == i) continue;
    const RootDisc& o = discs_[j];
    Rat x = std::clamp(o.center.re, a, b);
    Rat dx = o.center.re - x;
    if (dx * dx + o.center.im * o.center.im <= o.radius * o.radius) return std::nullopt;
  }
  GaussRat fa = f_.eval(GaussRat(a)), fb = f_.eval(GaussRat(b));
  if (fa.is_zero()) return RatInterval::point(a);
  if (fb.is_zero()) return RatInterval::point(b);
  if (sgn(fa.re) * sgn(fb.re) >= 0) return std::nullopt;
  return RatInterval(a, b);
}

}  // namespace torusdyn
