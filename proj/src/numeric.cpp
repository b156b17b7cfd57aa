#include "torusdyn/numeric.hpp"

#include <stdexcept>

namespace torusdyn {

Int exact_div(const Int& a, const Int& b) {
  if (sgn(b) == 0) throw std::domain_error("exact_div: division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (sgn(r) != 0) throw std::domain_error("exact_div: inexact integer division");
  return q;
}

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  Int n = b.norm();
  if (sgn(n) == 0) throw std::domain_error("exact_div: division by zero");
  GaussInt p = a * b.conj();
  if (!mpz_divisible_p(p.re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(p.im.get_mpz_t(), n.get_mpz_t()))
    throw std::domain_error("exact_div: inexact Gaussian division");
  mpz_divexact(p.re.get_mpz_t(), p.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(p.im.get_mpz_t(), p.im.get_mpz_t(), n.get_mpz_t());
  return p;
}

bool is_gauss_unit(const GaussInt& z) { return z.norm() == 1; }

std::string to_string(const Int& a) { return a.get_str(); }
std::string to_string(const Rat& a) { return a.get_str(); }

namespace {
template <class T>
std::string gauss_str(const Gauss<T>& z) {
  if (z.im == 0) return z.re.get_str();
  std::string im_part;
  if (z.im == 1)
    im_part = "i";
  else if (z.im == -1)
    im_part = "-i";
  else
    im_part = z.im.get_str() + "i";
  if (z.re == 0) return im_part;
  if (im_part[0] == '-') return z.re.get_str() + im_part;
  return z.re.get_str() + "+" + im_part;
}
}  // namespace

std::string to_string(const GaussInt& z) { return gauss_str(z); }
std::string to_string(const GaussRat& z) { return gauss_str(z); }

std::ostream& operator<<(std::ostream& os, const GaussInt& z) { return os << to_string(z); }
std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << to_string(z); }

Int parse_int(const std::string& s) {
  Int v;
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || v.set_str(t, 10) != 0) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

Rat parse_rat(const std::string& s) {
  Rat v;
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || v.set_str(t, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  v.canonicalize();
  return v;
}

Rat abs(const Rat& a) { return sgn(a) < 0 ? Rat(-a) : a; }

Rat pow2(long e) {
  Rat r = 1;
  if (e >= 0)
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

std::pair<Rat, Rat> sqrt_bounds(const Rat& x, unsigned bits) {
  if (sgn(x) < 0) throw std::domain_error("sqrt_bounds: negative argument");
  if (sgn(x) == 0) return {Rat(0), Rat(0)};
  // sqrt(n/d) = sqrt(n*d)/d; scale n*d by 4^s so the integer sqrt has enough bits.
  Int nd = x.get_num() * x.get_den();
  long sz = static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  unsigned long s = bits + 2 + static_cast<unsigned long>(sz);
  Int scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), nd.get_mpz_t(), 2 * s);
  Int r;
  mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
  Int rsq = r * r;
  Rat lo(r);
  Rat hi(rsq == scaled ? r : Int(r + 1));
  Rat scale = pow2(-static_cast<long>(s)) / Rat(x.get_den());
  lo *= scale;
  hi *= scale;
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

Rat sqrt_upper(const Rat& x, unsigned bits) { return sqrt_bounds(x, bits).second; }
Rat sqrt_lower(const Rat& x, unsigned bits) { return sqrt_bounds(x, bits).first; }

Rat abs_upper(const GaussRat& z, unsigned bits) {
  if (z.im == 0) return abs(z.re);
  if (z.re == 0) return abs(z.im);
  return sqrt_upper(z.norm(), bits);
}

Rat abs_lower(const GaussRat& z, unsigned bits) {
  if (z.im == 0) return abs(z.re);
  if (z.re == 0) return abs(z.im);
  return sqrt_lower(z.norm(), bits);
}

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int round_nearest(const Rat& x) { return floor_rat(Rat(x + Rat(1, 2))); }

Rat round_dyadic(const Rat& x, unsigned bits) {
  if (x.get_den() == 1) return x;
  Rat scaled = x * pow2(bits);
  Int n = sgn(x) >= 0 ? floor_rat(Rat(scaled + Rat(1, 2))) : Int(-floor_rat(Rat(-scaled + Rat(1, 2))));
  Rat r(n);
  r *= pow2(-static_cast<long>(bits));
  r.canonicalize();
  return r;
}

GaussRat round_dyadic(const GaussRat& z, unsigned bits) {
  return GaussRat(round_dyadic(z.re, bits), round_dyadic(z.im, bits));
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace torusdyn
