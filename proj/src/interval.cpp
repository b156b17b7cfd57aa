#include "torusdyn/interval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

namespace torusdyn {

RatInterval::RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw std::invalid_argument("RatInterval: lo > hi");
}

Rat RatInterval::mag() const { return std::max(abs(lo), abs(hi)); }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return RatInterval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

RatInterval operator*(const RatInterval& a, const Rat& s) {
  if (sgn(s) >= 0) return RatInterval(Rat(a.lo * s), Rat(a.hi * s));
  return RatInterval(Rat(a.hi * s), Rat(a.lo * s));
}

namespace {

Rat mpfr_to_rat(mpfr_t x) {
  Rat r;
  mpfr_get_q(r.get_mpq_t(), x);
  return r;
}

Rat log_bound(const Rat& x, unsigned bits, mpfr_rnd_t rnd) {
  mpfr_t v;
  mpfr_init2(v, bits);
  mpfr_set_q(v, x.get_mpq_t(), rnd);
  mpfr_log(v, v, rnd);
  Rat r = mpfr_to_rat(v);
  mpfr_clear(v);
  return r;
}

// Parses a decimal in the form produced by mpfr printf ("-1.25e-07", "3.5").
Rat parse_decimal(const std::string& s) {
  std::string mant = s;
  long exp10 = 0;
  auto e = s.find_first_of("eE");
  if (e != std::string::npos) {
    mant = s.substr(0, e);
    exp10 = std::stol(s.substr(e + 1));
  }
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg || (!mant.empty() && mant[0] == '+')) mant.erase(0, 1);
  auto dot = mant.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  Int n(mant, 10);
  Int p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  Rat r = exp10 >= 0 ? Rat(n * p10) : Rat(n, p10);
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

std::string print_mpfr(const Rat& x, int digits, mpfr_rnd_t rnd) {
  mpfr_t v;
  mpfr_init2(v, 256);
  mpfr_set_q(v, x.get_mpq_t(), rnd);
  char* buf = nullptr;
  if (rnd == MPFR_RNDU)
    mpfr_asprintf(&buf, "%.*RUe", digits, v);
  else
    mpfr_asprintf(&buf, "%.*RNg", digits, v);
  std::string s(buf);
  mpfr_free_str(buf);
  mpfr_clear(v);
  return s;
}

}  // namespace

RatInterval log_enclosure(const RatInterval& x, unsigned bits) {
  if (sgn(x.lo) <= 0) throw std::domain_error("log_enclosure: non-positive argument");
  if (x.lo == 1 && x.hi == 1) return RatInterval::point(Rat(0));
  return RatInterval(log_bound(x.lo, bits, MPFR_RNDD), log_bound(x.hi, bits, MPFR_RNDU));
}

std::string decimal_approx(const RatInterval& x, int digits) {
  std::string m = print_mpfr(x.mid(), digits, MPFR_RNDN);
  Rat printed = parse_decimal(m);
  Rat err = std::max(abs(Rat(printed - x.lo)), abs(Rat(x.hi - printed)));
  if (sgn(err) == 0) return m;
  return m + " +/- " + print_mpfr(err, 1, MPFR_RNDU);
}

double to_double(const Rat& x) {
  mpfr_t v;
  mpfr_init2(v, 64);
  mpfr_set_q(v, x.get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(v, MPFR_RNDN);
  mpfr_clear(v);
  return d;
}

bool CBall::contains_zero() const { return mid.norm() <= rad * rad; }

CBall CBall::rounded(unsigned bits) const {
  GaussRat m = round_dyadic(mid, bits);
  GaussRat d = mid - m;
  return CBall(m, Rat(rad + abs(d.re) + abs(d.im)));
}

RatInterval CBall::abs_interval(unsigned bits) const {
  Rat lo = abs_lower(mid, bits) - rad;
  if (sgn(lo) < 0) lo = 0;
  return RatInterval(lo, Rat(abs_upper(mid, bits) + rad));
}

CBall operator*(const CBall& a, const CBall& b) {
  Rat am = abs_upper(a.mid), bm = abs_upper(b.mid);
  return CBall(a.mid * b.mid, Rat(am * b.rad + bm * a.rad + a.rad * b.rad));
}

CBall reciprocal(const CBall& b, unsigned bits) {
  Rat l = abs_lower(b.mid, bits + 8);
  if (l <= b.rad) throw std::domain_error("reciprocal: ball contains zero");
  GaussRat c = inverse(b.mid);
  Rat r = b.rad / ((l - b.rad) * l);
  return CBall(c, r).rounded(bits + 32);
}

// Interval determinant by cofactor expansion; fine for the small sizes that occur.
RatInterval interval_determinant(const std::vector<std::vector<RatInterval>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  RatInterval acc = RatInterval::point(Rat(0));
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<RatInterval>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<RatInterval> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    RatInterval term = a[0][c] * interval_determinant(minor);
    acc = (c % 2) ? acc - term : acc + term;
  }
  return acc;
}

namespace {

void subsets_of(std::size_t n, std::size_t r, std::size_t start, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == r) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_of(n, r, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::size_t certified_rank(const std::vector<std::vector<RatInterval>>& a) {
  const std::size_t n = a.size(), m = n ? a[0].size() : 0;
  for (std::size_t rho = std::min(n, m); rho >= 1; --rho) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets_of(n, rho, 0, cur, rs);
    subsets_of(m, rho, 0, cur, cs);
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<RatInterval>> sub;
        for (auto i : r) {
          std::vector<RatInterval> row;
          for (auto j : c) row.push_back(a[i][j]);
          sub.push_back(std::move(row));
        }
        if (!interval_determinant(sub).contains_zero()) return rho;
      }
  }
  return 0;
}

}  // namespace torusdyn
