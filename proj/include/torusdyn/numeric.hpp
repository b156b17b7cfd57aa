#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

namespace torusdyn {

using Int = mpz_class;
using Rat = mpq_class;

/// Elements of Z[i] (T = Int) or Q(i) (T = Rat).
template <class T>
struct Gauss {
  T re{0};
  T im{0};

  Gauss() = default;
  Gauss(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  Gauss(T r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Gauss(T r, T i) : re(std::move(r)), im(std::move(i)) {}
  Gauss(long r, long i) : re(r), im(i) {}

  static Gauss unit_i() { return Gauss(0L, 1L); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Gauss conj() const { return Gauss(re, T(-im)); }
  /// |z|^2
  T norm() const { return T(re * re + im * im); }

  Gauss operator-() const { return Gauss(T(-re), T(-im)); }

  Gauss& operator+=(const Gauss& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gauss& operator-=(const Gauss& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gauss& operator*=(const Gauss& o) {
    T r = re * o.re - im * o.im;
    T i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
  friend bool operator==(const Gauss& a, const Gauss& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }
};

using GaussInt = Gauss<Int>;
using GaussRat = Gauss<Rat>;

inline GaussRat operator/(const GaussRat& a, const GaussRat& b) {
  Rat n = b.norm();
  GaussRat q = a * b.conj();
  q.re /= n;
  q.im /= n;
  return q;
}
inline GaussRat& operator/=(GaussRat& a, const GaussRat& b) { return a = a / b; }

inline GaussRat to_rat(const GaussInt& z) { return GaussRat(Rat(z.re), Rat(z.im)); }

/// Exact quotient in Z; throws std::domain_error when b does not divide a.
Int exact_div(const Int& a, const Int& b);
/// Exact quotient in Z[i]; throws std::domain_error when b does not divide a.
GaussInt exact_div(const GaussInt& a, const GaussInt& b);
inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
inline GaussRat exact_div(const GaussRat& a, const GaussRat& b) { return a / b; }

inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
template <class T>
bool is_zero(const Gauss<T>& a) {
  return a.is_zero();
}

inline Rat inverse(const Rat& a) { return 1 / a; }
inline GaussRat inverse(const GaussRat& a) { return GaussRat(1L) / a; }

inline Rat conj(const Rat& a) { return a; }
inline Int conj(const Int& a) { return a; }
template <class T>
Gauss<T> conj(const Gauss<T>& a) {
  return a.conj();
}

/// True when z is one of 1, -1, i, -i.
bool is_gauss_unit(const GaussInt& z);

std::string to_string(const Int& a);
std::string to_string(const Rat& a);
std::string to_string(const GaussInt& z);
std::string to_string(const GaussRat& z);

Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);

std::ostream& operator<<(std::ostream& os, const GaussInt& z);
std::ostream& operator<<(std::ostream& os, const GaussRat& z);

/// Rational bounds lo <= sqrt(x) <= hi with hi - lo <= 2^-bits * max(1, sqrt(x)).
std::pair<Rat, Rat> sqrt_bounds(const Rat& x, unsigned bits);
Rat sqrt_upper(const Rat& x, unsigned bits = 64);
Rat sqrt_lower(const Rat& x, unsigned bits = 64);

/// Upper bound on |z|.
Rat abs_upper(const GaussRat& z, unsigned bits = 64);
Rat abs_lower(const GaussRat& z, unsigned bits = 64);

Rat abs(const Rat& a);

/// Round x to the nearest multiple of 2^-bits (ties away from zero).
Rat round_dyadic(const Rat& x, unsigned bits);
GaussRat round_dyadic(const GaussRat& z, unsigned bits);

/// Nearest integer, ties rounded up.
Int round_nearest(const Rat& x);
Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

Rat pow2(long e);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

}  // namespace torusdyn
