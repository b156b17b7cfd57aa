#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "torusdyn/numeric.hpp"

namespace torusdyn {

/// Dense univariate polynomial, coefficients in ascending degree, no trailing zeros.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }

  static Poly constant(T a) { return Poly(std::vector<T>{std::move(a)}); }
  static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }
  /// a * x^n
  static Poly monomial(T a, std::size_t n) {
    std::vector<T> c(n + 1, T(0));
    c[n] = std::move(a);
    return Poly(std::move(c));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& lead() const {
    if (c_.empty()) throw std::domain_error("Poly::lead of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc *= x;
      acc += U(c_[i]);
    }
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(d));
  }

  Poly operator-() const {
    Poly r(*this);
    for (auto& a : r.c_) a = -a;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator*=(const T& s) {
    for (auto& a : c_) a *= s;
    normalize();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (torusdyn::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// p(x) -> p(s * x)
  Poly scale_variable(const T& s) const {
    Poly r(*this);
    T f(1);
    for (auto& a : r.c_) {
      a *= f;
      f *= s;
    }
    r.normalize();
    return r;
  }

  /// p(x) -> p(x^2)
  Poly substitute_square() const {
    if (c_.empty()) return Poly();
    std::vector<T> r(2 * c_.size() - 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
    return Poly(std::move(r));
  }

  /// Composition p(q(x)).
  Poly compose(const Poly& q) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * q;
      acc += Poly::constant(c_[i]);
    }
    return acc;
  }

  /// Multiplicity of the root 0.
  std::size_t low_order() const {
    std::size_t m = 0;
    while (m < c_.size() && torusdyn::is_zero(c_[m])) ++m;
    return m;
  }
  /// p / x^m for m = low_order().
  Poly strip_low_order() const {
    std::size_t m = low_order();
    return Poly(std::vector<T>(c_.begin() + static_cast<long>(m), c_.end()));
  }

 private:
  void normalize() {
    while (!c_.empty() && torusdyn::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;
using GaussIntPoly = Poly<GaussInt>;
using GaussRatPoly = Poly<GaussRat>;

/// Quotient and remainder over a field.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  std::vector<T> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly<T>(), a};
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1), T(0));
  T inv = inverse(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    T f = r[static_cast<std::size_t>(i)] * inv;
    if (is_zero(f)) continue;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
  }
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
  return divmod(a, b).second;
}

template <class T>
Poly<T> make_monic(const Poly<T>& a) {
  if (a.is_zero()) return a;
  return a * inverse(a.lead());
}

/// Monic gcd over a field (zero when both inputs are zero).
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// Extended gcd over a field: returns (g, s, t) with s*a + t*b = g, g monic.
template <class T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> xgcd(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> r0 = a, r1 = b;
  Poly<T> s0 = Poly<T>::constant(T(1)), s1;
  Poly<T> t0, t1 = Poly<T>::constant(T(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<T> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<T> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  T inv = inverse(r0.lead());
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Squarefree part over a field of characteristic zero (monic).
template <class T>
Poly<T> squarefree_part(const Poly<T>& a) {
  if (a.degree() <= 0) return make_monic(a);
  Poly<T> g = gcd(a, a.derivative());
  return make_monic(divmod(a, g).first);
}

template <class T>
std::string to_string(const Poly<T>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    const T& a = p.coeffs()[static_cast<std::size_t>(i)];
    if (is_zero(a)) continue;
    std::string as = to_string(a);
    bool compound = as.find_first_of("+-", 1) != std::string::npos;
    if (compound) as = "(" + as + ")";
    bool neg = !compound && as[0] == '-';
    if (neg) as.erase(0, 1);
    if (!s.empty())
      s += neg ? " - " : " + ";
    else if (neg)
      s += "-";
    if (i == 0) {
      s += as;
      continue;
    }
    if (as != "1") s += as + "*";
    s += var;
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

// ---- integer polynomial utilities ----

RatPoly to_rat(const IntPoly& p);
GaussRatPoly to_gauss_rat(const IntPoly& p);
GaussRatPoly to_gauss_rat(const GaussIntPoly& p);

/// gcd of coefficients, sign of leading coefficient.
Int content(const IntPoly& p);
/// p / content, leading coefficient positive.
IntPoly primitive_part(const IntPoly& p);
/// Primitive integer polynomial proportional to a rational one (leading coefficient positive).
IntPoly primitive_part(const RatPoly& p);

/// Exact quotient a / b in Z[x]; throws if b does not divide a.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a);

/// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Primitive squarefree part with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& p);

/// Squarefree factorization: list of (factor, multiplicity) with primitive squarefree
/// pairwise coprime factors of positive degree. Constant content is dropped.
std::vector<std::pair<IntPoly, int>> squarefree_factorization(const IntPoly& p);

/// Sign of p at a rational point.
int sign_at(const IntPoly& p, const Rat& x);

/// p(x) * conj(p)(x) for a Gaussian integer polynomial: a real integer polynomial whose
/// roots are those of p and their conjugates.
IntPoly times_conjugate(const GaussIntPoly& p);

/// Power sums s_1..s_n of the roots of p (p nonzero, degree >= 1).
std::vector<Rat> power_sums(const RatPoly& p, std::size_t n);
/// Monic polynomial of degree d whose roots have the given power sums s_1..s_d.
RatPoly from_power_sums(const std::vector<Rat>& s, std::size_t d);

/// Sturm sequence of the squarefree part of p.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p);
  /// Distinct real roots in the half-open interval (a, b].
  int count(const Rat& a, const Rat& b) const;
  /// Distinct real roots.
  int count_all() const;

 private:
  std::vector<IntPoly> seq_;
};

/// Number of distinct real roots of p in the half-open interval (a, b], via Sturm sequences.
int sturm_count(const IntPoly& p, const Rat& a, const Rat& b);
/// Number of distinct real roots of p.
int real_root_count(const IntPoly& p);

/// Cauchy bound: every complex root z of p satisfies |z| < bound.
Rat root_bound(const IntPoly& p);

/// Parses a coefficient list, leading coefficient first ("1,-1,-2,1" is x^3 - x^2 - 2x + 1).
IntPoly parse_poly_leading_first(const std::string& s);
/// Coefficients leading-first as decimal strings.
std::vector<std::string> coeffs_leading_first(const IntPoly& p);

}  // namespace torusdyn
