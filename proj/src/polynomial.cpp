#include "torusdyn/polynomial.hpp"

#include <sstream>

namespace torusdyn {

RatPoly to_rat(const IntPoly& p) {
  std::vector<Rat> c;
  c.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) c.emplace_back(a);
  return RatPoly(std::move(c));
}

GaussRatPoly to_gauss_rat(const IntPoly& p) {
  std::vector<GaussRat> c;
  for (const auto& a : p.coeffs()) c.emplace_back(Rat(a));
  return GaussRatPoly(std::move(c));
}

GaussRatPoly to_gauss_rat(const GaussIntPoly& p) {
  std::vector<GaussRat> c;
  for (const auto& a : p.coeffs()) c.push_back(to_rat(a));
  return GaussRatPoly(std::move(c));
}

Int content(const IntPoly& p) {
  Int g = 0;
  for (const auto& a : p.coeffs()) g = gcd(g, a);
  if (!p.is_zero() && sgn(p.lead()) < 0) g = -g;
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Int c = content(p);
  std::vector<Int> r;
  for (const auto& a : p.coeffs()) r.push_back(exact_div(a, c));
  return IntPoly(std::move(r));
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return IntPoly();
  Int l = 1;
  for (const auto& a : p.coeffs()) l = lcm(l, a.get_den());
  std::vector<Int> r;
  for (const auto& a : p.coeffs()) r.push_back(exact_div(Int(a.get_num() * l), a.get_den()));
  return primitive_part(IntPoly(std::move(r)));
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  auto [q, r] = divmod(to_rat(a), to_rat(b));
  if (!r.is_zero()) throw std::domain_error("exact_quotient: not divisible");
  std::vector<Int> c;
  for (const auto& x : q.coeffs()) {
    if (x.get_den() != 1) throw std::domain_error("exact_quotient: non-integral quotient");
    c.push_back(x.get_num());
  }
  return IntPoly(std::move(c));
}

bool divides(const IntPoly& b, const IntPoly& a) {
  return (to_rat(a) % to_rat(b)).is_zero();
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  return primitive_part(gcd(to_rat(a), to_rat(b)));
}

IntPoly squarefree_part(const IntPoly& p) {
  return primitive_part(squarefree_part(to_rat(p)));
}

std::vector<std::pair<IntPoly, int>> squarefree_factorization(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() <= 0) return out;
  // Yun's algorithm over Q.
  RatPoly f = make_monic(to_rat(p));
  RatPoly fp = f.derivative();
  RatPoly a = gcd(f, fp);
  RatPoly b = divmod(f, a).first;
  RatPoly c = divmod(fp, a).first;
  RatPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    RatPoly ai = gcd(b, d);
    if (ai.degree() > 0) out.emplace_back(primitive_part(ai), i);
    b = divmod(b, ai).first;
    c = divmod(d, ai).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

int sign_at(const IntPoly& p, const Rat& x) { return sgn(p.eval(x)); }

IntPoly times_conjugate(const GaussIntPoly& p) {
  std::vector<GaussInt> cc;
  for (const auto& a : p.coeffs()) cc.push_back(a.conj());
  GaussIntPoly q = p * GaussIntPoly(std::move(cc));
  std::vector<Int> r;
  for (const auto& a : q.coeffs()) {
    if (a.im != 0) throw std::logic_error("times_conjugate: non-real product");
    r.push_back(a.re);
  }
  return IntPoly(std::move(r));
}

std::vector<Rat> power_sums(const RatPoly& p, std::size_t n) {
  if (p.degree() < 1) throw std::domain_error("power_sums: need degree >= 1");
  RatPoly m = make_monic(p);
  const std::size_t d = static_cast<std::size_t>(m.degree());
  // a[j] is the coefficient of x^(d-j); a[0] = 1.
  std::vector<Rat> a(d + 1);
  for (std::size_t j = 0; j <= d; ++j) a[j] = m.coeff(d - j);
  std::vector<Rat> s(n + 1, Rat(0));
  for (std::size_t t = 1; t <= n; ++t) {
    Rat acc = 0;
    for (std::size_t j = 1; j < t && j <= d; ++j) acc += a[j] * s[t - j];
    if (t <= d) acc += Rat(static_cast<long>(t)) * a[t];
    s[t] = -acc;
  }
  return std::vector<Rat>(s.begin() + 1, s.end());
}

RatPoly from_power_sums(const std::vector<Rat>& s, std::size_t d) {
  if (s.size() < d) throw std::invalid_argument("from_power_sums: not enough power sums");
  std::vector<Rat> e(d + 1, Rat(0));
  e[0] = 1;
  for (std::size_t k = 1; k <= d; ++k) {
    Rat acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      Rat term = e[k - i] * s[i - 1];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e[k] = acc / Rat(static_cast<long>(k));
  }
  std::vector<Rat> c(d + 1);
  for (std::size_t k = 0; k <= d; ++k) c[d - k] = (k % 2 == 0) ? e[k] : Rat(-e[k]);
  return RatPoly(std::move(c));
}

namespace {

std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
  std::vector<IntPoly> seq;
  IntPoly a = squarefree_part(p);
  seq.push_back(a);
  IntPoly b = primitive_part(a.derivative());
  while (!b.is_zero()) {
    seq.push_back(b);
    RatPoly r = to_rat(seq[seq.size() - 2]) % to_rat(b);
    if (r.is_zero()) break;
    // primitive_part of a rational poly normalizes the sign; restore -rem orientation.
    IntPoly next = primitive_part(r);
    Rat ratio = r.lead() / Rat(next.lead());
    if (sgn(ratio) > 0) next = -next;
    b = next;
  }
  return seq;
}

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<IntPoly>& seq, const Rat& x) {
  std::vector<int> s;
  for (const auto& q : seq) s.push_back(sign_at(q, x));
  return variations(s);
}

int variations_at_infinity(const std::vector<IntPoly>& seq, bool positive) {
  std::vector<int> s;
  for (const auto& q : seq) {
    int sg = sgn(q.lead());
    if (!positive && q.degree() % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return variations(s);
}

}  // namespace

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.degree() > 0) seq_ = sturm_sequence(p);
}

int SturmSequence::count(const Rat& a, const Rat& b) const {
  if (seq_.empty()) return 0;
  return variations_at(seq_, a) - variations_at(seq_, b);
}

int SturmSequence::count_all() const {
  if (seq_.empty()) return 0;
  return variations_at_infinity(seq_, false) - variations_at_infinity(seq_, true);
}

int sturm_count(const IntPoly& p, const Rat& a, const Rat& b) { return SturmSequence(p).count(a, b); }

int real_root_count(const IntPoly& p) { return SturmSequence(p).count_all(); }

Rat root_bound(const IntPoly& p) {
  if (p.degree() < 1) return Rat(1);
  Rat m = 0;
  Rat l = abs(Rat(p.lead()));
  for (int i = 0; i < p.degree(); ++i) {
    Rat r = abs(Rat(p.coeffs()[static_cast<std::size_t>(i)])) / l;
    if (r > m) m = r;
  }
  return m + 1;
}

IntPoly parse_poly_leading_first(const std::string& s) {
  std::vector<Int> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty coefficient in '" + s + "'");
    c.push_back(parse_int(tok.substr(b, e - b + 1)));
  }
  std::vector<Int> asc(c.rbegin(), c.rend());
  return IntPoly(std::move(asc));
}

std::vector<std::string> coeffs_leading_first(const IntPoly& p) {
  std::vector<std::string> r;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) r.push_back(it->get_str());
  return r;
}

}  // namespace torusdyn
