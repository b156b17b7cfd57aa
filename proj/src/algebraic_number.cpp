#include "torusdyn/algebraic_number.hpp"

#include <algorithm>
#include <limits>

namespace torusdyn {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

Int ceil_log2(const Rat& x) {
  // smallest e with 2^e >= x, for x > 0
  Int e = 0;
  Rat p = 1;
  if (x <= 1) return 0;
  while (p < x) {
    p *= 2;
    ++e;
  }
  return e;
}

}  // namespace

std::size_t AlgebraicPool::family_of(const IntPoly& f) {
  for (std::size_t i = 0; i < families_.size(); ++i)
    if (families_[i].f == f) return i;
  Family fam;
  fam.f = f;
  fam.iso = std::make_unique<RootIsolation>(f);
  fam.iso->classify_real();
  fam.gen_of_root.assign(fam.iso->size(), npos);
  fam.bound = torusdyn::root_bound(f);
  families_.push_back(std::move(fam));
  return families_.size() - 1;
}

std::size_t AlgebraicPool::gen_for(std::size_t family, std::size_t root) {
  std::size_t& g = families_[family].gen_of_root[root];
  if (g == npos) {
    g = gens_.size();
    gens_.push_back({family, root});
  }
  return g;
}

std::vector<std::size_t> AlgebraicPool::add_all_roots(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("AlgebraicPool: polynomial of degree >= 1 required");
  if (squarefree_part(f).degree() != f.degree()) throw std::invalid_argument("AlgebraicPool: polynomial not squarefree");
  std::size_t fam = family_of(primitive_part(f));
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < families_[fam].iso->size(); ++r) out.push_back(gen_for(fam, r));
  return out;
}

std::size_t AlgebraicPool::conjugate(std::size_t g) {
  Gen gen = gens_[g];
  Family& fam = families_[gen.family];
  for (;;) {
    auto c = fam.iso->conjugate_index(gen.root);
    if (c) return gen_for(gen.family, *c);
    fam.iso->refine();
  }
}

CBall AlgebraicPool::enclosure(std::size_t g, unsigned bits) {
  Family& fam = families_[gens_[g].family];
  Rat r = pow2(-static_cast<long>(bits));
  fam.iso->refine_until(r);
  const RootDisc& d = fam.iso->disc(gens_[g].root);
  return CBall(d.center, d.radius);
}

AlgNum::AlgNum(const GaussRat& c) {
  if (!c.is_zero()) terms_[{}] = c;
}

AlgNum AlgNum::generator(PoolPtr pool, std::size_t g) {
  AlgNum a;
  a.pool_ = std::move(pool);
  Exponents e(g + 1, 0);
  e[g] = 1;
  a.terms_[e] = GaussRat(1L);
  a.reduce();
  return a;
}

bool AlgNum::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

GaussRat AlgNum::constant_term() const {
  auto it = terms_.find({});
  return it == terms_.end() ? GaussRat(0L) : it->second;
}

std::size_t AlgNum::max_generator_plus_one() const {
  std::size_t m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e.size());
  return m;
}

void AlgNum::adopt_pool(const PoolPtr& p) {
  if (!p) return;
  if (!pool_)
    pool_ = p;
  else if (pool_ != p)
    throw std::invalid_argument("AlgNum: elements from different pools");
}

void AlgNum::add_term(Exponents e, const GaussRat& c) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (c.is_zero()) {
    terms_.erase(it);
  }
}

void AlgNum::reduce() {
  if (!pool_) return;
  for (;;) {
    auto it = std::find_if(terms_.begin(), terms_.end(), [&](const auto& t) {
      for (std::size_t g = 0; g < t.first.size(); ++g)
        if (t.first[g] >= static_cast<unsigned>(pool_->degree(g))) return true;
      return false;
    });
    if (it == terms_.end()) return;
    Exponents e = it->first;
    GaussRat c = it->second;
    terms_.erase(it);
    std::size_t g = 0;
    while (e[g] < static_cast<unsigned>(pool_->degree(g))) ++g;
    const IntPoly& f = pool_->poly(g);
    const unsigned d = static_cast<unsigned>(f.degree());
    // x^d = -(1/lc) sum_{i<d} f_i x^i
    Rat lc(f.lead());
    e[g] -= d;
    for (unsigned i = 0; i < d; ++i) {
      if (f.coeff(i) == 0) continue;
      Exponents ee = e;
      ee[g] += i;
      add_term(ee, c * GaussRat(Rat(-Rat(f.coeff(i)) / lc)));
    }
  }
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
  adopt_pool(o.pool_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) {
  adopt_pool(o.pool_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  AlgNum r;
  r.adopt_pool(a.pool_);
  r.adopt_pool(b.pool_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      AlgNum::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  r.reduce();
  return r;
}

AlgNum& AlgNum::operator*=(const AlgNum& o) { return *this = *this * o; }

AlgNum AlgNum::operator-() const {
  AlgNum r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

AlgNum AlgNum::conj() const {
  AlgNum r;
  r.pool_ = pool_;
  for (const auto& [e, c] : terms_) {
    AlgNum t(c.conj());
    for (std::size_t g = 0; g < e.size(); ++g)
      for (unsigned k = 0; k < e[g]; ++k) t = t * generator(pool_, pool_->conjugate(g));
    r += t;
  }
  return r;
}

CBall AlgNum::enclose(unsigned bits) const {
  const unsigned work = bits + 16;
  CBall acc(GaussRat(0L));
  std::vector<std::vector<CBall>> powers;
  for (const auto& [e, c] : terms_) {
    CBall t(c);
    for (std::size_t g = 0; g < e.size(); ++g) {
      if (e[g] == 0) continue;
      if (powers.size() <= g) powers.resize(g + 1);
      auto& pw = powers[g];
      if (pw.empty()) pw.push_back(pool_->enclosure(g, work).rounded(work));
      while (pw.size() < e[g]) pw.push_back((pw.back() * pw[0]).rounded(work));
      t = (t * pw[e[g] - 1]).rounded(work);
    }
    acc += t;
  }
  return acc;
}

std::complex<double> AlgNum::approx() const {
  CBall b = enclose(64);
  return {to_double(b.mid.re), to_double(b.mid.im)};
}

bool AlgNum::certified_zero() const {
  if (terms_.empty()) return true;
  if (is_constant()) return false;
  if (auto single = single_generator_zero()) return *single;
  // E != 0 implies |E| >= 1 / (L^D B^(D-1)): L*E is an algebraic integer whose conjugates are
  // bounded by L*B, and its norm down to Q is a nonzero integer.
  const std::size_t ng = max_generator_plus_one();
  std::vector<unsigned> maxexp(ng, 0);
  Int den = 1;
  Rat bound = 0;
  for (const auto& [e, c] : terms_) {
    den = lcm(den, Int(c.re.get_den()));
    den = lcm(den, Int(c.im.get_den()));
    Rat t = abs(c.re) + abs(c.im);
    for (std::size_t g = 0; g < e.size(); ++g) {
      maxexp[g] = std::max(maxexp[g], e[g]);
      for (unsigned k = 0; k < e[g]; ++k) t *= pool_->root_bound(g);
    }
    bound += t;
  }
  Int field_degree = 2;
  Rat L(den);
  for (std::size_t g = 0; g < ng; ++g) {
    if (maxexp[g] == 0) continue;
    field_degree *= pool_->degree(g);
    Int lc = abs(pool_->poly(g).lead());
    for (unsigned k = 0; k < maxexp[g]; ++k) L *= lc;
  }
  if (bound < 1) bound = 1;
  // threshold = 2^-need
  Int need = field_degree * ceil_log2(L) + (field_degree - 1) * ceil_log2(bound) + 2;
  if (need > 1 << 20) throw std::runtime_error("AlgNum::certified_zero: separation bound too small");
  const unsigned need_bits = static_cast<unsigned>(need.get_ui());
  for (unsigned bits = 64;; bits *= 2) {
    CBall b = enclose(bits + 8);
    if (b.excludes_zero()) return false;
    // whole ball inside the disc of radius 2^-need
    Rat reach = abs(b.mid.re) + abs(b.mid.im) + b.rad;
    if (reach < pow2(-static_cast<long>(need_bits))) return true;
    if (bits > 4 * need_bits + 256) throw std::runtime_error("AlgNum::certified_zero: enclosure did not converge");
  }
}

// For E = p(x) at a root x of the squarefree f: with g = gcd(p, f), E = 0 iff g(x) = 0, and x is
// a root of exactly one of g and f / g, so one of the two enclosures eventually excludes zero.
std::optional<bool> AlgNum::single_generator_zero() const {
  std::size_t gen = npos;
  for (const auto& [e, c] : terms_)
    for (std::size_t g = 0; g < e.size(); ++g)
      if (e[g] != 0) {
        if (gen != npos && gen != g) return std::nullopt;
        gen = g;
      }
  std::vector<GaussRat> ec(static_cast<std::size_t>(pool_->degree(gen)), GaussRat(0L));
  for (const auto& [e, c] : terms_) ec[gen < e.size() ? e[gen] : 0] += c;
  GaussRatPoly f = to_gauss_rat(pool_->poly(gen));
  GaussRatPoly g = gcd(GaussRatPoly(ec), f);
  if (g.degree() == 0) return false;
  if (g.degree() == f.degree()) return true;
  GaussRatPoly h = divmod(f, g).first;
  AlgNum x = generator(pool_, gen);
  auto at = [&](const GaussRatPoly& q) {
    AlgNum acc;
    for (auto it = q.coeffs().rbegin(); it != q.coeffs().rend(); ++it) acc = acc * x + AlgNum(*it);
    return acc;
  };
  AlgNum gx = at(g), hx = at(h);
  for (unsigned bits = 64; bits <= (1U << 20); bits *= 2) {
    if (gx.enclose(bits).excludes_zero()) return false;
    if (hx.enclose(bits).excludes_zero()) return true;
  }
  throw std::runtime_error("AlgNum::certified_zero: root not separated");
}

AlgNum AlgNum::inverse() const {
  if (terms_.empty()) throw std::domain_error("AlgNum::inverse: zero");
  if (is_constant()) return AlgNum(GaussRat(1L) / constant_term());
  std::size_t gen = npos;
  for (const auto& [e, c] : terms_)
    for (std::size_t g = 0; g < e.size(); ++g)
      if (e[g] != 0) {
        if (gen != npos && gen != g) throw std::invalid_argument("AlgNum::inverse: more than one generator");
        gen = g;
      }
  if (certified_zero()) throw std::domain_error("AlgNum::inverse: zero");
  std::vector<GaussRat> ec(static_cast<std::size_t>(pool_->degree(gen)), GaussRat(0L));
  for (const auto& [e, c] : terms_) ec[e.empty() ? 0 : (gen < e.size() ? e[gen] : 0)] += c;
  GaussRatPoly p(ec);
  GaussRatPoly f = to_gauss_rat(pool_->poly(gen));
  // the generator is not a root of gcd(p, f), so p is invertible modulo f / gcd(p, f)
  GaussRatPoly fr = divmod(f, gcd(p, f)).first;
  auto [g, s, t] = xgcd(p, fr);
  if (g.degree() != 0) throw std::logic_error("AlgNum::inverse: unexpected common factor");
  s *= GaussRat(1L) / g.lead();
  AlgNum r;
  AlgNum x = generator(pool_, gen);
  AlgNum xp(GaussRat(1L));
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    r += xp * AlgNum(s.coeffs()[i]);
    xp = xp * x;
  }
  return r;
}

}  // namespace torusdyn
