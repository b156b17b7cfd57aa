#include "torusdyn/hodge_riemann.hpp"

#include <map>
#include <mutex>
#include <random>

namespace torusdyn {

namespace {

void require_degree_one(const CohomClass& c, const char* who) {
  if (c.p != 1) throw std::invalid_argument(std::string(who) + ": degree-1 classes required");
}

void require_nef(const CohomClass& c, const char* who) {
  require_degree_one(c, who);
  if (!is_nef(c)) throw std::invalid_argument(std::string(who) + ": class is not nef");
}

Rat real_volume(const CohomClass& top) {
  const GaussRat& v = top.m(0, 0);
  if (v.im != 0) throw std::logic_error("volume coefficient of a real class is not real");
  return v.re;
}

RatMatrix restrict_gram(const RatMatrix& gram, const RatMatrix& basis) {
  return basis * gram * basis.transpose();
}

PositivityReport restricted_positivity(const QForm& q, const PrimitiveSpace& prim, bool definite) {
  PositivityReport out;
  out.k = q.k;
  out.dimension = prim.dimension();
  if (prim.degenerate) {
    out.degenerate = true;
    return out;
  }
  RatMatrix r = restrict_gram(q.gram, prim.basis);
  auto res = definiteness(r);
  out.rank = rank(r);
  out.pivots = res.pivots;
  if (!out.pivots.empty()) {
    out.min_pivot = out.pivots[0];
    for (const auto& p : out.pivots)
      if (p < out.min_pivot) out.min_pivot = p;
  }
  out.holds = definite ? res.pd : res.psd;
  if (!out.holds) {
    std::vector<Rat> y;
    if (res.witness)
      y = *res.witness;
    else
      y = kernel(r).at(0);
    out.witness = prim.basis.transpose() * y;
  }
  return out;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

long draw(std::mt19937_64& rng, long b) { return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * b + 1)) - b; }

GaussRat draw_gauss(std::mt19937_64& rng, long b) { return GaussRat(Rat(draw(rng, b)), Rat(draw(rng, b))); }

// Multisets of size s from {0..n-1}, nondecreasing.
void multisets(std::size_t n, std::size_t s, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == s) {
    out.push_back(cur);
    return;
  }
  std::size_t start = cur.empty() ? 0 : cur.back();
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    multisets(n, s, cur, out);
    cur.pop_back();
  }
}

Rat primitive_scale(const Rat& a, const Rat& b) {
  // 1 / gcd of the pair after clearing denominators
  Int den = lcm(Int(a.get_den()), Int(b.get_den()));
  Int x = Int(a * den), y = Int(b * den);
  Int g = gcd(abs(x), abs(y));
  return Rat(den) / g;
}

}  // namespace

const std::vector<CohomClass>& real_basis(unsigned k) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<CohomClass>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  std::vector<CohomClass> out;
  for (const auto& h : hermitian_basis(k)) out.push_back(CohomClass::from_hermitian(h));
  return cache.emplace(k, std::move(out)).first->second;
}

CohomClass class_from_coordinates(unsigned k, const std::vector<Rat>& x) {
  return CohomClass::from_hermitian(hermitian_from_coordinates(x, k));
}

Rat q_form(const CohomClass& c, const CohomClass& cp, const std::vector<CohomClass>& context) {
  const unsigned k = c.k;
  if (k < 2 || context.size() + 2 != k) throw std::invalid_argument("q_form: context must hold k - 2 classes");
  std::vector<CohomClass> all{c, cp};
  for (const auto& x : context) all.push_back(x);
  for (const auto& x : all) require_degree_one(x, "q_form");
  return -intersection_number(all);
}

Rat QForm::operator()(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  Rat acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) acc += x[i] * gram(i, j) * y[j];
  }
  return acc;
}

QForm make_q_form(unsigned k, const std::vector<CohomClass>& context) {
  if (k < 2 || context.size() + 2 != k) throw std::invalid_argument("make_q_form: context must hold k - 2 classes");
  for (const auto& x : context) require_degree_one(x, "make_q_form");
  QForm q;
  q.k = k;
  q.context = context;
  const auto& basis = real_basis(k);
  const std::size_t n = basis.size();
  CohomClass w = wedge_all(context, k);
  q.gram = RatMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    CohomClass x = wedge(basis[a], w);
    for (std::size_t b = 0; b <= a; ++b) {
      Rat v = -real_volume(wedge(basis[b], x));
      q.gram(a, b) = v;
      q.gram(b, a) = v;
    }
  }
  return q;
}

bool PrimitiveSpace::contains(const CohomClass& c) const { return wedge(c, context_wedge).structurally_zero(); }

PrimitiveSpace primitive_space(unsigned k, const std::vector<CohomClass>& context) {
  if (k < 1 || context.size() + 1 != k) throw std::invalid_argument("primitive_space: context must hold k - 1 classes");
  for (const auto& x : context) require_degree_one(x, "primitive_space");
  PrimitiveSpace ps;
  ps.k = k;
  ps.context_wedge = wedge_all(context, k);
  ps.degenerate = ps.context_wedge.structurally_zero();
  const auto& basis = real_basis(k);
  const std::size_t n = basis.size();
  RatMatrix row(1, n);
  for (std::size_t a = 0; a < n; ++a) {
    ps.functional.push_back(real_volume(wedge(basis[a], ps.context_wedge)));
    row(0, a) = ps.functional.back();
  }
  if (ps.degenerate) {
    ps.basis = RatMatrix::identity(n);
    return ps;
  }
  auto ker = kernel(row);
  ps.basis = RatMatrix(ker.size(), n);
  for (std::size_t i = 0; i < ker.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) ps.basis(i, j) = ker[i][j];
  return ps;
}

PositivityReport check_hodge_riemann_definite(const CohomClass& omega) {
  require_degree_one(omega, "check_hodge_riemann_definite");
  if (!is_kahler(omega)) throw std::invalid_argument("check_hodge_riemann_definite: class is not Kahler");
  const unsigned k = omega.k;
  if (k < 2) throw std::invalid_argument("check_hodge_riemann_definite: k >= 2 required");
  QForm q = make_q_form(k, std::vector<CohomClass>(k - 2, omega));
  PrimitiveSpace p = primitive_space(k, std::vector<CohomClass>(k - 1, omega));
  return restricted_positivity(q, p, true);
}

PositivityReport check_gromov_semipositive(const std::vector<CohomClass>& context) {
  if (context.empty()) throw std::invalid_argument("check_gromov_semipositive: empty context");
  const unsigned k = context[0].k;
  if (k < 2 || context.size() + 1 != k)
    throw std::invalid_argument("check_gromov_semipositive: context must hold k - 1 classes");
  for (const auto& c : context) require_nef(c, "check_gromov_semipositive");
  PrimitiveSpace p = primitive_space(k, context);
  if (p.degenerate) {
    PositivityReport out;
    out.k = k;
    out.degenerate = true;
    out.dimension = p.dimension();
    return out;
  }
  QForm q = make_q_form(k, std::vector<CohomClass>(context.begin(), context.end() - 1));
  return restricted_positivity(q, p, false);
}

std::vector<CohomClass> context_for_draw(unsigned k, std::uint64_t seed, std::size_t i, ContextDraw kind) {
  std::mt19937_64 rng(splitmix(seed ^ splitmix(static_cast<std::uint64_t>(i))));
  std::vector<CohomClass> out;
  for (unsigned c = 0; c + 1 < k; ++c) {
    GaussRatMatrix h(k, k);
    if (kind == ContextDraw::positive_definite) {
      GaussRatMatrix b(k, k);
      for (unsigned x = 0; x < k; ++x)
        for (unsigned y = 0; y < k; ++y) b(x, y) = draw_gauss(rng, 2);
      h = b.conj_transpose() * b + GaussRatMatrix::identity(k);
    } else {
      // sum of between 1 and k rank-one terms
      const long terms = 1 + static_cast<long>(rng() % k);
      for (long t = 0; t < terms; ++t) {
        std::vector<GaussRat> v(k);
        for (auto& x : v) x = draw_gauss(rng, 2);
        h += rank_one_class(v).m;
      }
    }
    out.push_back(CohomClass::from_hermitian(h));
  }
  return out;
}

SemipositivitySweep sweep_gromov(unsigned k, std::size_t samples, std::uint64_t seed, ContextDraw kind) {
  if (k < 2) throw std::invalid_argument("sweep_gromov: k >= 2 required");
  SemipositivitySweep s;
  s.k = k;
  s.seed = seed;
  s.draw = kind;
  bool have_pivot = false;
  for (std::size_t i = 0; i < samples; ++i) {
    auto ctx = context_for_draw(k, seed, i, kind);
    PositivityReport r = check_gromov_semipositive(ctx);
    ++s.samples;
    if (r.degenerate) {
      ++s.degenerate;
    } else if (r.holds) {
      ++s.passed;
      if (!r.pivots.empty() && (!have_pivot || r.min_pivot < s.smallest_pivot)) {
        s.smallest_pivot = r.min_pivot;
        have_pivot = true;
      }
    } else {
      ++s.failed;
      if (!s.first_failure) s.first_failure = ctx;
    }
  }
  return s;
}

std::string to_string(PairRelation r) {
  switch (r) {
    case PairRelation::colinear:
      return "colinear";
    case PairRelation::wedge_nonzero:
      return "wedge_nonzero";
    case PairRelation::violation:
      return "violation";
  }
  return "unknown";
}

ColinearityResult colinearity_witness(const CohomClass& c, const CohomClass& cp) {
  require_nef(c, "colinearity_witness");
  require_nef(cp, "colinearity_witness");
  if (c.k != cp.k || c.k < 2) throw std::invalid_argument("colinearity_witness: same k >= 2 required");
  ColinearityResult out;
  out.wedge = wedge(c, cp);
  if (!out.wedge.structurally_zero()) {
    out.relation = PairRelation::wedge_nonzero;
    return out;
  }
  if (c.structurally_zero()) {
    out.relation = PairRelation::colinear;
    return out;
  }
  std::size_t pi = 0, pj = 0;
  bool found = false;
  for (std::size_t i = 0; i < c.m.rows() && !found; ++i)
    for (std::size_t j = 0; j < c.m.cols() && !found; ++j)
      if (!is_zero(c.m(i, j))) {
        pi = i;
        pj = j;
        found = true;
      }
  GaussRat r = cp.m(pi, pj) / c.m(pi, pj);
  if (r.im == 0 && GaussRat(r) * c == cp) {
    out.relation = PairRelation::colinear;
    out.ratio = r.re;
  } else {
    out.relation = PairRelation::violation;
  }
  return out;
}

std::string to_string(AbStatus s) {
  switch (s) {
    case AbStatus::solved:
      return "solved";
    case AbStatus::hypothesis_violated:
      return "hypothesis_violated";
    case AbStatus::violation:
      return "violation";
  }
  return "unknown";
}

AbPair solve_ab_pair(const CohomClass& c, const CohomClass& cp, const std::vector<CohomClass>& context) {
  const unsigned k = c.k;
  require_nef(c, "solve_ab_pair");
  require_nef(cp, "solve_ab_pair");
  for (const auto& x : context) require_nef(x, "solve_ab_pair");
  if (k < 2 || context.size() + 2 > k) throw std::invalid_argument("solve_ab_pair: at most k - 2 context classes");
  AbPair out;
  CohomClass w = wedge_all(context, k);
  CohomClass cw = wedge(c, w), cpw = wedge(cp, w);
  if (!wedge(cw, cp).structurally_zero()) {
    out.status = AbStatus::hypothesis_violated;
    out.detail = "c ^ c' ^ context is nonzero";
    return out;
  }
  out.uniqueness_required = !cw.structurally_zero();
  // constraint rows: real and imaginary parts of (c ^ Z, c' ^ Z), Z = W ^ B_{i_1} ^ ... ^ B_{i_s}
  const std::size_t slots = k - 2 - context.size();
  const auto& basis = real_basis(k);
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> cur;
  multisets(basis.size(), slots, cur, tuples);
  std::vector<std::vector<Rat>> rows;
  for (const auto& t : tuples) {
    CohomClass z = w;
    for (std::size_t i : t) z = wedge(basis[i], z);
    CohomClass ya = wedge(z, c), yb = wedge(z, cp);
    for (std::size_t i = 0; i < ya.m.rows(); ++i)
      for (std::size_t j = 0; j < ya.m.cols(); ++j) {
        const GaussRat &x = ya.m(i, j), &y = yb.m(i, j);
        if (x.re != 0 || y.re != 0) rows.push_back({x.re, y.re});
        if (x.im != 0 || y.im != 0) rows.push_back({x.im, y.im});
      }
  }
  out.constraints = rows.size();
  RatMatrix m(rows.size(), 2);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m(i, 0) = rows[i][0];
    m(i, 1) = rows[i][1];
  }
  auto ker = kernel(m);
  out.kernel_dimension = ker.size();
  if (ker.empty()) {
    out.status = AbStatus::violation;
    out.detail = "constraint kernel is trivial";
    return out;
  }
  if (out.uniqueness_required && ker.size() != 1) {
    out.status = AbStatus::violation;
    out.detail = "constraint kernel is not one-dimensional although c ^ context != 0";
    return out;
  }
  Rat a = ker[0][0], b = ker[0][1];
  Rat s = primitive_scale(a, b);
  a *= s;
  b *= s;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
  }
  out.a = a;
  out.b = b;
  // the spanning family must agree with the direct statement in H^{m+1,m+1}
  if (!(GaussRat(a) * cw + GaussRat(b) * cpw).structurally_zero()) {
    out.status = AbStatus::violation;
    out.detail = "kernel vector does not annihilate (a c + b c') ^ context";
    return out;
  }
  out.status = AbStatus::solved;
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::vacuous:
      return "vacuous";
    case Verdict::violation:
      return "violation";
  }
  return "unknown";
}

LemmaReport check_eigenclass_wedge_lemma(const TorusAutomorphism& g, const AlgClass& c, const AlgClass& cp,
                                         const std::vector<AlgClass>& context, const AlgNum& lambda,
                                         const AlgNum& lambda_p) {
  const unsigned k = g.k();
  auto vacuous = [](std::string why) { return LemmaReport{Verdict::vacuous, std::move(why)}; };
  if (c.k != k || cp.k != k || c.p != 1 || cp.p != 1) throw std::invalid_argument("eigenclass lemma: degree-1 classes on T^k");
  if (context.size() + 2 > k) throw std::invalid_argument("eigenclass lemma: at most k - 2 context classes");
  for (const auto& x : context)
    if (x.k != k || x.p != 1) throw std::invalid_argument("eigenclass lemma: degree-1 classes on T^k");
  std::vector<const AlgClass*> all{&c, &cp};
  for (const auto& x : context) all.push_back(&x);
  for (const auto* x : all) {
    auto nef = certified_nef(*x);
    if (!nef) return vacuous("nef property could not be certified");
    if (!*nef) return vacuous("a class is not nef");
  }
  if (certified_sign(lambda) <= 0 || certified_sign(lambda_p) <= 0) return vacuous("eigenvalues must be positive");
  if ((lambda - lambda_p).certified_zero()) return vacuous("lambda = lambda'");
  AlgClass w = wedge_all(context, k);
  AlgClass x = wedge(w, c), xp = wedge(w, cp);
  if (!certified_zero(pullback(g, x) - lambda * x)) return vacuous("context ^ c is not an eigenclass for lambda");
  if (!certified_zero(pullback(g, xp) - lambda_p * xp)) return vacuous("context ^ c' is not an eigenclass for lambda'");
  if (certified_zero(x)) return vacuous("context ^ c = 0");
  if (!certified_zero(wedge(x, cp))) return vacuous("context ^ c ^ c' != 0");
  if (certified_zero(xp)) return LemmaReport{Verdict::holds, ""};
  return LemmaReport{Verdict::violation, "context ^ c' != 0 although every hypothesis holds"};
}

}  // namespace torusdyn
