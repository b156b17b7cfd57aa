#include "torusdyn/group.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <unordered_map>

#include "torusdyn/charpoly.hpp"
#include "torusdyn/cyclotomic.hpp"
#include "torusdyn/lattice.hpp"

namespace torusdyn {

namespace {

constexpr std::size_t kEnumerationCap = 1000000;

AlgNum eval(const GaussRatPoly& p, const AlgNum& x) {
  AlgNum acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + AlgNum(*it);
  return acc;
}

// Integer polynomial vanishing at every root of p (p over Q(i)).
IntPoly integer_multiple(const GaussRatPoly& p) {
  Int den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, lcm(Int(c.re.get_den()), Int(c.im.get_den())));
  std::vector<GaussInt> gc;
  bool real = true;
  for (const auto& c : p.coeffs()) {
    gc.emplace_back(Int(c.re * den), Int(c.im * den));
    if (c.im != 0) real = false;
  }
  if (real) {
    std::vector<Int> rc;
    for (const auto& c : gc) rc.push_back(c.re);
    return squarefree_part(IntPoly(std::move(rc)));
  }
  return squarefree_part(times_conjugate(GaussIntPoly(std::move(gc))));
}

// Right kernel of a matrix whose entries involve at most one generator. Pivots are chosen by
// certified nonzero tests; each kernel vector has an exact 1 at its free coordinate.
std::vector<std::vector<AlgNum>> alg_kernel(AlgMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).certified_zero()) ++p;
    if (p == rows) {
      for (std::size_t i = r; i < rows; ++i) m(i, c) = AlgNum();
      continue;
    }
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    AlgNum inv = m(r, c).inverse();
    for (std::size_t j = c + 1; j < cols; ++j) m(r, j) = m(r, j) * inv;
    m(r, c) = AlgNum(1L);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).structurally_zero()) continue;
      AlgNum f = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) m(i, j) -= f * m(r, j);
      m(i, c) = AlgNum();
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<AlgNum>> out;
  std::size_t pi = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pi < pivots.size() && pivots[pi] == c) {
      ++pi;
      continue;
    }
    std::vector<AlgNum> v(cols);
    v[c] = AlgNum(1L);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, c);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<AlgNum> apply(const AlgMatrix& a, const std::vector<AlgNum>& v) {
  std::vector<AlgNum> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).structurally_zero() && !v[j].structurally_zero()) out[i] += a(i, j) * v[j];
  return out;
}

// The real number x (given as an algebraic value) as a root of the squarefree polynomial behind
// `sturm`, which must vanish at x.
AlgebraicReal identify_real(const IntPoly& sqf, const SturmSequence& sturm, const AlgNum& x) {
  for (unsigned bits = 64; bits <= 8192; bits *= 2) {
    CBall b = x.enclose(bits);
    Rat lo = b.mid.re - b.rad - pow2(-static_cast<long>(bits)), hi = b.mid.re + b.rad + pow2(-static_cast<long>(bits));
    if (sign_at(sqf, lo) == 0 || sign_at(sqf, hi) == 0) continue;
    int n = sturm.count(lo, hi);
    if (n == 0) throw std::logic_error("identify_real: value is not a root of the given polynomial");
    if (n == 1) return AlgebraicReal::from_isolating_interval(sqf, lo, hi);
  }
  throw std::runtime_error("identify_real: no isolation");
}

struct Eigenspace {
  std::vector<std::vector<AlgNum>> basis;
  std::vector<AlgNum> mu;  // eigenvalue of each A_j^* on the space
};

// Eigenspaces of B = sum_j c_j A_j^* on which every A_j^* acts as a scalar; nullopt when some
// eigenspace fails that test.
std::optional<std::vector<Eigenspace>> common_eigenspaces(const GroupSpec& spec, const std::vector<long>& coef,
                                                          const PoolPtr& pool, std::size_t& total_dim) {
  const unsigned k = spec.k;
  std::vector<GaussRatMatrix> adj;
  GaussRatMatrix b(k, k);
  for (std::size_t j = 0; j < spec.size(); ++j) {
    adj.push_back(to_rat(spec.generators[j].matrix().conj_transpose()));
    b += GaussRat(Rat(coef[j])) * adj.back();
  }
  GaussRatPoly sqf = squarefree_part(charpoly(b));
  std::vector<AlgMatrix> adj_alg;
  for (const auto& a : adj) adj_alg.push_back(to_alg(a));
  std::vector<Eigenspace> out;
  total_dim = 0;
  for (std::size_t id : pool->add_all_roots(integer_multiple(sqf))) {
    AlgNum mu = AlgNum::generator(pool, id);
    if (!eval(sqf, mu).certified_zero()) continue;
    AlgMatrix shifted = to_alg(b);
    for (unsigned i = 0; i < k; ++i) shifted(i, i) -= mu;
    Eigenspace e;
    e.basis = alg_kernel(shifted);
    if (e.basis.empty()) throw std::logic_error("common_eigenspaces: eigenvalue without eigenvector");
    total_dim += e.basis.size();
    const auto& w = e.basis[0];
    std::size_t piv = 0;
    while (!(w[piv] == AlgNum(1L))) ++piv;
    for (const auto& a : adj_alg) {
      AlgNum m = apply(a, w)[piv];
      for (const auto& v : e.basis) {
        auto av = apply(a, v);
        for (unsigned i = 0; i < k; ++i)
          if (!(av[i] - m * v[i]).certified_zero()) return std::nullopt;
      }
      e.mu.push_back(m);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string word_string(const Word& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

Word to_word(const IntMatrix& m, std::size_t row) {
  Word w(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!m(row, j).fits_slong_p()) throw std::overflow_error("word exponent out of range");
    w[j] = m(row, j).get_si();
  }
  return w;
}

std::string matrix_key(const GaussIntMatrix& m) {
  std::string s;
  for (const auto& x : m.data()) {
    s += x.re.get_str(16);
    s += ',';
    s += x.im.get_str(16);
    s += ';';
  }
  return s;
}

GaussRatMatrix nilpotent_log(const GaussRatMatrix& v) {
  const std::size_t n = v.rows();
  GaussRatMatrix x = v - GaussRatMatrix::identity(n);
  GaussRatMatrix term = x, out(n, n);
  for (std::size_t t = 1; t <= n; ++t) {
    GaussRat c = GaussRat(Rat(t % 2 ? 1 : -1) / Rat(static_cast<long>(t)));
    out += c * term;
    term = term * x;
  }
  if (!term.is_zero()) throw std::logic_error("nilpotent_log: not unipotent");
  return out;
}

// Lcm of the orders of the roots of unity among the eigenvalues of a zero-entropy matrix.
Int root_of_unity_exponent(const GaussIntMatrix& a) {
  auto f = cyclotomic_factors(times_conjugate(charpoly(a)));
  if (!f) throw std::logic_error("zero-entropy word with non-cyclotomic spectrum");
  Int n = 1;
  for (const auto& [m, e] : *f) n = lcm(n, Int(static_cast<unsigned long>(m)));
  return n;
}

UPart analyze_u(const GroupSpec& spec, const IntMatrix& kernel) {
  UPart u;
  const std::size_t s = kernel.rows();
  const unsigned k = spec.k;
  for (std::size_t i = 0; i < s; ++i) u.generators.push_back(to_word(kernel, i));
  if (s == 0) {
    u.finite = true;
    u.order = Int(1);
    u.relations = IntMatrix(0, 0);
    return u;
  }
  std::vector<GaussIntMatrix> elems;
  for (const auto& w : u.generators) elems.push_back(word_element(spec, w).matrix());
  // Relations lie in the lattice of c with sum c_i log(u_i^N) = 0, N a common exponent making
  // every u_i^N unipotent; that lattice generates the torsion subgroup.
  Int n_exp = 1;
  for (const auto& e : elems) n_exp = lcm(n_exp, root_of_unity_exponent(e));
  if (!n_exp.fits_ulong_p()) throw std::overflow_error("analyze_u: exponent too large");
  std::vector<GaussRatMatrix> logs;
  for (const auto& e : elems) logs.push_back(nilpotent_log(to_rat(power(e, n_exp.get_ui()))));
  RatMatrix lin(2 * k * k, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t a = 0; a < k * k; ++a) {
      lin(2 * a, i) = logs[i].data()[a].re;
      lin(2 * a + 1, i) = logs[i].data()[a].im;
    }
  Int den = 1;
  for (const auto& x : lin.data()) den = lcm(den, Int(x.get_den()));
  IntMatrix ilin(lin.rows(), s);
  for (std::size_t i = 0; i < lin.rows(); ++i)
    for (std::size_t j = 0; j < s; ++j) ilin(i, j) = Int(lin(i, j) * den);
  IntMatrix lambda = integer_kernel(ilin);
  u.finite = lambda.rows() == s;

  // Enumerate the torsion subgroup from the words of lambda; Schreier relations give the
  // relation lattice exactly.
  const std::size_t q = lambda.rows();
  std::vector<GaussIntMatrix> tgen;
  for (std::size_t i = 0; i < q; ++i) {
    GaussIntMatrix m = GaussIntMatrix::identity(k);
    for (std::size_t j = 0; j < s; ++j) {
      long c = lambda(i, j).get_si();
      if (c) m = m * word_element(spec, [&] {
                   Word w(spec.size(), 0);
                   for (std::size_t t = 0; t < spec.size(); ++t) w[t] = u.generators[j][t] * c;
                   return w;
                 }()).matrix();
    }
    tgen.push_back(m);
  }
  std::unordered_map<std::string, std::size_t> seen;
  std::vector<GaussIntMatrix> elements{GaussIntMatrix::identity(k)};
  std::vector<std::vector<Int>> coords{std::vector<Int>(q, 0)};
  seen.emplace(matrix_key(elements[0]), 0);
  std::vector<std::vector<Int>> rel;
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t g = 0; g < q; ++g) {
      GaussIntMatrix y = elements[head] * tgen[g];
      std::vector<Int> c = coords[head];
      c[g] += 1;
      auto key = matrix_key(y);
      auto it = seen.find(key);
      if (it != seen.end()) {
        std::vector<Int> d(q);
        bool nonzero = false;
        for (std::size_t t = 0; t < q; ++t) {
          d[t] = c[t] - coords[it->second][t];
          if (d[t] != 0) nonzero = true;
        }
        if (nonzero) rel.push_back(std::move(d));
        continue;
      }
      if (elements.size() >= kEnumerationCap) {
        u.enumeration_capped = true;
        break;
      }
      seen.emplace(std::move(key), elements.size());
      elements.push_back(std::move(y));
      coords.push_back(std::move(c));
    }
    if (u.enumeration_capped) break;
  }
  if (u.finite && !u.enumeration_capped) u.order = Int(static_cast<unsigned long>(elements.size()));
  // relations in U-generator coordinates
  std::vector<std::vector<Int>> rows;
  for (const auto& d : rel) {
    std::vector<Int> r(s, 0);
    for (std::size_t t = 0; t < q; ++t)
      for (std::size_t j = 0; j < s; ++j) r[j] += d[t] * lambda(t, j);
    rows.push_back(std::move(r));
  }
  if (rows.empty()) {
    u.relations = IntMatrix(0, s);
  } else {
    HermiteForm h = hermite_form(rows_to_matrix(rows, s));
    u.relations = IntMatrix(h.rank(), s);
    for (std::size_t i = 0; i < h.rank(); ++i)
      for (std::size_t j = 0; j < s; ++j) u.relations(i, j) = h.H(i, j);
  }
  return u;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<TorusAutomorphism> gens, std::vector<std::string> labels_)
    : generators(std::move(gens)), labels(std::move(labels_)) {
  if (generators.empty()) throw std::invalid_argument("GroupSpec: no generators");
  k = generators[0].k();
  for (const auto& g : generators)
    if (g.k() != k) throw std::invalid_argument("GroupSpec: generators act on different tori");
  if (labels.empty())
    for (std::size_t i = 0; i < generators.size(); ++i)
      labels.push_back(generators[i].name().empty() ? "g" + std::to_string(i + 1) : generators[i].name());
  if (labels.size() != generators.size()) throw std::invalid_argument("GroupSpec: label count mismatch");
}

CommutingCheck check_commuting(const GroupSpec& spec) {
  CommutingCheck out;
  for (std::size_t i = 0; i < spec.size(); ++i)
    for (std::size_t j = i + 1; j < spec.size(); ++j) {
      const auto &a = spec.generators[i].matrix(), &b = spec.generators[j].matrix();
      if (!(a * b == b * a)) {
        out.commuting = false;
        out.witness = std::make_pair(i, j);
        return out;
      }
    }
  return out;
}

TorusAutomorphism word_element(const GroupSpec& spec, const Word& e) {
  if (e.size() != spec.size()) throw std::invalid_argument("word_element: word length differs from generator count");
  TorusAutomorphism out = TorusAutomorphism::identity(spec.k);
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j] != 0) out = out * spec.generators[j].power(e[j]);
  return out;
}

bool verify_zero_entropy_word(const GroupSpec& spec, const Word& e) {
  return is_cyclotomic_product(charpoly(h11_matrix(word_element(spec, e))));
}

CharacterTable find_characters(const GroupSpec& spec) {
  const unsigned k = spec.k;
  const std::size_t n = spec.size();
  bool all_zero_entropy = true;
  for (std::size_t j = 0; j < n; ++j) {
    Word e(n, 0);
    e[j] = 1;
    if (!verify_zero_entropy_word(spec, e)) all_zero_entropy = false;
  }
  auto pool = std::make_shared<AlgebraicPool>();
  std::optional<std::vector<Eigenspace>> spaces;
  bool semisimple = false;
  // B = sum_j (t + 1)^j A_j^*; a generic combination separates the joint eigenvalues
  for (long t = 1; t <= 8 && !semisimple; ++t) {
    std::vector<long> coef(n);
    long c = 1;
    for (std::size_t j = 0; j < n; ++j, c *= t + 1) coef[j] = c;
    std::size_t dim = 0;
    auto sp = common_eigenspaces(spec, coef, pool, dim);
    if (!sp) continue;
    if (dim == k) {
      spaces = std::move(sp);
      semisimple = true;
    } else if (!spaces && all_zero_entropy) {
      spaces = std::move(sp);
    }
  }
  if (!spaces) throw UnsupportedSpectrum();

  CharacterTable table;
  table.k = k;
  table.semisimple = semisimple;
  std::vector<IntPoly> sqf(n);
  std::vector<std::unique_ptr<SturmSequence>> sturm(n);
  for (std::size_t j = 0; j < n; ++j) {
    sqf[j] = squarefree_part(charpoly(h11_matrix(spec.generators[j])));
    sturm[j] = std::make_unique<SturmSequence>(sqf[j]);
  }
  for (auto& e : *spaces) {
    Character ch;
    ch.eigenvalue = e.mu;
    ch.eigenvector = e.basis[0];
    for (std::size_t j = 0; j < n; ++j)
      ch.modulus2.push_back(identify_real(sqf[j], *sturm[j], e.mu[j] * e.mu[j].conj()));
    bool dup = false;
    for (const auto& other : table.characters) {
      bool same = true;
      for (std::size_t j = 0; j < n && same; ++j) same = other.modulus2[j] == ch.modulus2[j];
      if (same) dup = true;
    }
    if (dup) continue;
    ch.representative = rank_one_class(ch.eigenvector);
    table.characters.push_back(std::move(ch));
  }
  if (table.m() > static_cast<std::size_t>(k) * k) throw std::logic_error("find_characters: more than k^2 characters");
  // A^* w = mu w gives (A^* w)(A^* w)^* = |mu|^2 w w^*, and this test stays in one generator
  for (const auto& ch : table.characters)
    for (std::size_t j = 0; j < n; ++j) {
      auto aw = torusdyn::apply(to_alg(to_rat(spec.generators[j].matrix().conj_transpose())), ch.eigenvector);
      for (unsigned i = 0; i < k; ++i)
        if (!(aw[i] - ch.eigenvalue[j] * ch.eigenvector[i]).certified_zero())
          throw std::logic_error("find_characters: eigenclass relation fails");
    }
  for (std::size_t j = 0; j < n; ++j) {
    Word e(n, 0);
    e[j] = 1;
    if (verify_zero_entropy_word(spec, e)) continue;
    AlgebraicReal d1 = dynamical_degree(spec.generators[j], 1);
    bool attained = false;
    for (const auto& ch : table.characters)
      if (ch.modulus2[j] == d1) attained = true;
    if (!attained) throw std::logic_error("find_characters: no character attains d_1 of " + spec.labels[j]);
  }
  return table;
}

PiRank pi_rank(const GroupSpec& spec, const CharacterTable& table) {
  const std::size_t n = spec.size(), m = table.m();
  PiRank out;
  out.n = n;
  for (unsigned bits : {200U, 400U, 800U}) {
    std::vector<std::vector<Rat>> v(n, std::vector<Rat>(m));
    out.image.assign(n, std::vector<RatInterval>(m));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < m; ++i) {
        out.image[j][i] = table.characters[i].tau(j, bits + 8);
        v[j][i] = out.image[j][i].mid();
      }
    std::vector<std::vector<Int>> verified;
    for (auto& e : integer_relation_candidates(v, bits)) {
      Word w(n);
      bool fits = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (!e[j].fits_slong_p()) fits = false;
        else w[j] = e[j].get_si();
      }
      if (fits && verify_zero_entropy_word(spec, w)) verified.push_back(std::move(e));
    }
    IntMatrix kernel(0, n);
    if (!verified.empty()) {
      kernel = saturate(rows_to_matrix(verified, n));
      for (std::size_t i = 0; i < kernel.rows(); ++i)
        if (!verify_zero_entropy_word(spec, to_word(kernel, i)))
          throw std::logic_error("pi_rank: saturated kernel vector has positive entropy");
    }
    out.certified_image_rank = certified_rank(out.image);
    out.kernel = kernel;
    out.r = n - kernel.rows();
    out.bits = bits;
    if (out.r == out.certified_image_rank) return out;
  }
  throw std::runtime_error("pi_rank: rank not certified");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::vacuous:
      return "vacuous";
  }
  return "unknown";
}

DecompositionResult decompose(const GroupSpec& spec, const PiRank& pi) {
  const std::size_t n = spec.size(), s = pi.kernel.rows();
  DecompositionResult out;
  out.r = pi.r;
  IntMatrix qinv = IntMatrix::identity(n);
  if (s > 0) {
    // K = P^-1 [I 0] Q^-1 for a saturated K, so the rows of Q^-1 extend a basis of K to Z^n
    SmithForm sf = smith_form(pi.kernel);
    for (const auto& d : sf.invariants())
      if (d != 1) throw std::logic_error("decompose: kernel lattice is not saturated");
    qinv = unimodular_inverse(sf.Q);
    IntMatrix kfirst(s, n);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < n; ++j) kfirst(i, j) = qinv(i, j);
    out.u = analyze_u(spec, kfirst);
    out.basis = qinv;
  } else {
    out.u = analyze_u(spec, IntMatrix(0, n));
    out.basis = qinv;
  }
  for (std::size_t i = s; i < n; ++i) out.free_part.push_back(to_word(qinv, i));
  return out;
}

DecompositionResult decompose(const GroupSpec& spec) { return decompose(spec, pi_rank(spec, find_characters(spec))); }

bool StructureReport::violated() const {
  for (const auto& a : assertions)
    if (a.status == Status::fail) return true;
  return false;
}

StructureReport assert_structure_theorems(const GroupSpec& spec, const CharacterTable& table, const PiRank& pi,
                                          const DecompositionResult& dec) {
  StructureReport rep;
  const std::size_t r = pi.r;
  const unsigned k = spec.k;
  rep.r = r;
  rep.k = k;
  auto add = [&](std::string name, Status st, std::string detail) {
    rep.assertions.push_back(Assertion{std::move(name), st, std::move(detail)});
  };
  add("characters_at_most_h1", table.m() <= static_cast<std::size_t>(k) * k ? Status::pass : Status::fail,
      "m = " + std::to_string(table.m()) + ", h_1 = " + std::to_string(k * k));

  // positive entropy on the certificate set: free generators, pairwise products and quotients
  if (r == 0) {
    rep.positive_entropy_hypothesis = Status::vacuous;
  } else {
    std::vector<Word> cert = dec.free_part;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        Word a(spec.size()), b(spec.size());
        for (std::size_t t = 0; t < spec.size(); ++t) {
          a[t] = dec.free_part[i][t] + dec.free_part[j][t];
          b[t] = dec.free_part[i][t] - dec.free_part[j][t];
        }
        cert.push_back(a);
        cert.push_back(b);
      }
    std::string bad;
    for (const auto& w : cert)
      if (verify_zero_entropy_word(spec, w)) bad = word_string(w);
    rep.positive_entropy_hypothesis = bad.empty() ? Status::pass : Status::fail;
    add("free_part_positive_entropy", rep.positive_entropy_hypothesis,
        bad.empty() ? std::to_string(cert.size()) + " certificate words" : "zero-entropy word " + bad);
  }

  add("rank_bound", r + 1 <= k ? Status::pass : Status::fail,
      "r = " + std::to_string(r) + ", k - 1 = " + std::to_string(k - 1));

  if (r == 0) {
    add("binomial_bounds", Status::vacuous, "r = 0");
  } else {
    Status st = Status::pass;
    std::string detail;
    for (unsigned long nn = 1; nn <= r; ++nn) {
      unsigned long lhs = binomial(static_cast<unsigned>(r), static_cast<unsigned>(nn));
      unsigned long h = binomial(k, static_cast<unsigned>(nn));
      h *= h;
      unsigned long rhs = (r % nn == 0) ? h - 1 : h;
      if (lhs > rhs) st = Status::fail;
      detail += (detail.empty() ? "" : "; ") + std::string("C(") + std::to_string(r) + "," + std::to_string(nn) +
                ")=" + std::to_string(lhs) + " <= " + std::to_string(rhs);
    }
    add("binomial_bounds", st, detail);
  }

  if (r == 0) {
    add("wedge_chain", Status::vacuous, "r = 0");
  } else if (r + 1 > k || table.m() < r + 1) {
    add("wedge_chain", Status::fail, "fewer than r + 1 = " + std::to_string(r + 1) + " eigenclasses in degree <= k");
  } else {
    std::vector<AlgClass> chain;
    for (std::size_t i = 0; i <= r; ++i) chain.push_back(table.characters[i].representative);
    bool nonzero = !certified_zero(wedge_all(chain, k));
    add("wedge_chain", nonzero ? Status::pass : Status::fail,
        std::to_string(r + 1) + " nef eigenclasses, wedge " + (nonzero ? "nonzero" : "zero"));
  }

  if (r + 1 == k) {
    std::string detail = dec.u.finite ? (dec.u.order ? "U finite of order " + dec.u.order->get_str()
                                                     : "U finite, enumeration capped")
                                      : "U infinite at maximal rank";
    add("u_finite_at_max_rank", dec.u.finite ? Status::pass : Status::fail, detail);
  } else {
    add("u_finite_at_max_rank", Status::vacuous, "r < k - 1");
  }
  return rep;
}

bool is_eigenclass(const TorusAutomorphism& f, const AlgClass& c) {
  AlgClass p = pullback(f, c);
  const auto& cm = c.m.data();
  const auto& pm = p.m.data();
  std::size_t piv = cm.size();
  for (std::size_t i = 0; i < cm.size(); ++i)
    if (!cm[i].certified_zero()) {
      piv = i;
      break;
    }
  if (piv == cm.size()) return true;
  for (std::size_t i = 0; i < cm.size(); ++i)
    if (!(pm[i] * cm[piv] - pm[piv] * cm[i]).certified_zero()) return false;
  return true;
}

LemmaReport check_preserved_classes_theorem(const GroupSpec& spec, const std::vector<AlgClass>& classes,
                                            long sample_radius) {
  const unsigned k = spec.k;
  if (classes.size() + 1 != k) throw std::invalid_argument("check_preserved_classes_theorem: k - 1 classes required");
  auto vacuous = [](std::string why) { return LemmaReport{Verdict::vacuous, std::move(why)}; };
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].k != k || classes[i].p != 1) throw std::invalid_argument("check_preserved_classes_theorem: degree-1 classes on T^k");
    auto nef = certified_nef(classes[i]);
    if (!nef || !*nef) return vacuous("class " + std::to_string(i) + " is not certified nef");
    for (std::size_t j = 0; j < spec.size(); ++j)
      if (!is_eigenclass(spec.generators[j], classes[i]))
        return vacuous("class " + std::to_string(i) + " is not preserved by " + spec.labels[j]);
  }
  if (certified_zero(wedge_all(classes, k))) return vacuous("wedge of the classes is zero");
  // every sampled non-identity element must have positive entropy
  const std::size_t n = spec.size();
  Word e(n, -sample_radius);
  const auto id = GaussIntMatrix::identity(k);
  for (;;) {
    bool zero = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
    if (!zero && !(word_element(spec, e).matrix() == id) && verify_zero_entropy_word(spec, e))
      return vacuous("non-identity element of zero entropy: word " + word_string(e));
    std::size_t t = 0;
    while (t < n && e[t] == sample_radius) e[t++] = -sample_radius;
    if (t == n) break;
    ++e[t];
  }
  CommutingCheck cc = check_commuting(spec);
  if (!cc.commuting)
    return LemmaReport{Verdict::violation, "generators " + spec.labels[cc.witness->first] + " and " +
                                               spec.labels[cc.witness->second] + " do not commute"};
  PiRank pi = pi_rank(spec, find_characters(spec));
  if (pi.r + 1 > k) return LemmaReport{Verdict::violation, "rank " + std::to_string(pi.r) + " exceeds k - 1"};
  return LemmaReport{Verdict::holds, "rank " + std::to_string(pi.r)};
}

}  // namespace torusdyn
