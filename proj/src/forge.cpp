#include "torusdyn/forge.hpp"

#include <algorithm>
#include <map>

#include "torusdyn/lattice.hpp"

namespace torusdyn {

namespace {

const GaussInt kI(0, 1);

std::vector<Int> divisors(Int n) {
  n = abs(n);
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Int eval_int(const IntPoly& p, const Int& x) {
  Int acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Polynomial of degree <= xs.size() - 1 through the points (xs[i], ys[i]).
RatPoly interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
  RatPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatPoly term = RatPoly::constant(Rat(ys[i]));
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      Rat d = Rat(xs[i] - xs[j]);
      term = term * RatPoly{Rat(-xs[j]) / d, Rat(1) / d};
    }
    out = out + term;
  }
  return out;
}

std::optional<IntPoly> integral(const RatPoly& p) {
  std::vector<Int> c;
  for (const auto& x : p.coeffs()) {
    if (x.get_den() != 1) return std::nullopt;
    c.push_back(x.get_num());
  }
  return IntPoly(std::move(c));
}

RatInterval abs_interval(const RatInterval& x) {
  if (sgn(x.lo) >= 0) return x;
  if (sgn(x.hi) <= 0) return -x;
  return RatInterval(Rat(0), x.mag());
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"cat_T2",    "pell_T2",           "parabolic_T2",
                                              "torsion_i", "pell_plus_torsion", "cubic_T3"};
  return names;
}

GroupSpec builtin(const std::string& name) {
  auto from_int = [](IntMatrix m, const char* label) { return TorusAutomorphism::from_int(m, label); };
  TorusAutomorphism pell = from_int(IntMatrix{{1, 2}, {1, 1}}, "pell");
  TorusAutomorphism ti(GaussIntMatrix::identity(2) * kI, "iI");
  if (name == "cat_T2") return GroupSpec({from_int(IntMatrix{{2, 1}, {1, 1}}, "cat")});
  if (name == "pell_T2") return GroupSpec({pell});
  if (name == "parabolic_T2") {
    TorusAutomorphism a10(GaussIntMatrix{{GaussInt(1), GaussInt(1)}, {GaussInt(0), GaussInt(1)}}, "A_1,0");
    TorusAutomorphism a01(GaussIntMatrix{{GaussInt(1), kI}, {GaussInt(0), GaussInt(1)}}, "A_0,1");
    return GroupSpec({a10, a01});
  }
  if (name == "torsion_i") return GroupSpec({ti});
  if (name == "pell_plus_torsion") return GroupSpec({pell, ti});
  if (name == "cubic_T3") {
    // -theta and -(1 + theta) for theta a root of x^3 - x^2 - 2x + 1; both have norm +1
    return GroupSpec({from_int(IntMatrix{{0, 0, 1}, {-1, 0, -2}, {0, -1, -1}}, "-theta"),
                      from_int(IntMatrix{{-1, 0, 1}, {-1, -1, -2}, {0, -1, -2}}, "-1-theta")});
  }
  throw std::invalid_argument("unknown builtin: " + name);
}

bool is_irreducible(const IntPoly& p) {
  const int d = p.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  if (content(p) != 1) return false;
  // sample points ordered by how few divisors the value has
  std::vector<std::pair<std::size_t, Int>> pts;
  for (long x = -24; x <= 24; ++x) {
    Int v = eval_int(p, Int(x));
    if (v == 0) return false;
    pts.emplace_back(divisors(v).size(), Int(x));
  }
  std::sort(pts.begin(), pts.end());
  for (int fd = 1; fd <= d / 2; ++fd) {
    std::vector<Int> xs;
    std::vector<std::vector<Int>> choices;
    std::size_t combos = 1;
    for (int i = 0; i <= fd; ++i) {
      xs.push_back(pts[static_cast<std::size_t>(i)].second);
      std::vector<Int> ds;
      for (const auto& q : divisors(eval_int(p, xs.back()))) {
        ds.push_back(q);
        if (i > 0) ds.push_back(-q);  // the overall sign of a factor is free
      }
      combos *= ds.size();
      if (combos > 20000000) throw std::runtime_error("is_irreducible: search budget exceeded");
      choices.push_back(std::move(ds));
    }
    std::vector<std::size_t> idx(choices.size(), 0);
    for (;;) {
      std::vector<Int> ys;
      for (std::size_t i = 0; i < idx.size(); ++i) ys.push_back(choices[i][idx[i]]);
      auto f = integral(interpolate(xs, ys));
      if (f && f->degree() == fd && divides(*f, p)) return false;
      std::size_t t = 0;
      while (t < idx.size() && ++idx[t] == choices[t].size()) idx[t++] = 0;
      if (t == idx.size()) break;
    }
  }
  return true;
}

IntMatrix NumberFieldSpec::companion() const {
  const unsigned k = degree();
  IntMatrix c(k, k);
  for (unsigned i = 0; i + 1 < k; ++i) c(i + 1, i) = 1;
  for (unsigned i = 0; i < k; ++i) c(i, k - 1) = -min_poly.coeff(i);
  return c;
}

NumberFieldSpec make_number_field(const IntPoly& p) {
  if (p.degree() < 2) throw std::invalid_argument("number field: degree must be at least 2");
  if (p.lead() != 1) throw std::invalid_argument("number field: polynomial must be monic");
  if (!is_irreducible(p)) throw std::invalid_argument("number field: polynomial is reducible");
  if (real_root_count(p) != p.degree()) throw std::invalid_argument("number field: not totally real");
  NumberFieldSpec f;
  f.min_poly = p;
  f.embeddings = AlgebraicReal::real_roots(p);
  return f;
}

IntMatrix multiplication_matrix(const std::vector<Int>& u, const NumberFieldSpec& field) {
  const unsigned k = field.degree();
  if (u.size() > k) throw std::invalid_argument("multiplication_matrix: too many coefficients");
  IntMatrix c = field.companion(), pw = IntMatrix::identity(k), out(k, k);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != 0) out += pw * u[i];
    pw = pw * c;
  }
  return out;
}

Int field_norm(const std::vector<Int>& u, const NumberFieldSpec& field) {
  return bareiss_determinant(multiplication_matrix(u, field));
}

TorusAutomorphism regular_representation(const std::vector<Int>& u, const NumberFieldSpec& field, std::string name) {
  Int n = field_norm(u, field);
  if (n != 1 && n != -1) throw std::invalid_argument("regular_representation: element is not a unit");
  return TorusAutomorphism::from_int(multiplication_matrix(u, field), std::move(name));
}

RatInterval embed(const std::vector<Int>& u, const NumberFieldSpec& field, std::size_t i, unsigned bits) {
  const AlgebraicReal& t = field.embeddings.at(i);
  t.refine_to(pow2(-static_cast<long>(bits) - 16));
  RatInterval th = t.interval(), acc = RatInterval::point(Rat(0));
  for (auto it = u.rbegin(); it != u.rend(); ++it) acc = acc * th + RatInterval::point(Rat(*it));
  return acc;
}

RatInterval embedding_entropy(const std::vector<Int>& u, const NumberFieldSpec& field, unsigned bits) {
  RatInterval total = RatInterval::point(Rat(0));
  for (std::size_t i = 0; i < field.embeddings.size(); ++i) {
    for (unsigned b = bits;; b *= 2) {
      if (b > 8 * bits + 4096) throw std::runtime_error("embedding_entropy: cannot separate |sigma(u)| from 1");
      RatInterval a = abs_interval(embed(u, field, i, b));
      if (a.lo > 1) {
        total += log_enclosure(a, b) * Rat(2);
        break;
      }
      if (a.hi < 1) break;
    }
  }
  return total;
}

UnitSystem unit_search(const NumberFieldSpec& field, long coeff_bound) {
  const unsigned k = field.degree();
  UnitSystem sys;
  sys.coeff_bound = coeff_bound;
  std::vector<std::vector<Int>> found;
  std::vector<long> a(k, -coeff_bound);
  for (;;) {
    ++sys.examined;
    bool trivial = std::all_of(a.begin() + 1, a.end(), [](long x) { return x == 0; }) && (a[0] >= -1 && a[0] <= 1);
    if (!trivial) {
      std::vector<Int> u(a.begin(), a.end());
      Int n = field_norm(u, field);
      if (n == 1 || n == -1) found.push_back(std::move(u));
    }
    std::size_t t = 0;
    while (t < k && a[t] == coeff_bound) a[t++] = -coeff_bound;
    if (t == k) break;
    ++a[t];
  }
  sys.unit_count = found.size();
  // smallest coefficient height first, then fewest negative coefficients
  auto key = [](const std::vector<Int>& u) {
    Int h = 0;
    long neg = 0;
    for (const auto& x : u) {
      h += abs(x);
      if (x < 0) ++neg;
    }
    return std::make_pair(h, neg);
  };
  std::stable_sort(found.begin(), found.end(),
                   [&](const std::vector<Int>& x, const std::vector<Int>& y) { return key(x) < key(y); });
  const unsigned bits = 128;
  for (const auto& u : found) {
    if (sys.units.size() + 1 == k) break;
    std::vector<RatInterval> logs;
    for (std::size_t i = 0; i < k; ++i) logs.push_back(log_enclosure(abs_interval(embed(u, field, i, bits)), bits));
    auto trial = sys.log_embedding;
    trial.push_back(logs);
    // the log vectors sum to zero, so the first k - 1 coordinates carry the rank
    std::vector<std::vector<RatInterval>> cut;
    for (const auto& row : trial) cut.emplace_back(row.begin(), row.end() - 1);
    if (certified_rank(cut) == trial.size()) {
      sys.units.push_back(u);
      sys.log_embedding = std::move(trial);
    }
  }
  if (sys.units.size() + 1 != k)
    throw UnitSearchFailure("unit_search: found " + std::to_string(sys.units.size()) + " independent units, need " +
                                std::to_string(k - 1) + " (coefficient bound " + std::to_string(coeff_bound) + ")",
                            coeff_bound);
  return sys;
}

ForgedGroup build_max_rank_group(const NumberFieldSpec& field, long coeff_bound) {
  ForgedGroup g;
  g.field = field;
  g.units = unit_search(field, coeff_bound);
  const unsigned k = field.degree();
  std::vector<TorusAutomorphism> gens;
  for (std::size_t i = 0; i < g.units.units.size(); ++i) {
    auto& u = g.units.units[i];
    if (k % 2 == 1 && field_norm(u, field) == -1)
      for (auto& x : u) x = -x;
    gens.push_back(regular_representation(u, field, "u" + std::to_string(i + 1)));
  }
  g.spec = GroupSpec(std::move(gens));
  if (!check_commuting(g.spec).commuting) throw std::logic_error("build_max_rank_group: unit matrices do not commute");
  g.characters = find_characters(g.spec);
  g.pi = pi_rank(g.spec, g.characters);
  g.decomposition = decompose(g.spec, g.pi);
  if (g.pi.r + 1 != k) throw std::logic_error("build_max_rank_group: rank " + std::to_string(g.pi.r) + " != k - 1");
  return g;
}

}  // namespace torusdyn
