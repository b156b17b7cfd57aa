#include "torusdyn/root_moduli.hpp"

#include <algorithm>

#include "torusdyn/complex_roots.hpp"

namespace torusdyn {

IntPoly pair_products_poly(const IntPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("pair_products_poly: degree >= 1 required");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  const std::size_t d = n * (n + 1) / 2;
  std::vector<Rat> s = power_sums(to_rat(p), 2 * d);
  // sum_{a <= b} (l_a l_b)^t = (s_t^2 + s_{2t}) / 2
  std::vector<Rat> t(d);
  for (std::size_t i = 1; i <= d; ++i) t[i - 1] = (s[i - 1] * s[i - 1] + s[2 * i - 1]) / 2;
  return squarefree_part(primitive_part(from_power_sums(t, d)));
}

namespace {

struct SquaredModulus {
  AlgebraicReal value;
  int multiplicity;
};

// |lambda|^2 for every root of the squarefree polynomial f (f(0) != 0), grouped.
std::vector<SquaredModulus> squared_moduli_of_factor(const IntPoly& f, int mult) {
  IntPoly q = pair_products_poly(f);
  std::vector<AlgebraicReal> candidates = AlgebraicReal::real_roots(q);
  RootIsolation iso(f);
  std::vector<int> counts(candidates.size(), 0);
  for (std::size_t i = 0; i < iso.size(); ++i) {
    bool first = true;
    auto enclose = [&]() {
      if (!first) iso.refine();
      first = false;
      RatInterval a = iso.disc(i).ball().abs_interval(iso.precision());
      return a * a;
    };
    counts[identify_root(candidates, enclose)] += mult;
  }
  std::vector<SquaredModulus> out;
  for (std::size_t c = 0; c < candidates.size(); ++c)
    if (counts[c] > 0) out.push_back({candidates[c], counts[c]});
  return out;
}

}  // namespace

std::vector<ModulusEntry> root_moduli(const IntPoly& p, const Rat& eps) {
  if (p.is_zero()) throw std::invalid_argument("root_moduli: zero polynomial");
  std::vector<SquaredModulus> all;
  const std::size_t zeros = p.low_order();
  if (zeros > 0) all.push_back({AlgebraicReal(Rat(0)), static_cast<int>(zeros)});
  for (const auto& [f, mult] : squarefree_factorization(p.strip_low_order())) {
    for (auto& sm : squared_moduli_of_factor(f, mult)) {
      bool merged = false;
      for (auto& e : all)
        if (e.value == sm.value) {
          e.multiplicity += sm.multiplicity;
          merged = true;
          break;
        }
      if (!merged) all.push_back(sm);
    }
  }
  std::sort(all.begin(), all.end(), [](const SquaredModulus& a, const SquaredModulus& b) { return a.value > b.value; });
  std::vector<ModulusEntry> out;
  for (auto& sm : all) {
    ModulusEntry e{sm.value.sqrt(), sm.value, sm.multiplicity};
    e.modulus.refine_to(eps);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ModulusEntry> root_moduli(const GaussIntPoly& p, const Rat& eps) {
  auto entries = root_moduli(times_conjugate(p), eps);
  for (auto& e : entries) {
    if (e.multiplicity % 2 != 0) throw std::logic_error("root_moduli: odd multiplicity after conjugate doubling");
    e.multiplicity /= 2;
  }
  return entries;
}

}  // namespace torusdyn
