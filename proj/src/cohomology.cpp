#include "torusdyn/cohomology.hpp"

#include <bit>
#include <map>
#include <mutex>

namespace torusdyn {

namespace {

struct SubsetTables {
  std::vector<std::vector<unsigned>> by_size;  // by_size[p]
  std::vector<std::size_t> index;               // index[mask]
};

const SubsetTables& tables(unsigned k) {
  static std::mutex mu;
  static std::map<unsigned, SubsetTables> cache;
  if (k > 20) throw std::invalid_argument("subsets: dimension too large");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  SubsetTables t;
  t.by_size.resize(k + 1);
  t.index.assign(1UL << k, 0);
  // lexicographic order of sorted index tuples
  for (unsigned p = 0; p <= k; ++p) {
    std::vector<unsigned> idx(p);
    for (unsigned i = 0; i < p; ++i) idx[i] = i;
    for (;;) {
      unsigned mask = 0;
      for (unsigned x : idx) mask |= 1U << x;
      t.index[mask] = t.by_size[p].size();
      t.by_size[p].push_back(mask);
      int i = static_cast<int>(p) - 1;
      while (i >= 0 && idx[static_cast<unsigned>(i)] == k - p + static_cast<unsigned>(i)) --i;
      if (i < 0) break;
      ++idx[static_cast<unsigned>(i)];
      for (unsigned j = static_cast<unsigned>(i) + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return cache.emplace(k, std::move(t)).first->second;
}

}  // namespace

const std::vector<unsigned>& subsets(unsigned k, unsigned p) {
  if (p > k) throw std::invalid_argument("subsets: p > k");
  return tables(k).by_size[p];
}

std::size_t subset_index(unsigned k, unsigned mask) { return tables(k).index.at(mask); }

int shuffle_sign(unsigned a, unsigned b) {
  if (a & b) return 0;
  // inversions: pairs (x in a, y in b) with x > y
  int inv = 0;
  for (unsigned bb = b; bb; bb &= bb - 1) {
    unsigned y = static_cast<unsigned>(std::countr_zero(bb));
    inv += std::popcount(a >> (y + 1));
  }
  return inv % 2 == 0 ? 1 : -1;
}

unsigned long binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  unsigned long b = 1;
  for (unsigned i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

Rat intersection_number(const std::vector<CohomClass>& cs) {
  if (cs.empty()) throw std::invalid_argument("intersection_number: no classes");
  const unsigned k = cs[0].k;
  bool all_degree_one = true;
  unsigned total = 0;
  for (const auto& c : cs) {
    if (c.k != k) throw std::invalid_argument("intersection_number: dimension mismatch");
    total += c.p;
    if (c.p != 1) all_degree_one = false;
  }
  if (total != k) throw std::invalid_argument("intersection_number: total degree differs from dimension");
  GaussRat v;
  if (all_degree_one) {
    std::vector<GaussRatMatrix> hs;
    for (const auto& c : cs) hs.push_back(c.m);
    v = polarized_determinant(hs);
  } else {
    v = volume_coefficient(cs);
  }
  if (v.im != 0) throw std::invalid_argument("intersection_number: classes are not real");
  return v.re;
}

bool is_hermitian(const GaussRatMatrix& h) { return h.is_square() && h == h.conj_transpose(); }

bool is_nef(const CohomClass& c) {
  if (c.p != 1) throw std::invalid_argument("is_nef: degree-1 classes only");
  if (!is_hermitian(c.m)) throw std::invalid_argument("is_nef: class is not real");
  return definiteness(c.m).psd;
}

bool is_kahler(const CohomClass& c) {
  if (c.p != 1) throw std::invalid_argument("is_kahler: degree-1 classes only");
  if (!is_hermitian(c.m)) throw std::invalid_argument("is_kahler: class is not real");
  return definiteness(c.m).pd;
}

std::vector<GaussRatMatrix> hermitian_basis(std::size_t n) {
  std::vector<GaussRatMatrix> out;
  for (std::size_t j = 0; j < n; ++j) {
    GaussRatMatrix e(n, n);
    e(j, j) = GaussRat(1L);
    out.push_back(e);
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = j + 1; l < n; ++l) {
      GaussRatMatrix s(n, n), a(n, n);
      s(j, l) = s(l, j) = GaussRat(1L);
      a(j, l) = GaussRat(0L, 1L);
      a(l, j) = GaussRat(0L, -1L);
      out.push_back(s);
      out.push_back(a);
    }
  return out;
}

std::vector<Rat> hermitian_coordinates(const GaussRatMatrix& h) {
  const std::size_t n = h.rows();
  std::vector<Rat> x;
  x.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j) x.push_back(h(j, j).re);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = j + 1; l < n; ++l) {
      x.push_back(h(j, l).re);
      x.push_back(h(j, l).im);
    }
  return x;
}

GaussRatMatrix hermitian_from_coordinates(const std::vector<Rat>& x, std::size_t n) {
  if (x.size() != n * n) throw std::invalid_argument("hermitian_from_coordinates: wrong length");
  GaussRatMatrix h(n, n);
  std::size_t t = 0;
  for (std::size_t j = 0; j < n; ++j) h(j, j) = GaussRat(x[t++]);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = j + 1; l < n; ++l) {
      h(j, l) = GaussRat(x[t], x[t + 1]);
      h(l, j) = GaussRat(x[t], Rat(-x[t + 1]));
      t += 2;
    }
  return h;
}

}  // namespace torusdyn
