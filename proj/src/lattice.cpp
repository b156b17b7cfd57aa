#include "torusdyn/lattice.hpp"

#include <algorithm>

namespace torusdyn {

namespace {

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// rows (r, i) <- [[s, t], [-b/g, a/g]] (r, i), determinant 1
void combine_rows(IntMatrix& m, std::size_t r, std::size_t i, const Int& s, const Int& t, const Int& u, const Int& v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int x = m(r, j), y = m(i, j);
    m(r, j) = s * x + t * y;
    m(i, j) = u * x + v * y;
  }
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int trunc_div(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_form(const IntMatrix& a) {
  HermiteForm out{a, IntMatrix::identity(a.rows()), {}};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    for (std::size_t i = row + 1; i < m; ++i) {
      if (h(i, col) == 0) continue;
      Int x = h(row, col), y = h(i, col), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      Int p = Int(-y / g), q = Int(x / g);
      combine_rows(h, row, i, s, t, p, q);
      combine_rows(u, row, i, s, t, p, q);
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      negate_row(h, row);
      negate_row(u, row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Int q = floor_div(h(i, col), h(row, col));
      add_row_multiple(h, i, row, Int(-q));
      add_row_multiple(u, i, row, Int(-q));
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::vector<Int> SmithForm::invariants() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) d.push_back(D(i, i));
  return d;
}

SmithForm smith_form(const IntMatrix& a) {
  SmithForm out{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  IntMatrix& d = out.D;
  const std::size_t m = d.rows(), n = d.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block goes to (t, t)
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (bi == m || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == m) return out;
      swap_rows(d, t, bi);
      swap_rows(out.P, t, bi);
      swap_cols(d, t, bj);
      swap_cols(out.Q, t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        Int q = trunc_div(d(i, t), d(t, t));
        add_row_multiple(d, i, t, Int(-q));
        add_row_multiple(out.P, i, t, Int(-q));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Int q = trunc_div(d(t, j), d(t, t));
        add_col_multiple(d, j, t, Int(-q));
        add_col_multiple(out.Q, j, t, Int(-q));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_row_multiple(d, t, bad, Int(1));
      add_row_multiple(out.P, t, bad, Int(1));
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(out.P, t);
    }
  }
  return out;
}

namespace {

struct GramSchmidt {
  std::vector<std::vector<Rat>> mu;
  std::vector<Rat> norm2;
};

GramSchmidt gram_schmidt(const IntMatrix& b) {
  const std::size_t n = b.rows(), dim = b.cols();
  GramSchmidt gs{std::vector<std::vector<Rat>>(n, std::vector<Rat>(n)), std::vector<Rat>(n)};
  std::vector<std::vector<Rat>> star(n, std::vector<Rat>(dim));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < dim; ++c) star[i][c] = b(i, c);
    for (std::size_t j = 0; j < i; ++j) {
      Rat dot = 0;
      for (std::size_t c = 0; c < dim; ++c) dot += Rat(b(i, c)) * star[j][c];
      gs.mu[i][j] = dot / gs.norm2[j];
      for (std::size_t c = 0; c < dim; ++c) star[i][c] -= gs.mu[i][j] * star[j][c];
    }
    Rat nn = 0;
    for (std::size_t c = 0; c < dim; ++c) nn += star[i][c] * star[i][c];
    if (nn == 0) throw std::invalid_argument("lll_reduce: rows are linearly dependent");
    gs.norm2[i] = nn;
  }
  return gs;
}

}  // namespace

IntMatrix lll_reduce(IntMatrix b, const Rat& delta) {
  const std::size_t n = b.rows();
  if (n <= 1) return b;
  GramSchmidt gs = gram_schmidt(b);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      Int q = round_nearest(gs.mu[k][jj]);
      if (q == 0) continue;
      add_row_multiple(b, k, jj, Int(-q));
      for (std::size_t i = 0; i < jj; ++i) gs.mu[k][i] -= Rat(q) * gs.mu[jj][i];
      gs.mu[k][jj] -= Rat(q);
    }
    const Rat& m = gs.mu[k][k - 1];
    if (gs.norm2[k] >= (delta - m * m) * gs.norm2[k - 1]) {
      ++k;
    } else {
      swap_rows(b, k, k - 1);
      gs = gram_schmidt(b);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return b;
}

IntMatrix rows_to_matrix(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("rows_to_matrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  HermiteForm hf = hermite_form(a.transpose());
  std::vector<std::vector<Int>> basis;
  for (std::size_t i = hf.rank(); i < n; ++i) basis.push_back(hf.U.row(i));
  if (basis.empty()) return IntMatrix(0, n);
  return lll_reduce(rows_to_matrix(basis, n));
}

IntMatrix saturate(const IntMatrix& b) {
  const std::size_t n = b.cols();
  if (b.rows() == 0) return IntMatrix(0, n);
  auto perp = kernel(to_rat(b));
  if (perp.empty()) return IntMatrix::identity(n);
  IntMatrix y(perp.size(), n);
  for (std::size_t i = 0; i < perp.size(); ++i) {
    Int den = 1;
    for (const auto& x : perp[i]) den = lcm(den, Int(x.get_den()));
    for (std::size_t j = 0; j < n; ++j) y(i, j) = Int(perp[i][j] * den);
  }
  return integer_kernel(y);
}

bool in_row_lattice(const IntMatrix& basis, const std::vector<Int>& v) {
  if (basis.cols() != v.size()) throw std::invalid_argument("in_row_lattice: length mismatch");
  std::vector<Int> w = v;
  if (basis.rows() > 0) {
    HermiteForm hf = hermite_form(basis);
    for (std::size_t i = 0; i < hf.rank(); ++i) {
      std::size_t c = hf.pivots[i];
      for (std::size_t j = 0; j < c; ++j)
        if (w[j] != 0) return false;
      if (w[c] % hf.H(i, c) != 0) return false;
      Int q = w[c] / hf.H(i, c);
      for (std::size_t j = 0; j < w.size(); ++j) w[j] -= q * hf.H(i, j);
    }
  }
  return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

std::vector<std::vector<Int>> integer_relation_candidates(const std::vector<std::vector<Rat>>& v, unsigned bits,
                                                          const Int& height_cap) {
  const std::size_t n = v.size();
  if (n == 0) return {};
  const std::size_t m = v[0].size();
  Rat scale = pow2(static_cast<long>(bits));
  IntMatrix b(n, n + m);
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j].size() != m) throw std::invalid_argument("integer_relation_candidates: ragged input");
    b(j, j) = 1;
    for (std::size_t t = 0; t < m; ++t) b(j, n + t) = round_nearest(scale * v[j][t]);
  }
  IntMatrix red = lll_reduce(b);
  std::vector<std::vector<Int>> out;
  for (std::size_t i = 0; i < n; ++i) {
    // a true relation leaves only rounding and input error in the tail: at most ~ |e|_1
    std::vector<Int> e(n);
    Int l1 = 0;
    bool nonzero = false, small = true;
    for (std::size_t j = 0; j < n; ++j) {
      e[j] = red(i, j);
      l1 += abs(e[j]);
      if (abs(e[j]) > height_cap) small = false;
      if (e[j] != 0) nonzero = true;
    }
    for (std::size_t t = 0; t < m; ++t)
      if (abs(red(i, n + t)) > 2 * l1 + 2) small = false;
    if (!small || !nonzero) continue;
    auto first = std::find_if(e.begin(), e.end(), [](const Int& x) { return x != 0; });
    if (*first < 0)
      for (auto& x : e) x = -x;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace torusdyn
