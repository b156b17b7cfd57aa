#include "torusdyn/cyclotomic.hpp"

#include "torusdyn/charpoly.hpp"

namespace torusdyn {

unsigned long euler_phi(unsigned long m) {
  unsigned long result = m;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

int moebius(unsigned long n) {
  int mu = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

IntPoly x_pow_minus_one(unsigned long d) {
  std::vector<Int> c(d + 1, Int(0));
  c[0] = -1;
  c[d] = 1;
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly cyclotomic(unsigned long m) {
  if (m == 0) throw std::invalid_argument("cyclotomic: m must be positive");
  // Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}
  IntPoly num = IntPoly::constant(Int(1));
  IntPoly den = IntPoly::constant(Int(1));
  for (unsigned long d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    int mu = moebius(m / d);
    if (mu == 1) num *= x_pow_minus_one(d);
    if (mu == -1) den *= x_pow_minus_one(d);
  }
  return exact_quotient(num, den);
}

std::optional<std::vector<std::pair<unsigned long, int>>> cyclotomic_factors(const IntPoly& p) {
  if (!p.is_monic()) throw std::invalid_argument("cyclotomic test requires a monic polynomial");
  std::vector<std::pair<unsigned long, int>> out;
  IntPoly rest = p;
  const unsigned long d = static_cast<unsigned long>(p.degree());
  // phi(m) >= sqrt(m/2), so phi(m) <= d forces m <= 2 d^2.
  const unsigned long m_max = std::max(6UL, 2 * d * d);
  for (unsigned long m = 1; m <= m_max && rest.degree() > 0; ++m) {
    if (euler_phi(m) > static_cast<unsigned long>(rest.degree())) continue;
    IntPoly phi = cyclotomic(m);
    int mult = 0;
    while (rest.degree() >= phi.degree() && divides(phi, rest)) {
      rest = exact_quotient(rest, phi);
      ++mult;
    }
    if (mult > 0) out.emplace_back(m, mult);
  }
  if (rest.degree() != 0) return std::nullopt;
  return out;
}

bool is_cyclotomic_product(const IntPoly& p) { return cyclotomic_factors(p).has_value(); }

Int finite_order_bound(unsigned long d) {
  Int l = 1;
  const unsigned long m_max = std::max(6UL, 2 * d * d);
  for (unsigned long m = 1; m <= m_max; ++m)
    if (euler_phi(m) <= d) l = lcm(l, Int(m));
  return l;
}

IntMatrix evaluate(const IntPoly& p, const IntMatrix& m) {
  const std::size_t n = m.rows();
  IntMatrix acc(n, n);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t j = 0; j < n; ++j) acc(j, j) += p.coeffs()[i];
  }
  return acc;
}

MatrixOrder matrix_order(const IntMatrix& m, std::optional<Int> bound) {
  if (!m.is_square()) throw std::invalid_argument("matrix_order: non-square matrix");
  const Int limit = bound ? *bound : finite_order_bound(m.rows());
  auto factors = cyclotomic_factors(charpoly(m));
  if (!factors) return {};
  // Finite order iff the product of the distinct cyclotomic factors annihilates M.
  IntPoly q = IntPoly::constant(Int(1));
  Int order = 1;
  for (const auto& [mm, mult] : *factors) {
    q *= cyclotomic(mm);
    order = lcm(order, Int(mm));
  }
  if (!evaluate(q, m).is_zero()) return {};
  if (order > limit) return {};
  if (!order.fits_ulong_p() || !power(m, order.get_ui()).is_identity())
    throw std::logic_error("matrix_order: annihilator check inconsistent");
  return {true, order};
}

MatrixOrder matrix_order(const GaussIntMatrix& m, std::optional<Int> bound) {
  return matrix_order(realify(m), bound);
}

}  // namespace torusdyn
