#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "torusdyn/complex_roots.hpp"
#include "torusdyn/interval.hpp"
#include "torusdyn/polynomial.hpp"

namespace torusdyn {

/// Registry of algebraic generators. Each generator is one root of a squarefree integer
/// polynomial, located by a certified disc; all roots of one polynomial share one isolation.
class AlgebraicPool {
 public:
  /// Generator ids for every root of the squarefree polynomial f (deg >= 1).
  std::vector<std::size_t> add_all_roots(const IntPoly& f);
  /// Generator id of the complex conjugate of generator g.
  std::size_t conjugate(std::size_t g);
  const IntPoly& poly(std::size_t g) const { return families_[gens_[g].family].f; }
  int degree(std::size_t g) const { return poly(g).degree(); }
  /// Upper bound on the modulus of every root of poly(g).
  const Rat& root_bound(std::size_t g) const { return families_[gens_[g].family].bound; }
  /// Ball of radius at most 2^-bits around generator g.
  CBall enclosure(std::size_t g, unsigned bits);
  std::size_t size() const { return gens_.size(); }

 private:
  struct Family {
    IntPoly f;
    std::unique_ptr<RootIsolation> iso;
    std::vector<std::size_t> gen_of_root;  // npos when not registered
    Rat bound;
  };
  struct Gen {
    std::size_t family;
    std::size_t root;
  };
  std::size_t family_of(const IntPoly& f);
  std::size_t gen_for(std::size_t family, std::size_t root);
  std::vector<Family> families_;
  std::vector<Gen> gens_;
};

using PoolPtr = std::shared_ptr<AlgebraicPool>;

/// Element of Q(i)(generators): a polynomial in the pool's generators with Gaussian rational
/// coefficients, each exponent kept below the degree of its generator's polynomial.
///
/// Ring operations are exact and structural. `is_zero` (the free function) only reports a
/// structurally empty polynomial; `certified_zero` decides equality with zero exactly.
class AlgNum {
 public:
  AlgNum() = default;
  AlgNum(long c) : AlgNum(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)
  AlgNum(const GaussRat& c);               // NOLINT(google-explicit-constructor)
  static AlgNum generator(PoolPtr pool, std::size_t g);

  const PoolPtr& pool() const { return pool_; }
  bool structurally_zero() const { return terms_.empty(); }
  /// True when no generator occurs.
  bool is_constant() const;
  GaussRat constant_term() const;
  std::size_t max_generator_plus_one() const;

  AlgNum& operator+=(const AlgNum& o);
  AlgNum& operator-=(const AlgNum& o);
  AlgNum& operator*=(const AlgNum& o);
  friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
  friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  AlgNum operator-() const;
  /// Structural equality (same reduced polynomial); see certified_equal for value equality.
  friend bool operator==(const AlgNum& a, const AlgNum& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

  AlgNum conj() const;
  /// Exact zero test: ball exclusion for nonzero, norm separation bound for zero.
  bool certified_zero() const;
  /// Inverse of a nonzero element involving at most one generator.
  AlgNum inverse() const;
  /// Ball containing the value, radius roughly 2^-bits times the value scale.
  CBall enclose(unsigned bits) const;
  std::complex<double> approx() const;

 private:
  using Exponents = std::vector<unsigned>;
  void add_term(Exponents e, const GaussRat& c);
  void reduce();
  std::optional<bool> single_generator_zero() const;
  void adopt_pool(const PoolPtr& p);
  PoolPtr pool_;
  std::map<Exponents, GaussRat> terms_;
};

inline bool is_zero(const AlgNum& a) { return a.structurally_zero(); }
inline AlgNum conj(const AlgNum& a) { return a.conj(); }
inline bool certified_equal(const AlgNum& a, const AlgNum& b) { return (a - b).certified_zero(); }

}  // namespace torusdyn
