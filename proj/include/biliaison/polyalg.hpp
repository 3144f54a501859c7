#ifndef BILIAISON_POLYALG_HPP
#define BILIAISON_POLYALG_HPP

#include <array>
#include <span>
#include <vector>

#include "biliaison/poly.hpp"
#include "biliaison/upoly.hpp"

namespace biliaison {

/// Degree counting every variable, `a` included.
template <Field K>
int full_degree(const MultiPoly<K>& f);

/// A parametrized affine line t -> direction * t + base in K^5.
template <Field K>
struct Line {
  std::array<typename K::Element, kNumVars> direction;
  std::array<typename K::Element, kNumVars> base;

  std::array<typename K::Element, kNumVars> at(const K& field, const typename K::Element& t) const {
    std::array<typename K::Element, kNumVars> p;
    for (int i = 0; i < kNumVars; ++i) p[i] = field.add(field.mul(direction[i], t), base[i]);
    return p;
  }

  static Line random(const K& field, Rng& rng) {
    Line l;
    for (int i = 0; i < kNumVars; ++i) {
      l.direction[i] = field.random(rng);
      l.base[i] = field.random(rng);
    }
    return l;
  }
};

/// f(direction * t + base) as a univariate polynomial in t.
template <Field K>
UPoly<K> restrict_to_line(const MultiPoly<K>& f, const Line<K>& line);

/// Greatest common divisor, normalized to leading coefficient one; gcd(0, 0) = 0.
/// Recursive content / primitive-part reduction to univariate remainder sequences,
/// preceded by a coprimality certificate on a random line.
template <Field K>
MultiPoly<K> gcd(const MultiPoly<K>& f, const MultiPoly<K>& g);

/// gcd of all inputs; throws std::invalid_argument if every input is zero.
template <Field K>
MultiPoly<K> gcd_many(std::span<const MultiPoly<K>> polys);

/// Running gcd over a lazily produced stream: stops as soon as the gcd becomes 1.
template <Field K>
class GcdAccumulator {
 public:
  explicit GcdAccumulator(const K& field) : g_(field) {}
  /// Returns true once the accumulated gcd is 1.
  bool add(const MultiPoly<K>& p) {
    if (p.is_zero() || done()) return done();
    g_ = g_.is_zero() ? p.monic() : gcd(g_, p);
    ++count_;
    return done();
  }
  bool done() const { return !g_.is_zero() && g_.is_constant(); }
  bool empty() const { return g_.is_zero(); }
  const MultiPoly<K>& value() const { return g_; }
  std::size_t count() const { return count_; }

 private:
  MultiPoly<K> g_;
  std::size_t count_ = 0;
};

/// Content with respect to v: gcd of the coefficients of f viewed in K[other vars][v].
template <Field K>
MultiPoly<K> content_in(const MultiPoly<K>& f, int v);

/// Pairwise coprime squarefree polynomials whose product has the same irreducible
/// factors as p. The splitting is not necessarily into irreducibles.
/// Throws std::invalid_argument for constant input.
template <Field K>
std::vector<MultiPoly<K>> squarefree_factors(const MultiPoly<K>& p);

extern template int full_degree(const MultiPoly<PrimeField>&);
extern template int full_degree(const MultiPoly<RationalField>&);
extern template UPoly<PrimeField> restrict_to_line(const MultiPoly<PrimeField>&, const Line<PrimeField>&);
extern template UPoly<RationalField> restrict_to_line(const MultiPoly<RationalField>&, const Line<RationalField>&);
extern template MultiPoly<PrimeField> gcd(const MultiPoly<PrimeField>&, const MultiPoly<PrimeField>&);
extern template MultiPoly<RationalField> gcd(const MultiPoly<RationalField>&, const MultiPoly<RationalField>&);
extern template MultiPoly<PrimeField> gcd_many(std::span<const MultiPoly<PrimeField>>);
extern template MultiPoly<RationalField> gcd_many(std::span<const MultiPoly<RationalField>>);
extern template MultiPoly<PrimeField> content_in(const MultiPoly<PrimeField>&, int);
extern template MultiPoly<RationalField> content_in(const MultiPoly<RationalField>&, int);
extern template std::vector<MultiPoly<PrimeField>> squarefree_factors(const MultiPoly<PrimeField>&);
extern template std::vector<MultiPoly<RationalField>> squarefree_factors(const MultiPoly<RationalField>&);

}  // namespace biliaison

#endif  // BILIAISON_POLYALG_HPP
