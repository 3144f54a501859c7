#ifndef BILIAISON_POLY_HPP
#define BILIAISON_POLY_HPP

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "biliaison/field.hpp"
#include "biliaison/monomial.hpp"

namespace biliaison {

/// Raised by exact division when the divisor does not divide.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Degree reported for the zero polynomial.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

/// Sparse polynomial in X, Y, Z, T, a over the field K. Terms are kept sorted by
/// decreasing monomial order and never carry a zero coefficient.
template <Field K>
class MultiPoly {
 public:
  using Element = typename K::Element;
  struct Term {
    Monomial mono;
    Element coef;
  };

  MultiPoly() = default;
  explicit MultiPoly(const K& field) : field_(field) {}
  MultiPoly(const K& field, const Element& c) : field_(field) {
    if (!field_.is_zero(c)) terms_.push_back({Monomial(), c});
  }
  static MultiPoly monomial(const K& field, const Monomial& m, const Element& c) {
    MultiPoly p(field);
    if (!field.is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  static MultiPoly constant(const K& field, std::int64_t c) { return MultiPoly(field, field.from_int(c)); }
  static MultiPoly variable(const K& field, int v, int power = 1) {
    return monomial(field, Monomial::var(v, power), field.one());
  }
  /// Builds from unsorted terms, combining duplicates and dropping zeros.
  static MultiPoly from_terms(const K& field, std::vector<Term> terms);

  const K& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return is_constant() && !is_zero() && field_.is_one(terms_[0].coef); }

  /// Total degree in X, Y, Z, T; kDegreeOfZero for 0.
  int degree() const;
  /// Degree in the variable v; -1 for 0.
  int degree_in(int v) const;
  bool is_homogeneous() const;
  bool has_parameter() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Element& leading_coefficient() const { return terms_.front().coef; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return a.times(b); }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = times(o); }

  MultiPoly times(const MultiPoly& o) const;
  MultiPoly scaled(const Element& c) const;
  MultiPoly times_term(const Monomial& m, const Element& c) const;
  /// this += c * m * o
  void add_multiple(const Element& c, const Monomial& m, const MultiPoly& o);
  MultiPoly pow(int e) const;

  /// Exact quotient this / d; throws InexactDivision otherwise.
  MultiPoly exact_divide(const MultiPoly& d) const;
  /// Division returning quotient and remainder; false if the remainder is nonzero.
  bool divides(const MultiPoly& other) const;

  /// Scales so that the leading coefficient is one.
  MultiPoly monic() const;

  /// Substitutes a := value.
  MultiPoly specialize_parameter(const Element& value) const;
  /// Evaluates at (X, Y, Z, T, a).
  Element evaluate(const std::array<Element, kNumVars>& point) const;
  /// Partial derivative with respect to v.
  MultiPoly derivative(int v) const;
  /// Coefficients c_i (free of v) with this = sum_i c_i v^i.
  std::vector<MultiPoly> coefficients_in(int v) const;
  static MultiPoly from_coefficients_in(const K& field, int v, const std::vector<MultiPoly>& coeffs);

  /// Human-readable form following the input grammar, e.g. "3*X^2*Y - T^2 + a*Z".
  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !a.field_.equal(a.terms_[i].coef, b.terms_[i].coef))
        return false;
    return true;
  }

 private:
  K field_{};
  std::vector<Term> terms_;
};

/// Parses the polynomial grammar: integer (or p/q) coefficients, variables X Y Z T a,
/// optional '*', '^' powers and '+'/'-' separators; whitespace is ignored.
template <Field K>
MultiPoly<K> parse_poly(const K& field, const std::string& text);

extern template class MultiPoly<PrimeField>;
extern template class MultiPoly<RationalField>;
extern template MultiPoly<PrimeField> parse_poly(const PrimeField&, const std::string&);
extern template MultiPoly<RationalField> parse_poly(const RationalField&, const std::string&);

}  // namespace biliaison

#endif  // BILIAISON_POLY_HPP
