#ifndef BILIAISON_MODGB_HPP
#define BILIAISON_MODGB_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "biliaison/grmatrix.hpp"
#include "biliaison/hilbert.hpp"

namespace biliaison {

/// A computation needed more degrees than its configured budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// c * mono * e_comp in a graded free module.
template <Field K>
struct ModuleTerm {
  Monomial mono;
  std::uint32_t comp;
  typename K::Element coef;
};

/// Homogeneous module element, terms in decreasing module order.
template <Field K>
using ModuleVector = std::vector<ModuleTerm<K>>;

struct GroebnerOptions {
  /// S-pairs of degree above the cap are not processed; unset means
  /// max(generator degree) + 8.
  std::optional<int> degree_cap;
};

/// Submodule of the graded free module with the given summand degrees, generated by the
/// columns of a matrix without the parameter `a`. Its Groebner basis is computed eagerly
/// for the order: shifted degree, then grevlex on the monomial, then lower component
/// index first (term over position).
template <Field K>
class SubmodulePresentation {
 public:
  /// Throws std::invalid_argument if the generators involve `a`.
  explicit SubmodulePresentation(const GradedMatrix<K>& generators, GroebnerOptions options = {});

  const K& field() const { return field_; }
  const std::vector<int>& ambient_degrees() const { return ambient_; }
  const GradedMatrix<K>& generators() const { return gens_; }
  /// Reduced Groebner basis, sorted by degree.
  const std::vector<ModuleVector<K>>& basis() const { return basis_; }
  /// Shifted degree of each basis element.
  const std::vector<int>& basis_degrees() const { return basis_deg_; }
  /// False when S-pairs above the degree cap were left unprocessed; the basis is then
  /// a truncated basis, exact in degrees <= degree_cap().
  bool complete() const { return complete_; }
  int degree_cap() const { return cap_; }

  /// Shifted degree of a homogeneous element (kDegreeOfZero for zero).
  int degree_of(const ModuleVector<K>& v) const;
  ModuleVector<K> to_vector(const std::vector<MultiPoly<K>>& column) const;
  std::vector<MultiPoly<K>> to_column(const ModuleVector<K>& v) const;

  /// Normal form of a homogeneous element. Throws BudgetExceeded above the cap of an
  /// incomplete basis.
  ModuleVector<K> reduce(const ModuleVector<K>& v) const;
  bool contains(const std::vector<MultiPoly<K>>& column) const;

  /// dim_k of the degree-n part, by counting standard monomials.
  std::size_t hilbert_function(int n) const;
  /// Cubic fit on four consecutive degrees validated on the next three, starting at the
  /// largest leading-term degree and moving up to `window_cap` (default: the Groebner
  /// degree cap). Throws BudgetExceeded if no window validates.
  HilbertPolynomial hilbert_polynomial(std::optional<int> window_cap = std::nullopt) const;
  /// First degree of the validated fitting window of the last hilbert_polynomial call.
  std::optional<int> fitted_from() const { return fitted_from_; }

  /// One basis element per line: "component: polynomial".
  std::string dump() const;

 private:
  K field_;
  std::vector<int> ambient_;
  GradedMatrix<K> gens_;
  std::vector<ModuleVector<K>> basis_;
  std::vector<int> basis_deg_;
  bool complete_ = true;
  int cap_ = 0;
  mutable std::optional<int> fitted_from_;
};

/// dim_k of the degree-d part of the module generated by the columns, by dense linear
/// algebra on all products of columns with monomials.
template <Field K>
std::size_t span_dimension(const GradedMatrix<K>& generators, int d);

/// Number of minimal generators per degree of the module generated by the columns:
/// dim F_d - dim (m F)_d.
template <Field K>
CharFunction minimal_generator_count(const GradedMatrix<K>& generators);

/// Minimal generators of the syzygy module of the columns in degrees <= up_to_degree,
/// computed degree by degree as kernels of the evaluation map, each new degree taken
/// modulo the multiples of lower syzygies. Rows are indexed by the generators (row
/// degrees = generator degrees), columns by syzygy degree.
template <Field K>
GradedMatrix<K> syzygies(const GradedMatrix<K>& generators, int up_to_degree);

/// True when the homogeneous polynomials have no common zero in P^3, certified by pure
/// powers of X, Y, Z, T among the leading terms of a Groebner basis. A zero polynomial
/// list or an incomplete basis without the certificate gives false.
template <Field K>
bool is_empty_projective_locus(const std::vector<MultiPoly<K>>& generators, std::optional<int> degree_cap = std::nullopt);

extern template class SubmodulePresentation<PrimeField>;
extern template class SubmodulePresentation<RationalField>;

}  // namespace biliaison

#endif  // BILIAISON_MODGB_HPP
