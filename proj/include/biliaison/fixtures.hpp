#ifndef BILIAISON_FIXTURES_HPP
#define BILIAISON_FIXTURES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "biliaison/grmatrix.hpp"

namespace biliaison {

template <Field K>
struct KoszulMatrices {
  GradedMatrix<K> u;        // 1 x 4
  GradedMatrix<K> v;        // 4 x 6
  GradedMatrix<K> v_prime;  // 6 x 4
};

/// The Koszul complex of (X, Y, Z, T): R(-3)^4 -> R(-2)^6 -> R(-1)^4 -> R, with the
/// printed sign conventions.
template <Field K>
KoszulMatrices<K> koszul_matrices(const K& field);

/// [[sigma1, 0], [a*I, sigma2]]. Throws DegreeError unless the column degrees of sigma1
/// are the row degrees of sigma2.
template <Field K>
GradedMatrix<K> block_dvr_matrix(const GradedMatrix<K>& sigma1, const GradedMatrix<K>& sigma2);

/// Values a fixture is expected to reproduce. Unset fields are not stated for that example.
struct ExpectedValues {
  std::map<int, int> alpha;
  std::map<int, int> beta;
  std::optional<int> b0;
  /// b0 is only known from below (b0 >= *b0) and strictly below b0_below.
  bool b0_is_lower_bound = false;
  std::optional<int> b0_below;
  std::map<int, int> q;
  std::optional<int> h0;
  int d0 = 0;
  long g0 = 0;
  /// Number of minimal degree-3 syzygies of sigma1, where sigma2 is recomputed.
  std::optional<std::size_t> sigma2_columns;
};

template <Field K>
struct ExampleDescriptor {
  std::string name;
  GradedMatrix<K> sigma1;
  GradedMatrix<K> sigma2;
  GradedMatrix<K> matrix;
  ExpectedValues expected;
  /// Local freeness of the cokernel is asserted by construction, not certified.
  bool locally_free_asserted = false;
  std::vector<std::string> notes;
};

std::vector<std::string> example_names();

/// Builds "3.2", "3.3" or "3.4". With `perturb`, the (0, 0) entry of sigma1 is replaced
/// by zero (a negative control). Throws std::invalid_argument for an unknown name and
/// std::runtime_error if the recomputed sigma2 of "3.4" does not have 34 columns of
/// degree 3.
template <Field K>
ExampleDescriptor<K> example(const K& field, const std::string& name, bool perturb = false);

}  // namespace biliaison

#endif  // BILIAISON_FIXTURES_HPP
