#ifndef BILIAISON_GRMATRIX_HPP
#define BILIAISON_GRMATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "biliaison/charfun.hpp"
#include "biliaison/linalg.hpp"
#include "biliaison/poly.hpp"

namespace biliaison {

/// An entry whose degree does not match colDeg - rowDeg, or a block shape mismatch.
class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Homogeneous map s : L2 -> L1 of graded free modules. Entry (i, j) is zero or
/// homogeneous of degree col_degree(j) - row_degree(i), with `a` of degree 0.
template <Field K>
class GradedMatrix {
 public:
  using Poly = MultiPoly<K>;
  using Element = typename K::Element;

  GradedMatrix() = default;
  /// Zero matrix.
  GradedMatrix(const K& field, std::vector<int> row_degrees, std::vector<int> col_degrees)
      : field_(field),
        row_deg_(std::move(row_degrees)),
        col_deg_(std::move(col_degrees)),
        entries_(row_deg_.size() * col_deg_.size(), Poly(field)) {}
  /// Throws DegreeError on a shape or homogeneity violation.
  static GradedMatrix from_rows(const K& field, std::vector<int> row_degrees, std::vector<int> col_degrees,
                                const std::vector<std::vector<Poly>>& rows);

  const K& field() const { return field_; }
  std::size_t rows() const { return row_deg_.size(); }
  std::size_t cols() const { return col_deg_.size(); }
  int row_degree(std::size_t i) const { return row_deg_[i]; }
  int col_degree(std::size_t j) const { return col_deg_[j]; }
  const std::vector<int>& row_degrees() const { return row_deg_; }
  const std::vector<int>& col_degrees() const { return col_deg_; }
  CharFunction row_function() const { return CharFunction::from_degrees(row_deg_); }
  CharFunction col_function() const { return CharFunction::from_degrees(col_deg_); }

  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  /// Checked assignment.
  void set(std::size_t i, std::size_t j, Poly p);

  bool has_parameter() const;
  bool is_zero() const;
  /// Throws DegreeError describing the first bad entry.
  void check_homogeneous() const;

  GradedMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Columns in the given order.
  GradedMatrix select_columns(const std::vector<std::size_t>& cols) const;
  std::vector<Poly> column(std::size_t j) const;

  /// Matrix product; the inner degrees must agree.
  GradedMatrix operator*(const GradedMatrix& o) const;
  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.row_deg_ == b.row_deg_ && a.col_deg_ == b.col_deg_ && a.entries_ == b.entries_;
  }

  /// Numeric matrix at a point of K^5.
  DenseMatrix<K> evaluate(const std::array<Element, kNumVars>& point) const;

  std::string to_string() const;

 private:
  K field_{};
  std::vector<int> row_deg_, col_deg_;
  std::vector<Poly> entries_;
};

/// Keeps exactly the columns of degree <= n.
template <Field K>
GradedMatrix<K> truncate_columns(const GradedMatrix<K>& s, int n);

/// Sets a := 0 in every entry.
template <Field K>
GradedMatrix<K> specialize_closed_point(const GradedMatrix<K>& s);

/// Random homogeneous matrix with the given degrees; entries of negative degree are
/// zero and every other entry is a dense random form.
template <Field K>
GradedMatrix<K> random_graded_matrix(const K& field, const std::vector<int>& row_degrees,
                                     const std::vector<int>& col_degrees, Rng& rng);

/// All monomials of degree d in X, Y, Z, T, in decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(int d);

/// Random homogeneous form of degree d (zero for d < 0).
template <Field K>
MultiPoly<K> random_form(const K& field, int d, Rng& rng);

extern template class GradedMatrix<PrimeField>;
extern template class GradedMatrix<RationalField>;

}  // namespace biliaison

#endif  // BILIAISON_GRMATRIX_HPP
