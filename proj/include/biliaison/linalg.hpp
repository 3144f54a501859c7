#ifndef BILIAISON_LINALG_HPP
#define BILIAISON_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "biliaison/field.hpp"

namespace biliaison {

/// Dense row-major matrix over a field.
template <Field K>
class DenseMatrix {
 public:
  using Element = typename K::Element;

  DenseMatrix() = default;
  DenseMatrix(const K& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  const K& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  K field_{};
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Element> data_;
};

/// In-place reduced row echelon form; returns the pivot column of each nonzero row.
template <Field K>
std::vector<std::size_t> reduce_rows(DenseMatrix<K>& m) {
  const K& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(row, sel);
    auto inv = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || f.is_zero(m(i, col))) continue;
      auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!f.is_zero(m(row, j))) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Rank by forward elimination (the argument is consumed).
template <Field K>
std::size_t rank_of(DenseMatrix<K> m) {
  const K& f = m.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(row, sel);
    auto inv = f.inv(m(row, col));
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (f.is_zero(m(i, col))) continue;
      auto factor = f.mul(m(i, col), inv);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!f.is_zero(m(row, j))) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    ++row;
  }
  return row;
}

/// Determinant of a square matrix by elimination (the argument is consumed).
template <Field K>
typename K::Element determinant(DenseMatrix<K> m) {
  const K& f = m.field();
  const std::size_t n = m.rows();
  auto det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && f.is_zero(m(sel, col))) ++sel;
    if (sel == n) return f.zero();
    if (sel != col) {
      m.swap_rows(col, sel);
      det = f.neg(det);
    }
    det = f.mul(det, m(col, col));
    auto inv = f.inv(m(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (f.is_zero(m(i, col))) continue;
      auto factor = f.mul(m(i, col), inv);
      for (std::size_t j = col; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(col, j)));
    }
  }
  return det;
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column, each with a
/// 1 in its free column and zeros in the other free columns.
template <Field K>
std::vector<std::vector<typename K::Element>> kernel_basis(DenseMatrix<K> m) {
  const K& f = m.field();
  auto pivots = reduce_rows(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename K::Element>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename K::Element> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace biliaison

#endif  // BILIAISON_LINALG_HPP
