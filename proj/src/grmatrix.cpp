#include "biliaison/grmatrix.hpp"

#include <map>
#include <sstream>

namespace biliaison {

template <Field K>
GradedMatrix<K> GradedMatrix<K>::from_rows(const K& field, std::vector<int> row_degrees,
                                           std::vector<int> col_degrees,
                                           const std::vector<std::vector<Poly>>& rows) {
  if (rows.size() != row_degrees.size())
    throw DegreeError("matrix has " + std::to_string(rows.size()) + " rows but " +
                      std::to_string(row_degrees.size()) + " row degrees");
  GradedMatrix m(field, std::move(row_degrees), std::move(col_degrees));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw DegreeError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                        " entries, expected " + std::to_string(m.cols()));
    for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

template <Field K>
void GradedMatrix<K>::set(std::size_t i, std::size_t j, Poly p) {
  if (!p.is_zero()) {
    int want = col_deg_[j] - row_deg_[i];
    if (!p.is_homogeneous() || p.degree() != want)
      throw DegreeError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + p.to_string() +
                        " is not homogeneous of degree " + std::to_string(want));
  }
  entries_[i * cols() + j] = std::move(p);
}

template <Field K>
bool GradedMatrix<K>::has_parameter() const {
  for (const auto& e : entries_)
    if (e.has_parameter()) return true;
  return false;
}

template <Field K>
bool GradedMatrix<K>::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

template <Field K>
void GradedMatrix<K>::check_homogeneous() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      const Poly& p = (*this)(i, j);
      if (p.is_zero()) continue;
      if (!p.is_homogeneous() || p.degree() != col_deg_[j] - row_deg_[i])
        throw DegreeError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") has the wrong degree");
    }
}

template <Field K>
GradedMatrix<K> GradedMatrix<K>::submatrix(const std::vector<std::size_t>& rs,
                                           const std::vector<std::size_t>& cs) const {
  std::vector<int> rd, cd;
  for (auto i : rs) rd.push_back(row_deg_[i]);
  for (auto j : cs) cd.push_back(col_deg_[j]);
  GradedMatrix out(field_, rd, cd);
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < cs.size(); ++b) out.entries_[a * cs.size() + b] = (*this)(rs[a], cs[b]);
  return out;
}

template <Field K>
GradedMatrix<K> GradedMatrix<K>::select_columns(const std::vector<std::size_t>& cs) const {
  std::vector<std::size_t> rs(rows());
  for (std::size_t i = 0; i < rs.size(); ++i) rs[i] = i;
  return submatrix(rs, cs);
}

template <Field K>
std::vector<MultiPoly<K>> GradedMatrix<K>::column(std::size_t j) const {
  std::vector<Poly> c;
  for (std::size_t i = 0; i < rows(); ++i) c.push_back((*this)(i, j));
  return c;
}

template <Field K>
GradedMatrix<K> GradedMatrix<K>::operator*(const GradedMatrix& o) const {
  if (cols() != o.rows()) throw DegreeError("matrix product: shape mismatch");
  for (std::size_t k = 0; k < cols(); ++k)
    if (col_deg_[k] != o.row_deg_[k]) throw DegreeError("matrix product: inner degrees differ");
  GradedMatrix out(field_, row_deg_, o.col_deg_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < o.cols(); ++j) {
      Poly acc(field_);
      for (std::size_t k = 0; k < cols(); ++k) {
        const Poly& a = (*this)(i, k);
        const Poly& b = o(k, j);
        if (a.is_zero() || b.is_zero()) continue;
        acc += a * b;
      }
      out.entries_[i * o.cols() + j] = std::move(acc);
    }
  return out;
}

template <Field K>
DenseMatrix<K> GradedMatrix<K>::evaluate(const std::array<Element, kNumVars>& point) const {
  DenseMatrix<K> d(field_, rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      const Poly& p = (*this)(i, j);
      if (!p.is_zero()) d(i, j) = p.evaluate(point);
    }
  return d;
}

template <Field K>
std::string GradedMatrix<K>::to_string() const {
  std::ostringstream os;
  os << rows() << "x" << cols() << " rows " << row_function().to_string() << " cols "
     << col_function().to_string() << "\n";
  for (std::size_t i = 0; i < rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols(); ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

template <Field K>
GradedMatrix<K> truncate_columns(const GradedMatrix<K>& s, int n) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < s.cols(); ++j)
    if (s.col_degree(j) <= n) keep.push_back(j);
  return s.select_columns(keep);
}

template <Field K>
GradedMatrix<K> specialize_closed_point(const GradedMatrix<K>& s) {
  GradedMatrix<K> out(s.field(), s.row_degrees(), s.col_degrees());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      const auto& p = s(i, j);
      if (!p.is_zero()) out.set(i, j, p.has_parameter() ? p.specialize_parameter(s.field().zero()) : p);
    }
  return out;
}

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (int x = d; x >= 0; --x)
    for (int y = d - x; y >= 0; --y)
      for (int z = d - x - y; z >= 0; --z) out.push_back(Monomial::xyzt(x, y, z, d - x - y - z));
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
  return out;
}

template <Field K>
MultiPoly<K> random_form(const K& field, int d, Rng& rng) {
  std::vector<typename MultiPoly<K>::Term> terms;
  for (const auto& m : monomials_of_degree(d)) terms.push_back({m, field.random(rng)});
  return MultiPoly<K>::from_terms(field, std::move(terms));
}

template <Field K>
GradedMatrix<K> random_graded_matrix(const K& field, const std::vector<int>& row_degrees,
                                     const std::vector<int>& col_degrees, Rng& rng) {
  GradedMatrix<K> m(field, row_degrees, col_degrees);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, random_form(field, col_degrees[j] - row_degrees[i], rng));
  return m;
}

#define BILIAISON_INSTANTIATE(K)                                                                      \
  template class GradedMatrix<K>;                                                                     \
  template GradedMatrix<K> truncate_columns(const GradedMatrix<K>&, int);                             \
  template GradedMatrix<K> specialize_closed_point(const GradedMatrix<K>&);                           \
  template MultiPoly<K> random_form(const K&, int, Rng&);                                             \
  template GradedMatrix<K> random_graded_matrix(const K&, const std::vector<int>&, const std::vector<int>&, \
                                                Rng&);

BILIAISON_INSTANTIATE(PrimeField)
BILIAISON_INSTANTIATE(RationalField)

}  // namespace biliaison
