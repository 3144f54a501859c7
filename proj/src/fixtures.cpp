#include "biliaison/fixtures.hpp"

#include <stdexcept>

#include "biliaison/modgb.hpp"

namespace biliaison {

namespace {

template <Field K>
GradedMatrix<K> from_strings(const K& field, std::vector<int> rd, std::vector<int> cd,
                             const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<MultiPoly<K>>> polys;
  for (const auto& r : rows) {
    polys.emplace_back();
    for (const auto& e : r) polys.back().push_back(parse_poly(field, e));
  }
  return GradedMatrix<K>::from_rows(field, std::move(rd), std::move(cd), polys);
}

template <Field K>
GradedMatrix<K> sigma1_length_nine(const K& field) {
  std::vector<int> cd{1};
  cd.resize(17, 2);
  return from_strings(field, {0, 0}, cd,
                      {{"X", "Y^2", "Z^2", "T^2", "Y*Z", "Y*T", "Z*T", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
                       {"-Y", "0", "0", "0", "0", "0", "0", "X^2", "Y^2", "Z^2", "T^2", "X*Y", "X*Z", "X*T", "Y*Z",
                        "Y*T", "Z*T"}});
}

}  // namespace

template <Field K>
KoszulMatrices<K> koszul_matrices(const K& field) {
  return {from_strings(field, {0}, {1, 1, 1, 1}, {{"X", "Y", "Z", "T"}}),
          from_strings(field, {1, 1, 1, 1}, {2, 2, 2, 2, 2, 2},
                       {{"Y", "Z", "T", "0", "0", "0"},
                        {"-X", "0", "0", "Z", "T", "0"},
                        {"0", "-X", "0", "-Y", "0", "T"},
                        {"0", "0", "-X", "0", "-Y", "-Z"}}),
          from_strings(field, {2, 2, 2, 2, 2, 2}, {3, 3, 3, 3},
                       {{"0", "0", "-T", "Z"},
                        {"0", "T", "0", "-Y"},
                        {"0", "-Z", "Y", "0"},
                        {"-T", "0", "0", "X"},
                        {"Z", "0", "-X", "0"},
                        {"-Y", "X", "0", "0"}})};
}

template <Field K>
GradedMatrix<K> block_dvr_matrix(const GradedMatrix<K>& sigma1, const GradedMatrix<K>& sigma2) {
  if (sigma1.col_degrees() != sigma2.row_degrees())
    throw DegreeError("column degrees of sigma1 differ from the row degrees of sigma2");
  const K& field = sigma1.field();
  std::vector<int> rd = sigma1.row_degrees(), cd = sigma1.col_degrees();
  rd.insert(rd.end(), sigma2.row_degrees().begin(), sigma2.row_degrees().end());
  cd.insert(cd.end(), sigma2.col_degrees().begin(), sigma2.col_degrees().end());
  GradedMatrix<K> s(field, rd, cd);
  const std::size_t r1 = sigma1.rows(), c1 = sigma1.cols();
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < c1; ++j) s.set(i, j, sigma1(i, j));
  const auto a = MultiPoly<K>::variable(field, A);
  for (std::size_t i = 0; i < c1; ++i) s.set(r1 + i, i, a);
  for (std::size_t i = 0; i < sigma2.rows(); ++i)
    for (std::size_t j = 0; j < sigma2.cols(); ++j) s.set(r1 + i, c1 + j, sigma2(i, j));
  return s;
}

std::vector<std::string> example_names() { return {"3.2", "3.3", "3.4"}; }

template <Field K>
ExampleDescriptor<K> example(const K& field, const std::string& name, bool perturb) {
  auto kz = koszul_matrices(field);
  ExampleDescriptor<K> ex{name, kz.u, kz.v, kz.u, {}, false, {}};
  if (name == "3.2") {
    ex.sigma1 = kz.u;
    ex.sigma2 = kz.v;
    ex.expected.alpha = {{1, 1}, {2, 4}};
    ex.expected.beta = {{1, 1}, {2, 4}};
    ex.expected.b0 = 0;
    ex.expected.q = {{2, 3}};
    ex.expected.h0 = 2;
    ex.expected.d0 = 6;
    ex.expected.g0 = 3;
  } else if (name == "3.3") {
    ex.sigma1 = kz.v;
    ex.sigma2 = kz.v_prime;
    // The identity block has the size of sigma1's column count (6).
    ex.expected.alpha = {{2, 3}, {3, 6}};
    ex.expected.beta = {{2, 3}, {3, 6}};
    ex.expected.b0 = 1;
    ex.expected.q = {{2, 2}, {3, 3}};
    ex.expected.d0 = 6;
    ex.expected.g0 = 3;
  } else if (name == "3.4") {
    ex.sigma1 = sigma1_length_nine(field);
    ex.expected.alpha = {{1, 1}};
    ex.expected.beta = {{1, 1}};
    ex.expected.b0 = 1;
    ex.expected.b0_is_lower_bound = true;
    ex.expected.b0_below = 3;
    ex.expected.q = {{1, 1}, {3, 15}};
    ex.expected.d0 = 120;
    ex.expected.g0 = 1001;
    ex.expected.sigma2_columns = 34;
    ex.locally_free_asserted = true;
    ex.notes.push_back("local freeness of the cokernel asserted by construction");
  } else {
    throw std::invalid_argument("unknown example '" + name + "'");
  }
  if (perturb) {
    ex.sigma1.set(0, 0, MultiPoly<K>(field));
    ex.notes.push_back("perturbed: sigma1(0, 0) set to zero");
  }
  if (name == "3.4") {
    ex.sigma2 = syzygies(ex.sigma1, 3);
    bool ok = ex.sigma2.cols() == 34;
    for (auto d : ex.sigma2.col_degrees()) ok = ok && d == 3;
    if (!ok && !perturb)
      throw std::runtime_error("sigma2 of example 3.4: expected 34 syzygies of degree 3, found " +
                               ex.sigma2.col_function().to_string());
  }
  ex.matrix = block_dvr_matrix(ex.sigma1, ex.sigma2);
  return ex;
}

#define BILIAISON_INSTANTIATE(K)                                                                     \
  template KoszulMatrices<K> koszul_matrices(const K&);                                              \
  template GradedMatrix<K> block_dvr_matrix(const GradedMatrix<K>&, const GradedMatrix<K>&);         \
  template ExampleDescriptor<K> example(const K&, const std::string&, bool);

BILIAISON_INSTANTIATE(PrimeField)
BILIAISON_INSTANTIATE(RationalField)

}  // namespace biliaison
