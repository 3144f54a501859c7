#include <gtest/gtest.h>

#include <chrono>

#include "biliaison/fixtures.hpp"
#include "biliaison/modgb.hpp"
#include "biliaison/qprofile.hpp"

namespace biliaison {
namespace {

const PrimeField kFp{32003};
using Poly = MultiPoly<PrimeField>;
using Matrix = GradedMatrix<PrimeField>;

Matrix from_strings(std::vector<int> rd, std::vector<int> cd, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Poly>> polys;
  for (const auto& r : rows) {
    polys.emplace_back();
    for (const auto& e : r) polys.back().push_back(parse_poly(kFp, e));
  }
  return Matrix::from_rows(kFp, std::move(rd), std::move(cd), polys);
}

QProfile profile_of(const ExampleDescriptor<PrimeField>& ex) {
  ProfileOptions opt;
  opt.locally_free_by_construction = ex.locally_free_asserted;
  return compute_q_profile(ex.matrix, opt);
}

TEST(QProfileTest, KoszulExampleOne) {
  auto ex = example(kFp, "3.2");
  auto p = profile_of(ex);
  EXPECT_EQ(p.alpha(1), 1u);
  EXPECT_EQ(p.beta(1), 1u);
  EXPECT_EQ(p.alpha(2), 4u);
  EXPECT_EQ(p.beta(2), 4u);
  EXPECT_EQ(p.b0, 0);
  EXPECT_FALSE(p.b0_unbounded);
  EXPECT_EQ(p.q(), CharFunction(std::map<int, int>{{2, 3}}));
  EXPECT_EQ(p.locally_free, "certified");
  EXPECT_EQ(p.stable_rank, 4u);
}

TEST(QProfileTest, KoszulExampleTwo) {
  auto p = profile_of(example(kFp, "3.3"));
  EXPECT_EQ(p.alpha(2), 3u);
  EXPECT_EQ(p.beta(2), 3u);
  EXPECT_EQ(p.alpha(3), 6u);
  EXPECT_EQ(p.beta(3), 6u);
  EXPECT_EQ(p.b0, 1);
  EXPECT_EQ(p.q(), CharFunction(std::map<int, int>{{2, 2}, {3, 3}}));
}

TEST(QProfileTest, ObligatoryPart) {
  auto p = profile_of(example(kFp, "3.4"));
  EXPECT_EQ(p.alpha(1), 1u);
  EXPECT_EQ(p.beta(1), 1u);
  EXPECT_GE(p.b0, 1);
  EXPECT_EQ(p.q()(1), 1);
  EXPECT_EQ(p.q()(3), 15);
  EXPECT_EQ(p.stable_rank, 17u);
}

TEST(QProfileTest, AlphaBetaSmallCases) {
  auto ex = example(kFp, "3.3");
  EXPECT_EQ(alpha(ex.matrix, 2), 3u);
  EXPECT_EQ(alpha(ex.matrix, 3), 6u);
  EXPECT_EQ(alpha(ex.matrix, 1), 0u);
  Matrix common = from_strings({0, 0}, {2}, {{"X^2"}, {"X*Y"}});
  EXPECT_EQ(alpha(common, 2), 1u);
  EXPECT_EQ(beta(common, 2), 0u);
  EXPECT_EQ(beta(example(kFp, "3.2").matrix, 2), 4u);
}

TEST(QProfileTest, ColumnModuleFreeness) {
  auto ex = example(kFp, "3.2");
  EXPECT_EQ(column_module_generators(ex.matrix, 1), 4u);
  EXPECT_FALSE(below_threshold(ex.matrix, 1, 1, 1));
  auto obligatory = example(kFp, "3.4");
  EXPECT_EQ(column_module_generators(obligatory.matrix, 1), 1u);
}

TEST(QProfileTest, EmptyMatrix) {
  Matrix empty(kFp, {0, 1}, {});
  auto p = compute_q_profile(empty);
  EXPECT_TRUE(p.rows.empty());
  EXPECT_TRUE(p.stabilized);
}

TEST(QProfileTest, NotLocallyFreeIsRefused) {
  Matrix m = from_strings({0}, {1, 1}, {{"X", "Y"}});
  EXPECT_THROW(compute_q_profile(m), HypothesisError);
  ProfileOptions opt;
  opt.assume_locally_free = true;
  EXPECT_NO_THROW(compute_q_profile(m, opt));
}

TEST(QProfileTest, FreeModuleIsDissociated) {
  Matrix m = from_strings({1, 2}, {1, 2}, {{"1", "X"}, {"0", "1"}});
  auto p = compute_q_profile(m);
  EXPECT_TRUE(p.dissociated);
  EXPECT_TRUE(p.b0_unbounded);
}

TEST(QProfileTest, JsonRoundTrip) {
  auto p = profile_of(example(kFp, "3.3"));
  auto back = QProfile::from_json(p.to_json());
  EXPECT_EQ(back.to_json(), p.to_json());
  EXPECT_EQ(p.to_json()["q"]["3"], 3);
}

TEST(AdmissibilityTest, KoszulExampleOne) {
  auto p = profile_of(example(kFp, "3.2"));
  EXPECT_TRUE(check_p_admissible(p.q(), p).admissible);
  auto bad = check_p_admissible(CharFunction(std::map<int, int>{{1, 1}, {2, 2}}), p);
  EXPECT_FALSE(bad.admissible);
  EXPECT_EQ(bad.witness, 1);
  EXPECT_TRUE(check_p_admissible(CharFunction(std::map<int, int>{{2, 2}, {4, 1}}), p).admissible);
  EXPECT_THROW(check_p_admissible(CharFunction(std::map<int, int>{{2, 2}}), p), std::invalid_argument);
}

TEST(AdmissibilityTest, ObligatoryPartIsForced) {
  auto p = profile_of(example(kFp, "3.4"));
  // A degree-0 generator in place of the degree-1 one.
  auto early = check_p_admissible(CharFunction(std::map<int, int>{{0, 1}, {3, 15}}), p);
  EXPECT_FALSE(early.admissible);
  EXPECT_TRUE(check_p_admissible(CharFunction(std::map<int, int>{{1, 1}, {3, 14}, {4, 1}}), p).admissible);
  EXPECT_TRUE(check_p_admissible(CharFunction(std::map<int, int>{{2, 1}, {3, 15}}), p).admissible);
}

TEST(AdmissibilityTest, CharacteristicFunctionsAndAbelIdentity) {
  auto fs = characteristic_functions(1, 3, 2);
  EXPECT_EQ(fs.size(), 6u);
  EXPECT_EQ(fs.front(), CharFunction(std::map<int, int>{{3, 2}}));
  CharFunction q(std::map<int, int>{{2, 2}, {3, 3}});
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto all = characteristic_functions(0, 6, 5);
    const auto& p = all[rng() % all.size()];
    EXPECT_EQ(p.weighted_sum() - q.weighted_sum(), sharp_difference_sum(p, q)) << p.to_string();
  }
}

TEST(OracleTest, KoszulExampleOne) {
  auto ex = example(kFp, "3.2");
  EXPECT_EQ(q_oracle(ex.matrix, 2, 20, 11), 3u);
  EXPECT_EQ(q_oracle(ex.matrix, 1, 20, 11), 0u);
  EXPECT_EQ(q_oracle(ex.matrix, 0, 20, 11), 0u);
}

TEST(OracleTest, RandomLinearMatrices) {
  Rng rng(0x0A11CE);
  int checked = 0;
  for (int attempt = 0; attempt < 40 && checked < 6; ++attempt) {
    auto m = random_graded_matrix(kFp, {0, 0}, {1, 1, 1, 1, 2}, rng);
    QProfile p;
    try {
      p = compute_q_profile(m);
    } catch (const HypothesisError&) {
      continue;
    }
    for (const auto& r : p.rows) EXPECT_EQ(q_oracle(m, r.n, 50, rng()), r.q_sharp) << m.to_string() << " n=" << r.n;
    ++checked;
  }
  EXPECT_EQ(checked, 6);
}

}  // namespace
}  // namespace biliaison
