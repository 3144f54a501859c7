#include <gtest/gtest.h>

#include "biliaison/families.hpp"
#include "biliaison/fixtures.hpp"

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

TEST(FamiliesTest, MinimalFamilyOfKoszulExamples) {
  for (const auto& name : {"3.2", "3.3"}) {
    auto ex = example(kFp, name);
    auto p = profile_of(ex);
    auto r = minimal_family(ex.matrix, p);
    EXPECT_EQ(r.d0, 6) << name;
    EXPECT_EQ(r.g0, 3) << name;
    EXPECT_TRUE(r.family.conserved()) << name;
    if (ex.expected.h0) EXPECT_EQ(r.h0, *ex.expected.h0);
  }
}

TEST(FamiliesTest, ObligatoryPartFamily) {
  auto ex = example(kFp, "3.4");
  auto p = profile_of(ex);
  auto r = minimal_family(ex.matrix, p);
  EXPECT_EQ(r.d0, 120);
  EXPECT_EQ(r.g0, 1001);
  EXPECT_TRUE(r.family.conserved());
}

TEST(FamiliesTest, SheafDegreeOfFreeModules) {
  EXPECT_EQ(sheaf_degree(from_strings({3}, {3}, {{"1"}})), -3);
  EXPECT_EQ(sheaf_degree(from_strings({1, 2}, {1, 2}, {{"1", "0"}, {"0", "1"}})), -3);
  EXPECT_EQ(sheaf_degree(example(kFp, "3.2").matrix), -4);
  EXPECT_EQ(minimal_shift(profile_of(example(kFp, "3.2")), -4), 2);
}

TEST(FamiliesTest, SamplingIsDeterministic) {
  auto ex = example(kFp, "3.2");
  auto p = profile_of(ex);
  auto a = sample_general_morphism(ex.matrix, p, p.q(), 42);
  auto b = sample_general_morphism(ex.matrix, p, p.q(), 42);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.col_degrees(), (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(a.row_degrees(), ex.matrix.col_degrees());
  EXPECT_NO_THROW(a.check_homogeneous());
  EXPECT_THROW(sample_general_morphism(ex.matrix, p, CharFunction(std::map<int, int>{{1, 3}}), 42),
               std::invalid_argument);
}

TEST(FamiliesTest, DegenerateMorphismsAreRejected) {
  auto ex = example(kFp, "3.2");
  Matrix zero(kFp, ex.matrix.col_degrees(), {2, 2, 2});
  EXPECT_THROW(verify_general_morphism(ex.matrix, zero, 4), MorphismError);
  // Rank two but every 2-minor is divisible by X.
  Matrix s = from_strings({0, 0, 0}, {0, 0, 0}, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
  Matrix v = from_strings({0, 0, 0}, {1, 2}, {{"X", "Y^2"}, {"X", "Z^2"}, {"X", "T^2"}});
  try {
    verify_general_morphism(s, v, 3);
    FAIL() << "common factor not detected";
  } catch (const MorphismError& e) {
    EXPECT_NE(std::string(e.what()).find("torsion"), std::string::npos);
  }
}

TEST(FamiliesTest, NonMinimalShift) {
  auto ex = example(kFp, "3.2");
  auto p = profile_of(ex);
  CharFunction later(std::map<int, int>{{2, 2}, {3, 1}});
  auto f = family_for(ex.matrix, p, later, FamilyOptions{});
  EXPECT_EQ(f.h, 3);
  EXPECT_TRUE(f.conserved());
  EXPECT_GT(f.d, 6);
}

// c2(N) = c2(P) + c1(P) h + d, with c2(N) = 6 read off the minimal family.
TEST(FamiliesTest, HighDegreeSourceMatchesChernClasses) {
  auto ex = example(kFp, "3.2");
  auto prof = profile_of(ex);
  CharFunction p(std::map<int, int>{{7, 3}});
  auto f = family_for(ex.matrix, prof, p, FamilyOptions{});
  EXPECT_EQ(f.h, 17);
  EXPECT_EQ(f.d, 6 - 3 * 49 + 21 * 17);
  EXPECT_TRUE(f.conserved());
}

TEST(FamiliesTest, FreeSummandRaisesTheShift) {
  auto ex = example(kFp, "3.2");
  const int m = 2;
  auto s = add_free_summand(ex.matrix, m);
  auto p = compute_q_profile(s);
  auto q = profile_of(ex).q();
  EXPECT_EQ(p.q(), [&] { auto r = q; r.add(m, 1); return r; }());
  auto p_next = q;
  p_next.add(m + 1, 1);
  ASSERT_TRUE(check_p_admissible(p_next, p).admissible);
  auto f = family_for(s, p, p_next, FamilyOptions{});
  EXPECT_EQ(f.h, 3);
  auto same = q;
  same.add(m, 1);
  EXPECT_EQ(family_for(s, p, same, FamilyOptions{}).h, 2);
}

TEST(FamiliesTest, ReportJson) {
  auto ex = example(kFp, "3.2");
  auto r = minimal_family(ex.matrix, profile_of(ex), FamilyOptions{7, kRetryCap});
  auto j = r.to_json();
  EXPECT_EQ(j["h0"], 2);
  EXPECT_EQ(j["d0"], 6);
  EXPECT_EQ(j["g0"], "3");
  EXPECT_EQ(j["q"]["2"], 3);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(minimal_family(ex.matrix, profile_of(ex), FamilyOptions{7, kRetryCap}).to_json(), j);
}

}  // namespace
}  // namespace biliaison
