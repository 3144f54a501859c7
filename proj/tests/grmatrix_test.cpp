#include <gtest/gtest.h>

#include <algorithm>

#include "biliaison/minors.hpp"

namespace biliaison {
namespace {

const PrimeField kFp{32003};
using Poly = MultiPoly<PrimeField>;
using Matrix = GradedMatrix<PrimeField>;

Poly P(const std::string& s) { return parse_poly(kFp, s); }

Matrix from_strings(std::vector<int> rd, std::vector<int> cd, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Poly>> polys;
  for (const auto& r : rows) {
    polys.emplace_back();
    for (const auto& e : r) polys.back().push_back(P(e));
  }
  return Matrix::from_rows(kFp, std::move(rd), std::move(cd), polys);
}

Matrix koszul_v() {
  return from_strings({1, 1, 1, 1}, {2, 2, 2, 2, 2, 2},
                      {{"Y", "Z", "T", "0", "0", "0"},
                       {"-X", "0", "0", "Z", "T", "0"},
                       {"0", "-X", "0", "-Y", "0", "T"},
                       {"0", "0", "-X", "0", "-Y", "-Z"}});
}

// Random matrix with some zero entries and entries of degree at most max_deg.
Matrix random_sparse(Rng& rng, std::size_t rows, std::size_t cols, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), coin(0, 3);
  std::vector<int> rd(rows, 0), cd(cols);
  for (auto& c : cd) c = deg(rng);
  Matrix m(kFp, rd, cd);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng) != 0) m.set(i, j, random_form(kFp, cd[j], rng));
  return m;
}

TEST(CharFunctionTest, CumulativeAndRank) {
  CharFunction q(std::map<int, int>{{2, 3}});
  EXPECT_EQ(q.cumulative(1), 0);
  EXPECT_EQ(q.cumulative(2), 3);
  EXPECT_EQ(q.rank(), 3);
  EXPECT_EQ(q.weighted_sum(), 6);
  auto f = CharFunction::from_degrees({1, 3, 3, 1});
  EXPECT_EQ(f.to_string(), "{1:2, 3:2}");
  EXPECT_EQ(f.degrees(), (std::vector<int>{1, 1, 3, 3}));
  EXPECT_THROW(f.add(0, -1), std::invalid_argument);
}

TEST(GradedMatrixTest, RejectsWrongDegrees) {
  EXPECT_THROW(from_strings({0}, {1}, {{"X^2"}}), DegreeError);
  EXPECT_THROW(from_strings({0}, {2}, {{"X^2 + Y"}}), DegreeError);
  EXPECT_THROW(from_strings({0, 1}, {1}, {{"X"}}), DegreeError);
  EXPECT_NO_THROW(from_strings({0, 1}, {1}, {{"X + a*Y"}, {"a"}}));
}

TEST(GradedMatrixTest, TruncateAndSpecialize) {
  auto m = from_strings({0, 1}, {1, 2, 3}, {{"X", "Y^2", "Z^3"}, {"a", "a*Y", "T^2"}});
  EXPECT_EQ(truncate_columns(m, 0).cols(), 0u);
  EXPECT_EQ(truncate_columns(m, 2).cols(), 2u);
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k)
      EXPECT_EQ(truncate_columns(truncate_columns(m, n), k), truncate_columns(m, std::min(n, k)));
  auto t = specialize_closed_point(m);
  EXPECT_FALSE(t.has_parameter());
  EXPECT_TRUE(t(1, 0).is_zero());
  EXPECT_EQ(t(1, 2), P("T^2"));
  EXPECT_EQ(specialize_closed_point(t), t);
}

TEST(RankTest, Examples) {
  EXPECT_EQ(rank_fraction_field(Matrix(kFp, {0, 0}, {1, 1})), 0u);
  EXPECT_EQ(rank_fraction_field(koszul_v()), 3u);
  auto u = from_strings({0}, {1, 1, 1, 1}, {{"X", "Y", "Z", "T"}});
  EXPECT_EQ(rank_fraction_field(u), 1u);
}

TEST(MinorsTest, ColumnAndCount) {
  auto c = from_strings({0, 0, 0, 0, 0}, {1}, {{"X"}, {"-Y"}, {"0"}, {"0"}, {"0"}});
  auto ones = minors(c, 1, MinorSelection::all);
  ASSERT_EQ(ones.size(), 5u);
  EXPECT_EQ(ones[0], P("X"));
  EXPECT_EQ(ones[1], P("-Y"));
  EXPECT_TRUE(ones[2].is_zero() && ones[3].is_zero() && ones[4].is_zero());
  auto v = koszul_v();
  EXPECT_EQ(minors(v, 2, MinorSelection::all).size(), binomial(4, 2) * binomial(6, 2));
  EXPECT_EQ(minors(v, 3, MinorSelection::all).size(), 80u);
  EXPECT_THROW(minors(v, 5, MinorSelection::all), std::out_of_range);
}

TEST(MinorsTest, TwoByTwoAgainstDirectDeterminants) {
  auto v = koszul_v();
  auto ms = minors(v, 2, MinorSelection::all);
  std::size_t at = 0;
  bool saw_xy = false, saw_x2 = false;
  for (std::size_t r0 = 0; r0 < 4; ++r0)
    for (std::size_t r1 = r0 + 1; r1 < 4; ++r1)
      for (std::size_t c0 = 0; c0 < 6; ++c0)
        for (std::size_t c1 = c0 + 1; c1 < 6; ++c1) {
          Poly direct = v(r0, c0) * v(r1, c1) - v(r0, c1) * v(r1, c0);
          EXPECT_EQ(ms[at++], direct);
          saw_xy = saw_xy || direct == P("X*Y") || direct == P("-X*Y");
          saw_x2 = saw_x2 || direct == P("X^2") || direct == P("-X^2");
        }
  EXPECT_TRUE(saw_xy);
  EXPECT_TRUE(saw_x2);
}

TEST(MinorsTest, RandomSelectionIsSeededAndDistinct) {
  auto v = koszul_v();
  auto a = minors(v, 2, MinorSelection::random, 10, 42);
  auto b = minors(v, 2, MinorSelection::random, 10, 42);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 10u);
}

TEST(MinorsTest, RankEqualsLargestNonzeroMinorProperty) {
  Rng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> rows(1, 5), cols(1, 7);
    auto m = random_sparse(rng, rows(rng), cols(rng), 2);
    // Make some instances rank deficient by repeating a scaled column.
    if (trial % 3 == 0 && m.cols() >= 2 && m.col_degree(0) == m.col_degree(1))
      for (std::size_t i = 0; i < m.rows(); ++i) m.set(i, 1, m(i, 0).scaled(7));
    std::size_t largest = 0;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
      auto ms = minors(m, k, MinorSelection::all);
      if (std::any_of(ms.begin(), ms.end(), [](const Poly& p) { return !p.is_zero(); })) largest = k;
    }
    EXPECT_EQ(rank_fraction_field(m), largest);
    EXPECT_EQ(bareiss_rank(m), largest);
  }
}

TEST(DeterminantTest, InterpolationMatchesElimination) {
  Rng rng(7);
  std::vector<int> rd = {0, 0, 1, 1, 0, 1}, cd = {1, 2, 1, 2, 2, 2};
  auto m = random_graded_matrix(kFp, rd, cd, rng);
  auto interpolated = determinant(m);  // 6x6 over a prime field takes the interpolation path
  // Recompute by cofactor expansion along the first row.
  std::function<Poly(const Matrix&)> cofactor = [&](const Matrix& a) -> Poly {
    if (a.rows() == 1) return a(0, 0);
    Poly acc(kFp);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(0, j).is_zero()) continue;
      std::vector<std::size_t> rs, cs;
      for (std::size_t i = 1; i < a.rows(); ++i) rs.push_back(i);
      for (std::size_t l = 0; l < a.cols(); ++l)
        if (l != j) cs.push_back(l);
      Poly term = a(0, j) * cofactor(a.submatrix(rs, cs));
      if (j % 2) acc -= term;
      else acc += term;
    }
    return acc;
  };
  EXPECT_EQ(interpolated, cofactor(m));
  EXPECT_TRUE(interpolated.is_homogeneous());
}

TEST(RankModuloTest, Examples) {
  auto diag = from_strings({0, 0}, {1, 1}, {{"X", "0"}, {"0", "X"}});
  EXPECT_EQ(rank_modulo_hypersurface(diag, P("X")), 0u);
  auto tri = from_strings({0, 0}, {1, 1}, {{"X", "Y"}, {"0", "Z"}});
  EXPECT_EQ(rank_modulo_hypersurface(tri, P("X")), 1u);
  auto u = from_strings({0}, {1, 1, 1, 1}, {{"X", "Y", "Z", "T"}});
  EXPECT_EQ(rank_modulo_hypersurface(u, P("X")), 1u);
  EXPECT_THROW(rank_modulo_hypersurface(u, P("3")), std::invalid_argument);
  // Reducible f: the minimum over its components.
  auto m = from_strings({0, 0}, {1, 1}, {{"X", "0"}, {"0", "Y"}});
  EXPECT_EQ(rank_modulo_hypersurface(m, P("X*Y")), 1u);
  EXPECT_EQ(rank_modulo_hypersurface(m, P("X*Y - Z*T")), 2u);
}

// Oracle: numeric rank at random points of the plane X = 0.
std::size_t rank_on_plane_x0(const Matrix& m, Rng& rng) {
  std::size_t best = 0;
  for (int i = 0; i < 3; ++i) {
    std::array<std::uint32_t, kNumVars> pt{0, kFp.random(rng), kFp.random(rng), kFp.random(rng), 0};
    best = std::max(best, rank_of(m.evaluate(pt)));
  }
  return best;
}

TEST(RankModuloTest, AgreesWithPointEvaluationOnAPlaneProperty) {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_sparse(rng, 1 + trial % 4, 2 + trial % 5, 2);
    // Force some entries into the ideal (X).
    for (std::size_t j = 0; j < m.cols(); j += 2)
      if (m.col_degree(j) >= 1)
        for (std::size_t i = 0; i < m.rows(); ++i)
          m.set(i, j, P("X") * random_form(kFp, m.col_degree(j) - 1, rng));
    std::size_t r = rank_modulo_hypersurface(m, P("X"));
    EXPECT_EQ(r, rank_on_plane_x0(m, rng));
    EXPECT_LE(r, rank_fraction_field(m));
  }
}

TEST(MinorGcdTest, CertificateAndCommonFactor) {
  Rng rng(3);
  EXPECT_TRUE(minors_certified_coprime(koszul_v(), 3, rng));
  auto col = from_strings({0, 0}, {2}, {{"X^2"}, {"X*Y"}});
  EXPECT_FALSE(minors_certified_coprime(col, 1, rng));
  EXPECT_EQ(minor_gcd(col, 1, 20000, rng), P("X"));
  EXPECT_EQ(rank_modulo_hypersurface(col, P("X")), 0u);
  auto u = from_strings({0}, {1, 1, 1, 1}, {{"X", "Y", "Z", "T"}});
  EXPECT_TRUE(minor_gcd(u, 1, 20000, rng).is_one());
}

TEST(BlockTest, DecomposesBlockDiagonal) {
  auto m = from_strings({0, 0, 0}, {1, 1, 1, 1},
                        {{"X", "Y", "0", "0"}, {"0", "0", "Z", "0"}, {"0", "0", "T", "0"}});
  auto blocks = block_decomposition(m);
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0].rows, (std::vector<std::size_t>{0}));
  EXPECT_EQ(blocks[0].cols, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(blocks[1].rows, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(blocks[1].cols, (std::vector<std::size_t>{2}));
}

}  // namespace
}  // namespace biliaison
