#include <gtest/gtest.h>

#include <vector>

#include "biliaison/polyalg.hpp"

namespace biliaison {
namespace {

const PrimeField kFp{32003};
const RationalField kQ{};

MultiPoly<PrimeField> P(const std::string& s) { return parse_poly(kFp, s); }
MultiPoly<RationalField> Q(const std::string& s) { return parse_poly(kQ, s); }

MultiPoly<PrimeField> random_poly(Rng& rng, int max_deg, int terms) {
  std::vector<MultiPoly<PrimeField>::Term> ts;
  std::uniform_int_distribution<int> e(0, max_deg);
  for (int i = 0; i < terms; ++i) {
    Monomial::Exponents ex{};
    for (int v = 0; v < kNumVars; ++v) ex[v] = static_cast<std::uint16_t>(e(rng) / (v == A ? 2 : 1));
    ts.push_back({Monomial(ex), kFp.random(rng)});
  }
  return MultiPoly<PrimeField>::from_terms(kFp, ts);
}

TEST(FieldSpecTest, ParsesAndValidates) {
  EXPECT_EQ(FieldSpec::parse("rationals"), FieldSpec::rationals());
  EXPECT_EQ(FieldSpec::parse("prime:32003"), FieldSpec::prime(32003));
  EXPECT_THROW(FieldSpec::parse("prime:32000"), ParseError);
  EXPECT_THROW(FieldSpec::parse("prime:997"), ParseError);
  EXPECT_THROW(FieldSpec::parse("reals"), ParseError);
}

TEST(PrimeFieldTest, InverseAndSignedRepresentative) {
  for (std::uint32_t a = 1; a < 200; ++a) EXPECT_EQ(kFp.mul(a, kFp.inv(a)), 1u);
  EXPECT_EQ(kFp.to_signed(kFp.from_int(-5)), -5);
  EXPECT_EQ(kFp.from_int(32005), 2u);
}

TEST(MultiPolyTest, ParseAndPrint) {
  auto f = P("3*X^2*Y - T^2 + a*Z");
  EXPECT_EQ(f.to_string(), "3*X^2*Y - T^2 + Z*a");
  EXPECT_EQ(P(f.to_string()), f);
  EXPECT_EQ(P("3X^2Y"), P("3*X^2*Y"));
  EXPECT_EQ(P(" - X + X "), MultiPoly<PrimeField>(kFp));
  EXPECT_EQ(Q("1/2*X + 1/2*X"), Q("X"));
  EXPECT_THROW(P("X +"), ParseError);
  EXPECT_THROW(P("X ** Y"), ParseError);
  EXPECT_THROW(P("W"), ParseError);
  EXPECT_THROW(P(""), ParseError);
}

TEST(MultiPolyTest, Arithmetic) {
  EXPECT_EQ(P("X*Y") + P("Y*X"), P("2*X*Y"));
  EXPECT_EQ(P("X+Y") * P("X-Y"), P("X^2-Y^2"));
  EXPECT_EQ(P("X^2*Y").exact_divide(P("X")), P("X*Y"));
  EXPECT_THROW(P("X^2*Y + 1").exact_divide(P("X")), InexactDivision);
  EXPECT_EQ((P("X^3 - Y^3")).exact_divide(P("X - Y")), P("X^2 + X*Y + Y^2"));
  EXPECT_EQ(Q("X+Y") * Q("X-Y"), Q("X^2-Y^2"));
}

TEST(MultiPolyTest, DegreesAndHomogeneity) {
  EXPECT_EQ(P("0").degree(), kDegreeOfZero);
  EXPECT_EQ(P("a*X^2 + Y*Z").degree(), 2);
  EXPECT_TRUE(P("a*X^2 + Y*Z").is_homogeneous());
  EXPECT_FALSE(P("X^2 + Y").is_homogeneous());
}

TEST(MultiPolyTest, SpecializeParameter) {
  EXPECT_EQ(P("X + a*Y").specialize_parameter(0), P("X"));
  EXPECT_EQ(P("a").specialize_parameter(0), P("0"));
  EXPECT_EQ(P("X + a*Y").specialize_parameter(1), P("X + Y"));
  EXPECT_FALSE(P("a^3*X + a*Y").specialize_parameter(kFp.from_int(7)).has_parameter());
}

TEST(MultiPolyTest, RingAxiomsProperty) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_poly(rng, 3, 6), q = random_poly(rng, 3, 6), r = random_poly(rng, 3, 6);
    EXPECT_EQ((p + q) * r, p * r + q * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    if (!q.is_zero()) EXPECT_EQ((p * q).exact_divide(q), p);
    auto v = kFp.random(rng);
    EXPECT_EQ((p * q).specialize_parameter(v), p.specialize_parameter(v) * q.specialize_parameter(v));
  }
}

TEST(GcdTest, Basics) {
  std::vector<MultiPoly<PrimeField>> xy = {P("X"), P("Y")};
  EXPECT_TRUE(gcd_many<PrimeField>(xy).is_one());
  std::vector<MultiPoly<PrimeField>> xs = {P("X*Y"), P("X*Z"), P("X*T")};
  EXPECT_EQ(gcd_many<PrimeField>(xs), P("X"));
  // 1-minors of the single degree-one column of the obligatory example, at a = 0.
  std::vector<MultiPoly<PrimeField>> minors = {P("X"), P("-Y"), P("-a").specialize_parameter(0)};
  EXPECT_TRUE(gcd_many<PrimeField>(minors).is_one());
  std::vector<MultiPoly<PrimeField>> zeros = {P("0"), P("0")};
  EXPECT_THROW(gcd_many<PrimeField>(zeros), std::invalid_argument);
}

TEST(GcdTest, HiddenCommonFactor) {
  auto g = P("X*Y - Z^2 + a*T");
  auto f1 = g * P("X + 3*T"), f2 = g * P("Y^2 - X*Z"), f3 = g * g * P("T - Z");
  std::vector<MultiPoly<PrimeField>> fs = {f1, f2, f3};
  EXPECT_EQ(gcd_many<PrimeField>(fs), g.monic());
  auto h = Q("2*X*Y - Z^2");
  EXPECT_EQ(gcd(h * Q("X - T"), h * Q("Y + Z")), h.monic());
}

TEST(GcdTest, DividesAndIdempotentProperty) {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto common = random_poly(rng, 2, 3);
    std::vector<MultiPoly<PrimeField>> s;
    for (int i = 0; i < 3; ++i) s.push_back(common * random_poly(rng, 2, 4));
    if (s[0].is_zero() && s[1].is_zero() && s[2].is_zero()) continue;
    auto g = gcd_many<PrimeField>(s);
    for (const auto& p : s) EXPECT_TRUE(g.divides(p));
    if (!common.is_zero()) EXPECT_TRUE(common.monic().divides(g) || common.is_constant());
    auto extended = s;
    extended.push_back(g);
    EXPECT_EQ(gcd_many<PrimeField>(extended), g);
  }
}

TEST(SquarefreeTest, Examples) {
  auto f = squarefree_factors(P("X^2*Y"));
  ASSERT_EQ(f.size(), 2u);
  auto prod = f[0] * f[1];
  EXPECT_EQ(prod, P("X*Y"));
  EXPECT_TRUE(f[0].degree() == 1 && f[1].degree() == 1);

  auto g = squarefree_factors(P("X^2 - Y^2"));
  MultiPoly<PrimeField> prod2 = P("1");
  for (const auto& x : g) prod2 = prod2 * x;
  EXPECT_EQ(prod2, P("X^2 - Y^2"));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) EXPECT_TRUE(gcd(g[i], g[j]).is_one());

  auto h = squarefree_factors(P("X"));
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0], P("X"));
  EXPECT_THROW(squarefree_factors(P("5")), std::invalid_argument);
}

TEST(SquarefreeTest, ProductRecoversRadicalProperty) {
  Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = random_poly(rng, 2, 3), b = random_poly(rng, 1, 3);
    if (a.is_constant() || b.is_constant()) continue;
    auto f = a * a * b;
    auto factors = squarefree_factors(f);
    MultiPoly<PrimeField> prod = P("1");
    for (const auto& x : factors) {
      EXPECT_TRUE(x.divides(f));
      prod = prod * x;
    }
    // The product is squarefree (coprime to a generic directional derivative) and has
    // the same radical as f.
    auto directional = prod.derivative(X) + prod.derivative(Y) * P("3") + prod.derivative(Z) * P("7") +
                       prod.derivative(T) * P("11") + prod.derivative(A) * P("13");
    EXPECT_TRUE(gcd(prod, directional).is_constant());
    auto rest = f;
    for (const auto& x : factors)
      while (x.divides(rest)) rest = rest.exact_divide(x);
    EXPECT_TRUE(rest.is_constant());
  }
}

TEST(UPolyTest, InterpolationAndGcd) {
  UPoly<PrimeField> f(kFp, {1, 2, 3});
  std::vector<std::uint32_t> xs = {0, 1, 2}, ys;
  for (auto x : xs) ys.push_back(f.evaluate(x));
  EXPECT_EQ(interpolate(kFp, xs, ys), f);
  UPoly<PrimeField> g(kFp, {kFp.from_int(-1), 0, 1});  // t^2 - 1
  UPoly<PrimeField> h(kFp, {1, 1});                    // t + 1
  EXPECT_EQ(gcd(g, h * h), h);
  EXPECT_EQ(squarefree_part(h * h * g), g);
}

}  // namespace
}  // namespace biliaison
