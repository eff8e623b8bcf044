#include <gtest/gtest.h>

#include <random>

#include "liaison/polynomial.hpp"
#include "test_support.hpp"

using namespace liaison;

TEST(PrimeField, InverseExamples) {
  EXPECT_EQ(PrimeField(7).inv(2), 4u);
  EXPECT_EQ(PrimeField(10007).inv(1), 1u);
  // extended-Euclid value, cross-checked by multiplication
  PrimeField F(10007);
  EXPECT_EQ(F.inv(3), 3336u);
  EXPECT_EQ(3u * 3336u % 10007u, 1u);
}

TEST(PrimeField, InverseOfZeroThrows) {
  PrimeField F(10007);
  try {
    F.inv(0);
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
}

TEST(PrimeField, RejectsComposites) {
  EXPECT_THROW(PrimeField(15), Error);
  EXPECT_THROW(PrimeField(2), Error);
  EXPECT_THROW(PrimeField(1), Error);
  EXPECT_NO_THROW(PrimeField(1009));
  EXPECT_NO_THROW(PrimeField(31991));
  EXPECT_NO_THROW(PrimeField(4294967291ull));
  EXPECT_TRUE(is_prime(1000003));
  EXPECT_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
}

TEST(PrimeField, AxiomsOnRandomTriples) {
  PrimeField F(10007);
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<Coeff> d(0, F.p() - 1);
  for (int i = 0; i < 10000; ++i) {
    Coeff a = d(gen), b = d(gen), c = d(gen);
    EXPECT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
    EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
    if (a != 0) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
  }
}

TEST(Ring, P1xP2Layout) {
  auto R = Ring::p1xp2(PrimeField(10007));
  EXPECT_EQ(R->nvars(), 5);
  EXPECT_EQ(R->var_name(0), "x0");
  EXPECT_EQ(R->var_name(4), "y2");
  EXPECT_EQ(R->grading_rank(), 2);
  EXPECT_THROW(Ring::make(PrimeField(7), {{"x", 2, {1}}, {"x", 1, {1}}}, Ambient::kElim), Error);
}

TEST(Ring, GrevlexComparesLikeTextbook) {
  auto R = Ring::projective(PrimeField(101), 2, "y");
  auto m = [&](int a, int b, int c) { return R->monomial(std::vector<int>{a, b, c}); };
  // y0^2 > y0*y1 > y1^2 > y0*y2 > y1*y2 > y2^2
  EXPECT_GT(R->compare(m(2, 0, 0), m(1, 1, 0)), 0);
  EXPECT_GT(R->compare(m(1, 1, 0), m(0, 2, 0)), 0);
  EXPECT_GT(R->compare(m(0, 2, 0), m(1, 0, 1)), 0);
  EXPECT_GT(R->compare(m(1, 0, 1), m(0, 1, 1)), 0);
  EXPECT_GT(R->compare(m(0, 1, 1), m(0, 0, 2)), 0);
  EXPECT_GT(R->compare(m(0, 0, 3), m(1, 0, 0)), 0);
  EXPECT_EQ(R->total_degree(m(2, 1, 3)), 6);
}

TEST(Ring, BlockOrderEliminatesLeadingBlock) {
  auto R = Ring::p1xp2(PrimeField(101))->with_order(MonomialOrder::block_elimination({{0, 1}, {2, 3, 4}}));
  auto x0 = R->variable(0);
  auto y_big = R->monomial(std::vector<int>{0, 0, 9, 9, 9});
  EXPECT_GT(R->compare(x0, y_big), 0);
}

TEST(Polynomial, MultidegreeExamples) {
  auto R = Ring::p1xp2(PrimeField(10007));
  EXPECT_EQ(*parse_polynomial(R, "x0^2*y1").multidegree(), (Multidegree{2, 1}));
  try {
    (void)parse_polynomial(R, "x0 + y0").multidegree();
    FAIL() << "expected homogeneity error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHomogeneity);
  }
  EXPECT_FALSE(Polynomial(R).multidegree().has_value());
  std::mt19937_64 gen(5);
  auto f = test::random_form(R, {5, 2}, gen);
  EXPECT_EQ(*f.multidegree(), (Multidegree{5, 2}));
}

TEST(Polynomial, ParseAndPrint) {
  auto R = Ring::p1xp2(PrimeField(10007));
  auto f = parse_polynomial(R, "-3*x0^2*y1 + 5 * x1*x0*y2 - y2*x1^2");
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.to_string(), "-3*x0^2*y1+5*x0*x1*y2-x1^2*y2");
  EXPECT_EQ(parse_polynomial(R, "0").to_string(), "0");
  EXPECT_EQ(parse_polynomial(R, "10008").to_string(), "1");
  EXPECT_THROW(parse_polynomial(R, "x0 + z3"), Error);
  EXPECT_THROW(parse_polynomial(R, "x0 +"), Error);
  EXPECT_THROW(parse_polynomial(R, ""), Error);
}

TEST(Polynomial, PrintParseRoundTripProperty) {
  std::mt19937_64 gen(11);
  auto R = Ring::p1xp2(PrimeField(10007));
  auto S = Ring::projective(PrimeField(31991), 6, "w");
  for (int i = 0; i < 200; ++i) {
    const auto& ring = (i % 2) ? R : S;
    auto f = test::random_poly(ring, 1 + i % 17, 6, gen);
    EXPECT_EQ(parse_polynomial(ring, f.to_string()), f);
  }
}

TEST(Polynomial, CommutativeRingProperties) {
  std::mt19937_64 gen(3);
  auto R = Ring::p1xp2(PrimeField(10007));
  for (int i = 0; i < 50; ++i) {
    auto f = test::random_form(R, {1 + i % 3, 1}, gen, 0.5);
    auto g = test::random_form(R, {2, i % 3}, gen, 0.5);
    auto h = test::random_form(R, {2, i % 3}, gen, 0.5);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ(f * (g + h), f * g + f * h);
    if (!f.is_zero() && !g.is_zero()) {
      auto md = *f.multidegree();
      auto mg = *g.multidegree();
      Multidegree sum{md[0] + mg[0], md[1] + mg[1]};
      EXPECT_EQ(*(f * g).multidegree(), sum);
    }
    EXPECT_TRUE((f - f).is_zero());
  }
}

TEST(Polynomial, SpecializeFiberExamples) {
  PrimeField F(10007);
  auto R = Ring::p1xp2(F);
  auto P2 = Ring::projective(F, 2, "y");
  EXPECT_EQ(specialize_fiber(parse_polynomial(R, "x0^2*y1"), 1, 2, P2), parse_polynomial(P2, "y1"));
  EXPECT_EQ(specialize_fiber(parse_polynomial(R, "x1*y0 - x0*y1"), 1, 1, P2), parse_polynomial(P2, "y0 - y1"));
  EXPECT_THROW(specialize_fiber(parse_polynomial(R, "x0*y1"), 0, 0, P2), Error);
}

TEST(Polynomial, SpecializeFiberIsRingMorphism) {
  std::mt19937_64 gen(9);
  PrimeField F(10007);
  auto R = Ring::p1xp2(F);
  auto P2 = Ring::projective(F, 2, "y");
  std::uniform_int_distribution<Coeff> d(0, F.p() - 1);
  for (int i = 0; i < 40; ++i) {
    auto f = test::random_form(R, {i % 4, 2}, gen, 0.7);
    auto g = test::random_form(R, {1, 1 + i % 2}, gen, 0.7);
    Coeff l0 = d(gen), l1 = d(gen) | 1;
    EXPECT_EQ(specialize_fiber(f * g, l0, l1, P2), specialize_fiber(f, l0, l1, P2) * specialize_fiber(g, l0, l1, P2));
    EXPECT_EQ(specialize_fiber(f + f, l0, l1, P2), specialize_fiber(f, l0, l1, P2) + specialize_fiber(f, l0, l1, P2));
  }
}

TEST(Polynomial, ExactDivisionAndDerivative) {
  auto R = Ring::projective(PrimeField(101), 2, "y");
  auto f = parse_polynomial(R, "y0^2 - y1^2");
  auto g = parse_polynomial(R, "y0 + y1");
  auto q = divide_exact(f, g);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, parse_polynomial(R, "y0 - y1"));
  EXPECT_FALSE(divide_exact(parse_polynomial(R, "y0^2 + y1^2"), g).has_value());
  EXPECT_EQ(derivative(parse_polynomial(R, "y0^3*y2 + 2*y1"), 0), parse_polynomial(R, "3*y0^2*y2"));
}

TEST(Polynomial, MonomialCounts) {
  auto R = Ring::p1xp2(PrimeField(101));
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      long long expect = (a + 1) * (b + 1) * (b + 2) / 2;
      EXPECT_EQ(count_monomials(*R, {a, b}), expect);
      EXPECT_EQ(static_cast<long long>(monomials_of_multidegree(*R, {a, b}).size()), expect);
    }
  }
}
