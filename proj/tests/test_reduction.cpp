#include <scf/unit_reduction.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace scf;

namespace {

// Independent check of c1 <= |x| < (a+3) c1, c2 <= |x'| < (a+4) c2 at a fixed
// high precision (no refinement loop).
bool conforms(const Element& x, const Rational& c1, const Rational& c2, unsigned bits = 256) {
  auto enc = isolate_roots(x.param(), bits);
  const Rational a(x.param().a());
  Interval x0 = abs(embed(x, enc, 0)), x1 = abs(embed(x, enc, 1));
  return c1 <= x0.lo() && x0.hi() < c1 * (a + 3) && c2 <= x1.lo() && x1.hi() < c2 * (a + 4);
}

}  // namespace

TEST(UnitWord, Materialize) {
  FieldParam p(7);
  EXPECT_EQ(materialize(UnitWord{}, p), Element::one(p));
  EXPECT_EQ(materialize(UnitWord{-1, 1, 0}, p), -Element::alpha(p));
  Element u = materialize(UnitWord{1, -2, 3}, p);
  EXPECT_TRUE(is_unit(u));
  EXPECT_EQ(u * pow(Element::alpha(p), 2), pow(Element::alpha_double_prime(p), 3));
}

TEST(LogEmbed, UnitsSumToZero) {
  FieldParam p(7);
  auto enc = isolate_roots(p, 64);
  LogVector one = log_embed(Element::one(p), enc);
  EXPECT_TRUE(one.first.contains(Rational(0)));
  EXPECT_TRUE(one.second.contains(Rational(0)));
  for (const Element& u : {Element::alpha(p), element(p, 1, 1, 0), materialize(UnitWord{1, 3, -2}, p)}) {
    LogVector v = log_embed(u, enc);
    Interval third = log(abs(embed(u, enc, 2)), 64);
    EXPECT_TRUE((v.first + v.second + third).contains(Rational(0)));
  }
  LogVector v = log_embed(Element::alpha_double_prime(p), enc);
  Interval bracket(log(Interval(8L), 64).lo(), log(Interval(Rational(58, 7)), 64).hi());
  EXPECT_TRUE(bracket.contains(v.first));
  EXPECT_THROW(log_embed(Element::zero(p), enc), zero_divisor);
}

TEST(LogEmbed, UnitIndependence) {
  for (long av = 1; av <= 12; ++av) EXPECT_TRUE(verify_unit_independence(isolate_roots(FieldParam(av), 64)));
}

TEST(Reduce, IdentityWhenAlreadyConforming) {
  for (long av : {1L, 7L, 30L}) {
    FieldParam p(av);
    auto red = reduce(Element::one(p), Rational(1), Rational(1), isolate_roots(p, 64));
    EXPECT_EQ(red.eta, UnitWord{});
    EXPECT_EQ(red.reduced, Element::one(p));
  }
}

TEST(Reduce, AlphaAtA7AgainstExhaustiveOracle) {
  FieldParam p(7);
  const Element gamma = Element::alpha(p);
  bool oracle_found = false;
  for (long i = -6; i <= 6 && !oracle_found; ++i)
    for (long j = -6; j <= 6 && !oracle_found; ++j)
      if (conforms(gamma * materialize(UnitWord{1, i, j}, p), Rational(1), Rational(1))) oracle_found = true;
  ASSERT_TRUE(oracle_found);
  auto red = reduce(gamma, Rational(1), Rational(1), isolate_roots(p, 64));
  EXPECT_EQ(red.reduced, gamma * materialize(red.eta, p));
  EXPECT_TRUE(conforms(red.reduced, Rational(1), Rational(1)));
}

TEST(Reduce, AlphaMinusOneWithCubeRootTarget) {
  FieldParam p(7);
  // c = (17/10)^(1/3) approximated from below on the 2^-30 grid
  Rational c = round_down(Rational(std::cbrt(1.7)), 30);
  while (c * c * c > Rational(17, 10)) c -= pow2(-30);
  const Element gamma = element(p, -1, 1, 0);
  auto red = reduce(gamma, c, c, isolate_roots(p, 64));
  EXPECT_TRUE(conforms(red.reduced, c, c));
  EXPECT_EQ(abs_value(norm(red.reduced)), 17);
}

TEST(Reduce, RandomizedProperty) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> coeff(-20, 20), av(1, 50), num(1, 64);
  for (int trial = 0; trial < 150; ++trial) {
    FieldParam p(av(rng));
    Element gamma = element(p, coeff(rng), coeff(rng), coeff(rng));
    if (gamma.is_zero()) continue;
    Rational c1(num(rng), 8), c2(num(rng), 8);
    auto red = reduce(gamma, c1, c2, isolate_roots(p, 64));
    EXPECT_TRUE(conforms(red.reduced, c1, c2)) << "a=" << p.a() << " trial " << trial;
    EXPECT_EQ(abs_value(norm(red.reduced)), abs_value(norm(gamma)));
    EXPECT_TRUE(associated(red.reduced, gamma));
  }
}

TEST(Reduce, Preconditions) {
  FieldParam p(7);
  auto enc = isolate_roots(p, 64);
  EXPECT_THROW(reduce(Element::zero(p), Rational(1), Rational(1), enc), zero_divisor);
  EXPECT_THROW(reduce(Element::one(p), Rational(0), Rational(1), enc), std::invalid_argument);
  EXPECT_THROW(reduce(Element::one(FieldParam(8)), Rational(1), Rational(1), enc), parameter_mismatch);
}

TEST(CoefficientBound, Examples) {
  auto b7 = coefficient_bound_check(FieldParam(7), 17);
  EXPECT_EQ(b7.s_bound, 2);
  EXPECT_EQ(b7.t_bound, 2);
  EXPECT_LE(b7.paper_bound, 2);
  auto b100 = coefficient_bound_check(FieldParam(100), 203);
  EXPECT_EQ(b100.s_bound, 2);
  EXPECT_EQ(b100.t_bound, 2);
  auto b1 = coefficient_bound_check(FieldParam(7), 1);
  EXPECT_LE(b1.s_bound, 2);
  EXPECT_LE(b1.t_bound, 2);
  EXPECT_THROW(coefficient_bound_check(FieldParam(7), 18), std::invalid_argument);
  EXPECT_THROW(coefficient_bound_check(FieldParam(7), 0), std::invalid_argument);
}

TEST(CoefficientBound, SmallParameters) {
  for (long av = 1; av <= 6; ++av) {
    FieldParam p(av);
    auto b = coefficient_bound_check(p, p.threshold());
    EXPECT_LE(b.s_bound, 2) << av;
    EXPECT_LE(b.t_bound, 2) << av;
  }
}
