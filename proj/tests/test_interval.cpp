#include <scf/interval.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace scf;

TEST(Interval, Arithmetic) {
  Interval x(Rational(1), Rational(2));
  Interval y(Rational(-3), Rational(1));
  EXPECT_EQ(x + y, Interval(Rational(-2), Rational(3)));
  EXPECT_EQ(x - y, Interval(Rational(0), Rational(5)));
  EXPECT_EQ(x * y, Interval(Rational(-6), Rational(2)));
  EXPECT_EQ(-x, Interval(Rational(-2), Rational(-1)));
  EXPECT_EQ(Interval(1L) / x, Interval(Rational(1, 2), Rational(1)));
  EXPECT_THROW(x / y, zero_divisor);
  EXPECT_THROW(Interval(Rational(2), Rational(1)), std::invalid_argument);
  EXPECT_EQ(abs(y), Interval(Rational(0), Rational(3)));
  EXPECT_EQ(ipow(Interval(Rational(-1), Rational(2)), 2), Interval(Rational(-2), Rational(4)));
}

TEST(Interval, Comparisons) {
  Interval x(Rational(1), Rational(2)), y(Rational(3), Rational(4)), z(Rational(2), Rational(3));
  EXPECT_EQ(less(x, y), true);
  EXPECT_EQ(less(y, x), false);
  EXPECT_FALSE(less(x, z).has_value());
  EXPECT_EQ(less_equal(x, z), true);
  EXPECT_FALSE(less(x, z).has_value());
  EXPECT_TRUE(x.overlaps(z));
  EXPECT_FALSE(x.overlaps(y));
}

TEST(Interval, RandomContainment) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int i = 0; i < 500; ++i) {
    Rational a(d(rng), 7), b(d(rng), 11), c(d(rng), 3), e(d(rng), 5);
    Interval x(std::min(a, b), std::max(a, b)), y(std::min(c, e), std::max(c, e));
    for (const Rational& u : {x.lo(), x.hi(), x.midpoint()})
      for (const Rational& v : {y.lo(), y.hi(), y.midpoint()}) {
        EXPECT_TRUE((x + y).contains(Rational(u + v)));
        EXPECT_TRUE((x - y).contains(Rational(u - v)));
        EXPECT_TRUE((x * y).contains(Rational(u * v)));
        if (!y.contains_zero()) {
          EXPECT_TRUE((x / y).contains(Rational(u / v)));
        }
      }
  }
}

TEST(Interval, Ln2AgainstPublishedDigits) {
  // ln 2 = 0.69314718055994530941723212145817656807...
  Rational lo = parse_rational("69314718055994530941723212145817656807/100000000000000000000000000000000000000");
  Rational hi = lo + Rational(1, Integer("100000000000000000000000000000000000000"));
  for (unsigned bits : {16u, 64u, 120u}) {
    Interval l = ln2(bits);
    EXPECT_TRUE(l.overlaps(Interval(lo, hi))) << bits;
    EXPECT_LE(l.width(), pow2(-static_cast<long>(bits)));
  }
}

TEST(Interval, LogAgainstLibm) {
  for (double v : {1e-6, 0.013, 0.5, 1.0, 1.7, 3.0, 8.25, 1234.5, 1e9}) {
    Interval l = log(Interval(Rational(v)), 64);
    double mid = l.midpoint().get_d();
    EXPECT_NEAR(mid, std::log(v), 4e-15 * std::max(1.0, std::abs(std::log(v)))) << v;
    EXPECT_LT(l.width().get_d(), 1e-17) << v;
  }
  EXPECT_TRUE(log(Interval(1L), 64).contains(Rational(0)));
  EXPECT_THROW(log(Interval(Rational(-1), Rational(1)), 64), std::domain_error);
}

TEST(Interval, LogIsAdditive) {
  Interval x(Rational(3, 7)), y(Rational(22, 5));
  Interval lhs = log(x * y, 80);
  Interval rhs = log(x, 80) + log(y, 80);
  EXPECT_TRUE(lhs.overlaps(rhs));
  // log is monotone: wide inputs give enclosures containing the point values
  Interval w(Rational(2), Rational(3));
  EXPECT_TRUE(log(w, 64).contains(log(Interval(Rational(5, 2)), 64)));
}

TEST(Interval, Sqrt) {
  Interval s = sqrt(Interval(Rational(2)), 60);
  EXPECT_TRUE((s * s).contains(Rational(2)));
  EXPECT_LE(s.width(), pow2(-60));
  EXPECT_TRUE(sqrt(Interval(Rational(4)), 10).contains(Rational(2)));
  EXPECT_THROW(sqrt(Interval(Rational(-1), Rational(1)), 10), std::domain_error);
}

TEST(Interval, Rounded) {
  Interval x(Rational(1, 3), Rational(2, 3));
  Interval r = x.rounded(8);
  EXPECT_TRUE(r.contains(x));
  EXPECT_EQ(r.lo() * 256, floor(Rational(r.lo() * 256)));
}
