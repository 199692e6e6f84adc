#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bateman/field.hpp"
#include "random_algebra.hpp"

namespace bateman {
namespace {

TEST(QuadTest, SqrtTwoSquaresToTwo) {
  EXPECT_EQ(Quad::sqrt2() * Quad::sqrt2(), Quad(2));
  EXPECT_EQ(Quad::inv_sqrt2() * Quad::sqrt2(), Quad(1));
}

TEST(QuadTest, SignIsExactNearCancellation) {
  // 99/70 is a continued-fraction convergent of sqrt2 from above, 41/29 from below.
  EXPECT_EQ(Quad(Rational(99, 70), -1).sign(), 1);
  EXPECT_EQ(Quad(Rational(41, 29), -1).sign(), -1);
  EXPECT_EQ(Quad(Rational(-99, 70), 1).sign(), -1);
  EXPECT_EQ(Quad().sign(), 0);
  EXPECT_LT(Quad(Rational(41, 29)), Quad::sqrt2());
}

TEST(QuadTest, ToDoubleAvoidsCancellation) {
  const Quad tiny(Rational(665857, 470832), -1);  // ~ 1.59e-12
  EXPECT_NEAR(tiny.to_double(), 665857.0 / 470832.0 - std::sqrt(2.0), 1e-15);
  EXPECT_GT(tiny.to_double(), 0.0);
}

TEST(QuadTest, StringForm) {
  EXPECT_EQ(Quad(0, Rational(3, 8)).str(), "3/8*sqrt2");
  EXPECT_EQ(Quad(1, -1).str(), "1 - sqrt2");
  EXPECT_EQ(Quad().str(), "0");
}

TEST(CoeffTest, ImaginaryUnit) {
  EXPECT_EQ(Coeff::i() * Coeff::i(), Coeff(-1));
  EXPECT_EQ(Coeff::i().conj(), -Coeff::i());
}

TEST(CoeffTest, InverseOfZeroThrows) { EXPECT_THROW(Coeff().inverse(), std::domain_error); }

TEST(CoeffTest, FieldAxiomsOnRandomElements) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Coeff x = testing::random_coeff(rng, 0.5);
    const Coeff y = testing::random_coeff(rng, 0.5);
    const Coeff z = testing::random_coeff(rng, 0.5);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
    if (!x.is_zero()) {
      EXPECT_EQ(x.inverse() * x, Coeff(1)) << x.str();
    }
    const std::complex<double> expected = x.to_complex() * y.to_complex();
    EXPECT_NEAR(std::abs((x * y).to_complex() - expected), 0.0, 1e-12);
  }
}

TEST(ParseRationalTest, AcceptsFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("1/5"), Rational(1, 5));
  EXPECT_EQ(parse_rational("0.2"), Rational(1, 5));
  EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

}  // namespace
}  // namespace bateman
