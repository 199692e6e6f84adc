#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bateman/squeeze.hpp"

namespace bateman {
namespace {

// Independent oracle: (-1/2)^k sqrt((2k)!) / k! with the prime factorization of (2k)! from
// Legendre's formula; odd prime exponents go under the radical.
RadicalPair closed_form_coefficient(int k) {
  const int n = 2 * k;
  Integer outside = 1, radicand = 1;
  for (int p = 2; p <= n; ++p) {
    bool prime = true;
    for (int d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (!prime) continue;
    int e = 0;
    for (long pk = p; pk <= n; pk *= p) e += static_cast<int>(n / pk);
    for (int i = 0; i < e / 2; ++i) outside *= p;
    if (e % 2 == 1) radicand *= p;
  }
  Integer kfact = 1;
  for (int i = 2; i <= k; ++i) kfact *= i;
  Integer two_k = 1;
  for (int i = 0; i < k; ++i) two_k *= 2;
  Rational r(outside, kfact * two_k);
  r.canonicalize();
  if (k % 2 == 1) r = -r;
  return {r, radicand};
}

TEST(RadicalPair, SquarefreeSplit) {
  EXPECT_EQ(squarefree_split(1), std::make_pair(Integer(1), Integer(1)));
  EXPECT_EQ(squarefree_split(24), std::make_pair(Integer(2), Integer(6)));
  EXPECT_EQ(squarefree_split(72), std::make_pair(Integer(6), Integer(2)));
  EXPECT_EQ(squarefree_split(97), std::make_pair(Integer(1), Integer(97)));
  EXPECT_THROW(squarefree_split(0), std::invalid_argument);
}

TEST(RadicalPair, TimesSqrtKeepsRadicandSquarefree) {
  RadicalPair x{1, 6};
  x.times_sqrt(10);  // sqrt60 = 2 sqrt15
  EXPECT_EQ(x, (RadicalPair{2, 15}));
  x.times_sqrt(15);
  EXPECT_EQ(x, (RadicalPair{30, 1}));
  EXPECT_EQ(x.str(), "30");
  EXPECT_EQ((RadicalPair{Rational(-1, 2), 2}).str(), "-1/2*sqrt(2)");
  EXPECT_THROW(x.times_sqrt(0), std::invalid_argument);
}

TEST(SqueezeFactored, FirstCoefficients) {
  const auto c = squeeze_factored_action(2);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], (RadicalPair{1, 1}));
  EXPECT_EQ(c[1], (RadicalPair{Rational(-1, 2), 2}));
  EXPECT_EQ(c[2], (RadicalPair{Rational(1, 4), 6}));
  EXPECT_THROW(squeeze_factored_action(0), std::invalid_argument);
}

TEST(SqueezeFactored, MatchesClosedFormUpToFifty) {
  const auto c = squeeze_factored_action(50);
  for (int k = 0; k <= 50; ++k) EXPECT_EQ(c[k], closed_form_coefficient(k)) << "k=" << k;
}

TEST(SqueezeFactored, SquaredMagnitudesFollowTheTermRecurrence) {
  // |c_{k+1}|^2 / |c_k|^2 = (2k+1) / (2k+2)
  const auto c = squeeze_factored_action(40);
  for (int k = 0; k < 40; ++k) {
    const Rational lhs = c[k + 1].r * c[k + 1].r * Rational(c[k + 1].n) / (c[k].r * c[k].r * Rational(c[k].n));
    EXPECT_EQ(lhs, Rational(2 * k + 1, 2 * k + 2));
  }
}

TEST(SqueezeTruncated, ZeroAngleIsIdentity) {
  for (const auto& rec : squeeze_truncated_norms(0.0, {8, 16, 32})) {
    EXPECT_NEAR(static_cast<double>(rec.norm), 1.0, 1e-14);
    EXPECT_NEAR(static_cast<double>(rec.log10_norm), 0.0, 1e-14);
  }
}

TEST(SqueezeTruncated, UnitaryControlPreservesNorm) {
  for (const auto& rec : squeeze_truncated_norms(0.1, {16, 32, 64, 128}, FockOpKind::UnitarySqueeze)) {
    EXPECT_NEAR(static_cast<double>(rec.norm), 1.0, 1e-8) << rec.cutoff;
  }
}

TEST(SqueezeTruncated, NormsGrowWithoutPlateau) {
  const auto recs = squeeze_truncated_norms(7 * std::numbers::pi / 8, {16, 32, 64, 128});
  ASSERT_EQ(recs.size(), 4u);
  // Frozen from an independent eigendecomposition of the truncated generator.
  EXPECT_NEAR(static_cast<double>(recs[0].log10_norm), std::log10(4.4e19), 0.05);
  EXPECT_NEAR(static_cast<double>(recs[1].log10_norm), std::log10(1.6e48), 0.05);
  EXPECT_NEAR(static_cast<double>(recs[2].log10_norm), std::log10(3.3e108), 0.05);
  for (std::size_t i = 1; i < recs.size(); ++i) {
    EXPECT_GT(recs[i].log10_norm, recs[i - 1].log10_norm);
    EXPECT_GT(recs[i].norm, recs[i - 1].norm);
  }
  EXPECT_TRUE(std::isfinite(static_cast<double>(recs[3].log10_norm)));
  EXPECT_EQ(recs[0].coeff_gap.size(), 4u);
}

TEST(SqueezeTruncated, Rejections) {
  EXPECT_THROW(squeeze_truncated_norms(1.0, {16, 8}), std::invalid_argument);
  EXPECT_THROW(squeeze_truncated_norms(1.0, {8}, FockOpKind::A1), std::invalid_argument);
}

}  // namespace
}  // namespace bateman
