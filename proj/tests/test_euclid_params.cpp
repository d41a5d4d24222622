#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "charlier/combinatorics.hpp"
#include "charlier/euclid_params.hpp"

using namespace charlier;

namespace {
constexpr Real kPi = std::numbers::pi_v<Real>;
}

TEST(EuclidParams2, RejectsZeroTranslation) {
  EXPECT_THROW(EuclidParams2(0.3, 0, 1), DegenerateParameterError);
  EXPECT_THROW(EuclidParams2(0.3, 1, 0), DegenerateParameterError);
}

TEST(Derive, AtZeroAngle) {
  const DerivedParams2 d = derive(EuclidParams2(0, 1, 1));
  EXPECT_DOUBLE_EQ(d.omega, 1);
  EXPECT_DOUBLE_EQ(d.zeta, 1);
  ASSERT_TRUE(d.u_complete());
  EXPECT_DOUBLE_EQ(*d.u11, -1);
  EXPECT_DOUBLE_EQ(*d.u12, 0);
  EXPECT_DOUBLE_EQ(*d.u21, 0);
  EXPECT_DOUBLE_EQ(*d.u22, -1);
}

TEST(Derive, QuarterTurn) {
  const DerivedParams2 d = derive(EuclidParams2(kPi / 4, 1, 2));
  ASSERT_TRUE(d.u_complete());
  EXPECT_NEAR(*d.u11, 1, 1e-14);
  EXPECT_NEAR(*d.u12, -1.0 / 3, 1e-14);
  EXPECT_NEAR(*d.u21, -0.5, 1e-14);
  EXPECT_NEAR(*d.u22, -1.0 / 6, 1e-14);
}

TEST(Derive, DegenerateDenominatorsAreAbsent) {
  const DerivedParams2 d = derive(EuclidParams2(kPi / 4, 1, 1));
  EXPECT_FALSE(d.u11.has_value());
  EXPECT_FALSE(d.u21.has_value());
  EXPECT_TRUE(d.u12.has_value());
  EXPECT_TRUE(d.u22.has_value());
  EXPECT_NEAR(d.omega, 0, 1e-15);
}

TEST(Derive, NormPreservedAndChangeOfVariables) {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> size(0.2, 2.5);
  std::uniform_real_distribution<double> xy(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const EuclidParams2 p(angle(gen), size(gen), size(gen));
    const DerivedParams2 d = derive(p);
    const Real c = std::cos(p.theta());
    const Real s = std::sin(p.theta());
    EXPECT_NEAR(d.omega, p.alpha() * c - p.beta() * s, 1e-15);
    EXPECT_NEAR(d.zeta, p.alpha() * s + p.beta() * c, 1e-15);
    EXPECT_NEAR((d.omega * d.omega + d.zeta * d.zeta) / p.norm2(), 1, 1e-13);
    if (!d.u_complete()) continue;
    const Real x = xy(gen);
    const Real y = xy(gen);
    const Real z1 = -x * d.omega;
    const Real z2 = -y * d.zeta;
    EXPECT_NEAR(1 + *d.u11 * z1 + *d.u12 * z2, 1 + x * c / p.alpha() + y * s / p.alpha(), 1e-12);
    EXPECT_NEAR(1 + *d.u21 * z1 + *d.u22 * z2, 1 - x * s / p.beta() + y * c / p.beta(), 1e-12);
  }
}

TEST(WeightAmp, Examples) {
  const EuclidParams2 p(0, 1, 1);
  EXPECT_NEAR(weight_amp(p, 0, 0), std::exp(-1.0), 1e-16);
  EXPECT_NEAR(weight_amp(p, 1, 1), std::exp(-1.0), 1e-16);
}

TEST(WeightAmp, SquaresSumToOne) {
  const EuclidParams2 p(0.4, 0.9, 1.6);
  CompensatedSum s;
  for (int i = 0; i <= 50; ++i)
    for (int k = 0; k <= 50; ++k) s += weight_amp(p, i, k) * weight_amp(p, i, k);
  EXPECT_NEAR(s.value(), 1, 1e-14);
}

TEST(DualParams, Examples) {
  const EuclidParams2 a = dual_params(EuclidParams2(0, 1, 2));
  EXPECT_DOUBLE_EQ(a.theta(), 0);
  EXPECT_DOUBLE_EQ(a.alpha(), -1);
  EXPECT_DOUBLE_EQ(a.beta(), -2);
  const EuclidParams2 b = dual_params(EuclidParams2(kPi / 2, 1, 1));
  EXPECT_NEAR(b.theta(), -kPi / 2, 1e-15);
  EXPECT_NEAR(b.alpha(), 1, 1e-15);
  EXPECT_NEAR(b.beta(), -1, 1e-15);
}

TEST(DualParams, IsGroupInverse) {
  for (const auto& p : {EuclidParams2(kPi / 6, 1, 1), EuclidParams2(1.1, 0.8, 1.7),
                        EuclidParams2(-2.0, 0.3, 2.2)}) {
    const Matrix3 prod = dual_params(p).matrix() * p.matrix();
    EXPECT_LT((prod - Matrix3::Identity()).cwiseAbs().maxCoeff(), 1e-13);
    const Matrix3 inv = p.matrix().inverse();
    EXPECT_LT((dual_params(p).matrix() - inv).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(DualParams, DegenerateDual) {
  // tan(theta) = alpha / beta
  EXPECT_THROW(dual_params(EuclidParams2(kPi / 4, 1, 1)), DegenerateParameterError);
  EXPECT_THROW(dual_params(EuclidParams2(std::atan2(1.0, 2.0), 1, 2)), DegenerateParameterError);
}

TEST(TildeWeightAmp, Examples) {
  const EuclidParams2 p(0, 1, 1);
  EXPECT_NEAR(tilde_weight_amp(p, 0, 0), std::exp(-1.0), 1e-16);
  EXPECT_NEAR(tilde_weight_amp(p, 1, 0), -std::exp(-1.0), 1e-16);
}

TEST(TildeWeightAmp, MatchesWeightOfDual) {
  const EuclidParams2 p(0.7, 1.2, 0.5);
  const EuclidParams2 d = dual_params(p);
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 5; ++k) EXPECT_NEAR(tilde_weight_amp(p, i, k), weight_amp(d, i, k), 1e-14);
}

TEST(AffineMap, Shifts) {
  const EuclidParams2 p(0.3, 1.1, 0.6);
  const AffineMap2 m = affine_map(p);
  const DerivedParams2 d = derive(p);
  EXPECT_NEAR(m.a_shift, -std::sqrt(2.0) * d.omega, 1e-15);
  EXPECT_NEAR(m.b_shift, -std::sqrt(2.0) * d.zeta, 1e-15);
  const auto origin = m.apply(0, 0);
  EXPECT_NEAR(origin[0], m.a_shift, 1e-15);
  EXPECT_NEAR(origin[1], m.b_shift, 1e-15);
  const auto unit = m.apply(1, 0);
  EXPECT_NEAR(unit[0] - origin[0], std::cos(0.3), 1e-15);
  EXPECT_NEAR(unit[1] - origin[1], std::sin(0.3), 1e-15);
}

TEST(EuclidParamsD, Validation) {
  EXPECT_THROW(EuclidParamsD(Matrix::Identity(3, 3), Vector::Ones(2)), DomainError);
  Matrix skew = Matrix::Identity(2, 2);
  skew(0, 1) = 0.1;
  EXPECT_THROW(EuclidParamsD(skew, Vector::Ones(2)), DomainError);
  Vector a = Vector::Ones(2);
  a[1] = 0;
  EXPECT_THROW(EuclidParamsD(Matrix::Identity(2, 2), a), DegenerateParameterError);
  EXPECT_THROW(EuclidParamsD(Matrix::Identity(5, 5), Vector::Ones(5)), DomainError);
}

TEST(EuclidParamsD, EmbedUsesRotationBlock) {
  const EuclidParams2 p(0.9, 1.3, 0.4);
  const EuclidParamsD e = embed(p);
  EXPECT_LT((e.rotation() - p.matrix().topLeftCorner(2, 2)).cwiseAbs().maxCoeff(), 1e-16);
  EXPECT_EQ(e.alphas()[0], 1.3);
  EXPECT_EQ(e.alphas()[1], 0.4);
}

TEST(Json, RoundTrip) {
  const EuclidParams2 p(0.9, 1.3, 0.4);
  nlohmann::json j;
  to_json(j, p);
  const EuclidParams2 q = euclid_params2_from_json(j);
  EXPECT_NEAR(q.theta(), p.theta(), 1e-15);
  EXPECT_NEAR(q.alpha(), p.alpha(), 1e-15);
  EXPECT_NEAR(q.beta(), p.beta(), 1e-15);

  nlohmann::json jd;
  to_json(jd, embed(p));
  const EuclidParamsD e = euclid_params_d_from_json(jd);
  EXPECT_LT((e.rotation() - embed(p).rotation()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(euclid_params_d_from_json(nlohmann::json{{"R", {{1, 0}, {0, 1}}}, {"alphas", {1}}}),
               DomainError);
}
