#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "charlier/bivariate.hpp"
#include "charlier/identities.hpp"
#include "charlier/univariate.hpp"

using namespace charlier;

namespace {
constexpr Real kPi = std::numbers::pi_v<Real>;
}

TEST(Identities, GroundStateInstances) {
  const EuclidParams2 p(0.7, 1.2, 0.8);
  ReferenceValues c(p, 4);
  for (int i = 0; i <= 5; ++i) {
    for (int k = 0; k <= 5; ++k) {
      EXPECT_LT(identity_residual(recurrence_i_terms(p, c, 0, 0, i, k)), 1e-12);
      EXPECT_LT(identity_residual(recurrence_k_terms(p, c, 0, 0, i, k)), 1e-12);
      EXPECT_LT(identity_residual(difference_m_terms(p, c, 0, 0, i, k)), 1e-12);
      EXPECT_LT(identity_residual(difference_n_terms(p, c, 0, 0, i, k)), 1e-12);
      EXPECT_LT(identity_residual(lowering_m_terms(p, c, 0, 0, i, k)), 1e-15);
      EXPECT_LT(identity_residual(lowering_n_terms(p, c, 0, 0, i, k)), 1e-15);
    }
  }
}

TEST(Identities, GroundStateRecurrenceByHand) {
  const EuclidParams2 p(0.7, 1.2, 0.8);
  const Real c = std::cos(p.theta());
  const Real s = std::sin(p.theta());
  for (int i = 0; i <= 4; ++i) {
    for (int k = 0; k <= 4; ++k) {
      const Real rhs = p.alpha() * p.alpha() + p.alpha() * c * eval_raising(p, {1, 0}, {i, k}) +
                       p.alpha() * s * eval_raising(p, {0, 1}, {i, k});
      EXPECT_NEAR(rhs, i, 1e-12);
    }
  }
}

TEST(Identities, Recurrence) {
  for (const auto& p : {EuclidParams2(kPi / 6, 1, 1), EuclidParams2(1.1, 0.8, 1.7)}) {
    const VerifyReport r = verify_recurrence(p, 5, 12);
    EXPECT_TRUE(r.pass) << r.max_residual << " at " << r.worst_location;
    EXPECT_LT(r.max_residual, 1e-9);
  }
}

TEST(Identities, Difference) {
  for (const auto& p : {EuclidParams2(kPi / 6, 1, 1), EuclidParams2(0.3, 1.4, 0.6)}) {
    const VerifyReport r = verify_difference(p, 4, 10);
    EXPECT_TRUE(r.pass) << r.max_residual << " at " << r.worst_location;
  }
}

TEST(Identities, Lowering) {
  for (const auto& p : {EuclidParams2(kPi / 6, 1, 1), EuclidParams2(1.1, 0.8, 1.7)}) {
    const VerifyReport r = verify_lowering(p, 5, 12);
    EXPECT_TRUE(r.pass) << r.max_residual << " at " << r.worst_location;
  }
}

TEST(Identities, SignFlipIsLocalized) {
  const EuclidParams2 p(0.5, 1.1, 0.9);
  ReferenceValues c(p, 6);
  auto terms = recurrence_i_terms(p, c, 2, 1, 3, 4);
  ASSERT_LT(identity_residual(terms), 1e-12);
  ASSERT_GE(terms.size(), 3u);
  // Pick a term that actually contributes.
  std::size_t victim = 0;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (std::abs(terms[t].coefficient * terms[t].value) > 0.1) {
      victim = t;
      break;
    }
  }
  terms[victim].coefficient = -terms[victim].coefficient;
  EXPECT_GT(identity_residual(terms), 1e-3);
  const auto suspects = localize_sign_error(terms, 1e-10);
  ASSERT_EQ(suspects.size(), 1u);
  EXPECT_EQ(suspects.front(), terms[victim].label);
}

TEST(Identities, NoSuspectsWhenIdentityHolds) {
  const EuclidParams2 p(0.5, 1.1, 0.9);
  ReferenceValues c(p, 6);
  EXPECT_TRUE(localize_sign_error(lowering_m_terms(p, c, 2, 2, 3, 1), 1e-10).empty());
}

TEST(Orthogonality, Examples) {
  const VerifyReport r0 = verify_orthogonality(EuclidParams2(0.2, 1, 1), 0, 60, 1e-12);
  EXPECT_TRUE(r0.pass) << r0.max_residual;
  for (const auto& p : {EuclidParams2(kPi / 6, 1, 1), EuclidParams2(kPi / 4, 0.5, 1.5)}) {
    const VerifyReport r = verify_orthogonality(p, 4, 60);
    EXPECT_LT(r.max_residual, 1e-8) << r.worst_location;
    EXPECT_LT(r.tail_bound, 1e-8);
  }
}

TEST(Orthogonality, UnderTruncationIsReported) {
  const VerifyReport r = verify_orthogonality(EuclidParams2(kPi / 6, 1, 1), 4, 5);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.tail_bound, r.tolerance);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.front().find("truncation"), std::string::npos);
}

TEST(Duality, Examples) {
  const EuclidParams2 p(kPi / 6, 1, 1);
  EXPECT_NEAR(eval_raising(p, {0, 0}, {0, 0}), 1, 1e-15);
  EXPECT_TRUE(verify_duality(p, 4).pass);
  const VerifyReport s = verify_duality(EuclidParams2(0.4, 0.9, 1.6), 3);
  EXPECT_TRUE(s.pass) << s.max_residual;
  EXPECT_LT(s.max_residual, 1e-10);
}

TEST(Duality, Involution) {
  const EuclidParams2 p(1.1, 0.8, 1.7);
  const EuclidParams2 d = dual_params(p);
  const EuclidParams2 back = dual_params(d);
  EXPECT_NEAR(back.theta(), p.theta(), 1e-15);
  EXPECT_NEAR(back.alpha(), p.alpha(), 1e-14);
  EXPECT_NEAR(back.beta(), p.beta(), 1e-14);
  EXPECT_TRUE(verify_duality(d, 4).pass);
  for (int m = 0; m <= 3; ++m)
    for (int i = 0; i <= 3; ++i)
      EXPECT_LT(mixed_error(eval_raising(back, {m, 1}, {i, 2}), eval_raising(p, {m, 1}, {i, 2})),
                1e-10);
}

TEST(Duality, DegenerateDualThrows) {
  EXPECT_THROW(verify_duality(EuclidParams2(kPi / 4, 1, 1), 3), DegenerateParameterError);
}

TEST(Integral, Examples) {
  EXPECT_NEAR(integral_representation(EuclidParams2(0.8, 1.2, 0.7), {0, 0}, {0, 0}, 40), 1,
              1e-10);
  const EuclidParams2 p(kPi / 6, 0.5, 0.5);
  EXPECT_NEAR(integral_representation(p, {1, 1}, {2, 1}, 40), eval_raising(p, {1, 1}, {2, 1}),
              1e-8);
  const Real expect = 1 / std::sqrt(2.0) * charlier::charlier(2, 3, CharlierParam(1));
  EXPECT_NEAR(integral_representation(EuclidParams2(0, 1, 1), {2, 0}, {3, 0}, 40), expect, 1e-8);
}

TEST(Integral, VerifyOverSmallGrid) {
  const EuclidParams2 p(1.1, 0.8, 1.7);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      const VerifyReport r = verify_integral(p, {m, n}, {3 - n, m}, 40);
      EXPECT_TRUE(r.pass) << r.max_residual;
    }
}

TEST(Integral, Errors) {
  const EuclidParams2 p(0.3, 1, 1);
  EXPECT_THROW(integral_representation(p, {3, 3}, {3, 3}, 2), DomainError);
  EXPECT_THROW(integral_representation(EuclidParams2(0.3, 0.01, 0.01), {0, 0}, {150, 0}, 200),
               DomainError);
}
