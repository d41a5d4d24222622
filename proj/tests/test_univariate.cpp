#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "charlier/quadrature.hpp"
#include "charlier/univariate.hpp"

using namespace charlier;

TEST(Charlier, Examples) {
  EXPECT_EQ(charlier::charlier(0, 7, CharlierParam(1)), 1);
  EXPECT_NEAR(charlier::charlier(1, 2, CharlierParam(1)), -1, 1e-15);
  EXPECT_NEAR(charlier::charlier(2, 0, CharlierParam(2)), 1, 1e-15);
}

TEST(Charlier, RejectsNonPositiveParameter) {
  EXPECT_THROW(CharlierParam(0), DomainError);
  EXPECT_THROW(CharlierParam(-1), DomainError);
}

TEST(Charlier, ThreeTermRecurrence) {
  for (Real a : {0.5, 1.0, 4.0}) {
    const CharlierParam ap(a);
    for (int x = 0; x <= 20; ++x) {
      for (int n = 1; n < 20; ++n) {
        const Real up = a * charlier::charlier(n + 1, x, ap);
        const Real mid = (n + a - x) * charlier::charlier(n, x, ap);
        const Real down = n * charlier::charlier(n - 1, x, ap);
        // Residual relative to the size of the terms being cancelled.
        const Real scale = std::max<Real>(1, std::abs(up) + std::abs(mid) + std::abs(down));
        ASSERT_LT(std::abs(up - mid + down) / scale, 1e-11) << "a=" << a << " x=" << x << " n=" << n;
      }
    }
  }
}

TEST(Charlier, SeriesMatchesRecurrence) {
  const CharlierParam ap(1.5);
  // Forward recurrence error grows roughly like n!/a^n at small x, so the
  // comparison stops at degree 16.
  for (int n = 0; n <= 16; ++n) {
    for (int x = 0; x <= 10; ++x) {
      const Real s = charlier::charlier(n, x, ap);
      const Real r = charlier_recurrence(n, x, ap);
      ASSERT_LT(std::abs(s - r) / std::max<Real>(1, std::abs(s)), 1e-9) << n << "," << x;
    }
  }
}

TEST(Charlier, SelfDuality) {
  for (Real a : {0.5, 1.0, 4.0}) {
    for (int n = 0; n <= 15; ++n) {
      for (int x = 0; x <= 15; ++x) {
        const Real u = charlier::charlier(n, x, CharlierParam(a));
        const Real v = charlier::charlier(x, n, CharlierParam(a));
        ASSERT_LT(std::abs(u - v) / std::max<Real>(1, std::abs(u)), 1e-11);
      }
    }
  }
}

TEST(Charlier, Orthogonality) {
  const VerifyReport r0 = charlier_orthocheck(0, CharlierParam(1), 60, 1e-12);
  EXPECT_TRUE(r0.pass) << r0.max_residual;
  EXPECT_LT(charlier_orthocheck(3, CharlierParam(1), 80).max_residual, 1e-10);
  EXPECT_LT(charlier_orthocheck(3, CharlierParam(4), 120).max_residual, 1e-10);
}

TEST(Charlier, UnderTruncatedOrthogonalityFails) {
  const VerifyReport r = charlier_orthocheck(3, CharlierParam(4), 3);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.tail_bound, r.tolerance);
}

TEST(Krawtchouk, Examples) {
  EXPECT_EQ(krawtchouk(0, 3, KrawtchoukParam(0.5, 5)), 1);
  EXPECT_NEAR(krawtchouk(1, 1, KrawtchoukParam(0.5, 2)), 0, 1e-15);
  // 2F1(-2,-2;-2;2) = 1 - 4 + 4; also K_2(2) = K_2(0) by the p = 1/2 symmetry.
  EXPECT_NEAR(krawtchouk(2, 2, KrawtchoukParam(0.5, 2)), 1, 1e-14);
  EXPECT_NEAR(krawtchouk(2, 1, KrawtchoukParam(0.5, 2)), -1, 1e-14);
}

TEST(Krawtchouk, Errors) {
  EXPECT_THROW(KrawtchoukParam(0, 3), DomainError);
  EXPECT_THROW(KrawtchoukParam(1, 3), DomainError);
  EXPECT_THROW(krawtchouk(4, 1, KrawtchoukParam(0.5, 3)), DomainError);
}

TEST(Hermite, Examples) {
  EXPECT_NEAR(hermite_wavefunction(0, 0), std::pow(std::numbers::pi, -0.25), 1e-15);
  EXPECT_NEAR(hermite_wavefunction(0, 0), 0.7511255, 1e-7);
  EXPECT_EQ(hermite_wavefunction(1, 0), 0);
  const Real explicit_psi2 =
      (4 - 2) * std::exp(-0.5) / std::sqrt(4 * 2 * std::sqrt(std::numbers::pi));
  EXPECT_NEAR(hermite_wavefunction(2, 1), explicit_psi2, 1e-12);
}

TEST(Hermite, OrthonormalUnderGaussHermite) {
  const int nmax = 10;
  const GaussHermiteRule rule = gauss_hermite(2 * nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    for (int m = 0; m <= nmax; ++m) {
      Real s = 0;
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const Real x = rule.nodes[j];
        s += rule.weights[j] * hermite_function_poly(n, x) * hermite_function_poly(m, x);
      }
      ASSERT_NEAR(s, n == m ? 1 : 0, 1e-10) << n << "," << m;
    }
  }
}

TEST(GaussHermite, IntegratesMonomials) {
  const GaussHermiteRule rule = gauss_hermite(10);
  Real w = 0;
  Real x2 = 0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    w += rule.weights[j];
    x2 += rule.weights[j] * rule.nodes[j] * rule.nodes[j];
  }
  EXPECT_NEAR(w, std::sqrt(std::numbers::pi), 1e-13);
  EXPECT_NEAR(x2, std::sqrt(std::numbers::pi) / 2, 1e-13);
}

TEST(Poisson, MassAndTail) {
  EXPECT_NEAR(poisson_mass(2, 0), std::exp(-2.0), 1e-16);
  EXPECT_NEAR(poisson_mass(2, 3), std::exp(-2.0) * 8 / 6, 1e-15);
  Real head = 0;
  for (int x = 0; x <= 5; ++x) head += poisson_mass(3, x);
  EXPECT_NEAR(head + poisson_upper_tail(3, 5), 1, 1e-14);
}
