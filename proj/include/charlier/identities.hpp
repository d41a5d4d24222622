#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "charlier/bivariate.hpp"
#include "charlier/report.hpp"

namespace charlier {

/// One summand coefficient * value of an identity written as sum(terms) = 0.
struct IdentityTerm {
  std::string label;
  Real coefficient = 0;
  Real value = 0;
};

Real identity_residual(const std::vector<IdentityTerm>& terms);

/// When sum(terms) = 0 fails by more than tolerance, returns the labels of
/// the terms whose sign flip alone brings the residual within tolerance.
std::vector<std::string> localize_sign_error(const std::vector<IdentityTerm>& terms,
                                             Real tolerance);

/// C_{m,n}(x, y) at integer x, y >= -1 from the raising evaluator, memoised
/// per point. Points below zero use the polynomial extension.
class ReferenceValues {
 public:
  ReferenceValues(const EuclidParams2& params, int max_degree);

  Real operator()(int m, int n, int x, int y);

 private:
  EuclidParams2 params_;
  int max_degree_;
  std::map<std::pair<int, int>, RaisingTable> tables_;
};

// Term lists for the structural identities at a single (m, n, i, k).
// Each list sums to zero when the identity holds.
std::vector<IdentityTerm> recurrence_i_terms(const EuclidParams2& p, ReferenceValues& c, int m,
                                             int n, int i, int k);
std::vector<IdentityTerm> recurrence_k_terms(const EuclidParams2& p, ReferenceValues& c, int m,
                                             int n, int i, int k);
std::vector<IdentityTerm> difference_m_terms(const EuclidParams2& p, ReferenceValues& c, int m,
                                             int n, int i, int k);
std::vector<IdentityTerm> difference_n_terms(const EuclidParams2& p, ReferenceValues& c, int m,
                                             int n, int i, int k);
std::vector<IdentityTerm> lowering_m_terms(const EuclidParams2& p, ReferenceValues& c, int m,
                                           int n, int i, int k);
std::vector<IdentityTerm> lowering_n_terms(const EuclidParams2& p, ReferenceValues& c, int m,
                                           int n, int i, int k);

/// Gram matrix residuals sum_{i,k<=cutoff} w_{i,k} C_p C_q - delta_{pq} over
/// all degrees with m + n <= degmax. tail_bound is the Poisson mass beyond
/// the cutoff times the largest |C_p C_q| on the boundary shell.
VerifyReport verify_orthogonality(const EuclidParams2& params, int degmax, int cutoff,
                                  Real tolerance = 1e-8);

/// Both three-term-in-degree recurrences on m + n <= degmax, i, k <= ptmax.
VerifyReport verify_recurrence(const EuclidParams2& params, int degmax, int ptmax,
                               Real tolerance = 1e-9);

/// Both difference equations on the same grid.
VerifyReport verify_difference(const EuclidParams2& params, int degmax, int ptmax,
                               Real tolerance = 1e-9);

/// Both lowering relations on the same grid.
VerifyReport verify_lowering(const EuclidParams2& params, int degmax, int ptmax,
                             Real tolerance = 1e-10);

/// C_{i,k}(m,n) = sqrt(m!n!/(i!k!)) alpha_t^i beta_t^k / (alpha^m beta^n) C~_{m,n}(i,k)
/// for m + n, i + k <= degmax, and S_{i,k}(m,n) = S~_{m,n}(i,k) when both
/// parameter sets admit the hypergeometric form. Residuals use mixed_error.
/// Throws DegenerateParameterError when the dual parameters vanish.
VerifyReport verify_duality(const EuclidParams2& params, int degmax, Real tolerance = 1e-10);

/// Smallest |W_{i,k}| accepted by the integral representation.
inline constexpr Real kIntegralUnderflow = 1e-280;

/// C_{m,n}(i,k) from the double integral of Psi_i(x1) Psi_k(x2) Psi_m(x~1) Psi_n(x~2)
/// divided by W_{i,k}, by tensor Gauss-Hermite quadrature in the frame
/// centred between the two Gaussians.
Real integral_representation(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt,
                             int nodes);

/// integral_representation compared with eval_raising (absolute residual).
VerifyReport verify_integral(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt,
                             int nodes, Real tolerance = 1e-8);

}  // namespace charlier
