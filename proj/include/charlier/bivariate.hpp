#pragma once

#include <vector>

#include "charlier/euclid_params.hpp"
#include "charlier/report.hpp"
#include "charlier/series.hpp"

namespace charlier {

/// Raising order used to fill a RaisingTable.
enum class RaisingOrder {
  MFirst,  // C_{m,0} from C_{m-1,0}, then raise n at fixed m
  NFirst,  // C_{0,n} from C_{0,n-1}, then raise m at fixed n
};

/// All C_{m,n}(i - a, k - b) with m + n + a + b <= max_degree, built from
/// C_{0,0} = 1 by the two raising relations
///   sqrt(m+1) C_{m+1,n}(i,k) = (i/alpha) cos C_{m,n}(i-1,k) - (k/beta) sin C_{m,n}(i,k-1)
///                              + (beta sin - alpha cos) C_{m,n}(i,k)
///   sqrt(n+1) C_{m,n+1}(i,k) = (i/alpha) sin C_{m,n}(i-1,k) + (k/beta) cos C_{m,n}(i,k-1)
///                              - (alpha sin + beta cos) C_{m,n}(i,k).
/// The point (i, k) may be any real pair; the result is the polynomial value.
class RaisingTable {
 public:
  RaisingTable(const EuclidParams2& params, int max_degree, Real i, Real k,
               RaisingOrder order = RaisingOrder::MFirst);

  int max_degree() const { return max_degree_; }
  /// C_{m,n}(i, k); zero when m or n is negative.
  Real value(int m, int n) const { return shifted(m, n, 0, 0); }
  /// C_{m,n}(i - a, k - b).
  Real shifted(int m, int n, int a, int b) const;
  /// Running sum of absolute contributions to value(m, n).
  Real magnitude(int m, int n) const;

 private:
  std::size_t slot(int m, int n, int a, int b) const;

  int max_degree_;
  std::vector<Real> values_;
  std::vector<Real> magnitudes_;
};

/// Reference evaluator: C_{m,n}(i,k) by the raising relations.
Real eval_raising(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt);
/// Same, at an arbitrary real point (polynomial extension).
Real eval_raising_at(const EuclidParams2& params, MultiIndex2 deg, Real i, Real k,
                     RaisingOrder order = RaisingOrder::MFirst);

/// Left-hand side of the generating function
///   e^{-x omega} e^{-y zeta} [1 + (x/alpha) cos + (y/alpha) sin]^i [1 - (x/beta) sin + (y/beta) cos]^k
/// expanded to total degree max_degree.
SeriesPoly genfun_series(const EuclidParams2& params, Real i, Real k, int max_degree);

/// C_{m,n}(i,k) = sqrt(m! n!) [x^m y^n] of genfun_series.
Real eval_genfun(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt);

/// S_{m,n}(i,k) by the terminating quadruple hypergeometric sum over
/// rho + mu <= m, sigma + nu <= n, rho + sigma <= i, mu + nu <= k.
/// Throws DegenerateParameterError if any u coefficient is undefined.
Real eval_monic_s(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt);

/// C_{m,n}(i,k) = (-1)^{m+n} omega^m zeta^n S_{m,n}(i,k) / sqrt(m! n!).
Real eval_hypergeometric(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt);

/// Threshold on |sin cos| below which the Charlier-Krawtchouk expansion is refused.
inline constexpr Real kDecompositionThreshold = 1e-10;

/// C_{m,n}(i,k) through univariate Charlier and Krawtchouk values:
///   (-1)^{m+n} alpha^{m+n} cos^m sin^n / sqrt(m! n!)
///   * sum_v binom(m+n, v) (-beta sin / (alpha cos))^v C_v(k; beta^2) C_{m+n-v}(i; alpha^2)
///                                                    K_n(v; sin^2, m+n)
Real eval_decomposition(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt);

/// Dispatches to one evaluator and attaches a rounding estimate.
EvalReport evaluate(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt,
                    Algorithm algorithm);

/// Checks whether an algorithm's preconditions hold without evaluating.
/// Returns an empty string when usable, otherwise the refusal message.
std::string algorithm_precondition(const EuclidParams2& params, Algorithm algorithm);

}  // namespace charlier
