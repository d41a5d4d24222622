#pragma once

#include <string>
#include <vector>

#include "charlier/euclid_params.hpp"
#include "charlier/report.hpp"
#include "charlier/series.hpp"

namespace charlier {

/// 3x3 rotation: R R^T = I and det R = 1, both to 1e-12.
class Rotation3 {
 public:
  explicit Rotation3(const Matrix3& r);
  const Matrix3& matrix() const { return r_; }
  Real operator()(int row, int col) const { return r_(row, col); }

 private:
  Matrix3 r_;
};

/// Rotation R and size N of a bivariate Krawtchouk family. R13, R23, R33
/// must be nonzero.
class KrawtchoukParams2 {
 public:
  KrawtchoukParams2(Rotation3 r, int size);
  const Rotation3& rotation() const { return r_; }
  int size() const { return size_; }

 private:
  Rotation3 r_;
  int size_;
};

/// R = r_x2(delta) r_x1(gamma) r_x3(theta) with
///   r_x2(d) = [[cos d, 0, sin d], [0, 1, 0], [-sin d, 0, cos d]]
///   r_x1(g) = [[1, 0, 0], [0, cos g, sin g], [0, -sin g, cos g]]
///   r_x3(t) = [[cos t, sin t, 0], [-sin t, cos t, 0], [0, 0, 1]].
Rotation3 rotation_zxz(Real delta, Real gamma, Real theta);

/// Product of the three factors (1 + (R_j1/R_j3) u + (R_j2/R_j3) v) raised to
/// i, k and N - i - k, expanded to total degree max_degree.
SeriesPoly krawtchouk2_series(const KrawtchoukParams2& params, MultiIndex2 pt, int max_degree);

/// P_{m,n}(i,k;N) = [u^m v^n] G(u,v) / sqrt(N!/(m! n! (N-m-n)!)).
/// Throws DomainError when degree or point leaves the simplex.
Real krawtchouk2(const KrawtchoukParams2& params, MultiIndex2 deg, MultiIndex2 pt);

/// Simplex weight binom(N; i, k) R13^{2i} R23^{2k} R33^{2(N-i-k)}.
Real krawtchouk2_weight(const KrawtchoukParams2& params, MultiIndex2 pt);

/// Gram residuals of P_{m,n}(.,.;N) against the simplex weight, all
/// degrees m + n <= N.
VerifyReport verify_krawtchouk2_orthogonality(const KrawtchoukParams2& params,
                                              Real tolerance = 1e-10);

/// One row of the contraction table.
struct LimitRow {
  int size = 0;
  Real krawtchouk = 0;
  Real error = 0;      // |P - C| against the Gen-1 limit
  Real alt_error = 0;  // |P - C'| against the alternative exponent sign
};

/// Outcome of the N -> infinity study. pass requires strictly decreasing
/// errors and a terminal error below terminal_fraction * |C|.
struct LimitReport {
  VerifyReport verify;
  Real charlier = 0;      // C_{m,n}(i,k) from the Gen-1 generating function
  Real alt_charlier = 0;  // coefficient under e^{-y(alpha sin - beta cos)}
  std::vector<LimitRow> rows;
  bool decreasing = false;
  bool alt_decreasing = false;
  Real terminal_fraction = 0.05;
  Real terminal_relative_error = 0;
  bool terminal_ok = false;
  /// "gen-1", "first", "both" or "none": which exponent sign the Krawtchouk
  /// values approach (errors strictly decreasing and the last error below
  /// one tenth of the first, or all errors zero).
  std::string converged_convention;
};

/// For each N, R = rotation_zxz(alpha/sqrt(N), beta/sqrt(N), theta) and
/// P_{m,n}(i,k;N) is compared with C_{m,n}(i,k).
LimitReport limit_study(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt,
                        const std::vector<int>& sizes, Real terminal_fraction = 0.05);

/// C'_{m,n}(i,k): like eval_genfun but with exponent e^{-y(alpha sin - beta cos)}.
Real eval_alternative_sign(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt);

}  // namespace charlier
