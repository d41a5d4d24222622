#pragma once

#include <array>
#include <optional>

#include <Eigen/Dense>
#include "json.hpp"

#include "charlier/real.hpp"

namespace charlier {

using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using Matrix3 = Eigen::Matrix<Real, 3, 3>;

/// Element T(theta, alpha, beta) of E(2): rotation by theta followed by the
/// translation (alpha, beta)/sqrt(2). alpha and beta must be nonzero.
class EuclidParams2 {
 public:
  EuclidParams2(Real theta, Real alpha, Real beta);

  Real theta() const { return theta_; }
  Real alpha() const { return alpha_; }
  Real beta() const { return beta_; }

  /// alpha^2 + beta^2; the natural scale for degeneracy thresholds.
  Real norm2() const { return alpha_ * alpha_ + beta_ * beta_; }

  /// The 3x3 affine matrix
  ///   [ cos  sin  alpha/sqrt2 ]
  ///   [-sin  cos  beta/sqrt2  ]
  ///   [ 0    0    1           ]
  Matrix3 matrix() const;

 private:
  Real theta_;
  Real alpha_;
  Real beta_;
};

/// Relative factor applied to alpha^2 + beta^2 when deciding that a
/// denominator vanishes.
inline constexpr Real kDegeneracyFactor = 1e-10;

/// Quantities derived from (theta, alpha, beta).
///   omega = alpha cos - beta sin,  zeta = alpha sin + beta cos
///   (theta_t, alpha_t, beta_t)   = parameters of T^{-1}
///   u11..u22                     = coefficients of the S-normalised
///                                  generating function; empty when the
///                                  corresponding denominator vanishes.
struct DerivedParams2 {
  Real omega = 0;
  Real zeta = 0;
  Real theta_t = 0;
  Real alpha_t = 0;
  Real beta_t = 0;
  std::optional<Real> u11;
  std::optional<Real> u12;
  std::optional<Real> u21;
  std::optional<Real> u22;
  Real threshold = 0;

  bool u_complete() const { return u11 && u12 && u21 && u22; }
};

DerivedParams2 derive(const EuclidParams2& params, Real degeneracy_factor = kDegeneracyFactor);

/// W_{i,k} = e^{-(alpha^2+beta^2)/2} alpha^i beta^k / sqrt(i! k!).
/// Its square is the product of Poisson(alpha^2) and Poisson(beta^2) masses.
Real weight_amp(const EuclidParams2& params, int i, int k);

/// Parameters of the inverse element:
///   theta_t = -theta, alpha_t = beta sin - alpha cos, beta_t = -(alpha sin + beta cos).
/// Throws DegenerateParameterError when alpha_t or beta_t vanishes.
EuclidParams2 dual_params(const EuclidParams2& params,
                          Real degeneracy_factor = kDegeneracyFactor);

/// The amplitude of the inverse representation,
///   e^{-(alpha^2+beta^2)/2} (beta sin - alpha cos)^i (-alpha sin - beta cos)^k / sqrt(i! k!),
/// computed from the original parameters (no dual_params call, so it is
/// defined on the degenerate locus as well).
Real tilde_weight_amp(const EuclidParams2& params, int i, int k);

/// Affine change of coordinates x~ = Rot(theta) x + (A, B) with
///   A = -sqrt2 (alpha cos - beta sin), B = -sqrt2 (alpha sin + beta cos),
///   Rot(theta) = [[cos, -sin], [sin, cos]].
struct AffineMap2 {
  Real a_shift = 0;
  Real b_shift = 0;
  Real theta = 0;

  std::array<Real, 2> apply(Real x1, Real x2) const;
};

AffineMap2 affine_map(const EuclidParams2& params);

/// Element of E(d): orthogonal d x d matrix R and translation vector alphas.
class EuclidParamsD {
 public:
  EuclidParamsD(Matrix rotation, Vector alphas);

  int dim() const { return static_cast<int>(alphas_.size()); }
  const Matrix& rotation() const { return rotation_; }
  const Vector& alphas() const { return alphas_; }

 private:
  Matrix rotation_;
  Vector alphas_;
};

/// Largest dimension accepted by EuclidParamsD.
inline constexpr int kMaxDimension = 4;

/// Orthogonality tolerance on max |R R^T - I|.
inline constexpr Real kOrthogonalityTolerance = 1e-12;

/// The d = 2 element with R = [[cos, sin], [-sin, cos]] and alphas (alpha, beta);
/// this R is the rotation block of EuclidParams2::matrix().
EuclidParamsD embed(const EuclidParams2& params);

void to_json(nlohmann::json& j, const EuclidParams2& p);
EuclidParams2 euclid_params2_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const EuclidParamsD& p);
EuclidParamsD euclid_params_d_from_json(const nlohmann::json& j);

}  // namespace charlier
