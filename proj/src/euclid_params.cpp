#include "charlier/euclid_params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "charlier/combinatorics.hpp"

namespace charlier {

EuclidParams2::EuclidParams2(Real theta, Real alpha, Real beta)
    : theta_(theta), alpha_(alpha), beta_(beta) {
  if (!std::isfinite(theta) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("Euclidean parameters must be finite");
  }
  if (alpha == 0) throw DegenerateParameterError("alpha must be nonzero (divides C_{m,n})");
  if (beta == 0) throw DegenerateParameterError("beta must be nonzero (divides C_{m,n})");
}

Matrix3 EuclidParams2::matrix() const {
  const Real c = std::cos(theta_);
  const Real s = std::sin(theta_);
  const Real r2 = std::sqrt(Real{2});
  Matrix3 t;
  t << c, s, alpha_ / r2,
      -s, c, beta_ / r2,
      0, 0, 1;
  return t;
}

DerivedParams2 derive(const EuclidParams2& p, Real degeneracy_factor) {
  const Real a = p.alpha();
  const Real b = p.beta();
  const Real c = std::cos(p.theta());
  const Real s = std::sin(p.theta());

  DerivedParams2 d;
  d.omega = a * c - b * s;
  d.zeta = a * s + b * c;
  d.theta_t = -p.theta();
  d.alpha_t = b * s - a * c;
  d.beta_t = -(a * s + b * c);
  d.threshold = degeneracy_factor * p.norm2();

  const auto guarded = [&](Real numerator, Real denominator) -> std::optional<Real> {
    if (std::abs(denominator) <= d.threshold) return std::nullopt;
    return numerator / denominator;
  };
  d.u11 = guarded(-c, a * a * c - a * b * s);
  d.u12 = guarded(-s, a * a * s + a * b * c);
  d.u21 = guarded(-s, b * b * s - a * b * c);
  d.u22 = guarded(-c, b * b * c + a * b * s);
  return d;
}

namespace {

// e^{-norm/2} x^i y^k / sqrt(i! k!) as a running product, so neither the
// powers nor the factorials overflow.
Real amplitude(Real norm2, Real x, Real y, int i, int k) {
  if (i < 0 || k < 0) throw DomainError("weight index must be non-negative");
  Real w = std::exp(-norm2 / 2);
  for (int j = 1; j <= i; ++j) w *= x / std::sqrt(static_cast<Real>(j));
  for (int j = 1; j <= k; ++j) w *= y / std::sqrt(static_cast<Real>(j));
  return w;
}

}  // namespace

Real weight_amp(const EuclidParams2& p, int i, int k) {
  return amplitude(p.norm2(), p.alpha(), p.beta(), i, k);
}

EuclidParams2 dual_params(const EuclidParams2& p, Real degeneracy_factor) {
  const DerivedParams2 d = derive(p, degeneracy_factor);
  const Real scale = std::sqrt(p.norm2());
  if (std::abs(d.alpha_t) <= degeneracy_factor * scale) {
    throw DegenerateParameterError(
        "degenerate dual: alpha~ = beta sin(theta) - alpha cos(theta) vanishes (tan(theta) = "
        "alpha/beta)");
  }
  if (std::abs(d.beta_t) <= degeneracy_factor * scale) {
    throw DegenerateParameterError(
        "degenerate dual: beta~ = -(alpha sin(theta) + beta cos(theta)) vanishes");
  }
  return EuclidParams2(d.theta_t, d.alpha_t, d.beta_t);
}

Real tilde_weight_amp(const EuclidParams2& p, int i, int k) {
  const Real c = std::cos(p.theta());
  const Real s = std::sin(p.theta());
  return amplitude(p.norm2(), p.beta() * s - p.alpha() * c, -p.alpha() * s - p.beta() * c, i, k);
}

std::array<Real, 2> AffineMap2::apply(Real x1, Real x2) const {
  const Real c = std::cos(theta);
  const Real s = std::sin(theta);
  return {c * x1 - s * x2 + a_shift, s * x1 + c * x2 + b_shift};
}

AffineMap2 affine_map(const EuclidParams2& p) {
  const DerivedParams2 d = derive(p);
  const Real r2 = std::sqrt(Real{2});
  return AffineMap2{-r2 * d.omega, -r2 * d.zeta, p.theta()};
}

EuclidParamsD::EuclidParamsD(Matrix rotation, Vector alphas)
    : rotation_(std::move(rotation)), alphas_(std::move(alphas)) {
  const auto d = alphas_.size();
  if (d < 1) throw DomainError("dimension must be at least 1");
  if (d > kMaxDimension) {
    throw DomainError("dimension " + std::to_string(d) + " exceeds the configured maximum " +
                      std::to_string(kMaxDimension));
  }
  if (rotation_.rows() != d || rotation_.cols() != d) {
    throw DomainError("R must be " + std::to_string(d) + "x" + std::to_string(d) + ", got " +
                      std::to_string(rotation_.rows()) + "x" + std::to_string(rotation_.cols()));
  }
  const Real defect =
      (rotation_ * rotation_.transpose() - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (!(defect < kOrthogonalityTolerance)) {
    throw DomainError("R is not orthogonal: max |R R^T - I| = " + std::to_string(defect));
  }
  for (Eigen::Index k = 0; k < d; ++k) {
    if (alphas_[k] == 0) {
      throw DegenerateParameterError("alphas[" + std::to_string(k) + "] must be nonzero");
    }
  }
}

EuclidParamsD embed(const EuclidParams2& p) {
  const Real c = std::cos(p.theta());
  const Real s = std::sin(p.theta());
  Matrix r(2, 2);
  r << c, s, -s, c;
  Vector a(2);
  a << p.alpha(), p.beta();
  return EuclidParamsD(r, a);
}

void to_json(nlohmann::json& j, const EuclidParams2& p) {
  j = nlohmann::json{{"theta", p.theta()}, {"alpha", p.alpha()}, {"beta", p.beta()}};
}

EuclidParams2 euclid_params2_from_json(const nlohmann::json& j) {
  return EuclidParams2(j.at("theta").get<Real>(), j.at("alpha").get<Real>(),
                       j.at("beta").get<Real>());
}

void to_json(nlohmann::json& j, const EuclidParamsD& p) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < p.rotation().rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < p.rotation().cols(); ++c) row.push_back(p.rotation()(r, c));
    rows.push_back(row);
  }
  nlohmann::json alphas = nlohmann::json::array();
  for (Eigen::Index k = 0; k < p.alphas().size(); ++k) alphas.push_back(p.alphas()[k]);
  j = nlohmann::json{{"R", rows}, {"alphas", alphas}};
}

EuclidParamsD euclid_params_d_from_json(const nlohmann::json& j) {
  const auto& rows = j.at("R");
  const auto& alphas = j.at("alphas");
  if (!rows.is_array() || !alphas.is_array()) throw DomainError("R and alphas must be arrays");
  const auto d = static_cast<Eigen::Index>(alphas.size());
  if (static_cast<Eigen::Index>(rows.size()) != d) {
    throw DomainError("R has " + std::to_string(rows.size()) + " rows but alphas has " +
                      std::to_string(d) + " entries");
  }
  Matrix r(d, d);
  Vector a(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != d) throw DomainError("R must be square");
    for (Eigen::Index c = 0; c < d; ++c) r(i, c) = row.at(static_cast<std::size_t>(c)).get<Real>();
    a[i] = alphas.at(static_cast<std::size_t>(i)).get<Real>();
  }
  return EuclidParamsD(r, a);
}

}  // namespace charlier
