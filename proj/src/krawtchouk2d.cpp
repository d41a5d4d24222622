#include "charlier/krawtchouk2d.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <string>

#include "charlier/bivariate.hpp"
#include "charlier/combinatorics.hpp"

namespace charlier {

namespace {
constexpr Real kRotationTolerance = 1e-12;
}

Rotation3::Rotation3(const Matrix3& r) : r_(r) {
  const Real defect = (r * r.transpose() - Matrix3::Identity()).cwiseAbs().maxCoeff();
  if (!(defect < kRotationTolerance)) {
    throw DomainError("matrix is not orthogonal: max |R R^T - I| = " + std::to_string(defect));
  }
  if (!(std::abs(r.determinant() - 1) < kRotationTolerance)) {
    throw DomainError("matrix is not a proper rotation: det R = " +
                      std::to_string(r.determinant()));
  }
}

KrawtchoukParams2::KrawtchoukParams2(Rotation3 r, int size) : r_(std::move(r)), size_(size) {
  if (size < 0) throw DomainError("Krawtchouk size N must be non-negative");
  const char* names[3] = {"R13", "R23", "R33"};
  for (int row = 0; row < 3; ++row) {
    if (r_(row, 2) == 0) {
      throw DegenerateParameterError(std::string(names[row]) +
                                     " vanishes; the generating function divides by it");
    }
  }
}

Rotation3 rotation_zxz(Real delta, Real gamma, Real theta) {
  const Real cd = std::cos(delta), sd = std::sin(delta);
  const Real cg = std::cos(gamma), sg = std::sin(gamma);
  const Real ct = std::cos(theta), st = std::sin(theta);
  Matrix3 r2, r1, r3;
  r2 << cd, 0, sd, 0, 1, 0, -sd, 0, cd;
  r1 << 1, 0, 0, 0, cg, sg, 0, -sg, cg;
  r3 << ct, st, 0, -st, ct, 0, 0, 0, 1;
  return Rotation3(r2 * r1 * r3);
}

namespace {

void check_simplex(int size, MultiIndex2 idx, const char* what) {
  if (idx.total() > size) {
    throw DomainError(std::string(what) + " (" + std::to_string(idx.first) + "," +
                      std::to_string(idx.second) + ") leaves the simplex of size N = " +
                      std::to_string(size));
  }
}

}  // namespace

SeriesPoly krawtchouk2_series(const KrawtchoukParams2& params, MultiIndex2 pt, int max_degree) {
  check_simplex(params.size(), pt, "point");
  auto basis = std::make_shared<const MonomialBasis>(2, max_degree);
  const auto& r = params.rotation();
  const std::array<int, 3> powers = {pt.first, pt.second, params.size() - pt.total()};
  SeriesPoly g = SeriesPoly::constant(basis, 1);
  for (int row = 0; row < 3; ++row) {
    const std::array<Real, 2> slopes = {r(row, 0) / r(row, 2), r(row, 1) / r(row, 2)};
    g *= SeriesPoly::linear(basis, 1, slopes).power(powers[row]);
  }
  return g;
}

Real krawtchouk2(const KrawtchoukParams2& params, MultiIndex2 deg, MultiIndex2 pt) {
  check_simplex(params.size(), deg, "degree");
  check_simplex(params.size(), pt, "point");
  const SeriesPoly g = krawtchouk2_series(params, pt, deg.total());
  const std::array<int, 2> e = {deg.first, deg.second};
  const Real trinomial = to_real<Real>(multinomial(params.size(), deg.first, deg.second));
  return g.coefficient(e) / std::sqrt(trinomial);
}

Real krawtchouk2_weight(const KrawtchoukParams2& params, MultiIndex2 pt) {
  check_simplex(params.size(), pt, "point");
  const auto& r = params.rotation();
  const int rest = params.size() - pt.total();
  // Logarithms keep binom(N; i, k) and the small powers in range for large N.
  const Real log_w = log_factorial(params.size()) - log_factorial(pt.first) -
                     log_factorial(pt.second) - log_factorial(rest) +
                     2 * pt.first * std::log(std::abs(r(0, 2))) +
                     2 * pt.second * std::log(std::abs(r(1, 2))) +
                     2 * rest * std::log(std::abs(r(2, 2)));
  return std::exp(log_w);
}

VerifyReport verify_krawtchouk2_orthogonality(const KrawtchoukParams2& params, Real tolerance) {
  const int size = params.size();
  VerifyReport report;
  report.identity = "krawtchouk2-orthogonality";
  report.tolerance = tolerance;
  report.grid = "m+n, i+k <= " + std::to_string(size);

  std::vector<MultiIndex2> simplex;
  for (int t = 0; t <= size; ++t) {
    for (int a = t; a >= 0; --a) simplex.emplace_back(a, t - a);
  }
  const std::size_t count = simplex.size();
  std::vector<Real> values(count * count);  // [point][degree]
  for (std::size_t p = 0; p < count; ++p) {
    const SeriesPoly g = krawtchouk2_series(params, simplex[p], size);
    for (std::size_t d = 0; d < count; ++d) {
      const std::array<int, 2> e = {simplex[d].first, simplex[d].second};
      values[p * count + d] =
          g.coefficient(e) /
          std::sqrt(to_real<Real>(multinomial(size, simplex[d].first, simplex[d].second)));
    }
  }
  for (std::size_t d1 = 0; d1 < count; ++d1) {
    for (std::size_t d2 = d1; d2 < count; ++d2) {
      CompensatedSum sum;
      for (std::size_t p = 0; p < count; ++p) {
        sum += krawtchouk2_weight(params, simplex[p]) * values[p * count + d1] *
               values[p * count + d2];
      }
      const Real expected = d1 == d2 ? 1 : 0;
      report.observe(std::abs(sum.value() - expected),
                     "degrees (" + std::to_string(simplex[d1].first) + "," +
                         std::to_string(simplex[d1].second) + ") x (" +
                         std::to_string(simplex[d2].first) + "," +
                         std::to_string(simplex[d2].second) + ")");
    }
  }
  report.finalize();
  return report;
}

Real eval_alternative_sign(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt) {
  auto basis = std::make_shared<const MonomialBasis>(2, deg.total());
  const Real alpha = params.alpha();
  const Real beta = params.beta();
  const Real c = std::cos(params.theta());
  const Real s = std::sin(params.theta());
  const std::array<Real, 2> exponent = {-(alpha * c - beta * s), -(alpha * s - beta * c)};
  const std::array<Real, 2> first = {c / alpha, s / alpha};
  const std::array<Real, 2> second = {-s / beta, c / beta};
  SeriesPoly g = SeriesPoly::linear(basis, 0, exponent).exp();
  g *= SeriesPoly::linear(basis, 1, first).power(pt.first);
  g *= SeriesPoly::linear(basis, 1, second).power(pt.second);
  const std::array<int, 2> e = {deg.first, deg.second};
  return g.coefficient(e) * std::sqrt(factorial_real(deg.first) * factorial_real(deg.second));
}

namespace {

bool strictly_decreasing(const std::vector<Real>& errors) {
  for (std::size_t j = 1; j < errors.size(); ++j) {
    if (!(errors[j] < errors[j - 1])) return false;
  }
  return true;
}

bool approaches(const std::vector<Real>& errors) {
  if (errors.empty()) return false;
  const bool all_zero = std::all_of(errors.begin(), errors.end(), [](Real e) { return e == 0; });
  if (all_zero) return true;
  return strictly_decreasing(errors) && errors.back() < errors.front() / 10;
}

}  // namespace

LimitReport limit_study(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt,
                        const std::vector<int>& sizes, Real terminal_fraction) {
  if (sizes.empty()) throw DomainError("limit study needs at least one N");
  LimitReport out;
  out.terminal_fraction = terminal_fraction;
  out.charlier = eval_genfun(params, deg, pt);
  out.alt_charlier = eval_alternative_sign(params, deg, pt);

  std::vector<Real> errors;
  std::vector<Real> alt_errors;
  for (int size : sizes) {
    if (size <= 0) throw DomainError("limit study sizes must be positive");
    const Real root_n = std::sqrt(static_cast<Real>(size));
    const KrawtchoukParams2 kp(
        rotation_zxz(params.alpha() / root_n, params.beta() / root_n, params.theta()), size);
    LimitRow row;
    row.size = size;
    row.krawtchouk = krawtchouk2(kp, deg, pt);
    row.error = std::abs(row.krawtchouk - out.charlier);
    row.alt_error = std::abs(row.krawtchouk - out.alt_charlier);
    errors.push_back(row.error);
    alt_errors.push_back(row.alt_error);
    out.rows.push_back(row);
  }

  const bool all_zero = std::all_of(errors.begin(), errors.end(), [](Real e) { return e == 0; });
  out.decreasing = all_zero || strictly_decreasing(errors);
  out.alt_decreasing = strictly_decreasing(alt_errors);
  out.terminal_relative_error =
      out.charlier != 0 ? errors.back() / std::abs(out.charlier)
                        : (errors.back() == 0 ? Real{0} : std::numeric_limits<Real>::infinity());
  out.terminal_ok = errors.back() <= terminal_fraction * std::abs(out.charlier);

  const bool gen1 = approaches(errors);
  const bool first = approaches(alt_errors);
  out.converged_convention = gen1 && first ? "both" : gen1 ? "gen-1" : first ? "first" : "none";

  auto& v = out.verify;
  v.identity = "krawtchouk-limit";
  v.grid = "(m,n,i,k)=(" + std::to_string(deg.first) + "," + std::to_string(deg.second) + "," +
           std::to_string(pt.first) + "," + std::to_string(pt.second) + "), N in {";
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    v.grid += (j ? "," : "") + std::to_string(sizes[j]);
  }
  v.grid += "}";
  v.tolerance = terminal_fraction * std::abs(out.charlier);
  v.max_residual = errors.back();
  v.worst_location = "N=" + std::to_string(sizes.back());
  v.pass = out.decreasing && out.terminal_ok;
  if (!out.decreasing) v.notes.push_back("errors are not strictly decreasing in N");
  if (!out.terminal_ok) {
    v.notes.push_back("terminal error exceeds " + std::to_string(terminal_fraction) +
                      " * |C_{m,n}(i,k)|");
    if (std::abs(out.charlier) <= 1e-12) {
      v.notes.push_back("C_{m,n}(i,k) is zero to rounding, so the relative bound cannot be met");
    }
  }
  v.notes.push_back("converging sign convention: " + out.converged_convention);
  return out;
}

}  // namespace charlier
