#include "charlier/bivariate.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "charlier/combinatorics.hpp"
#include "charlier/univariate.hpp"

namespace charlier {

namespace {

constexpr Real kEps = std::numeric_limits<Real>::epsilon();

struct Valued {
  Real value;
  Real magnitude;  // sum of |terms| feeding the value
};

}  // namespace

// Layout: for each (m, n) a (D+1) x (D+1) block over shifts (a, b).
std::size_t RaisingTable::slot(int m, int n, int a, int b) const {
  const std::size_t side = static_cast<std::size_t>(max_degree_ + 1);
  return ((static_cast<std::size_t>(m) * side + n) * side + a) * side + b;
}

RaisingTable::RaisingTable(const EuclidParams2& params, int max_degree, Real i, Real k,
                           RaisingOrder order)
    : max_degree_(max_degree) {
  if (max_degree < 0) throw DomainError("raising table degree must be non-negative");
  const std::size_t side = static_cast<std::size_t>(max_degree + 1);
  values_.assign(side * side * side * side, Real{0});
  magnitudes_.assign(values_.size(), Real{0});

  const Real alpha = params.alpha();
  const Real beta = params.beta();
  const Real c = std::cos(params.theta());
  const Real s = std::sin(params.theta());
  const Real shift_m = beta * s - alpha * c;
  const Real shift_n = -(alpha * s + beta * c);

  for (int a = 0; a <= max_degree; ++a) {
    for (int b = 0; a + b <= max_degree; ++b) {
      values_[slot(0, 0, a, b)] = 1;
      magnitudes_[slot(0, 0, a, b)] = 1;
    }
  }

  // Raise (m, n) -> (m+1, n) or (m, n+1) on every shift still needed.
  const auto raise = [&](int m, int n, bool in_m) {
    const int tm = in_m ? m + 1 : m;
    const int tn = in_m ? n : n + 1;
    const int room = max_degree - tm - tn;
    const Real norm = 1 / std::sqrt(static_cast<Real>(in_m ? m + 1 : n + 1));
    for (int a = 0; a <= room; ++a) {
      for (int b = 0; a + b <= room; ++b) {
        const Real x = i - static_cast<Real>(a);
        const Real y = k - static_cast<Real>(b);
        const Real cx = in_m ? (x / alpha) * c : (x / alpha) * s;
        const Real cy = in_m ? -(y / beta) * s : (y / beta) * c;
        const Real c0 = in_m ? shift_m : shift_n;
        const std::array<Real, 3> terms = {cx * values_[slot(m, n, a + 1, b)],
                                           cy * values_[slot(m, n, a, b + 1)],
                                           c0 * values_[slot(m, n, a, b)]};
        values_[slot(tm, tn, a, b)] = (terms[0] + terms[1] + terms[2]) * norm;
        magnitudes_[slot(tm, tn, a, b)] =
            (std::abs(cx) * magnitudes_[slot(m, n, a + 1, b)] +
             std::abs(cy) * magnitudes_[slot(m, n, a, b + 1)] +
             std::abs(c0) * magnitudes_[slot(m, n, a, b)]) *
            norm;
      }
    }
  };

  if (order == RaisingOrder::MFirst) {
    for (int m = 0; m < max_degree; ++m) raise(m, 0, true);
    for (int m = 0; m <= max_degree; ++m) {
      for (int n = 0; m + n < max_degree; ++n) raise(m, n, false);
    }
  } else {
    for (int n = 0; n < max_degree; ++n) raise(0, n, false);
    for (int n = 0; n <= max_degree; ++n) {
      for (int m = 0; m + n < max_degree; ++m) raise(m, n, true);
    }
  }
}

Real RaisingTable::shifted(int m, int n, int a, int b) const {
  if (m < 0 || n < 0) return 0;
  if (a < 0 || b < 0 || m + n + a + b > max_degree_) {
    throw DomainError("raising table entry out of range");
  }
  return values_[slot(m, n, a, b)];
}

Real RaisingTable::magnitude(int m, int n) const {
  if (m < 0 || n < 0) return 0;
  if (m + n > max_degree_) throw DomainError("raising table entry out of range");
  return magnitudes_[slot(m, n, 0, 0)];
}

Real eval_raising_at(const EuclidParams2& params, MultiIndex2 deg, Real i, Real k,
                     RaisingOrder order) {
  return RaisingTable(params, deg.total(), i, k, order).value(deg.first, deg.second);
}

Real eval_raising(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt) {
  return eval_raising_at(params, deg, pt.first, pt.second);
}

SeriesPoly genfun_series(const EuclidParams2& params, Real i, Real k, int max_degree) {
  auto basis = std::make_shared<const MonomialBasis>(2, max_degree);
  const Real alpha = params.alpha();
  const Real beta = params.beta();
  const Real c = std::cos(params.theta());
  const Real s = std::sin(params.theta());
  const DerivedParams2 d = derive(params);

  const std::array<Real, 2> exponent = {-d.omega, -d.zeta};
  const std::array<Real, 2> first = {c / alpha, s / alpha};
  const std::array<Real, 2> second = {-s / beta, c / beta};

  SeriesPoly g = SeriesPoly::linear(basis, 0, exponent).exp();
  g *= SeriesPoly::linear(basis, 1, first).power(i);
  g *= SeriesPoly::linear(basis, 1, second).power(k);
  return g;
}

namespace {

Real sqrt_factorials(int m, int n) { return std::sqrt(factorial_real(m) * factorial_real(n)); }

Valued genfun_valued(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt) {
  const int total = deg.total();
  const std::array<int, 2> e = {deg.first, deg.second};
  const SeriesPoly g = genfun_series(params, pt.first, pt.second, total);
  const Real value = g.coefficient(e) * sqrt_factorials(deg.first, deg.second);

  // Same expansion with every coefficient replaced by its absolute value.
  auto basis = g.basis_ptr();
  const Real alpha = std::abs(params.alpha());
  const Real beta = std::abs(params.beta());
  const Real c = std::abs(std::cos(params.theta()));
  const Real s = std::abs(std::sin(params.theta()));
  const DerivedParams2 d = derive(params);
  const std::array<Real, 2> exponent = {std::abs(d.omega), std::abs(d.zeta)};
  const std::array<Real, 2> first = {c / alpha, s / alpha};
  const std::array<Real, 2> second = {s / beta, c / beta};
  SeriesPoly bound = SeriesPoly::linear(basis, 0, exponent).exp();
  bound *= SeriesPoly::linear(basis, 1, first).power(pt.first);
  bound *= SeriesPoly::linear(basis, 1, second).power(pt.second);
  return {value, bound.coefficient(e) * sqrt_factorials(deg.first, deg.second)};
}

const char* kUNames[4] = {"u11 denominator alpha^2 cos(theta) - alpha beta sin(theta)",
                          "u12 denominator alpha^2 sin(theta) + alpha beta cos(theta)",
                          "u21 denominator beta^2 sin(theta) - alpha beta cos(theta)",
                          "u22 denominator beta^2 cos(theta) + alpha beta sin(theta)"};

Valued monic_s_valued(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt) {
  const DerivedParams2 d = derive(params);
  const std::array<const std::optional<Real>*, 4> us = {&d.u11, &d.u12, &d.u21, &d.u22};
  for (std::size_t j = 0; j < us.size(); ++j) {
    if (!*us[j]) {
      throw DegenerateParameterError(std::string("hypergeometric form undefined: ") + kUNames[j] +
                                     " vanishes; use the raising evaluator");
    }
  }
  const Real u11 = *d.u11;
  const Real u12 = *d.u12;
  const Real u21 = *d.u21;
  const Real u22 = *d.u22;
  const int m = deg.first;
  const int n = deg.second;
  const int i = pt.first;
  const int k = pt.second;

  CompensatedSum sum;
  for (int rho = 0; rho <= std::min(m, i); ++rho) {
    for (int mu = 0; mu <= std::min(m - rho, k); ++mu) {
      for (int sigma = 0; sigma <= std::min(n, i - rho); ++sigma) {
        for (int nu = 0; nu <= std::min(n - sigma, k - mu); ++nu) {
          const Real numerator = pochhammer(-m, rho + mu) * pochhammer(-n, nu + sigma) *
                                 pochhammer(-i, rho + sigma) * pochhammer(-k, mu + nu);
          const Real denominator = factorial_real(rho) * factorial_real(sigma) *
                                   factorial_real(mu) * factorial_real(nu);
          sum += numerator / denominator * std::pow(u11, rho) * std::pow(u12, sigma) *
                 std::pow(u21, mu) * std::pow(u22, nu);
        }
      }
    }
  }
  return {sum.value(), sum.abs_sum()};
}

Real monic_prefactor(const EuclidParams2& params, MultiIndex2 deg) {
  const DerivedParams2 d = derive(params);
  const Real sign = (deg.total() % 2 == 0) ? 1 : -1;
  return sign * std::pow(d.omega, deg.first) * std::pow(d.zeta, deg.second) /
         sqrt_factorials(deg.first, deg.second);
}

std::string decomposition_refusal(const EuclidParams2& params) {
  const Real c = std::cos(params.theta());
  const Real s = std::sin(params.theta());
  if (std::abs(s * c) <= kDecompositionThreshold) return "decomposition undefined at sinθcosθ=0";
  return {};
}

Valued decomposition_valued(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt) {
  if (auto why = decomposition_refusal(params); !why.empty()) throw DegenerateParameterError(why);
  const Real alpha = params.alpha();
  const Real beta = params.beta();
  const Real c = std::cos(params.theta());
  const Real s = std::sin(params.theta());
  const int m = deg.first;
  const int n = deg.second;
  const int total = m + n;

  const CharlierParam a_first(alpha * alpha);
  const CharlierParam a_second(beta * beta);
  const KrawtchoukParam kp(s * s, total);
  const Real ratio = -beta * s / (alpha * c);

  CompensatedSum sum;
  Real ratio_power = 1;
  for (int v = 0; v <= total; ++v) {
    sum += to_real<Real>(binomial(total, v)) * ratio_power * charlier(v, pt.second, a_second) *
           charlier(total - v, pt.first, a_first) * krawtchouk(n, v, kp);
    ratio_power *= ratio;
  }
  const Real sign = (total % 2 == 0) ? 1 : -1;
  const Real prefactor = sign * std::pow(alpha, total) * std::pow(c, m) * std::pow(s, n) /
                         sqrt_factorials(m, n);
  return {prefactor * sum.value(), std::abs(prefactor) * sum.abs_sum()};
}

}  // namespace

Real eval_genfun(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt) {
  return genfun_valued(params, deg, pt).value;
}

Real eval_monic_s(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt) {
  return monic_s_valued(params, deg, pt).value;
}

Real eval_hypergeometric(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt) {
  return monic_prefactor(params, deg) * eval_monic_s(params, deg, pt);
}

Real eval_decomposition(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt) {
  return decomposition_valued(params, deg, pt).value;
}

std::string algorithm_precondition(const EuclidParams2& params, Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Raising:
    case Algorithm::GenFun:
      return {};
    case Algorithm::Hypergeometric: {
      const DerivedParams2 d = derive(params);
      const std::array<const std::optional<Real>*, 4> us = {&d.u11, &d.u12, &d.u21, &d.u22};
      for (std::size_t j = 0; j < us.size(); ++j) {
        if (!*us[j]) {
          return std::string("hypergeometric form undefined: ") + kUNames[j] +
                 " vanishes; use the raising evaluator";
        }
      }
      return {};
    }
    case Algorithm::Decomposition:
      return decomposition_refusal(params);
  }
  return {};
}

EvalReport evaluate(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt,
                    Algorithm algorithm) {
  EvalReport report;
  report.algorithm = algorithm;
  const Real steps = static_cast<Real>(deg.total() + 2);
  switch (algorithm) {
    case Algorithm::Raising: {
      const RaisingTable table(params, deg.total(), pt.first, pt.second);
      report.value = table.value(deg.first, deg.second);
      report.error_estimate = kEps * steps * table.magnitude(deg.first, deg.second);
      break;
    }
    case Algorithm::GenFun: {
      const Valued v = genfun_valued(params, deg, pt);
      report.value = v.value;
      report.error_estimate = kEps * steps * v.magnitude;
      break;
    }
    case Algorithm::Hypergeometric: {
      const Valued v = monic_s_valued(params, deg, pt);
      const Real prefactor = monic_prefactor(params, deg);
      report.value = prefactor * v.value;
      report.error_estimate = kEps * steps * std::abs(prefactor) * v.magnitude;
      break;
    }
    case Algorithm::Decomposition: {
      const Valued v = decomposition_valued(params, deg, pt);
      report.value = v.value;
      report.error_estimate = kEps * steps * v.magnitude;
      break;
    }
  }
  return report;
}

}  // namespace charlier
