#include "charlier/identities.hpp"

#include <cmath>
#include <string>

#include "charlier/combinatorics.hpp"
#include "charlier/quadrature.hpp"
#include "charlier/univariate.hpp"

namespace charlier {

namespace {

std::string location(int m, int n, int i, int k) {
  return "(m,n,i,k)=(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(i) +
         "," + std::to_string(k) + ")";
}

Real root(int n) { return std::sqrt(static_cast<Real>(n)); }

}  // namespace

Real identity_residual(const std::vector<IdentityTerm>& terms) {
  CompensatedSum sum;
  for (const auto& t : terms) sum += t.coefficient * t.value;
  return std::abs(sum.value());
}

std::vector<std::string> localize_sign_error(const std::vector<IdentityTerm>& terms,
                                             Real tolerance) {
  std::vector<std::string> suspects;
  if (identity_residual(terms) <= tolerance) return suspects;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    auto flipped = terms;
    flipped[t].coefficient = -flipped[t].coefficient;
    if (identity_residual(flipped) <= tolerance) suspects.push_back(terms[t].label);
  }
  return suspects;
}

ReferenceValues::ReferenceValues(const EuclidParams2& params, int max_degree)
    : params_(params), max_degree_(max_degree) {}

Real ReferenceValues::operator()(int m, int n, int x, int y) {
  if (m < 0 || n < 0) return 0;
  if (m + n > max_degree_) throw DomainError("reference degree exceeds table");
  auto it = tables_.find({x, y});
  if (it == tables_.end()) {
    it = tables_.try_emplace({x, y}, params_, max_degree_, static_cast<Real>(x),
                             static_cast<Real>(y)).first;
  }
  return it->second.value(m, n);
}

std::vector<IdentityTerm> recurrence_i_terms(const EuclidParams2& p, ReferenceValues& C, int m,
                                             int n, int i, int k) {
  const Real a = p.alpha();
  const Real c = std::cos(p.theta());
  const Real s = std::sin(p.theta());
  return {
      {"i C_{m,n}", static_cast<Real>(i), C(m, n, i, k)},
      {"[m cos^2 + n sin^2 + alpha^2] C_{m,n}", -(m * c * c + n * s * s + a * a), C(m, n, i, k)},
      {"alpha sin sqrt(n+1) C_{m,n+1}", -a * s * root(n + 1), C(m, n + 1, i, k)},
      {"alpha sin sqrt(n) C_{m,n-1}", -a * s * root(n), C(m, n - 1, i, k)},
      {"sin cos sqrt(n(m+1)) C_{m+1,n-1}", -s * c * root(n * (m + 1)), C(m + 1, n - 1, i, k)},
      {"alpha cos sqrt(m+1) C_{m+1,n}", -a * c * root(m + 1), C(m + 1, n, i, k)},
      {"alpha cos sqrt(m) C_{m-1,n}", -a * c * root(m), C(m - 1, n, i, k)},
      {"sin cos sqrt(m(n+1)) C_{m-1,n+1}", -s * c * root(m * (n + 1)), C(m - 1, n + 1, i, k)},
  };
}

std::vector<IdentityTerm> recurrence_k_terms(const EuclidParams2& p, ReferenceValues& C, int m,
                                             int n, int i, int k) {
  const Real b = p.beta();
  const Real c = std::cos(p.theta());
  const Real s = std::sin(p.theta());
  return {
      {"k C_{m,n}", static_cast<Real>(k), C(m, n, i, k)},
      {"[m sin^2 + n cos^2 + beta^2] C_{m,n}", -(m * s * s + n * c * c + b * b), C(m, n, i, k)},
      {"beta cos sqrt(n+1) C_{m,n+1}", -b * c * root(n + 1), C(m, n + 1, i, k)},
      {"beta cos sqrt(n) C_{m,n-1}", -b * c * root(n), C(m, n - 1, i, k)},
      {"-sin cos sqrt(n(m+1)) C_{m+1,n-1}", s * c * root(n * (m + 1)), C(m + 1, n - 1, i, k)},
      {"-beta sin sqrt(m+1) C_{m+1,n}", b * s * root(m + 1), C(m + 1, n, i, k)},
      {"-beta sin sqrt(m) C_{m-1,n}", b * s * root(m), C(m - 1, n, i, k)},
      {"-sin cos sqrt(m(n+1)) C_{m-1,n+1}", s * c * root(m * (n + 1)), C(m - 1, n + 1, i, k)},
  };
}

std::vector<IdentityTerm> difference_m_terms(const EuclidParams2& p, ReferenceValues& C, int m,
                                             int n, int i, int k) {
  const Real a = p.alpha();
  const Real b = p.beta();
  const Real c = std::cos(p.theta());
  const Real s = std::sin(p.theta());
  const Real w = a * c - b * s;
  return {
      {"m C_{m,n}", static_cast<Real>(m), C(m, n, i, k)},
      {"[i cos^2 + k sin^2 + omega^2] C(i,k)", -(i * c * c + k * s * s + w * w), C(m, n, i, k)},
      {"-omega cos (i/alpha) C(i-1,k)", w * c * i / a, C(m, n, i - 1, k)},
      {"-omega cos alpha C(i+1,k)", w * c * a, C(m, n, i + 1, k)},
      {"-(i beta/alpha) cos sin C(i-1,k+1)", i * b / a * c * s, C(m, n, i - 1, k + 1)},
      {"omega sin (k/beta) C(i,k-1)", -w * s * k / b, C(m, n, i, k - 1)},
      {"omega sin beta C(i,k+1)", -w * s * b, C(m, n, i, k + 1)},
      {"-(k alpha/beta) cos sin C(i+1,k-1)", k * a / b * c * s, C(m, n, i + 1, k - 1)},
  };
}

std::vector<IdentityTerm> difference_n_terms(const EuclidParams2& p, ReferenceValues& C, int m,
                                             int n, int i, int k) {
  const Real a = p.alpha();
  const Real b = p.beta();
  const Real c = std::cos(p.theta());
  const Real s = std::sin(p.theta());
  const Real z = a * s + b * c;
  return {
      {"n C_{m,n}", static_cast<Real>(n), C(m, n, i, k)},
      {"[i sin^2 + k cos^2 + zeta^2] C(i,k)", -(i * s * s + k * c * c + z * z), C(m, n, i, k)},
      {"-zeta sin (i/alpha) C(i-1,k)", z * s * i / a, C(m, n, i - 1, k)},
      {"-zeta sin alpha C(i+1,k)", z * s * a, C(m, n, i + 1, k)},
      {"(i beta/alpha) cos sin C(i-1,k+1)", -i * b / a * c * s, C(m, n, i - 1, k + 1)},
      {"-zeta cos (k/beta) C(i,k-1)", z * c * k / b, C(m, n, i, k - 1)},
      {"-zeta cos beta C(i,k+1)", z * c * b, C(m, n, i, k + 1)},
      {"(k alpha/beta) cos sin C(i+1,k-1)", -k * a / b * c * s, C(m, n, i + 1, k - 1)},
  };
}

std::vector<IdentityTerm> lowering_m_terms(const EuclidParams2& p, ReferenceValues& C, int m,
                                           int n, int i, int k) {
  const Real a = p.alpha();
  const Real b = p.beta();
  const Real c = std::cos(p.theta());
  const Real s = std::sin(p.theta());
  return {
      {"sqrt(m) C_{m-1,n}", root(m), C(m - 1, n, i, k)},
      {"alpha cos C(i+1,k)", -a * c, C(m, n, i + 1, k)},
      {"-beta sin C(i,k+1)", b * s, C(m, n, i, k + 1)},
      {"(beta sin - alpha cos) C(i,k)", -(b * s - a * c), C(m, n, i, k)},
  };
}

std::vector<IdentityTerm> lowering_n_terms(const EuclidParams2& p, ReferenceValues& C, int m,
                                           int n, int i, int k) {
  const Real a = p.alpha();
  const Real b = p.beta();
  const Real c = std::cos(p.theta());
  const Real s = std::sin(p.theta());
  return {
      {"sqrt(n) C_{m,n-1}", root(n), C(m, n - 1, i, k)},
      {"alpha sin C(i+1,k)", -a * s, C(m, n, i + 1, k)},
      {"beta cos C(i,k+1)", -b * c, C(m, n, i, k + 1)},
      {"-(alpha sin + beta cos) C(i,k)", a * s + b * c, C(m, n, i, k)},
  };
}

namespace {

using TermBuilder = std::vector<IdentityTerm> (*)(const EuclidParams2&, ReferenceValues&, int,
                                                  int, int, int);

struct NamedBuilder {
  const char* name;
  TermBuilder build;
};

VerifyReport verify_pair(const std::string& identity, const EuclidParams2& params, int degmax,
                         int ptmax, Real tolerance, int degree_headroom,
                         std::initializer_list<NamedBuilder> builders) {
  VerifyReport report;
  report.identity = identity;
  report.tolerance = tolerance;
  report.grid = "m+n <= " + std::to_string(degmax) + ", i,k <= " + std::to_string(ptmax);
  ReferenceValues values(params, degmax + degree_headroom);

  std::vector<IdentityTerm> worst_terms;
  for (int m = 0; m <= degmax; ++m) {
    for (int n = 0; m + n <= degmax; ++n) {
      for (int i = 0; i <= ptmax; ++i) {
        for (int k = 0; k <= ptmax; ++k) {
          for (const auto& b : builders) {
            auto terms = b.build(params, values, m, n, i, k);
            const Real r = identity_residual(terms);
            const Real before = report.max_residual;
            report.observe(r, std::string(b.name) + " at " + location(m, n, i, k));
            if (report.max_residual != before) worst_terms = std::move(terms);
          }
        }
      }
    }
  }
  report.finalize();
  if (!report.pass) {
    const auto suspects = localize_sign_error(worst_terms, tolerance);
    if (suspects.empty()) {
      report.notes.push_back("no single sign flip repairs the worst instance");
    }
    for (const auto& label : suspects) {
      report.notes.push_back("flipping the sign of term '" + label +
                             "' repairs the worst instance");
    }
  }
  return report;
}

}  // namespace

VerifyReport verify_recurrence(const EuclidParams2& params, int degmax, int ptmax,
                               Real tolerance) {
  return verify_pair("recurrence", params, degmax, ptmax, tolerance, 1,
                     {{"i-recurrence", recurrence_i_terms}, {"k-recurrence", recurrence_k_terms}});
}

VerifyReport verify_difference(const EuclidParams2& params, int degmax, int ptmax,
                               Real tolerance) {
  return verify_pair("difference", params, degmax, ptmax, tolerance, 0,
                     {{"m-difference", difference_m_terms}, {"n-difference", difference_n_terms}});
}

VerifyReport verify_lowering(const EuclidParams2& params, int degmax, int ptmax,
                             Real tolerance) {
  return verify_pair("lowering", params, degmax, ptmax, tolerance, 0,
                     {{"m-lowering", lowering_m_terms}, {"n-lowering", lowering_n_terms}});
}

VerifyReport verify_orthogonality(const EuclidParams2& params, int degmax, int cutoff,
                                  Real tolerance) {
  VerifyReport report;
  report.identity = "orthogonality";
  report.tolerance = tolerance;
  report.grid = "m+n, m'+n' <= " + std::to_string(degmax) + ", i,k <= " + std::to_string(cutoff);

  std::vector<MultiIndex2> degrees;
  for (int t = 0; t <= degmax; ++t) {
    for (int m = t; m >= 0; --m) degrees.emplace_back(m, t - m);
  }
  const std::size_t count = degrees.size();
  std::vector<CompensatedSum> gram(count * count);
  std::vector<Real> values(count);
  Real shell_growth = 0;

  for (int i = 0; i <= cutoff; ++i) {
    for (int k = 0; k <= cutoff; ++k) {
      const Real amp = weight_amp(params, i, k);
      const Real w = amp * amp;
      const RaisingTable table(params, degmax, i, k);
      for (std::size_t p = 0; p < count; ++p) values[p] = table.value(degrees[p].first, degrees[p].second);
      for (std::size_t p = 0; p < count; ++p) {
        for (std::size_t q = p; q < count; ++q) gram[p * count + q] += w * values[p] * values[q];
      }
      if (i == cutoff || k == cutoff) {
        for (std::size_t p = 0; p < count; ++p) {
          for (std::size_t q = 0; q < count; ++q)
            shell_growth = std::max(shell_growth, std::abs(values[p] * values[q]));
        }
      }
    }
  }
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t q = p; q < count; ++q) {
      const Real expected = p == q ? 1 : 0;
      report.observe(std::abs(gram[p * count + q].value() - expected),
                     "degrees (" + std::to_string(degrees[p].first) + "," +
                         std::to_string(degrees[p].second) + ") x (" +
                         std::to_string(degrees[q].first) + "," +
                         std::to_string(degrees[q].second) + ")");
    }
  }
  const Real ta = poisson_upper_tail(params.alpha() * params.alpha(), cutoff);
  const Real tb = poisson_upper_tail(params.beta() * params.beta(), cutoff);
  report.tail_bound = (ta + tb - ta * tb) * std::max<Real>(1, shell_growth);
  report.finalize();
  if (report.tail_bound > tolerance) {
    report.notes.push_back("truncation: Poisson tail bound " + std::to_string(report.tail_bound) +
                           " exceeds tolerance; increase the cutoff");
  }
  return report;
}

VerifyReport verify_duality(const EuclidParams2& params, int degmax, Real tolerance) {
  const EuclidParams2 dual = dual_params(params);
  VerifyReport report;
  report.identity = "duality";
  report.tolerance = tolerance;
  report.grid = "m+n, i+k <= " + std::to_string(degmax);

  const bool s_form = derive(params).u_complete() && derive(dual).u_complete();
  for (int m = 0; m <= degmax; ++m) {
    for (int n = 0; m + n <= degmax; ++n) {
      for (int i = 0; i <= degmax; ++i) {
        for (int k = 0; i + k <= degmax; ++k) {
          const Real lhs = eval_raising(params, {i, k}, {m, n});
          const Real scale = std::sqrt(factorial_real(m) * factorial_real(n) /
                                       (factorial_real(i) * factorial_real(k))) *
                             std::pow(dual.alpha(), i) * std::pow(dual.beta(), k) /
                             (std::pow(params.alpha(), m) * std::pow(params.beta(), n));
          const Real rhs = scale * eval_raising(dual, {m, n}, {i, k});
          report.observe(mixed_error(rhs, lhs), "C-form " + location(m, n, i, k));
          if (s_form) {
            const Real s_lhs = eval_monic_s(params, {i, k}, {m, n});
            const Real s_rhs = eval_monic_s(dual, {m, n}, {i, k});
            report.observe(mixed_error(s_rhs, s_lhs), "S-form " + location(m, n, i, k));
          }
        }
      }
    }
  }
  if (!s_form) report.notes.push_back("S-form skipped: hypergeometric coefficients degenerate");
  report.finalize();
  return report;
}

Real integral_representation(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt,
                             int nodes) {
  const int needed = std::max({deg.first, deg.second, pt.first, pt.second}) + 1;
  if (nodes < needed) {
    throw DomainError("integral representation needs at least " + std::to_string(needed) +
                      " nodes per axis");
  }
  const Real w = weight_amp(params, pt.first, pt.second);
  if (std::abs(w) < kIntegralUnderflow) {
    throw DomainError("integral representation: W_{i,k} = " + std::to_string(w) +
                      " underflows");
  }
  const AffineMap2 map = affine_map(params);
  const Real c = std::cos(params.theta());
  const Real s = std::sin(params.theta());
  // x~ = Rot (x + centre), so |x|^2 + |x~|^2 = 2 |x + centre/2|^2 + |centre|^2 / 2.
  const Real centre1 = c * map.a_shift + s * map.b_shift;
  const Real centre2 = -s * map.a_shift + c * map.b_shift;

  const GaussHermiteRule rule = gauss_hermite(nodes);
  CompensatedSum sum;
  for (int a = 0; a < nodes; ++a) {
    const Real x1 = rule.nodes[a] - centre1 / 2;
    const Real h1 = hermite_function_poly(pt.first, x1);
    for (int b = 0; b < nodes; ++b) {
      const Real x2 = rule.nodes[b] - centre2 / 2;
      const auto xt = map.apply(x1, x2);
      sum += rule.weights[a] * rule.weights[b] * h1 * hermite_function_poly(pt.second, x2) *
             hermite_function_poly(deg.first, xt[0]) * hermite_function_poly(deg.second, xt[1]);
    }
  }
  // e^{-|centre|^2/4} = e^{-(alpha^2+beta^2)/2} cancels against W_{i,k}; divide
  // by the remaining alpha^i beta^k / sqrt(i! k!).
  Real inverse_amp = 1;
  for (int j = 1; j <= pt.first; ++j) inverse_amp *= std::sqrt(static_cast<Real>(j)) / params.alpha();
  for (int j = 1; j <= pt.second; ++j) inverse_amp *= std::sqrt(static_cast<Real>(j)) / params.beta();
  return sum.value() * inverse_amp;
}

VerifyReport verify_integral(const EuclidParams2& params, MultiIndex2 deg, MultiIndex2 pt,
                             int nodes, Real tolerance) {
  VerifyReport report;
  report.identity = "integral";
  report.tolerance = tolerance;
  report.grid = location(deg.first, deg.second, pt.first, pt.second) + ", " +
                std::to_string(nodes) + " nodes per axis";
  const Real quad = integral_representation(params, deg, pt, nodes);
  const Real ref = eval_raising(params, deg, pt);
  report.observe(std::abs(quad - ref), location(deg.first, deg.second, pt.first, pt.second));
  report.finalize();
  return report;
}

}  // namespace charlier
