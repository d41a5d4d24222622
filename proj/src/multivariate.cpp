#include "charlier/multivariate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "charlier/combinatorics.hpp"
#include "charlier/univariate.hpp"

namespace charlier {

MultiIndexD::MultiIndexD(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("multi-index needs at least one entry");
  for (int e : entries_) {
    if (e < 0) throw DomainError("multi-index entries must be non-negative");
  }
}

int MultiIndexD::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

namespace {

void check_dim(const EuclidParamsD& params, int dim, const char* what) {
  if (dim != params.dim()) {
    throw DomainError(std::string("dimension mismatch: ") + what + " has " +
                      std::to_string(dim) + " entries, parameters have d = " +
                      std::to_string(params.dim()));
  }
}

std::string describe(std::span<const int> e) {
  std::string s = "(";
  for (std::size_t j = 0; j < e.size(); ++j) s += (j ? "," : "") + std::to_string(e[j]);
  return s + ")";
}

}  // namespace

Real weight_amp_d(const EuclidParamsD& params, const MultiIndexD& pt) {
  check_dim(params, pt.dim(), "point");
  const Vector& a = params.alphas();
  Real w = std::exp(-a.squaredNorm() / 2);
  for (int k = 0; k < pt.dim(); ++k) {
    for (int j = 1; j <= pt[k]; ++j) w *= a[k] / std::sqrt(static_cast<Real>(j));
  }
  return w;
}

SeriesPoly genfun_series_d(const EuclidParamsD& params, std::span<const Real> pt,
                           int max_degree) {
  const int d = params.dim();
  check_dim(params, static_cast<int>(pt.size()), "point");
  auto basis = std::make_shared<const MonomialBasis>(d, max_degree);
  const Matrix& r = params.rotation();
  const Vector& a = params.alphas();

  // Exponent coefficient of x_l is -sum_j R_{jl} alpha_j.
  const Vector exponent = -(r.transpose() * a);
  std::vector<Real> slopes(static_cast<std::size_t>(d));
  for (int l = 0; l < d; ++l) slopes[l] = exponent[l];
  SeriesPoly g = SeriesPoly::linear(basis, 0, slopes).exp();
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) slopes[l] = r(k, l) / a[k];
    g *= SeriesPoly::linear(basis, 1, slopes).power(pt[k]);
  }
  return g;
}

Real eval_charlier_d(const EuclidParamsD& params, const MultiIndexD& deg, const MultiIndexD& pt) {
  check_dim(params, deg.dim(), "degree");
  check_dim(params, pt.dim(), "point");
  std::vector<Real> x(pt.entries().begin(), pt.entries().end());
  const SeriesPoly g = genfun_series_d(params, x, deg.total());
  Real scale = 1;
  for (int k = 0; k < deg.dim(); ++k) scale *= factorial_real(deg[k]);
  return g.coefficient(deg.entries()) * std::sqrt(scale);
}

namespace {

class RaisingD {
 public:
  explicit RaisingD(const EuclidParamsD& params) : params_(params) {
    shifts_ = params.rotation().transpose() * params.alphas();
  }

  Real value(const std::vector<int>& deg, const std::vector<int>& pt) {
    auto key = std::make_pair(deg, pt);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int l = static_cast<int>(deg.size()) - 1;
    while (l >= 0 && deg[l] == 0) --l;
    Real result = 1;
    if (l >= 0) {
      std::vector<int> lower = deg;
      --lower[l];
      const Matrix& r = params_.rotation();
      const Vector& a = params_.alphas();
      CompensatedSum sum;
      std::vector<int> shifted = pt;
      for (int k = 0; k < params_.dim(); ++k) {
        if (r(k, l) == 0 || pt[k] == 0) continue;
        --shifted[k];
        sum += r(k, l) * (static_cast<Real>(pt[k]) / a[k]) * value(lower, shifted);
        ++shifted[k];
      }
      sum += -shifts_[l] * value(lower, pt);
      result = sum.value() / std::sqrt(static_cast<Real>(deg[l]));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  const EuclidParamsD& params_;
  Vector shifts_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, Real> memo_;
};

}  // namespace

Real eval_raising_d(const EuclidParamsD& params, const MultiIndexD& deg, const MultiIndexD& pt) {
  check_dim(params, deg.dim(), "degree");
  check_dim(params, pt.dim(), "point");
  RaisingD raising(params);
  return raising.value(deg.entries(), pt.entries());
}

VerifyReport verify_orthogonality_d(const EuclidParamsD& params, int degmax, int cutoff,
                                    Real tolerance) {
  const int d = params.dim();
  VerifyReport report;
  report.identity = "orthogonality-d";
  report.tolerance = tolerance;
  report.grid = "d=" + std::to_string(d) + ", |n|,|m| <= " + std::to_string(degmax) +
                ", each i_k <= " + std::to_string(cutoff);

  const MonomialBasis degrees(d, degmax);
  const std::size_t count = degrees.size();
  std::vector<Real> scale(count);
  for (std::size_t p = 0; p < count; ++p) {
    Real f = 1;
    for (int e : degrees.exponents(p)) f *= factorial_real(e);
    scale[p] = std::sqrt(f);
  }
  std::vector<CompensatedSum> gram(count * count);
  std::vector<Real> values(count);
  Real shell_growth = 0;

  std::vector<int> pt(static_cast<std::size_t>(d), 0);
  std::vector<Real> x(static_cast<std::size_t>(d), 0);
  while (true) {
    for (int k = 0; k < d; ++k) x[k] = pt[k];
    const SeriesPoly g = genfun_series_d(params, x, degmax);
    const Real amp = weight_amp_d(params, MultiIndexD(pt));
    const Real w = amp * amp;
    for (std::size_t p = 0; p < count; ++p) values[p] = g.coefficient_at(p) * scale[p];
    for (std::size_t p = 0; p < count; ++p) {
      for (std::size_t q = p; q < count; ++q) gram[p * count + q] += w * values[p] * values[q];
    }
    if (std::find(pt.begin(), pt.end(), cutoff) != pt.end()) {
      for (std::size_t p = 0; p < count; ++p) {
        for (std::size_t q = 0; q < count; ++q)
          shell_growth = std::max(shell_growth, std::abs(values[p] * values[q]));
      }
    }
    int k = 0;
    while (k < d && pt[k] == cutoff) pt[k++] = 0;
    if (k == d) break;
    ++pt[k];
  }

  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t q = p; q < count; ++q) {
      const Real expected = p == q ? 1 : 0;
      report.observe(std::abs(gram[p * count + q].value() - expected),
                     "degrees " + describe(degrees.exponents(p)) + " x " +
                         describe(degrees.exponents(q)));
    }
  }
  Real inside = 1;
  for (int k = 0; k < d; ++k) {
    const Real a = params.alphas()[k];
    inside *= 1 - poisson_upper_tail(a * a, cutoff);
  }
  report.tail_bound = (1 - inside) * std::max<Real>(1, shell_growth);
  report.finalize();
  if (report.tail_bound > tolerance) {
    report.notes.push_back("truncation: Poisson tail bound " + std::to_string(report.tail_bound) +
                           " exceeds tolerance; increase the cutoff");
  }
  return report;
}

}  // namespace charlier
