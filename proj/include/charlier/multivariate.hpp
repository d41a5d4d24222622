#pragma once

#include <vector>

#include "charlier/euclid_params.hpp"
#include "charlier/report.hpp"
#include "charlier/series.hpp"

namespace charlier {

/// d-tuple of non-negative integers (degree or lattice point), d >= 1.
class MultiIndexD {
 public:
  explicit MultiIndexD(std::vector<int> entries);

  int dim() const { return static_cast<int>(entries_.size()); }
  int total() const;
  int operator[](int k) const { return entries_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& entries() const { return entries_; }

 private:
  std::vector<int> entries_;
};

/// W_i = e^{-sum alpha_k^2 / 2} prod_k alpha_k^{i_k} / sqrt(i_k!).
Real weight_amp_d(const EuclidParamsD& params, const MultiIndexD& pt);

/// e^{-sum_{j,l} R_{jl} alpha_j x_l} prod_k (1 + sum_l R_{kl} x_l / alpha_k)^{i_k},
/// truncated at total degree max_degree. pt may be any real vector.
SeriesPoly genfun_series_d(const EuclidParamsD& params, std::span<const Real> pt,
                           int max_degree);

/// C_n(i) = sqrt(prod n_k!) [x^n] genfun_series_d.
Real eval_charlier_d(const EuclidParamsD& params, const MultiIndexD& deg, const MultiIndexD& pt);

/// Second evaluator: C_n(i) from C_0 = 1 by the raising relation
///   sqrt(n_l + 1) C_{n+e_l}(i) = sum_k R_{kl} (i_k / alpha_k) C_n(i - e_k)
///                                - (sum_k R_{kl} alpha_k) C_n(i),
/// raising the coordinates in order.
Real eval_raising_d(const EuclidParamsD& params, const MultiIndexD& deg, const MultiIndexD& pt);

/// Gram residuals over all degrees with |n| <= degmax, summing each i_k <= cutoff.
VerifyReport verify_orthogonality_d(const EuclidParamsD& params, int degmax, int cutoff,
                                    Real tolerance = 1e-7);

}  // namespace charlier
