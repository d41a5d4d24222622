#pragma once

#include <memory>
#include <span>
#include <vector>

#include "charlier/real.hpp"

namespace charlier {

/// Monomials x^e in `vars` variables with total degree <= max_degree, in
/// graded order. Exponent vectors are packed into a base-(max_degree+1)
/// key; since each exponent is at most max_degree, keys add without carry.
class MonomialBasis {
 public:
  MonomialBasis(int vars, int max_degree);

  int vars() const { return vars_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return degrees_.size(); }

  /// Index of the monomial, or -1 if it is out of range.
  long index_of(std::span<const int> exponents) const;
  std::span<const int> exponents(std::size_t index) const;
  int degree(std::size_t index) const { return degrees_[index]; }
  long key(std::size_t index) const { return keys_[index]; }
  long index_of_key(long key) const { return lookup_[static_cast<std::size_t>(key)]; }

 private:
  int vars_;
  int max_degree_;
  std::vector<int> exponents_;  // size() * vars_
  std::vector<int> degrees_;
  std::vector<long> keys_;
  std::vector<long> lookup_;  // key -> index or -1
};

/// Power series in several variables truncated at the basis' total degree.
/// Every product is truncated at the same degree, so coefficients up to that
/// degree are exact (no contribution above it is ever needed).
class SeriesPoly {
 public:
  explicit SeriesPoly(std::shared_ptr<const MonomialBasis> basis);

  static SeriesPoly constant(std::shared_ptr<const MonomialBasis> basis, Real c);
  /// c0 + sum_l slopes[l] x_l
  static SeriesPoly linear(std::shared_ptr<const MonomialBasis> basis, Real c0,
                           std::span<const Real> slopes);

  const MonomialBasis& basis() const { return *basis_; }
  const std::shared_ptr<const MonomialBasis>& basis_ptr() const { return basis_; }
  int max_total_degree() const { return basis_->max_degree(); }

  Real constant_term() const { return coeffs_[0]; }
  Real coefficient(std::span<const int> exponents) const;
  Real coefficient_at(std::size_t index) const { return coeffs_[index]; }
  std::span<const Real> coefficients() const { return coeffs_; }

  SeriesPoly& operator*=(const SeriesPoly& other);
  SeriesPoly& operator+=(const SeriesPoly& other);
  SeriesPoly& operator*=(Real scalar);
  friend SeriesPoly operator*(SeriesPoly a, const SeriesPoly& b) { return a *= b; }
  friend SeriesPoly operator+(SeriesPoly a, const SeriesPoly& b) { return a += b; }

  /// (c0 + L)^p = c0^p sum_j binom(p, j) (L/c0)^j for real p. Requires
  /// c0 != 0, and c0 > 0 when p is not an integer.
  SeriesPoly power(Real exponent) const;

  /// e^{c0 + L} = e^{c0} sum_j L^j / j!.
  SeriesPoly exp() const;

  /// Sum of the stored terms at the point x (used to re-sum a truncated series).
  Real evaluate(std::span<const Real> x) const;

 private:
  SeriesPoly without_constant() const;

  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<Real> coeffs_;
};

}  // namespace charlier
