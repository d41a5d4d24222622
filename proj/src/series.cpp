#include "charlier/series.hpp"

#include <cmath>
#include <string>

#include "charlier/combinatorics.hpp"

namespace charlier {

MonomialBasis::MonomialBasis(int vars, int max_degree) : vars_(vars), max_degree_(max_degree) {
  if (vars < 1) throw DomainError("series needs at least one variable");
  if (max_degree < 0) throw DomainError("series degree must be non-negative");
  const long radix = max_degree + 1;
  long key_space = 1;
  for (int v = 0; v < vars; ++v) {
    key_space *= radix;
    if (key_space > (1L << 26)) throw DomainError("series basis too large");
  }
  lookup_.assign(static_cast<std::size_t>(key_space), -1);

  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  for (int total = 0; total <= max_degree; ++total) {
    // Enumerate compositions of `total` into `vars` parts, first variable
    // varying slowest with the largest power first.
    e.assign(static_cast<std::size_t>(vars), 0);
    e[0] = total;
    while (true) {
      long k = 0;
      long place = 1;
      for (int v = 0; v < vars; ++v) {
        k += e[v] * place;
        place *= radix;
      }
      lookup_[static_cast<std::size_t>(k)] = static_cast<long>(degrees_.size());
      keys_.push_back(k);
      degrees_.push_back(total);
      exponents_.insert(exponents_.end(), e.begin(), e.end());

      // Next composition: move one unit from the rightmost non-last nonzero
      // slot to its right neighbour and gather the remainder there.
      int pos = vars - 2;
      while (pos >= 0 && e[pos] == 0) --pos;
      if (pos < 0) break;
      const int tail = e[vars - 1];
      e[vars - 1] = 0;
      --e[pos];
      e[pos + 1] = tail + 1;
    }
  }
}

long MonomialBasis::index_of(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != vars_) {
    throw DomainError("exponent vector has " + std::to_string(exponents.size()) +
                      " entries, series has " + std::to_string(vars_) + " variables");
  }
  long k = 0;
  long place = 1;
  int total = 0;
  for (int v = 0; v < vars_; ++v) {
    if (exponents[v] < 0) return -1;
    total += exponents[v];
    k += exponents[v] * place;
    place *= max_degree_ + 1;
  }
  if (total > max_degree_) return -1;
  return lookup_[static_cast<std::size_t>(k)];
}

std::span<const int> MonomialBasis::exponents(std::size_t index) const {
  return std::span<const int>(exponents_).subspan(index * vars_, vars_);
}

SeriesPoly::SeriesPoly(std::shared_ptr<const MonomialBasis> basis)
    : basis_(std::move(basis)), coeffs_(basis_->size(), Real{0}) {}

SeriesPoly SeriesPoly::constant(std::shared_ptr<const MonomialBasis> basis, Real c) {
  SeriesPoly s(std::move(basis));
  s.coeffs_[0] = c;
  return s;
}

SeriesPoly SeriesPoly::linear(std::shared_ptr<const MonomialBasis> basis, Real c0,
                              std::span<const Real> slopes) {
  SeriesPoly s(std::move(basis));
  const auto& b = s.basis();
  if (static_cast<int>(slopes.size()) != b.vars()) {
    throw DomainError("linear form has " + std::to_string(slopes.size()) +
                      " slopes, series has " + std::to_string(b.vars()) + " variables");
  }
  s.coeffs_[0] = c0;
  if (b.max_degree() >= 1) {
    // Degree-one monomials occupy indices 1..vars in basis order.
    for (std::size_t idx = 1; idx <= static_cast<std::size_t>(b.vars()); ++idx) {
      const auto e = b.exponents(idx);
      for (int v = 0; v < b.vars(); ++v) {
        if (e[v] == 1) s.coeffs_[idx] = slopes[v];
      }
    }
  }
  return s;
}

Real SeriesPoly::coefficient(std::span<const int> exponents) const {
  const long idx = basis_->index_of(exponents);
  if (idx < 0) {
    throw DomainError("requested coefficient exceeds the series truncation degree " +
                      std::to_string(basis_->max_degree()));
  }
  return coeffs_[static_cast<std::size_t>(idx)];
}

SeriesPoly& SeriesPoly::operator*=(const SeriesPoly& other) {
  if (basis_ != other.basis_ && (basis_->vars() != other.basis_->vars() ||
                                 basis_->max_degree() != other.basis_->max_degree())) {
    throw DomainError("series bases differ");
  }
  const auto& b = *basis_;
  const int max_degree = b.max_degree();
  std::vector<Real> out(coeffs_.size(), Real{0});
  for (std::size_t p = 0; p < coeffs_.size(); ++p) {
    const Real cp = coeffs_[p];
    if (cp == 0) continue;
    const int dp = b.degree(p);
    const long kp = b.key(p);
    // Basis is graded, so the partner loop can stop at the remaining degree.
    for (std::size_t q = 0; q < other.coeffs_.size(); ++q) {
      if (dp + b.degree(q) > max_degree) break;
      const Real cq = other.coeffs_[q];
      if (cq == 0) continue;
      out[static_cast<std::size_t>(b.index_of_key(kp + b.key(q)))] += cp * cq;
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

SeriesPoly& SeriesPoly::operator+=(const SeriesPoly& other) {
  if (coeffs_.size() != other.coeffs_.size()) throw DomainError("series bases differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SeriesPoly& SeriesPoly::operator*=(Real scalar) {
  for (Real& c : coeffs_) c *= scalar;
  return *this;
}

SeriesPoly SeriesPoly::without_constant() const {
  SeriesPoly s = *this;
  s.coeffs_[0] = 0;
  return s;
}

SeriesPoly SeriesPoly::power(Real exponent) const {
  const Real c0 = coeffs_[0];
  const bool integral = std::floor(exponent) == exponent;
  if (c0 == 0 || (!integral && c0 < 0)) {
    throw DomainError("series power needs a positive constant term for non-integer exponents");
  }
  SeriesPoly ratio = without_constant();
  ratio *= 1 / c0;
  SeriesPoly result = constant(basis_, 1);
  SeriesPoly term = constant(basis_, 1);
  for (int j = 1; j <= basis_->max_degree(); ++j) {
    const Real bj = binomial_real(exponent, j);
    term *= ratio;
    if (bj == 0) break;  // integer exponent below the truncation degree
    SeriesPoly scaled = term;
    scaled *= bj;
    result += scaled;
  }
  result *= std::pow(c0, exponent);
  return result;
}

SeriesPoly SeriesPoly::exp() const {
  const SeriesPoly tail = without_constant();
  SeriesPoly result = constant(basis_, 1);
  SeriesPoly term = constant(basis_, 1);
  for (int j = 1; j <= basis_->max_degree(); ++j) {
    term *= tail;
    term *= 1 / static_cast<Real>(j);
    result += term;
  }
  result *= std::exp(coeffs_[0]);
  return result;
}

Real SeriesPoly::evaluate(std::span<const Real> x) const {
  const auto& b = *basis_;
  if (static_cast<int>(x.size()) != b.vars()) throw DomainError("evaluation point dimension");
  CompensatedSum sum;
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    Real term = coeffs_[idx];
    const auto e = b.exponents(idx);
    for (int v = 0; v < b.vars(); ++v) {
      for (int p = 0; p < e[v]; ++p) term *= x[v];
    }
    sum += term;
  }
  return sum.value();
}

}  // namespace charlier
