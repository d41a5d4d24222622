#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "charlier/real.hpp"

namespace charlier {

/// Exact non-negative integer of unbounded magnitude.
using ExtInt = boost::multiprecision::cpp_int;

/// Largest n accepted by factorial().
inline constexpr int kFactorialCap = 500;

/// Exact n!. Throws DomainError for n < 0 or n > cap.
ExtInt factorial(int n, int cap = kFactorialCap);

/// n! rounded to Real. Uses a table built once from the exact values; for
/// n beyond the range of Real the result is +inf, so callers needing large
/// factorials should work with log_factorial().
Real factorial_real(int n);

/// log(n!) accumulated term by term.
Real log_factorial(int n);

/// Rising factorial (a)_n with (a)_0 = 1. For a = -m, a non-positive
/// integer, the product contains an exact zero once n > m.
Real pochhammer(Real a, int n);

/// Exact (a)_n for integer a.
ExtInt pochhammer_exact(int a, int n);

/// Binomial coefficient; zero for k < 0 or k > n.
ExtInt binomial(int n, int k);

/// Generalised binomial coefficient p(p-1)...(p-j+1)/j! for real p.
Real binomial_real(Real p, int j);

/// Trinomial coefficient N!/(m! n! (N-m-n)!). Throws DomainError if m+n > N.
ExtInt multinomial(int total, int m, int n);

template <typename To>
To to_real(const ExtInt& value) {
  return value.convert_to<To>();
}

/// Neumaier's variant of Kahan summation. Also tracks the sum of absolute
/// values so callers can attach a rounding estimate to the result.
class CompensatedSum {
 public:
  void add(Real term) {
    const Real t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
    abs_sum_ += std::abs(term);
  }

  CompensatedSum& operator+=(Real term) {
    add(term);
    return *this;
  }

  Real value() const { return sum_ + compensation_; }
  Real abs_sum() const { return abs_sum_; }

 private:
  Real sum_ = 0;
  Real compensation_ = 0;
  Real abs_sum_ = 0;
};

Real compensated_sum(std::span<const Real> terms);

}  // namespace charlier
