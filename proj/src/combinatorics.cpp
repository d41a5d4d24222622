#include "charlier/combinatorics.hpp"

#include <array>
#include <limits>
#include <string>

namespace charlier {

namespace {

constexpr int kRealTableSize = 1755;  // covers long double's range

const std::vector<Real>& factorial_table() {
  static const std::vector<Real> table = [] {
    std::vector<Real> t(kRealTableSize);
    ExtInt f = 1;
    t[0] = 1;
    for (int n = 1; n < kRealTableSize; ++n) {
      f *= n;
      t[n] = to_real<Real>(f);
    }
    return t;
  }();
  return table;
}

}  // namespace

ExtInt factorial(int n, int cap) {
  if (n < 0) throw DomainError("factorial: negative argument " + std::to_string(n));
  if (n > cap) {
    throw DomainError("factorial: argument " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
  ExtInt f = 1;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

Real factorial_real(int n) {
  if (n < 0) throw DomainError("factorial_real: negative argument " + std::to_string(n));
  if (n >= kRealTableSize) return std::numeric_limits<Real>::infinity();
  return factorial_table()[n];
}

Real log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: negative argument " + std::to_string(n));
  CompensatedSum s;
  for (int j = 2; j <= n; ++j) s += std::log(static_cast<Real>(j));
  return s.value();
}

Real pochhammer(Real a, int n) {
  if (n < 0) throw DomainError("pochhammer: negative length " + std::to_string(n));
  Real p = 1;
  for (int j = 0; j < n; ++j) {
    const Real factor = a + static_cast<Real>(j);
    if (factor == 0) return 0;
    p *= factor;
  }
  return p;
}

ExtInt pochhammer_exact(int a, int n) {
  if (n < 0) throw DomainError("pochhammer: negative length " + std::to_string(n));
  ExtInt p = 1;
  for (int j = 0; j < n; ++j) p *= a + j;
  return p;
}

ExtInt binomial(int n, int k) {
  if (n < 0) throw DomainError("binomial: negative n " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  ExtInt b = 1;
  for (int j = 1; j <= k; ++j) {
    b *= n - k + j;
    b /= j;  // exact: b is C(n-k+j, j) after this step
  }
  return b;
}

Real binomial_real(Real p, int j) {
  if (j < 0) return 0;
  Real b = 1;
  for (int r = 0; r < j; ++r) b = b * (p - static_cast<Real>(r)) / static_cast<Real>(r + 1);
  return b;
}

ExtInt multinomial(int total, int m, int n) {
  if (total < 0 || m < 0 || n < 0) throw DomainError("multinomial: negative argument");
  if (m + n > total) {
    throw DomainError("multinomial: m + n = " + std::to_string(m + n) + " exceeds N = " +
                      std::to_string(total));
  }
  return binomial(total, m) * binomial(total - m, n);
}

Real compensated_sum(std::span<const Real> terms) {
  CompensatedSum s;
  for (Real t : terms) s += t;
  return s.value();
}

}  // namespace charlier
