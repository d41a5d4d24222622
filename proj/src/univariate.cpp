#include "charlier/univariate.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "charlier/combinatorics.hpp"

namespace charlier {

CharlierParam::CharlierParam(Real a) : a_(a) {
  if (!(a > 0) || !std::isfinite(a)) {
    throw DomainError("Charlier parameter must be positive, got " + std::to_string(a));
  }
}

KrawtchoukParam::KrawtchoukParam(Real p, int size) : p_(p), size_(size) {
  if (!(p > 0 && p < 1)) {
    throw DomainError("Krawtchouk probability must lie in (0,1), got " + std::to_string(p));
  }
  if (size < 0) throw DomainError("Krawtchouk lattice size must be non-negative");
}

namespace {

Real charlier_series(int n, Real x, Real a) {
  // Terms of 2F0(-n,-x;;-1/a), built as a running ratio.
  CompensatedSum sum;
  Real term = 1;
  sum += term;
  for (int j = 0; j < n; ++j) {
    term *= (static_cast<Real>(j - n)) * (static_cast<Real>(j) - x) /
            static_cast<Real>(j + 1) * (-1 / a);
    if (term == 0) break;
    sum += term;
  }
  return sum.value();
}

}  // namespace

Real charlier_recurrence(int n, Real x, CharlierParam param) {
  if (n < 0) throw DomainError("charlier: negative degree");
  const Real a = param.a();
  Real prev = 1;
  if (n == 0) return prev;
  Real cur = 1 - x / a;
  for (int j = 1; j < n; ++j) {
    const Real next = ((static_cast<Real>(j) + a - x) * cur - static_cast<Real>(j) * prev) / a;
    prev = cur;
    cur = next;
  }
  return cur;
}

Real charlier(int n, Real x, CharlierParam a) {
  if (n < 0) throw DomainError("charlier: negative degree");
  if (n <= kCharlierSeriesMaxDegree) return charlier_series(n, x, a.a());
  return charlier_recurrence(n, x, a);
}

Real poisson_mass(Real lambda, int x) {
  Real w = std::exp(-lambda);
  for (int j = 1; j <= x; ++j) w *= lambda / static_cast<Real>(j);
  return w;
}

Real poisson_upper_tail(Real lambda, int cutoff) {
  Real w = poisson_mass(lambda, cutoff + 1);
  CompensatedSum tail;
  for (int x = cutoff + 1;; ++x) {
    tail += w;
    w *= lambda / static_cast<Real>(x + 1);
    // Terms decrease geometrically once x > lambda.
    if (static_cast<Real>(x) > lambda && w <= tail.value() * 1e-20) break;
    if (w == 0) break;
  }
  return tail.value();
}

VerifyReport charlier_orthocheck(int nmax, CharlierParam a, int cutoff, Real tolerance) {
  VerifyReport report;
  report.identity = "charlier-orthogonality";
  report.tolerance = tolerance;
  report.grid = "n,m <= " + std::to_string(nmax) + ", x <= " + std::to_string(cutoff);

  const int count = nmax + 1;
  std::vector<CompensatedSum> gram(static_cast<std::size_t>(count * count));
  std::vector<Real> values(static_cast<std::size_t>(count));
  Real boundary_growth = 0;
  for (int x = 0; x <= cutoff; ++x) {
    const Real w = poisson_mass(a.a(), x);
    for (int n = 0; n < count; ++n) values[n] = charlier(n, static_cast<Real>(x), a);
    for (int n = 0; n < count; ++n) {
      for (int m = 0; m < count; ++m) gram[n * count + m] += w * values[n] * values[m];
      if (x == cutoff) {
        for (int m = 0; m < count; ++m)
          boundary_growth = std::max(boundary_growth, std::abs(values[n] * values[m]));
      }
    }
  }
  for (int n = 0; n < count; ++n) {
    for (int m = 0; m < count; ++m) {
      const Real expected =
          n == m ? factorial_real(n) / std::pow(a.a(), static_cast<Real>(n)) : Real{0};
      report.observe(std::abs(gram[n * count + m].value() - expected),
                     "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")");
    }
  }
  report.tail_bound = poisson_upper_tail(a.a(), cutoff) * std::max<Real>(1, boundary_growth);
  report.finalize();
  if (report.tail_bound > tolerance) {
    report.notes.push_back("Poisson tail bound exceeds tolerance; increase cutoff");
  }
  return report;
}

Real krawtchouk(int n, Real x, KrawtchoukParam kp) {
  if (n < 0) throw DomainError("krawtchouk: negative degree");
  if (n > kp.size()) {
    throw DomainError("krawtchouk: degree " + std::to_string(n) + " exceeds N = " +
                      std::to_string(kp.size()));
  }
  CompensatedSum sum;
  Real term = 1;
  sum += term;
  const Real size = static_cast<Real>(kp.size());
  for (int j = 0; j < n; ++j) {
    term *= static_cast<Real>(j - n) * (static_cast<Real>(j) - x) /
            ((static_cast<Real>(j) - size) * static_cast<Real>(j + 1) * kp.p());
    if (term == 0) break;
    sum += term;
  }
  return sum.value();
}

namespace {

// Psi_{n+1} = x sqrt(2/(n+1)) Psi_n - sqrt(n/(n+1)) Psi_{n-1}
Real normalised_hermite(int n, Real x, Real seed) {
  if (n < 0) throw DomainError("hermite: negative degree");
  Real prev = seed;
  if (n == 0) return prev;
  Real cur = x * std::sqrt(Real{2}) * prev;
  for (int j = 1; j < n; ++j) {
    const Real jr = static_cast<Real>(j);
    const Real next = x * std::sqrt(2 / (jr + 1)) * cur - std::sqrt(jr / (jr + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

const Real kPiQuarterInv = 1 / std::sqrt(std::sqrt(std::numbers::pi_v<Real>));

}  // namespace

Real hermite_wavefunction(int n, Real x) {
  return normalised_hermite(n, x, kPiQuarterInv * std::exp(-x * x / 2));
}

Real hermite_function_poly(int n, Real x) { return normalised_hermite(n, x, kPiQuarterInv); }

}  // namespace charlier
