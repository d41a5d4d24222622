#pragma once

#include <vector>

#include "charlier/real.hpp"
#include "charlier/report.hpp"

namespace charlier {

/// Poisson parameter a > 0 of the Charlier family.
class CharlierParam {
 public:
  explicit CharlierParam(Real a);
  Real a() const { return a_; }

 private:
  Real a_;
};

/// Success probability p in (0,1) and lattice size N >= 0 of the Krawtchouk family.
class KrawtchoukParam {
 public:
  KrawtchoukParam(Real p, int size);
  Real p() const { return p_; }
  int size() const { return size_; }

 private:
  Real p_;
  int size_;
};

/// Degree at or below which charlier() sums the terminating 2F0 series;
/// above it the three-term recurrence is used.
inline constexpr int kCharlierSeriesMaxDegree = 30;

/// Charlier polynomial C_n(x;a) normalised by
///   e^t (1 - t/a)^x = sum_n C_n(x;a) t^n / n!,
/// i.e. C_n(x;a) = 2F0(-n, -x; ; -1/a).
Real charlier(int n, Real x, CharlierParam a);

/// Same value through the recurrence
///   a C_{n+1} = (n + a - x) C_n - n C_{n-1},
/// exposed separately so the two routes can be compared.
Real charlier_recurrence(int n, Real x, CharlierParam a);

/// Residuals |sum_{x<=cutoff} w_x C_n C_m - a^{-n} n! delta_{nm}| for n,m <= nmax,
/// with w_x the Poisson(a) mass.
VerifyReport charlier_orthocheck(int nmax, CharlierParam a, int cutoff, Real tolerance = 1e-10);

/// Krawtchouk polynomial K_n(x;p,N) = 2F1(-n, -x; -N; 1/p).
Real krawtchouk(int n, Real x, KrawtchoukParam kp);

/// Normalised oscillator eigenfunction
///   Psi_n(x) = (2^n sqrt(pi) n!)^{-1/2} e^{-x^2/2} H_n(x),
/// by the recurrence on normalised functions (no raw H_n, no 2^n n!).
Real hermite_wavefunction(int n, Real x);

/// Psi_n(x) e^{x^2/2}: the polynomial factor of the wavefunction.
Real hermite_function_poly(int n, Real x);

/// Poisson(lambda) mass at x, computed as a running product.
Real poisson_mass(Real lambda, int x);

/// P(X > cutoff) for X ~ Poisson(lambda), summed directly over the tail.
Real poisson_upper_tail(Real lambda, int cutoff);

}  // namespace charlier
