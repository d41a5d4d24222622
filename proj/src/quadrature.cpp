#include "charlier/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace charlier {

GaussHermiteRule gauss_hermite(int n) {
  if (n < 1) throw DomainError("gauss_hermite: need at least one node");
  GaussHermiteRule rule;
  rule.nodes.assign(static_cast<std::size_t>(n), 0);
  rule.weights.assign(static_cast<std::size_t>(n), 0);

  const Real pim4 = 1 / std::sqrt(std::sqrt(std::numbers::pi_v<Real>));
  const Real nr = static_cast<Real>(n);
  const int half = (n + 1) / 2;
  Real z = 0;
  for (int i = 0; i < half; ++i) {
    // Initial guesses for the largest roots first (Stroud & Secrest).
    if (i == 0) {
      z = std::sqrt(2 * nr + 1) - 1.85575 * std::pow(2 * nr + 1, Real{-0.16667});
    } else if (i == 1) {
      z -= 1.14 * std::pow(nr, Real{0.426}) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * rule.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * rule.nodes[1];
    } else {
      z = 2 * z - rule.nodes[i - 2];
    }
    Real derivative = 0;
    for (int iter = 0; iter < 100; ++iter) {
      Real p1 = pim4;
      Real p2 = 0;
      for (int j = 0; j < n; ++j) {
        const Real p3 = p2;
        p2 = p1;
        const Real jr = static_cast<Real>(j);
        p1 = z * std::sqrt(2 / (jr + 1)) * p2 - std::sqrt(jr / (jr + 1)) * p3;
      }
      derivative = std::sqrt(2 * nr) * p2;
      const Real step = p1 / derivative;
      z -= step;
      if (std::abs(step) <= 4 * std::numeric_limits<Real>::epsilon() * std::max<Real>(1, std::abs(z)))
        break;
    }
    rule.nodes[i] = z;
    rule.nodes[n - 1 - i] = -z;
    rule.weights[i] = 2 / (derivative * derivative);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  if (n % 2 == 1) rule.nodes[half - 1] = 0;
  return rule;
}

}  // namespace charlier
