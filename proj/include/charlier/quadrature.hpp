#pragma once

#include <vector>

#include "charlier/real.hpp"

namespace charlier {

/// Gauss-Hermite rule for the weight e^{-x^2} on the real line.
struct GaussHermiteRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

/// n-point rule, exact for polynomials of degree <= 2n-1. Nodes are found
/// by Newton iteration on the normalised Hermite recurrence.
GaussHermiteRule gauss_hermite(int n);

}  // namespace charlier
