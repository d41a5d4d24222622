#include "charlier/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace charlier {

MultiIndex2::MultiIndex2(int a, int b) : first(a), second(b) {
  if (a < 0 || b < 0) {
    throw DomainError("multi-index entries must be non-negative, got (" + std::to_string(a) +
                      "," + std::to_string(b) + ")");
  }
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Raising: return "raising";
    case Algorithm::GenFun: return "genfun";
    case Algorithm::Hypergeometric: return "hypergeometric";
    case Algorithm::Decomposition: return "decomposition";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "raising") return Algorithm::Raising;
  if (name == "genfun") return Algorithm::GenFun;
  if (name == "hyper" || name == "hypergeometric") return Algorithm::Hypergeometric;
  if (name == "decomp" || name == "decomposition") return Algorithm::Decomposition;
  throw DomainError("unknown algorithm '" + std::string(name) + "'");
}

void VerifyReport::observe(Real residual, const std::string& location) {
  // NaN must register as a failure, so compare with !(<=).
  if (!(residual <= max_residual)) {
    max_residual = std::isnan(residual) ? std::numeric_limits<Real>::infinity() : residual;
    worst_location = location;
  }
}

void VerifyReport::finalize() { pass = max_residual <= tolerance; }

Real mixed_error(Real a, Real b) {
  return std::abs(a - b) / std::max<Real>(1, std::abs(b));
}

}  // namespace charlier
