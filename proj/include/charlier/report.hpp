#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "charlier/real.hpp"

namespace charlier {

/// Pair of non-negative integers: a degree (m,n) or a lattice point (i,k).
struct MultiIndex2 {
  int first = 0;
  int second = 0;

  MultiIndex2() = default;
  MultiIndex2(int a, int b);

  int total() const { return first + second; }
  friend bool operator==(const MultiIndex2&, const MultiIndex2&) = default;
};

enum class Algorithm { Raising, GenFun, Hypergeometric, Decomposition };

std::string_view to_string(Algorithm a);
/// Accepts the long names and the CLI short forms (hyper, decomp).
Algorithm parse_algorithm(std::string_view name);

struct EvalReport {
  Real value = 0;
  Algorithm algorithm = Algorithm::Raising;
  Real error_estimate = 0;  // first-order rounding bound, >= 0
};

/// Outcome of checking one identity over a grid. pass == (max_residual <= tolerance).
struct VerifyReport {
  std::string identity;
  Real max_residual = 0;
  std::string grid;
  Real tail_bound = 0;
  Real tolerance = 0;
  bool pass = true;
  std::string worst_location;
  std::vector<std::string> notes;

  /// Records a residual, keeping the location of the largest one.
  void observe(Real residual, const std::string& location);
  /// Sets pass from max_residual and tolerance.
  void finalize();
};

/// |a - b| / max(1, |b|): relative above magnitude one, absolute below.
Real mixed_error(Real a, Real b);

}  // namespace charlier
