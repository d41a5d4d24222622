#pragma once

#include <stdexcept>
#include <string>

namespace charlier {

#ifdef CHARLIER_EXTENDED_PRECISION
using Real = long double;
#else
using Real = double;
#endif

// Invalid input: out-of-range argument, mismatched dimensions, malformed matrix.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A formula's denominator (or prefactor) vanishes for the given parameters.
// The message names the offending quantity.
class DegenerateParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace charlier
