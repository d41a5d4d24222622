#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "charlier/real.hpp"

namespace charlier::cli {

enum class Command { Eval, Table, Verify, Limit, Bench };
enum class Format { Json, Csv, Plain };

inline constexpr const char* kSchema = "charlier-lab/1";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInvalid = 2;

struct RunConfig {
  Command command = Command::Eval;
  Real theta = 0.5235987755982988;  // pi/6
  std::string theta_pi_frac;        // "p/q" overrides theta with pi p/q
  Real alpha = 1;
  Real beta = 1;
  std::optional<std::string> algorithm;
  std::vector<int> deg;
  std::vector<int> pt;
  int degmax = -1;  // -1: command default
  int ptmax = -1;
  int cutoff = -1;
  int nodes = 40;
  std::vector<int> sizes = {16, 64, 256, 1024};
  Format format = Format::Plain;
  std::string out;
  int dim = 0;
  std::string rotation_path;
  std::vector<Real> alphas;
  std::optional<Real> tol;
  std::vector<std::string> suites;
  int warmup = 1;
  int repetitions = 3;
};

/// Parses argv (argv[0] is the program name) and runs the selected command,
/// writing results to `out` (or --out) and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charlier::cli
