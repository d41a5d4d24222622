#include "charlier/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "charlier/bivariate.hpp"
#include "charlier/euclid_params.hpp"
#include "charlier/identities.hpp"
#include "charlier/krawtchouk2d.hpp"
#include "charlier/multivariate.hpp"
#include "charlier/report.hpp"
#include "json.hpp"

namespace charlier::cli {
namespace {

using json = nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(Real v) { return fmt::format("{:.17g}", v); }

json num_json(Real v) { return static_cast<double>(v); }

std::string join(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) s += sep;
    s += std::to_string(v[j]);
  }
  return s;
}

Real resolve_theta(const RunConfig& c) {
  if (c.theta_pi_frac.empty()) return c.theta;
  const auto slash = c.theta_pi_frac.find('/');
  long p = 0;
  long q = 1;
  try {
    std::size_t used = 0;
    p = std::stol(c.theta_pi_frac.substr(0, slash), &used);
    if (used != c.theta_pi_frac.substr(0, slash).size()) throw std::invalid_argument("p");
    if (slash != std::string::npos) {
      const std::string qs = c.theta_pi_frac.substr(slash + 1);
      q = std::stol(qs, &used);
      if (used != qs.size()) throw std::invalid_argument("q");
    }
  } catch (const std::logic_error&) {
    throw DomainError("--theta-pi-frac expects p/q, got '" + c.theta_pi_frac + "'");
  }
  if (q == 0) throw DomainError("--theta-pi-frac has zero denominator");
  return std::numbers::pi_v<Real> * static_cast<Real>(p) / static_cast<Real>(q);
}

EuclidParams2 params2(const RunConfig& c) { return EuclidParams2(resolve_theta(c), c.alpha, c.beta); }

bool is_multivariate(const RunConfig& c) {
  return c.dim > 0 || !c.rotation_path.empty() || !c.alphas.empty();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("'" + path + "': " + e.what());
  }
}

EuclidParamsD params_d(const RunConfig& c) {
  if (c.rotation_path.empty()) {
    if (c.alphas.empty()) {
      if (c.dim != 0 && c.dim != 2) throw DomainError("--dim other than 2 needs --alphas or --R");
      return embed(params2(c));
    }
    if (c.dim != 0 && c.dim != static_cast<int>(c.alphas.size())) {
      throw DomainError("--dim does not match the length of --alphas");
    }
    const auto d = static_cast<Eigen::Index>(c.alphas.size());
    return EuclidParamsD(Matrix::Identity(d, d),
                         Eigen::Map<const Vector>(c.alphas.data(), d));
  }
  json j = read_json_file(c.rotation_path);
  try {
    if (j.is_array()) j = json{{"R", j}};
    if (!c.alphas.empty()) {
      json a = json::array();
      for (Real x : c.alphas) a.push_back(num_json(x));
      j["alphas"] = a;
    }
    if (!j.contains("alphas")) throw DomainError("no alphas: pass --alphas or put them in the R file");
    EuclidParamsD p = euclid_params_d_from_json(j);
    if (c.dim != 0 && c.dim != p.dim()) throw DomainError("--dim does not match R");
    return p;
  } catch (const json::exception& e) {
    throw DomainError("'" + c.rotation_path + "': " + e.what());
  }
}

MultiIndex2 index2(const std::vector<int>& v, const char* flag) {
  if (v.size() != 2) throw DomainError(std::string(flag) + " expects two entries");
  return MultiIndex2(v[0], v[1]);
}

Algorithm algorithm_or(const RunConfig& c, Algorithm fallback) {
  return c.algorithm ? parse_algorithm(*c.algorithm) : fallback;
}

void require_usable(const EuclidParams2& p, Algorithm a) {
  if (std::string msg = algorithm_precondition(p, a); !msg.empty()) {
    throw DegenerateParameterError(msg);
  }
}

json header(const char* command) { return json{{"schema", kSchema}, {"command", command}}; }

json report_json(const VerifyReport& r) {
  return json{{"identity", r.identity},         {"max_residual", num_json(r.max_residual)},
              {"grid", r.grid},                 {"tail_bound", num_json(r.tail_bound)},
              {"tolerance", num_json(r.tolerance)}, {"pass", r.pass},
              {"worst_location", r.worst_location}, {"notes", r.notes}};
}

void print_report(std::ostream& os, const VerifyReport& r) {
  os << fmt::format("{:<20} {}  max_residual={:.3e}  tol={:.1e}  tail_bound={:.3e}\n",
                    r.identity, r.pass ? "PASS" : "FAIL", r.max_residual, r.tolerance,
                    r.tail_bound);
  os << "  grid: " << r.grid << "\n";
  if (!r.worst_location.empty()) os << "  worst: " << r.worst_location << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
}

// ---- eval

int cmd_eval(const RunConfig& c, std::ostream& os) {
  if (c.deg.empty() || c.pt.empty()) throw DomainError("eval needs --deg and --pt");
  json j = header("eval");
  Real value = 0;
  Real estimate = 0;
  Real reference = 0;
  Algorithm algo = Algorithm::Raising;
  if (is_multivariate(c)) {
    const EuclidParamsD p = params_d(c);
    if (static_cast<int>(c.deg.size()) != p.dim() || static_cast<int>(c.pt.size()) != p.dim()) {
      throw DomainError("--deg and --pt need " + std::to_string(p.dim()) + " entries");
    }
    algo = algorithm_or(c, Algorithm::GenFun);
    const MultiIndexD deg(c.deg);
    const MultiIndexD pt(c.pt);
    reference = eval_raising_d(p, deg, pt);
    if (algo == Algorithm::GenFun) {
      value = eval_charlier_d(p, deg, pt);
    } else if (algo == Algorithm::Raising) {
      value = reference;
    } else {
      throw DomainError(std::string(to_string(algo)) + " is defined for d = 2 only");
    }
    estimate = std::numeric_limits<Real>::epsilon() * (deg.total() + 2) * std::abs(value);
    to_json(j["params"], p);
  } else {
    const EuclidParams2 p = params2(c);
    algo = algorithm_or(c, Algorithm::Raising);
    const MultiIndex2 deg = index2(c.deg, "--deg");
    const MultiIndex2 pt = index2(c.pt, "--pt");
    require_usable(p, algo);
    const EvalReport r = evaluate(p, deg, pt, algo);
    value = r.value;
    estimate = r.error_estimate;
    reference = eval_raising(p, deg, pt);
    to_json(j["params"], p);
  }
  const Real discrepancy = mixed_error(value, reference);
  switch (c.format) {
    case Format::Json:
      j["deg"] = c.deg;
      j["pt"] = c.pt;
      j["algorithm"] = to_string(algo);
      j["value"] = num_json(value);
      j["error_estimate"] = num_json(estimate);
      j["reference"] = num_json(reference);
      j["discrepancy"] = num_json(discrepancy);
      os << j.dump(2) << "\n";
      break;
    case Format::Csv:
      os << "deg,pt,algorithm,value,error_estimate,reference,discrepancy\n";
      os << join(c.deg, ';') << ',' << join(c.pt, ';') << ',' << to_string(algo) << ','
         << num(value) << ',' << num(estimate) << ',' << num(reference) << ','
         << num(discrepancy) << "\n";
      break;
    case Format::Plain:
      os << "value: " << num(value) << "\n"
         << "algorithm: " << to_string(algo) << "\n"
         << "error_estimate: " << num(estimate) << "\n"
         << "reference (raising): " << num(reference) << "\n"
         << "discrepancy: " << num(discrepancy) << "\n";
      break;
  }
  return kExitOk;
}

// ---- table

int cmd_table(const RunConfig& c, std::ostream& os) {
  if (is_multivariate(c)) throw DomainError("table covers the bivariate family only");
  const EuclidParams2 p = params2(c);
  const Algorithm algo = algorithm_or(c, Algorithm::Raising);
  require_usable(p, algo);
  const int degmax = c.degmax < 0 ? 2 : c.degmax;
  const int ptmax = c.ptmax < 0 ? 2 : c.ptmax;

  json rows = json::array();
  std::ostringstream text;
  if (c.format == Format::Csv) {
    text << "m,n,i,k,value,algorithm,discrepancy_vs_reference\n";
  } else if (c.format == Format::Plain) {
    text << fmt::format("{:>3} {:>3} {:>3} {:>3} {:>25} {:>15} {:>10}\n", "m", "n", "i", "k",
                        "value", "algorithm", "discrepancy");
  }
  for (int m = 0; m <= degmax; ++m) {
    for (int n = 0; n <= degmax; ++n) {
      for (int i = 0; i <= ptmax; ++i) {
        for (int k = 0; k <= ptmax; ++k) {
          const MultiIndex2 deg(m, n);
          const MultiIndex2 pt(i, k);
          const Real v = evaluate(p, deg, pt, algo).value;
          const Real d = mixed_error(v, eval_raising(p, deg, pt));
          switch (c.format) {
            case Format::Json:
              rows.push_back(json{{"m", m}, {"n", n}, {"i", i}, {"k", k},
                                  {"value", num_json(v)}, {"algorithm", to_string(algo)},
                                  {"discrepancy_vs_reference", num_json(d)}});
              break;
            case Format::Csv:
              text << m << ',' << n << ',' << i << ',' << k << ',' << num(v) << ','
                   << to_string(algo) << ',' << num(d) << "\n";
              break;
            case Format::Plain:
              text << fmt::format("{:>3} {:>3} {:>3} {:>3} {:>25.17g} {:>15} {:>10.2e}\n", m, n,
                                  i, k, v, to_string(algo), d);
              break;
          }
        }
      }
    }
  }
  if (c.format == Format::Json) {
    json j = header("table");
    to_json(j["params"], p);
    j["degmax"] = degmax;
    j["ptmax"] = ptmax;
    j["rows"] = rows;
    os << j.dump(2) << "\n";
  } else {
    os << text.str();
  }
  return kExitOk;
}

// ---- verify

const std::vector<std::string> kSuites = {"orthogonality", "recurrence", "difference", "lowering",
                                          "duality",       "integral",   "orthogonality-d"};

std::vector<VerifyReport> run_suites(const RunConfig& c) {
  std::vector<std::string> suites = c.suites;
  if (suites.empty() || std::find(suites.begin(), suites.end(), "all") != suites.end()) {
    suites = kSuites;
  }
  const int degmax = c.degmax < 0 ? 4 : c.degmax;
  const int ptmax = c.ptmax < 0 ? 10 : c.ptmax;
  const int cutoff = c.cutoff < 0 ? 60 : c.cutoff;
  auto tol = [&](Real fallback) { return c.tol.value_or(fallback); };

  std::vector<VerifyReport> out;
  for (const auto& s : suites) {
    if (s == "orthogonality-d") {
      const EuclidParamsD p = params_d(c);
      out.push_back(verify_orthogonality_d(p, c.degmax < 0 ? 2 : c.degmax,
                                           c.cutoff < 0 ? 40 : c.cutoff, tol(1e-7)));
      continue;
    }
    const EuclidParams2 p = params2(c);
    if (s == "orthogonality") {
      out.push_back(verify_orthogonality(p, degmax, cutoff, tol(1e-8)));
    } else if (s == "recurrence") {
      out.push_back(verify_recurrence(p, degmax, ptmax, tol(1e-9)));
    } else if (s == "difference") {
      out.push_back(verify_difference(p, degmax, ptmax, tol(1e-9)));
    } else if (s == "lowering") {
      out.push_back(verify_lowering(p, degmax, ptmax, tol(1e-10)));
    } else if (s == "duality") {
      out.push_back(verify_duality(p, degmax, tol(1e-10)));
    } else if (s == "integral") {
      if (!c.deg.empty() || !c.pt.empty()) {
        out.push_back(verify_integral(p, index2(c.deg, "--deg"), index2(c.pt, "--pt"), c.nodes,
                                      tol(1e-8)));
        continue;
      }
      const int top = std::min(degmax, 3);
      VerifyReport r;
      r.identity = "integral";
      r.tolerance = tol(1e-8);
      r.grid = fmt::format("m,n,i,k <= {}, {} nodes per axis", top, c.nodes);
      for (int m = 0; m <= top; ++m)
        for (int n = 0; n <= top; ++n)
          for (int i = 0; i <= top; ++i)
            for (int k = 0; k <= top; ++k) {
              const VerifyReport one = verify_integral(p, {m, n}, {i, k}, c.nodes, r.tolerance);
              r.observe(one.max_residual, fmt::format("(m,n,i,k)=({},{},{},{})", m, n, i, k));
            }
      r.finalize();
      out.push_back(r);
    } else {
      throw DomainError("unknown suite '" + s + "'");
    }
  }
  return out;
}

int cmd_verify(const RunConfig& c, std::ostream& os, std::ostream& err) {
  const std::vector<VerifyReport> reports = run_suites(c);
  const bool pass = std::all_of(reports.begin(), reports.end(),
                                [](const VerifyReport& r) { return r.pass; });
  switch (c.format) {
    case Format::Json: {
      json j = header("verify");
      to_json(j["params"], params2(c));
      j["pass"] = pass;
      j["reports"] = json::array();
      for (const auto& r : reports) j["reports"].push_back(report_json(r));
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << "identity,pass,max_residual,tolerance,tail_bound,grid,worst_location\n";
      for (const auto& r : reports) {
        os << r.identity << ',' << (r.pass ? "true" : "false") << ',' << num(r.max_residual)
           << ',' << num(r.tolerance) << ',' << num(r.tail_bound) << ",\"" << r.grid << "\",\""
           << r.worst_location << "\"\n";
      }
      break;
    case Format::Plain:
      for (const auto& r : reports) print_report(os, r);
      os << (pass ? "all identities hold" : "identity violation") << "\n";
      break;
  }
  for (const auto& r : reports) {
    if (r.pass) continue;
    err << fmt::format("violation: {} max residual {:.3e} > {:.1e} at {}", r.identity,
                       r.max_residual, r.tolerance, r.worst_location);
    if (r.tail_bound > 0) err << fmt::format(" (tail bound {:.3e})", r.tail_bound);
    err << "\n";
  }
  return pass ? kExitOk : kExitViolation;
}

// ---- limit

int cmd_limit(const RunConfig& c, std::ostream& os) {
  const EuclidParams2 p = params2(c);
  const MultiIndex2 deg = c.deg.empty() ? MultiIndex2(1, 1) : index2(c.deg, "--deg");
  const MultiIndex2 pt = c.pt.empty() ? MultiIndex2(2, 1) : index2(c.pt, "--pt");
  if (c.sizes.empty()) throw DomainError("--Ns must not be empty");
  const LimitReport r = limit_study(p, deg, pt, c.sizes);
  switch (c.format) {
    case Format::Json: {
      json j = header("limit");
      to_json(j["params"], p);
      j["deg"] = {deg.first, deg.second};
      j["pt"] = {pt.first, pt.second};
      j["charlier"] = num_json(r.charlier);
      j["alt_charlier"] = num_json(r.alt_charlier);
      j["rows"] = json::array();
      for (const auto& row : r.rows) {
        j["rows"].push_back(json{{"N", row.size},
                                 {"krawtchouk", num_json(row.krawtchouk)},
                                 {"error", num_json(row.error)},
                                 {"alt_error", num_json(row.alt_error)}});
      }
      j["decreasing"] = r.decreasing;
      j["alt_decreasing"] = r.alt_decreasing;
      j["terminal_relative_error"] = num_json(r.terminal_relative_error);
      j["terminal_fraction"] = num_json(r.terminal_fraction);
      j["terminal_ok"] = r.terminal_ok;
      j["converged_convention"] = r.converged_convention;
      j["report"] = report_json(r.verify);
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << "N,krawtchouk,charlier,error,alt_error\n";
      for (const auto& row : r.rows) {
        os << row.size << ',' << num(row.krawtchouk) << ',' << num(r.charlier) << ','
           << num(row.error) << ',' << num(row.alt_error) << "\n";
      }
      break;
    case Format::Plain:
      os << "C = " << num(r.charlier) << "\n";
      os << fmt::format("{:>6} {:>25} {:>12} {:>12}\n", "N", "P", "error", "alt_error");
      for (const auto& row : r.rows) {
        os << fmt::format("{:>6} {:>25.17g} {:>12.4e} {:>12.4e}\n", row.size, row.krawtchouk,
                          row.error, row.alt_error);
      }
      os << "strictly decreasing: " << (r.decreasing ? "yes" : "no") << "\n"
         << "terminal relative error: " << num(r.terminal_relative_error) << " (bound "
         << num(r.terminal_fraction) << ")\n"
         << "converged convention: " << r.converged_convention << "\n";
      print_report(os, r.verify);
      break;
  }
  return r.verify.pass ? kExitOk : kExitViolation;
}

// ---- bench

struct BenchRow {
  Algorithm algorithm = Algorithm::Raising;
  long evaluations = 0;
  double best_seconds = 0;
  double mean_seconds = 0;
  Real max_discrepancy = 0;
  std::string status;
};

int cmd_bench(const RunConfig& c, std::ostream& os) {
  const EuclidParams2 p = params2(c);
  const int degmax = c.degmax < 0 ? 6 : c.degmax;
  const int ptmax = c.ptmax < 0 ? 10 : c.ptmax;
  std::vector<Algorithm> algos = {Algorithm::Raising, Algorithm::GenFun,
                                  Algorithm::Hypergeometric, Algorithm::Decomposition};
  if (c.algorithm) algos = {parse_algorithm(*c.algorithm)};

  std::vector<std::pair<MultiIndex2, MultiIndex2>> grid;
  for (int m = 0; m <= degmax; ++m)
    for (int n = 0; m + n <= degmax; ++n)
      for (int i = 0; i <= ptmax; ++i)
        for (int k = 0; k <= ptmax; ++k) grid.push_back({{m, n}, {i, k}});
  std::vector<Real> reference;
  for (const auto& [deg, pt] : grid) reference.push_back(eval_raising(p, deg, pt));

  std::vector<BenchRow> rows;
  for (Algorithm a : algos) {
    BenchRow row;
    row.algorithm = a;
    row.evaluations = static_cast<long>(grid.size());
    if (std::string msg = algorithm_precondition(p, a); !msg.empty()) {
      row.status = "refused: " + msg;
      rows.push_back(row);
      continue;
    }
    auto sweep = [&](bool record) {
      Real sink = 0;
      for (std::size_t g = 0; g < grid.size(); ++g) {
        const Real v = evaluate(p, grid[g].first, grid[g].second, a).value;
        sink += v;
        if (record) row.max_discrepancy = std::max(row.max_discrepancy, mixed_error(v, reference[g]));
      }
      return sink;
    };
    sweep(true);
    volatile Real guard = 0;
    for (int w = 0; w < c.warmup; ++w) guard = guard + sweep(false);
    double total = 0;
    row.best_seconds = std::numeric_limits<double>::infinity();
    for (int r = 0; r < c.repetitions; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      guard = guard + sweep(false);
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      total += dt.count();
      row.best_seconds = std::min(row.best_seconds, dt.count());
    }
    row.mean_seconds = total / c.repetitions;
    row.status = row.max_discrepancy <= c.tol.value_or(1e-10) ? "ok" : "discrepancy";
    rows.push_back(row);
  }

  auto per_eval = [](const BenchRow& r) {
    return r.evaluations ? r.best_seconds * 1e9 / static_cast<double>(r.evaluations) : 0.0;
  };
  const std::string grid_desc = fmt::format("m+n<={} i,k<={}", degmax, ptmax);
  switch (c.format) {
    case Format::Json: {
      json j = header("bench");
      to_json(j["params"], p);
      j["grid"] = grid_desc;
      j["warmup"] = c.warmup;
      j["repetitions"] = c.repetitions;
      j["rows"] = json::array();
      for (const auto& r : rows) {
        j["rows"].push_back(json{{"algorithm", to_string(r.algorithm)},
                                 {"evaluations", r.evaluations},
                                 {"best_seconds", r.best_seconds},
                                 {"mean_seconds", r.mean_seconds},
                                 {"ns_per_eval", per_eval(r)},
                                 {"max_discrepancy", num_json(r.max_discrepancy)},
                                 {"status", r.status}});
      }
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
    case Format::Plain:
      os << "algorithm,evaluations,warmup,repetitions,best_seconds,mean_seconds,ns_per_eval,"
            "max_discrepancy,status\n";
      for (const auto& r : rows) {
        os << to_string(r.algorithm) << ',' << r.evaluations << ',' << c.warmup << ','
           << c.repetitions << ',' << num(r.best_seconds) << ',' << num(r.mean_seconds) << ','
           << num(per_eval(r)) << ',' << num(r.max_discrepancy) << ",\"" << r.status << "\"\n";
      }
      break;
  }
  return kExitOk;
}

void add_common(CLI::App* sub, RunConfig& c) {
  auto* theta = sub->add_option("--theta", c.theta, "rotation angle in radians");
  sub->add_option("--theta-pi-frac", c.theta_pi_frac, "angle as a rational multiple p/q of pi")
      ->excludes(theta);
  sub->add_option("--alpha", c.alpha, "first translation component");
  sub->add_option("--beta", c.beta, "second translation component");
  sub->add_option("--algorithm", c.algorithm, "evaluator")
      ->check(CLI::IsMember({"raising", "genfun", "hyper", "decomp", "hypergeometric",
                             "decomposition"}));
  sub->add_option("--deg", c.deg, "degree m,n (or n1,...,nd)")->delimiter(',');
  sub->add_option("--pt", c.pt, "lattice point i,k (or i1,...,id)")->delimiter(',');
  sub->add_option("--degmax", c.degmax, "largest degree")->check(CLI::NonNegativeNumber);
  sub->add_option("--ptmax", c.ptmax, "largest point coordinate")->check(CLI::NonNegativeNumber);
  sub->add_option("--cutoff", c.cutoff, "summation cutoff per axis")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--nodes", c.nodes, "Gauss-Hermite nodes per axis")->check(CLI::PositiveNumber);
  sub->add_option("--Ns", c.sizes, "Krawtchouk sizes")->delimiter(',')->check(CLI::PositiveNumber);
  const std::map<std::string, Format> formats = {
      {"json", Format::Json}, {"csv", Format::Csv}, {"plain", Format::Plain}};
  sub->add_option("--format", c.format, "json, csv or plain")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("--out", c.out, "write output to this file");
  sub->add_option("--dim", c.dim, "dimension d of the multivariate family")
      ->check(CLI::Range(1, kMaxDimension));
  sub->add_option("--R", c.rotation_path, "JSON file with the d x d rotation");
  sub->add_option("--alphas", c.alphas, "translation a1,...,ad")->delimiter(',');
  sub->add_option("--tol", c.tol, "tolerance override")->check(CLI::PositiveNumber);
}

void write_output(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + c.out + "' for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("write to '" + c.out + "' failed");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Bivariate and d-variate Charlier polynomials from the Euclidean group",
               "charlier_lab"};
  app.require_subcommand(1);
  auto* eval = app.add_subcommand("eval", "evaluate one polynomial value");
  auto* table = app.add_subcommand("table", "tabulate values over a box of degrees and points");
  auto* verify = app.add_subcommand("verify", "check structural identities");
  auto* limit = app.add_subcommand("limit", "Krawtchouk-to-Charlier contraction study");
  auto* bench = app.add_subcommand("bench", "time the evaluators");
  for (auto* sub : {eval, table, verify, limit, bench}) add_common(sub, c);
  verify->add_option("--suite", c.suites, "suites to run (default all)")
      ->delimiter(',')
      ->check(CLI::IsMember([] {
        auto s = kSuites;
        s.push_back("all");
        return s;
      }()));
  bench->add_option("--warmup", c.warmup, "untimed sweeps")->check(CLI::NonNegativeNumber);
  bench->add_option("--repetitions", c.repetitions, "timed sweeps")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    std::ostringstream buffer;
    int code = kExitOk;
    if (eval->parsed()) {
      code = cmd_eval(c, buffer);
    } else if (table->parsed()) {
      code = cmd_table(c, buffer);
    } else if (verify->parsed()) {
      code = cmd_verify(c, buffer, err);
    } else if (limit->parsed()) {
      code = cmd_limit(c, buffer);
    } else {
      code = cmd_bench(c, buffer);
    }
    write_output(c, buffer.str(), out);
    return code;
  } catch (const DegenerateParameterError& e) {
    err << "degenerate parameters: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInvalid;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv = {"charlier_lab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace charlier::cli
