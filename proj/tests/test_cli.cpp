#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "charlier/cli.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = charlier::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> v;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) v.push_back(cell);
  return v;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("charlier_cli_" + name);
}

}  // namespace

TEST(CliEval, ZeroAngleFirstDegree) {
  const Result r = run({"eval", "--theta", "0", "--alpha", "1", "--beta", "1", "--deg", "1,0",
                        "--pt", "5,3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema"], "charlier-lab/1");
  EXPECT_NEAR(j["value"].get<double>(), 4, 1e-14);
  EXPECT_EQ(j["algorithm"], "raising");
  EXPECT_EQ(j["discrepancy"].get<double>(), 0);
}

TEST(CliEval, GroundStateForEveryAlgorithm) {
  for (const char* a : {"raising", "genfun", "hyper", "decomp"}) {
    const Result r = run({"eval", "--theta", "0.7", "--alpha", "0.6", "--beta", "1.9", "--deg",
                          "0,0", "--pt", "4,2", "--algorithm", a, "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(split(rows[1])[3], "1") << a;
  }
}

TEST(CliEval, DegenerateDecomposition) {
  const Result r = run({"eval", "--algorithm", "decomposition", "--theta", "0", "--deg", "1,1",
                        "--pt", "2,2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("decomposition undefined at sinθcosθ=0"), std::string::npos) << r.err;
}

TEST(CliEval, DegenerateHypergeometricNamesDenominator) {
  const Result r = run({"eval", "--algorithm", "hyper", "--theta-pi-frac", "1/4", "--deg", "1,1",
                        "--pt", "2,2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("u11"), std::string::npos) << r.err;
}

TEST(CliEval, InvalidInput) {
  EXPECT_EQ(run({"eval", "--alpha", "0", "--deg", "1,0", "--pt", "1,1"}).code, 2);
  EXPECT_EQ(run({"eval", "--deg", "1", "--pt", "1,1"}).code, 2);
  EXPECT_EQ(run({"eval", "--theta-pi-frac", "1/0", "--deg", "1,0", "--pt", "1,1"}).code, 2);
  EXPECT_EQ(run({"eval", "--format", "xml", "--deg", "1,0", "--pt", "1,1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliEval, ThetaPiFraction) {
  const Result a = run({"eval", "--theta-pi-frac", "1/6", "--deg", "2,1", "--pt", "3,2"});
  const Result b = run({"eval", "--theta", "0.5235987755982988731", "--deg", "2,1", "--pt", "3,2",
                        "--format", "json"});
  const Result c = run({"eval", "--theta-pi-frac", "1/6", "--deg", "2,1", "--pt", "3,2",
                        "--format", "json"});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_NEAR(json::parse(b.out)["value"].get<double>(), json::parse(c.out)["value"].get<double>(),
              1e-15);
  EXPECT_EQ(run({"eval", "--theta-pi-frac", "x/6", "--deg", "2,1", "--pt", "3,2"}).code, 2);
}

TEST(CliEval, Multivariate) {
  const auto path = temp_path("rot.json");
  {
    std::ofstream f(path);
    f << R"({"R": [[0,1,0],[-1,0,0],[0,0,1]], "alphas": [0.8, 1.1, 1.3]})";
  }
  const Result r = run({"eval", "--R", path.string(), "--deg", "1,1,1", "--pt", "2,1,3",
                        "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_LT(j["discrepancy"].get<double>(), 1e-12);
  EXPECT_EQ(j["algorithm"], "genfun");
  EXPECT_EQ(run({"eval", "--R", path.string(), "--deg", "1,1", "--pt", "2,1"}).code, 2);
  EXPECT_EQ(run({"eval", "--R", "/nonexistent/rot.json", "--deg", "1,1,1", "--pt", "2,1,3"}).code,
            2);
  std::filesystem::remove(path);
}

TEST(CliTable, RowsOrderAndDiscrepancy) {
  const std::vector<std::string> args = {"table",    "--theta", "1.1", "--alpha",  "0.8",
                                         "--beta",   "1.7",     "--degmax", "2", "--ptmax",
                                         "2",        "--algorithm", "hyper", "--format", "csv"};
  const Result r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 82u);
  EXPECT_EQ(rows[0], "m,n,i,k,value,algorithm,discrepancy_vs_reference");
  std::vector<std::string> keys;
  for (std::size_t j = 1; j < rows.size(); ++j) {
    const auto cells = split(rows[j]);
    ASSERT_EQ(cells.size(), 7u);
    EXPECT_LT(std::stod(cells[6]), 1e-10);
    keys.push_back(cells[0] + cells[1] + cells[2] + cells[3]);
  }
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_EQ(run(args).out, r.out);
}

TEST(CliTable, WritesDeterministicFile) {
  const auto path = temp_path("table.json");
  const std::vector<std::string> args = {"table", "--degmax", "2", "--ptmax", "2", "--format",
                                         "json", "--out", path.string()};
  ASSERT_EQ(run(args).code, 0);
  std::ifstream first_in(path, std::ios::binary);
  const std::string first((std::istreambuf_iterator<char>(first_in)), {});
  ASSERT_EQ(run(args).code, 0);
  std::ifstream second_in(path, std::ios::binary);
  const std::string second((std::istreambuf_iterator<char>(second_in)), {});
  EXPECT_EQ(first, second);
  const json j = json::parse(first);
  EXPECT_EQ(j["schema"], "charlier-lab/1");
  EXPECT_EQ(j["rows"].size(), 81u);
  std::filesystem::remove(path);
}

TEST(CliTable, IoErrorNamesPath) {
  const Result r = run({"table", "--out", "/nonexistent/dir/table.csv", "--format", "csv"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("/nonexistent/dir/table.csv"), std::string::npos);
}

TEST(CliVerify, DefaultSuitePasses) {
  const Result r = run({"verify", "--theta-pi-frac", "1/6", "--alpha", "1", "--beta", "1",
                        "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["reports"].size(), 7u);
}

TEST(CliVerify, UnderTruncatedOrthogonality) {
  const Result r = run({"verify", "--suite", "orthogonality", "--cutoff", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("tail bound"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("degrees"), std::string::npos) << r.err;
}

TEST(CliVerify, DegenerateDual) {
  const Result r = run({"verify", "--suite", "duality", "--theta-pi-frac", "1/4", "--alpha", "1",
                        "--beta", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("degenerate dual"), std::string::npos) << r.err;
}

TEST(CliVerify, MultivariateSuite) {
  const Result r = run({"verify", "--suite", "orthogonality-d", "--alphas", "0.8,1.1,1.3",
                        "--degmax", "1", "--cutoff", "30"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(CliLimit, GroundStateHasZeroErrors) {
  const Result r = run({"limit", "--deg", "0,0", "--pt", "2,1", "--Ns", "16,64,256", "--format",
                        "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t j = 1; j < rows.size(); ++j) EXPECT_EQ(std::stod(split(rows[j])[3]), 0);
}

TEST(CliLimit, DecreasingErrors) {
  const Result r = run({"limit", "--theta-pi-frac", "1/6", "--deg", "0,1", "--pt", "2,1",
                        "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.out;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["decreasing"].get<bool>());
  EXPECT_EQ(j["converged_convention"], "gen-1");
  EXPECT_EQ(j["rows"].size(), 4u);
}

TEST(CliLimit, SimplexError) {
  EXPECT_EQ(run({"limit", "--deg", "5,5", "--pt", "2,1", "--Ns", "4"}).code, 2);
}

TEST(CliBench, FourAlgorithms) {
  const Result r = run({"bench", "--degmax", "6", "--ptmax", "3", "--format", "csv",
                        "--repetitions", "3", "--warmup", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  const auto header = split(rows[0]);
  EXPECT_EQ(header[2], "warmup");
  EXPECT_EQ(header[3], "repetitions");
  for (std::size_t j = 1; j < rows.size(); ++j) {
    const auto cells = split(rows[j]);
    EXPECT_EQ(cells[3], "3");
    EXPECT_LT(std::stod(cells[7]), 1e-10);
    EXPECT_EQ(cells[8], "\"ok\"");
  }
}

TEST(CliBench, SingleCell) {
  const Result r = run({"bench", "--degmax", "0", "--ptmax", "0", "--algorithm", "raising",
                        "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2u);
  const auto cells = split(rows[1]);
  ASSERT_EQ(cells.size(), split(rows[0]).size());
  EXPECT_EQ(cells[1], "1");
  EXPECT_GT(std::stod(cells[4]), 0);
}

TEST(CliBench, RefusesDegenerateAlgorithms) {
  const Result r = run({"bench", "--theta-pi-frac", "1/4", "--degmax", "2", "--ptmax", "2",
                        "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["repetitions"], 3);
  int refused = 0;
  for (const auto& row : j["rows"]) {
    if (row["status"].get<std::string>().rfind("refused", 0) == 0) ++refused;
  }
  // Only the hypergeometric form divides by the vanishing omega.
  EXPECT_EQ(refused, 1);
}

TEST(CliProcess, ExitCodes) {
  const std::string exe = CHARLIER_LAB_EXE;
  auto status = [&](const std::string& args) {
    const int raw = std::system((exe + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("eval --deg 0,0 --pt 1,1"), 0);
  EXPECT_EQ(status("verify --suite orthogonality --cutoff 5"), 1);
  EXPECT_EQ(status("eval --algorithm decomp --theta 0 --deg 1,0 --pt 1,1"), 2);
}
