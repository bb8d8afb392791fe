#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "run_spec.hpp"

namespace {

namespace fs = std::filesystem;
using namespace sgevp;
using namespace sgevp::cli;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("sgevp_test_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::string checksum_of(const std::string& report) {
  const auto pos = report.find("fnv1a64=");
  return pos == std::string::npos ? "" : report.substr(pos + 8, 16);
}

TEST(CliExitCodes, Mapping) {
  EXPECT_EQ(exit_code_for(Errc::InvalidK), 2);
  EXPECT_EQ(exit_code_for(Errc::RequiresIdentityC), 2);
  EXPECT_EQ(exit_code_for(Errc::ParseError), 3);
  EXPECT_EQ(exit_code_for(Errc::IoError), 3);
  EXPECT_EQ(exit_code_for(Errc::SingleClass), 3);
  EXPECT_EQ(exit_code_for(Errc::NotPositiveDefinite), 4);
}

TEST(CliExitCodes, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"solve", "--app", "pca"}).code, 2);  // --s missing
  EXPECT_EQ(run({"solve", "--s", "4", "--solver", "qmm"}).code, 2);
  EXPECT_EQ(run({"solve", "--s", "4", "--randn", "30by10"}).code, 2);
}

TEST(CliSolve, OddSwapCountIsAConfigError) {
  const Result r = run({"solve", "--k", "3", "--swap", "3", "--s", "4", "--randn", "40x10",
                        "--out", (scratch("odd") / "t.json").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("even"), std::string::npos) << r.err;
}

TEST(CliSolve, TpmNeedsIdentityC) {
  const Result r = run({"solve", "--solver", "tpm", "--app", "fda", "--randn", "40x10", "--s", "4",
                        "--out", (scratch("tpmfda") / "t.json").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("RequiresIdentityC"), std::string::npos) << r.err;
}

TEST(CliSolve, SparsityOutOfRange) {
  const fs::path dir = scratch("srange");
  EXPECT_EQ(run({"solve", "--randn", "40x10", "--s", "11", "--out", (dir / "t.json").string()}).code, 2);
  EXPECT_EQ(run({"solve", "--randn", "40x10", "--s", "0", "--out", (dir / "t.json").string()}).code, 2);
}

TEST(CliSolve, MissingDataFileIsADataError) {
  const fs::path dir = scratch("nodata");
  EXPECT_EQ(run({"solve", "--data", (dir / "absent.csv").string(), "--s", "2", "--out",
                 (dir / "t.json").string()})
                .code,
            3);
}

TEST(CliGenData, DeterministicChecksum) {
  const fs::path dir = scratch("gen");
  const Result a = run({"gen-data", "--m", "300", "--d", "100", "--seed", "1", "--out",
                        (dir / "a.csv").string()});
  const Result b = run({"gen-data", "--m", "300", "--d", "100", "--seed", "1", "--out",
                        (dir / "b.csv").string()});
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(checksum_of(a.out).size(), 16u);
  EXPECT_EQ(checksum_of(a.out), checksum_of(b.out));
  EXPECT_EQ(read_file(dir / "a.csv"), read_file(dir / "b.csv"));
  const Result c = run({"gen-data", "--m", "300", "--d", "100", "--seed", "2", "--out",
                        (dir / "c.csv").string()});
  EXPECT_NE(checksum_of(a.out), checksum_of(c.out));
}

TEST(CliGenData, ZeroColumnsIsAUsageError) {
  const fs::path dir = scratch("gen0");
  EXPECT_EQ(run({"gen-data", "--m", "300", "--d", "0", "--out", (dir / "a.csv").string()}).code, 2);
  EXPECT_FALSE(fs::exists(dir / "a.csv"));
}

TEST(CliGenData, ShapeIncludesLabelColumn) {
  const fs::path dir = scratch("genshape");
  const fs::path path = dir / "wide.csv";
  ASSERT_EQ(run({"gen-data", "--m", "300", "--d", "2000", "--out", path.string()}).code, 0);
  const auto lines = lines_of(read_file(path));
  ASSERT_EQ(lines.size(), 301u);  // header + rows
  EXPECT_EQ(lines.front().substr(lines.front().rfind(',') + 1), "label");
  for (const std::string& line : lines)
    ASSERT_EQ(std::count(line.begin(), line.end(), ','), 2000);
  const std::string last = lines[1].substr(lines[1].rfind(',') + 1);
  EXPECT_TRUE(last == "1" || last == "-1") << last;
}

TEST(CliSolve, WritesMonotoneTrace) {
  const fs::path dir = scratch("solve");
  const fs::path path = dir / "trace.json";
  const Result r = run({"solve", "--app", "pca", "--randn", "300x100", "--seed", "1", "--solver",
                        "dec-b", "--k", "12", "--random", "6", "--swap", "6", "--s", "15", "--out",
                        path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("objective "), std::string::npos);
  EXPECT_NE(r.out.find("iterations "), std::string::npos);
  EXPECT_NE(r.out.find("seconds "), std::string::npos);

  const Json doc = Json::parse(read_file(path));
  EXPECT_EQ(doc.at("schema").get<int>(), 1);
  EXPECT_EQ(doc.at("solver").get<std::string>(), "dec-b");
  const Json& iters = doc.at("iterations");
  ASSERT_GE(iters.size(), 2u);
  for (std::size_t t = 1; t < iters.size(); ++t) {
    EXPECT_LE(iters[t].at("f").get<double>(), iters[t - 1].at("f").get<double>() + 1e-12);
    EXPECT_EQ(iters[t].at("B").size(), 12u);
    for (const char* key : {"t", "r_t", "denom", "secs"}) EXPECT_TRUE(iters[t].contains(key));
  }
  const auto x = doc.at("final").at("x").get<std::vector<double>>();
  EXPECT_EQ(x.size(), 100u);
  EXPECT_LE(std::count_if(x.begin(), x.end(), [](double v) { return v != 0.0; }), 15);
  EXPECT_DOUBLE_EQ(doc.at("final").at("f").get<double>(), iters.back().at("f").get<double>());
}

TEST(CliSolve, DumpConfigShowsDefaults) {
  const Result r = run({"solve", "--s", "10", "--dump-config"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("theta").get<double>(), 1e-5);
  EXPECT_EQ(j.at("epsilon").get<double>(), 1e-5);
  EXPECT_EQ(j.at("window").get<Index>(), 50);
  EXPECT_EQ(j.at("max_iters").get<Index>(), 1000);
  EXPECT_EQ(j.at("swap_rule").get<std::string>(), "pair-block");
}

TEST(CliSolve, SwapRuleOption) {
  Json j = Json::parse(run({"solve", "--s", "4", "--swap-rule", "exchange", "--dump-config"}).out);
  EXPECT_EQ(j.at("swap_rule").get<std::string>(), "exchange");
  j = Json::parse(run({"solve", "--s", "4", "--swap-literal", "--dump-config"}).out);
  EXPECT_EQ(j.at("swap_rule").get<std::string>(), "literal");
  EXPECT_EQ(run({"solve", "--s", "4", "--swap-rule", "greedy", "--dump-config"}).code, 2);
}

TEST(CliSolve, PairwiseConfigurationIsLabelledCwaEquivalent) {
  const fs::path dir = scratch("cwa");
  const Result r = run({"solve", "--randn", "40x10", "--s", "3", "--random", "0", "--swap", "2",
                        "--theta", "0", "--out", (dir / "t.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("label CWA-equivalent"), std::string::npos) << r.out;
  const Json doc = Json::parse(read_file(dir / "t.json"));
  EXPECT_EQ(doc.at("label").get<std::string>(), "CWA-equivalent");
  EXPECT_EQ(doc.at("solver").get<std::string>(), "dec-b");

  SolverSpec spec;
  EXPECT_EQ(run_label(spec), "dec-b");
  spec.solver = "tpm";
  spec.random = 0;
  spec.swap = 2;
  spec.theta = 0.0;
  EXPECT_EQ(run_label(spec), "tpm");
}

TEST(CliSolve, KAloneSplitsIntoRandomAndSwap) {
  Json j = Json::parse(run({"solve", "--s", "4", "--k", "8", "--dump-config"}).out);
  EXPECT_EQ(j.at("random").get<Index>() + j.at("swap").get<Index>(), 8);
  EXPECT_EQ(j.at("swap").get<Index>() % 2, 0);
  EXPECT_EQ(run({"solve", "--s", "4", "--k", "8", "--random", "2", "--swap", "4"}).code, 2);
}

TEST(CliBench, TableCardinalityAndFiles) {
  const fs::path dir = scratch("bench");
  const Result r = run({"bench", "--randn", "60x20", "--s-list", "4,8", "--solvers", "dec-b,tpm",
                        "--max-iters", "30", "--svg", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines_of(read_file(dir / "objective_vs_s.csv"));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "solver,s,objective,iterations,seconds");
  for (const char* solver : {"dec-b", "tpm"})
    for (const char* s : {"4", "8"}) {
      const std::string stem = std::string(solver) + "_" + s;
      EXPECT_TRUE(fs::exists(dir / ("run_" + stem + ".json"))) << stem;
      const auto trace = lines_of(read_file(dir / ("trace_" + stem + ".csv")));
      ASSERT_GE(trace.size(), 2u);
      EXPECT_EQ(trace[0], "iter,seconds,objective");
    }
  EXPECT_NE(read_file(dir / "objective_vs_s.svg").find("<polyline"), std::string::npos);
}

TEST(CliBench, RerunIsByteIdentical) {
  const fs::path a = scratch("bench_a");
  const fs::path b = scratch("bench_b");
  const std::vector<std::string> base{"bench", "--randn", "60x20", "--s-list", "4,6",
                                      "--solvers", "dec-b,trf", "--max-iters", "30",
                                      "--omit-timing", "--out"};
  auto args = base;
  args.push_back(a.string());
  ASSERT_EQ(run(args).code, 0);
  args.back() = b.string();
  ASSERT_EQ(run(args).code, 0);
  for (const auto& entry : fs::directory_iterator(a))
    EXPECT_EQ(read_file(entry.path()), read_file(b / entry.path().filename()))
        << entry.path().filename();
}

TEST(CliBench, RejectsUnknownSolver) {
  EXPECT_EQ(run({"bench", "--randn", "60x20", "--s-list", "4", "--solvers", "dec-b,cwa", "--out",
                 scratch("bench_bad").string()})
                .code,
            2);
}

TEST(CliCertify, ConvergedPassesAndPerturbedFails) {
  const fs::path dir = scratch("certify");
  const fs::path path = dir / "trace.json";
  ASSERT_EQ(run({"solve", "--randn", "80x16", "--s", "4", "--random", "0", "--swap", "4",
                 "--epsilon", "1e-12", "--window", "5", "--max-iters", "5000", "--out",
                 path.string()})
                .code,
            0);
  Result r = run({"certify", "--trace", path.string(), "--tol", "1e-8"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("block-2: PASS"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("block-4 measure: "), std::string::npos) << r.out;

  Json doc = Json::parse(read_file(path));
  auto x = doc.at("final").at("x").get<std::vector<double>>();
  const auto nz = std::find_if(x.begin(), x.end(), [](double v) { return v != 0.0; });
  ASSERT_NE(nz, x.end());
  *nz *= 1.5;
  doc["final"]["x"] = x;
  const fs::path bad = dir / "perturbed.json";
  write_atomic(bad, doc.dump(2));
  r = run({"certify", "--trace", bad.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("block-2: FAIL"), std::string::npos) << r.out;
}

TEST(CliCertify, LargeMeasureIsSkipped) {
  const fs::path dir = scratch("certify_big");
  DatasetSpec data;
  data.m = 300;
  data.d = 2000;
  SolverSpec spec;
  spec.random = 4;
  spec.swap = 6;
  Json doc;
  doc["schema"] = 1;
  doc["solver"] = "dec-b";
  doc["config"] = config_json(spec, 10);
  doc["dataset"] = dataset_json(data);
  doc["iterations"] = Json::array();
  std::vector<double> x(2000, 0.0);
  for (int i = 0; i < 10; ++i) x[static_cast<std::size_t>(i)] = 1.0;
  doc["final"] = {{"x", x}, {"f", 0.0}, {"reason", "Converged"}};
  write_atomic(dir / "t.json", doc.dump());
  const Result r = run({"certify", "--trace", (dir / "t.json").string()});
  EXPECT_NE(r.out.find("block-10 measure: skipped"), std::string::npos) << r.out << r.err;
  EXPECT_TRUE(r.code == 0 || r.code == 1);
}

TEST(CliCertify, BadTraceFiles) {
  const fs::path dir = scratch("certify_bad");
  EXPECT_EQ(run({"certify", "--trace", (dir / "absent.json").string()}).code, 3);
  write_atomic(dir / "junk.json", "{not json");
  EXPECT_EQ(run({"certify", "--trace", (dir / "junk.json").string()}).code, 3);
  write_atomic(dir / "partial.json", "{\"schema\": 1}");
  EXPECT_EQ(run({"certify", "--trace", (dir / "partial.json").string()}).code, 3);
}

}  // namespace
