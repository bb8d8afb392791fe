#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cli.hpp"
#include "run_spec.hpp"
#include "sgevp/dataset_io.hpp"
#include "sgevp/decomposition.hpp"
#include "svg.hpp"

namespace sgevp::cli {

namespace {

namespace fs = std::filesystem;

struct DatasetOptions {
  std::string app = "pca";
  std::string randn = "300x100";
  std::uint64_t seed = 1;
  std::string data;
  std::string format;
  bool labeled = false;
  Index dim = 0;
  double ridge = kDefaultRidge;
};

struct SolverOptions {
  SolverSpec spec;
  Index k = 0;
  Index random = 0;
  Index swap = 0;
  CLI::Option* k_opt = nullptr;
  CLI::Option* random_opt = nullptr;
  CLI::Option* swap_opt = nullptr;
  double time_budget = 0.0;
  CLI::Option* time_budget_opt = nullptr;
  double lower_bound = 0.0;
  CLI::Option* lower_bound_opt = nullptr;
  double step_size = 0.0;
  CLI::Option* step_size_opt = nullptr;
};

void add_dataset_options(CLI::App* cmd, DatasetOptions& o) {
  cmd->add_option("--app", o.app, "Application: pca, fda or cca")
      ->check(CLI::IsMember({"pca", "fda", "cca"}))
      ->capture_default_str();
  cmd->add_option("--randn", o.randn, "Synthetic Gaussian data as MxD")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Seed for synthetic data")->capture_default_str();
  cmd->add_option("--data", o.data, "Dataset file (CSV or LIBSVM); overrides --randn");
  cmd->add_option("--format", o.format, "csv or libsvm; default by extension")
      ->check(CLI::IsMember({"csv", "libsvm"}));
  cmd->add_flag("--labeled", o.labeled, "CSV input has a trailing label column");
  cmd->add_option("--dim", o.dim, "LIBSVM dimension (0 infers it)");
  cmd->add_option("--ridge", o.ridge, "Relative ridge for FDA/CCA")->capture_default_str();
}

void add_solver_options(CLI::App* cmd, SolverOptions& o) {
  SolverSpec& s = o.spec;
  o.k_opt = cmd->add_option("--k", o.k, "Working-set size (r + w)");
  o.random_opt = cmd->add_option("--random", o.random, "Randomly selected coordinates r");
  o.swap_opt = cmd->add_option("--swap", o.swap, "Swap-selected coordinates w (even)");
  cmd->add_option("--theta", s.theta, "Proximal weight")->capture_default_str();
  cmd->add_option("--epsilon", s.epsilon, "Stopping tolerance on the mean relative decrease")
      ->capture_default_str();
  cmd->add_option("--window", s.window, "Stopping window M")->capture_default_str();
  cmd->add_option("--max-iters", s.max_iters, "Iteration cap T")->capture_default_str();
  o.time_budget_opt = cmd->add_option("--time-budget", o.time_budget, "Wall-clock budget in seconds");
  cmd->add_option("--solver-seed", s.solver_seed, "Seed for working-set selection")
      ->capture_default_str();
  cmd->add_option("--swap-rule", s.swap_rule, "Pair scoring: pair-block, exchange or literal")
      ->check(CLI::IsMember({"pair-block", "exchange", "literal"}))
      ->capture_default_str();
  cmd->add_flag_callback("--swap-literal", [&s] { s.swap_rule = "literal"; },
                         "Same as --swap-rule literal");
  cmd->add_option("--init", s.init, "Initial point: diag or random")
      ->check(CLI::IsMember({"diag", "random"}))
      ->capture_default_str();
  o.lower_bound_opt = cmd->add_option("--lower-bound", o.lower_bound, "Elementwise lower bound (<= 0)");
  o.step_size_opt = cmd->add_option("--step-size", o.step_size, "TRF step size");
  cmd->add_option("--tol", s.tol, "Baseline relative objective tolerance")->capture_default_str();
}

DatasetSpec resolve(const DatasetOptions& o) {
  DatasetSpec spec;
  spec.app = parse_app(o.app);
  spec.ridge = o.ridge;
  if (!o.data.empty()) {
    spec.from_file = true;
    spec.path = o.data;
    spec.format = o.format;
    spec.labeled = o.labeled;
    spec.dim = o.dim;
    return spec;
  }
  const auto x = o.randn.find('x');
  long long m = 0;
  long long d = 0;
  try {
    if (x == std::string::npos) throw std::invalid_argument("no x");
    std::size_t used = 0;
    m = std::stoll(o.randn.substr(0, x), &used);
    if (used != x) throw std::invalid_argument("m");
    d = std::stoll(o.randn.substr(x + 1), &used);
    if (used != o.randn.size() - x - 1) throw std::invalid_argument("d");
  } catch (const std::logic_error&) {
    throw Error(Errc::InvalidArgument, "--randn expects MxD, got '" + o.randn + "'");
  }
  if (m < 1 || d < 1) throw Error(Errc::InvalidArgument, "--randn needs m, d >= 1");
  spec.m = m;
  spec.d = d;
  spec.seed = o.seed;
  return spec;
}

SolverSpec resolve(SolverOptions& o) {
  SolverSpec spec = o.spec;
  const bool has_k = o.k_opt->count() > 0;
  const bool has_r = o.random_opt->count() > 0;
  const bool has_w = o.swap_opt->count() > 0;
  const Index k = has_k ? o.k : 12;
  if (has_r && has_w) {
    spec.random = o.random;
    spec.swap = o.swap;
    if (has_k && o.random + o.swap != o.k)
      throw Error(Errc::InvalidK, "--random + --swap must equal --k");
  } else if (has_r) {
    spec.random = o.random;
    spec.swap = k - o.random;
  } else if (has_w) {
    spec.swap = o.swap;
    spec.random = k - o.swap;
  } else if (has_k) {
    spec.swap = 2 * (k / 4);
    spec.random = k - spec.swap;
  }
  if (spec.random < 0 || spec.swap < 0)
    throw Error(Errc::InvalidK, "random and swap counts must be >= 0");
  if (spec.swap % 2 != 0)
    throw Error(Errc::InvalidK, "swap count must be even", static_cast<double>(spec.swap));
  if (o.time_budget_opt->count()) spec.time_budget = o.time_budget;
  if (o.lower_bound_opt->count()) spec.lower_bound = o.lower_bound;
  if (o.step_size_opt->count()) spec.step_size = o.step_size;
  if (std::find(known_solvers().begin(), known_solvers().end(), spec.solver) == known_solvers().end())
    throw Error(Errc::InvalidArgument, "unknown solver '" + spec.solver + "'");
  return spec;
}

std::string format_seconds(double s) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(3) << s;
  return ss.str();
}

int cmd_gen_data(Index m, Index d, std::uint64_t seed, const std::string& out_path,
                 std::ostream& out) {
  if (m < 1 || d < 1) throw Error(Errc::InvalidArgument, "--m and --d must be >= 1");
  const Dataset data = gen_randn(m, d, seed);
  std::ostringstream csv;
  write_csv(csv, data);
  const std::string bytes = csv.str();
  write_atomic(out_path, bytes);
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  out << "wrote " << out_path << " rows=" << m << " columns=" << d + 1 << " fnv1a64=" << hex << '\n';
  return kOk;
}

int cmd_solve(const DatasetSpec& data_spec, const SolverSpec& spec, Index s,
              const std::string& out_path, bool dump_config, bool omit_timing,
              std::ostream& out) {
  if (dump_config) {
    out << config_json(spec, s).dump(2) << '\n';
    return kOk;
  }
  const Dataset data = load_dataset(data_spec);
  const ProblemInstance problem = build_problem(data_spec, data, s, spec.lower_bound);
  const SolveTrace trace = run_solver(problem, spec);
  write_atomic(out_path, trace_json(trace, spec, s, data_spec, omit_timing).dump(2) + "\n");
  const double secs = omit_timing || trace.iterations.empty() ? 0.0 : trace.iterations.back().seconds;
  out << "solver " << trace.solver << '\n'
      << "label " << run_label(spec) << '\n'
      << "objective " << format_double(trace.objective) << '\n'
      << "iterations " << trace.iterations.size() - 1 << '\n'
      << "seconds " << format_seconds(secs) << '\n'
      << "reason " << to_string(trace.reason) << '\n'
      << "trace " << out_path << '\n';
  return kOk;
}

unsigned worker_count(std::size_t jobs) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SGEVP_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) n = static_cast<unsigned>(v);
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

struct BenchJob {
  std::string solver;
  Index s;
  SolveTrace trace;
  std::exception_ptr error;
};

int cmd_bench(const DatasetSpec& data_spec, const SolverSpec& base, const std::vector<Index>& s_list,
              const std::vector<std::string>& solvers, const std::string& out_dir, bool svg,
              bool omit_timing, std::ostream& out) {
  if (s_list.empty()) throw Error(Errc::InvalidArgument, "--s-list must not be empty");
  if (solvers.empty()) throw Error(Errc::InvalidArgument, "--solvers must not be empty");
  for (const std::string& name : solvers)
    if (std::find(known_solvers().begin(), known_solvers().end(), name) == known_solvers().end())
      throw Error(Errc::InvalidArgument, "unknown solver '" + name + "'");

  const Dataset data = load_dataset(data_spec);
  std::vector<ProblemInstance> problems;
  for (Index s : s_list) problems.push_back(build_problem(data_spec, data, s, base.lower_bound));

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error(Errc::IoError, "cannot create " + out_dir + ": " + ec.message());

  std::vector<BenchJob> jobs;
  for (const std::string& name : solvers)
    for (Index s : s_list) jobs.push_back({name, s, {}, nullptr});

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      BenchJob& job = jobs[i];
      try {
        SolverSpec spec = base;
        spec.solver = job.solver;
        const std::size_t p = i % s_list.size();
        job.trace = run_solver(problems[p], spec);
        const fs::path dir(out_dir);
        const std::string stem = job.solver + "_" + std::to_string(job.s);
        std::ostringstream csv;
        csv << "iter,seconds,objective\n";
        for (const IterationRecord& rec : job.trace.iterations)
          csv << rec.t << ',' << format_double(omit_timing ? 0.0 : rec.seconds) << ','
              << format_double(rec.objective) << '\n';
        write_atomic(dir / ("trace_" + stem + ".csv"), csv.str());
        write_atomic(dir / ("run_" + stem + ".json"),
                     trace_json(job.trace, spec, job.s, data_spec, omit_timing).dump(2) + "\n");
      } catch (...) {
        job.error = std::current_exception();
      }
    }
  };
  const unsigned threads = worker_count(jobs.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const BenchJob& job : jobs)
    if (job.error) std::rethrow_exception(job.error);

  std::ostringstream table;
  table << "solver,s,objective,iterations,seconds\n";
  std::vector<Series> series;
  for (const BenchJob& job : jobs) {
    const double secs = omit_timing ? 0.0 : job.trace.iterations.back().seconds;
    table << job.solver << ',' << job.s << ',' << format_double(job.trace.objective) << ','
          << job.trace.iterations.size() - 1 << ',' << format_double(secs) << '\n';
    out << job.solver << " s=" << job.s << " objective=" << format_double(job.trace.objective)
        << " iterations=" << job.trace.iterations.size() - 1 << '\n';
    if (series.empty() || series.back().label != job.solver) series.push_back({job.solver, {}, {}});
    series.back().x.push_back(static_cast<double>(job.s));
    series.back().y.push_back(job.trace.objective);
  }
  write_atomic(fs::path(out_dir) / "objective_vs_s.csv", table.str());
  if (svg)
    write_atomic(fs::path(out_dir) / "objective_vs_s.svg", line_plot_svg(series, "s", "objective"));
  out << "wrote " << (fs::path(out_dir) / "objective_vs_s.csv").string() << '\n';
  return kOk;
}

int cmd_certify(const std::string& trace_path, double tol, Index k_opt, double theta0,
                std::ostream& out) {
  Json doc;
  try {
    doc = Json::parse(read_file(trace_path));
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, "invalid trace JSON: " + std::string(e.what()));
  }
  DatasetSpec data_spec;
  SolverSpec spec;
  Index s = 0;
  std::vector<double> xs;
  try {
    if (doc.at("schema").get<int>() != 1) throw Error(Errc::ParseError, "unsupported trace schema");
    data_spec = dataset_from_json(doc.at("dataset"));
    spec = solver_from_json(doc.at("config"));
    s = doc.at("config").at("s").get<Index>();
    xs = doc.at("final").at("x").get<std::vector<double>>();
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, "incomplete trace JSON: " + std::string(e.what()));
  }
  const Dataset data = load_dataset(data_spec);
  const ProblemInstance problem = build_problem(data_spec, data, s, spec.lower_bound);
  if (static_cast<Index>(xs.size()) != problem.size())
    throw Error(Errc::DimensionMismatch, "solution length does not match the problem");
  const Vector x = Eigen::Map<const Vector>(xs.data(), static_cast<Index>(xs.size()));

  const bool pass = certify_block2_stationary(problem, x, tol);
  out << "objective " << format_double(objective(problem, x)) << '\n';
  out << "block-2: " << (pass ? "PASS" : "FAIL") << '\n';
  const Index k = std::min(k_opt > 0 ? k_opt : std::max<Index>(spec.k(), 1), problem.size());
  try {
    const double measure = block_k_measure(problem, x, k, theta0);
    out << "block-" << k << " measure: " << format_double(measure) << '\n';
  } catch (const Error& e) {
    if (e.code() != Errc::TooLarge) throw;
    out << "block-" << k << " measure: skipped (C(" << problem.size() << ", " << k
        << ") exceeds 1e6 blocks)\n";
  }
  return pass ? kOk : kVerdictFail;
}

}  // namespace

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::InvalidArgument:
    case Errc::InvalidK:
    case Errc::InsufficientCoordinates:
    case Errc::RequiresIdentityC:
    case Errc::TooLarge:
      return kConfigError;
    case Errc::ParseError:
    case Errc::EmptyFile:
    case Errc::IoError:
    case Errc::DegenerateData:
    case Errc::SingleClass:
    case Errc::DimensionMismatch:
    case Errc::NonFinite:
      return kDataError;
    default:
      return kNumericalError;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse generalized eigenvalue solver harness", "sgevp"};
  app.require_subcommand(1);

  Index gen_m = 300;
  Index gen_d = 100;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen-data", "Write a randn dataset as CSV");
  gen->add_option("--m", gen_m, "Rows")->capture_default_str();
  gen->add_option("--d", gen_d, "Columns")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output CSV")->required();

  DatasetOptions solve_data;
  SolverOptions solve_solver;
  Index solve_s = 0;
  std::string solve_out = "trace.json";
  bool dump_config = false;
  bool solve_omit_timing = false;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one problem and write a JSON trace");
  add_dataset_options(solve_cmd, solve_data);
  solve_cmd->add_option("--solver", solve_solver.spec.solver, "dec-b, dec-c, tpm or trf")
      ->capture_default_str();
  add_solver_options(solve_cmd, solve_solver);
  solve_cmd->add_option("--s", solve_s, "Sparsity budget")->required();
  solve_cmd->add_option("--out", solve_out, "Trace JSON path")->capture_default_str();
  solve_cmd->add_flag("--dump-config", dump_config, "Print the resolved configuration and exit");
  solve_cmd->add_flag("--omit-timing", solve_omit_timing, "Write 0 for every timing field");

  DatasetOptions bench_data;
  SolverOptions bench_solver;
  std::vector<Index> s_list{4, 8, 12, 16, 20, 24, 28, 32, 36, 40};
  std::vector<std::string> solvers{"dec-b", "tpm", "trf"};
  std::string bench_out;
  bool svg = false;
  bool bench_omit_timing = false;
  CLI::App* bench = app.add_subcommand("bench", "Run solvers across sparsity levels");
  add_dataset_options(bench, bench_data);
  add_solver_options(bench, bench_solver);
  bench->add_option("--s-list", s_list, "Comma-separated sparsity levels")->delimiter(',');
  bench->add_option("--solvers", solvers, "Comma-separated solver names")->delimiter(',');
  bench->add_option("--out", bench_out, "Output directory")->required();
  bench->add_flag("--svg", svg, "Also write objective_vs_s.svg");
  bench->add_flag("--omit-timing", bench_omit_timing, "Write 0 for every timing field");

  std::string cert_trace;
  double cert_tol = 1e-6;
  Index cert_k = 0;
  double cert_theta0 = 0.0;
  CLI::App* cert = app.add_subcommand("certify", "Check stationarity of a saved solution");
  cert->add_option("--trace", cert_trace, "Trace JSON written by solve or bench")->required();
  cert->add_option("--tol", cert_tol, "Descent tolerance")->capture_default_str();
  cert->add_option("--k", cert_k, "Block size for the exhaustive measure (default: config k)");
  cert->add_option("--theta0", cert_theta0, "Proximal weight inside the measure")
      ->capture_default_str();

  std::vector<std::string> argv_store{"sgevp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (*gen) return cmd_gen_data(gen_m, gen_d, gen_seed, gen_out, out);
    if (*solve_cmd)
      return cmd_solve(resolve(solve_data), resolve(solve_solver), solve_s, solve_out, dump_config,
                       solve_omit_timing, out);
    if (*bench)
      return cmd_bench(resolve(bench_data), resolve(bench_solver), s_list, solvers, bench_out, svg,
                       bench_omit_timing, out);
    if (*cert) return cmd_certify(cert_trace, cert_tol, cert_k, cert_theta0, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalError;
  }
  return kConfigError;
}

}  // namespace sgevp::cli
