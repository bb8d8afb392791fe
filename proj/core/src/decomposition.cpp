#include "sgevp/decomposition.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <iterator>
#include <numeric>
#include <string>

#include "sgevp/error.hpp"
#include "sgevp/fractional_1d.hpp"

namespace sgevp {

namespace {

constexpr double kMinDenominator = 1e-14;
constexpr Index kMaxWorkingSet = 20;

void check_start(const ProblemInstance& problem, const Vector& x) {
  if (x.size() != problem.size()) throw Error(Errc::DimensionMismatch, "x0 has the wrong dimension");
  if (!x.allFinite()) throw Error(Errc::NonFinite, "x0 must be finite");
  const Index nnz = count_nonzeros(x);
  if (nnz == 0) throw Error(Errc::ZeroVector, "x0 must be nonzero");
  if (nnz > problem.sparsity()) throw Error(Errc::InvalidArgument, "x0 violates the sparsity budget");
  if (problem.lower_bound() && (x.array() < *problem.lower_bound()).any())
    throw Error(Errc::InvalidArgument, "x0 violates the lower bound");
}

SubproblemMethod method_for(const ProblemInstance& problem) {
  return problem.lower_bound() ? SubproblemMethod::CoordinateDescent : SubproblemMethod::Bisection;
}

}  // namespace

void validate(const DecompositionConfig& config, const ProblemInstance& problem) {
  const Index n = problem.size();
  const Index k = config.k();
  if (config.random_count < 0 || config.swap_count < 0)
    throw Error(Errc::InvalidK, "random and swap counts must be >= 0");
  if (config.swap_count % 2 != 0)
    throw Error(Errc::InvalidK, "swap count must be even", static_cast<double>(config.swap_count));
  if (k < 1 || k > std::min(n, kMaxWorkingSet))
    throw Error(Errc::InvalidK,
                "working-set size must lie in [1, min(n, " + std::to_string(kMaxWorkingSet) + ")]",
                static_cast<double>(k));
  if (!(config.theta >= 0.0) || !std::isfinite(config.theta))
    throw Error(Errc::InvalidArgument, "theta must be finite and >= 0", config.theta);
  if (!(config.epsilon >= 0.0)) throw Error(Errc::InvalidArgument, "epsilon must be >= 0");
  if (config.window < 1) throw Error(Errc::InvalidArgument, "window must be >= 1");
  if (config.max_iters < 1) throw Error(Errc::InvalidArgument, "max_iters must be >= 1");
  if (!(config.time_budget_seconds > 0.0))
    throw Error(Errc::InvalidArgument, "time budget must be positive");
  if (config.subsolver == SubproblemMethod::Bisection && problem.lower_bound())
    throw Error(Errc::InvalidArgument, "a lower bound needs the coordinate-descent subsolver");
  if (config.x0) check_start(problem, *config.x0);
}

Vector initial_point(const ProblemInstance& problem) {
  const Index n = problem.size();
  Index best = 0;
  double best_ratio = problem.A()(0, 0) / problem.C()(0, 0);
  for (Index i = 1; i < n; ++i) {
    const double ratio = problem.A()(i, i) / problem.C()(i, i);
    if (ratio < best_ratio) {
      best_ratio = ratio;
      best = i;
    }
  }
  Vector x = Vector::Zero(n);
  x(best) = 1.0;
  return x;
}

Vector random_initial_point(const ProblemInstance& problem, std::mt19937_64& rng) {
  const Index n = problem.size();
  IndexList all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), Index{0});
  IndexList chosen;
  std::sample(all.begin(), all.end(), std::back_inserter(chosen), problem.sparsity(), rng);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector x = Vector::Zero(n);
  for (Index i : chosen) {
    double value = 0.0;
    while (value == 0.0) value = normal(rng);
    x(i) = problem.lower_bound() ? std::abs(value) : value;
  }
  return x;
}

SolveTrace solve(const ProblemInstance& problem, const DecompositionConfig& config) {
  validate(config, problem);
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  std::mt19937_64 rng(config.seed);
  Vector x;
  if (config.x0)
    x = *config.x0;
  else if (config.init == InitRule::RandomSparse)
    x = random_initial_point(problem, rng);
  else
    x = initial_point(problem);

  const Matrix& C = problem.C().matrix();
  double denom = x.dot(C * x);
  double f = objective(problem, x);

  SolveTrace trace;
  trace.solver = config.subsolver == SubproblemMethod::Bisection ? "dec-b" : "dec-c";
  trace.iterations.push_back({0, f, 0.0, denom, 0.0, elapsed(), {}});

  std::deque<double> recent;
  trace.reason = TerminationReason::MaxIterations;
  for (Index t = 1; t <= config.max_iters; ++t) {
    const WorkingSetSelection sel =
        select_hybrid(problem, x, config.random_count, config.swap_count, rng, config.swap_rule);
    const BlockSubproblem sub = build_block_subproblem(problem, x, sel.B, config.theta);
    const SubproblemSolution sol = solve_exact(sub, config.subsolver, config.cd);

    Vector x_new = x;
    for (std::size_t a = 0; a < sel.B.size(); ++a) x_new(sel.B[a]) = sol.z(static_cast<Index>(a));
    double step_sq = (x_new - x).squaredNorm();
    double denom_new = x_new.dot(C * x_new);
    if (!(denom_new > kMinDenominator))
      throw Error(Errc::DenominatorCollapse, "iterate denominator collapsed", denom_new);
    double f_new = objective(problem, x_new);
    // Keep the iterate when rounding in the block solve breaks sufficient decrease.
    if (f_new + config.theta * step_sq / denom_new > f) {
      x_new = x;
      step_sq = 0.0;
      denom_new = denom;
      f_new = f;
    }

    const double decrease = f - f_new;
    const double r_t = f != 0.0 ? decrease / std::abs(f) : decrease;
    x = std::move(x_new);
    f = f_new;
    denom = denom_new;
    trace.iterations.push_back({t, f, r_t, denom, step_sq, elapsed(), sel.B});

    recent.push_back(std::max(r_t, 0.0));
    if (static_cast<Index>(recent.size()) > config.window) recent.pop_front();
    const double mean =
        std::accumulate(recent.begin(), recent.end(), 0.0) / static_cast<double>(recent.size());
    if (mean <= config.epsilon) {
      trace.reason = TerminationReason::Converged;
      break;
    }
    if (elapsed() > config.time_budget_seconds) {
      trace.reason = TerminationReason::TimeBudget;
      break;
    }
  }
  trace.x = std::move(x);
  trace.objective = f;
  return trace;
}

double block_k_measure(const ProblemInstance& problem, const Vector& x, Index k, double theta0) {
  const Index n = problem.size();
  if (k < 1 || k > n) throw Error(Errc::InvalidK, "block size must lie in [1, n]", static_cast<double>(k));
  const double blocks = binomial(n, k);
  if (blocks > 1e6) throw Error(Errc::TooLarge, "too many blocks to enumerate", blocks);
  check_start(problem, x);

  const SubproblemMethod method = method_for(problem);
  IndexList B(static_cast<std::size_t>(k));
  std::iota(B.begin(), B.end(), Index{0});
  double total = 0.0;
  do {
    const BlockSubproblem sub = build_block_subproblem(problem, x, B, theta0);
    const SubproblemSolution sol = solve_exact(sub, method);
    const double current = sub.qfp.value(sub.x_block);
    if (current <= sol.value + 1e-8 * (1.0 + std::abs(sol.value))) continue;
    if (sub.qfp.homogeneous() && theta0 == 0.0) {
      // Minimizers form the line through z; measure the distance to it.
      const double zz = sol.z.squaredNorm();
      const Vector proj = (sol.z.dot(sub.x_block) / zz) * sol.z;
      total += (sub.x_block - proj).squaredNorm();
    } else {
      total += (sol.z - sub.x_block).squaredNorm();
    }
  } while (next_combination(B, n));
  return total / blocks;
}

bool certify_block2_stationary(const ProblemInstance& problem, const Vector& x, double tol) {
  if (x.size() != problem.size()) return false;
  const Index nnz = count_nonzeros(x);
  if (nnz == 0 || nnz > problem.sparsity()) return false;

  for (const SwapDescentEntry& e : swap_descent_table(problem, x, SwapRule::Exchange))
    if (e.descent < -tol) return false;

  const Vector ax = problem.A().matrix() * x;
  const Vector cx = problem.C().matrix() * x;
  const double xax = x.dot(ax);
  const double xcx = x.dot(cx);
  const double f = xax / xcx;
  for (Index i : support_of(x)) {
    OneDimCoefficients coef;
    coef.a = problem.A()(i, i);
    coef.b = ax(i);
    coef.c = 0.5 * xax;
    coef.r = problem.C()(i, i);
    coef.s = cx(i);
    coef.t = 0.5 * xcx;
    if (problem.lower_bound()) coef.lower = *problem.lower_bound() - x(i);
    // A singleton support gives a constant ratio along e_i.
    if (!coef.denominator_bounded_away()) continue;
    if (infimum_1d(coef).value - f < -tol) return false;
  }
  return true;
}

}  // namespace sgevp
