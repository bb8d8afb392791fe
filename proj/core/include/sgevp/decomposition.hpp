#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>

#include "sgevp/problem.hpp"
#include "sgevp/subproblem.hpp"
#include "sgevp/trace.hpp"
#include "sgevp/working_set.hpp"

namespace sgevp {

enum class InitRule { DiagonalRatio, RandomSparse };

struct DecompositionConfig {
  Index random_count = 6;
  Index swap_count = 6;
  double theta = 1e-5;
  SubproblemMethod subsolver = SubproblemMethod::Bisection;
  CoordinateDescentOptions cd;
  double epsilon = 1e-5;
  Index window = 50;
  Index max_iters = 1000;
  double time_budget_seconds = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;
  SwapRule swap_rule = SwapRule::PairBlock;
  InitRule init = InitRule::DiagonalRatio;
  /// Overrides `init` when set; must be nonzero and feasible.
  std::optional<Vector> x0;

  Index k() const noexcept { return random_count + swap_count; }
};

/// Throws InvalidK or InvalidArgument when the configuration does not fit the problem.
void validate(const DecompositionConfig& config, const ProblemInstance& problem);

/// e_i with i = argmin_i A_ii / C_ii, lowest index on ties.
Vector initial_point(const ProblemInstance& problem);

/// s random coordinates with standard normal values (absolute values under a bound).
Vector random_initial_point(const ProblemInstance& problem, std::mt19937_64& rng);

SolveTrace solve(const ProblemInstance& problem, const DecompositionConfig& config);

/// Mean over all C(n, k) blocks of the squared distance between x_B and the exact
/// block minimizer. Throws TooLarge when C(n, k) > 1e6.
double block_k_measure(const ProblemInstance& problem, const Vector& x, Index k,
                       double theta0 = 0.0);

/// Every swap pair has descent >= -tol and no single support coordinate can improve
/// f by more than tol.
bool certify_block2_stationary(const ProblemInstance& problem, const Vector& x, double tol);

}  // namespace sgevp
