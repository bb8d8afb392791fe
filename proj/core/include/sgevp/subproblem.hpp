#pragma once

#include "sgevp/problem.hpp"
#include "sgevp/qfp.hpp"

namespace sgevp {

// Block problem in z = x_B with x_N fixed:
//   min (h(z, x_N) + theta/2 ||z - x_B||^2) / g(z, x_N)  s.t. ||z||_0 <= budget.
struct BlockSubproblem {
  QfpSubproblem qfp;
  Index budget;
  IndexList block;
  Vector x_block;
};

/// B must hold unique in-range indices; x must satisfy ||x||_0 <= s.
BlockSubproblem build_block_subproblem(const ProblemInstance& problem, const Vector& x,
                                       const IndexList& B, double theta);

enum class SubproblemMethod { Bisection, CoordinateDescent };

struct SubproblemSolution {
  Vector z;
  double value = 0.0;
  IndexList support;  // positions within the block
  Index supports_tried = 0;
};

/// Enumerates every support of size min(budget, k) in lexicographic order and keeps
/// the first strict minimum. Bisection is exact but refuses lower-bounded instances.
SubproblemSolution solve_exact(const BlockSubproblem& sub,
                               SubproblemMethod method = SubproblemMethod::Bisection,
                               const CoordinateDescentOptions& cd = {});

/// C(n, k) as a double so large values do not overflow.
double binomial(Index n, Index k);

/// Advances idx (ascending, values in [0, n)) to the next combination in
/// lexicographic order; returns false after the last one.
bool next_combination(IndexList& idx, Index n);

}  // namespace sgevp
