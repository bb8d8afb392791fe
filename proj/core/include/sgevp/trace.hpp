#pragma once

#include <string>
#include <vector>

#include "sgevp/linalg.hpp"

namespace sgevp {

enum class TerminationReason { Converged, MaxIterations, TimeBudget, Stalled };

const char* to_string(TerminationReason r);

struct IterationRecord {
  Index t = 0;
  double objective = 0.0;
  double relative_decrease = 0.0;
  double denominator = 0.0;  // x'Cx
  double step_norm_sq = 0.0;  // ||x^t - x^{t-1}||^2
  double seconds = 0.0;
  IndexList working_set;
};

struct SolveTrace {
  std::string solver;
  std::vector<IterationRecord> iterations;
  Vector x;
  double objective = 0.0;
  TerminationReason reason = TerminationReason::MaxIterations;
};

bool objective_nonincreasing(const SolveTrace& trace, double slack = 1e-12);

/// First t >= 1 with f_t - f_{t-1} > -theta * step_t / denom_t + slack, or -1.
Index first_sufficient_decrease_violation(const SolveTrace& trace, double theta,
                                          double slack = 1e-10);

}  // namespace sgevp
