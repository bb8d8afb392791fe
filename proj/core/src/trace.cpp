#include "sgevp/trace.hpp"

namespace sgevp {

const char* to_string(TerminationReason r) {
  switch (r) {
    case TerminationReason::Converged: return "Converged";
    case TerminationReason::MaxIterations: return "MaxIterations";
    case TerminationReason::TimeBudget: return "TimeBudget";
    case TerminationReason::Stalled: return "Stalled";
  }
  return "Unknown";
}

bool objective_nonincreasing(const SolveTrace& trace, double slack) {
  for (std::size_t t = 1; t < trace.iterations.size(); ++t)
    if (trace.iterations[t].objective > trace.iterations[t - 1].objective + slack) return false;
  return true;
}

Index first_sufficient_decrease_violation(const SolveTrace& trace, double theta, double slack) {
  for (std::size_t t = 1; t < trace.iterations.size(); ++t) {
    const IterationRecord& cur = trace.iterations[t];
    const double bound = -theta * cur.step_norm_sq / cur.denominator + slack;
    if (cur.objective - trace.iterations[t - 1].objective > bound) return static_cast<Index>(t);
  }
  return -1;
}

}  // namespace sgevp
