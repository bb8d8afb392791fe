#pragma once

#include <cstdint>
#include <optional>

#include "sgevp/problem.hpp"
#include "sgevp/trace.hpp"

namespace sgevp {

struct BaselineConfig {
  /// Truncated Rayleigh flow step; unset means 1 / (2 ||A||_F).
  std::optional<double> step_size;
  Index max_iters = 1000;
  /// Stop once |f_t - f_{t-1}| <= tol * |f_{t-1}|.
  double tol = 1e-8;
  std::uint64_t seed = 0;
};

/// Keeps the s largest magnitudes; among equal magnitudes the lower index wins.
Vector hard_threshold(const Vector& x, Index s);

/// Power iteration on -A + shift * I with hard thresholding. Throws RequiresIdentityC
/// unless C is exactly the identity.
SolveTrace truncated_power_method(const ProblemInstance& problem, Index s,
                                  const BaselineConfig& cfg = {});

/// Gradient steps on the Rayleigh quotient, truncated to s entries and renormalized to
/// x'Cx = 1. A step that raises f is halved up to 10 times; if every trial raises f the
/// run stops as Stalled.
SolveTrace truncated_rayleigh_flow(const ProblemInstance& problem, Index s,
                                   const BaselineConfig& cfg = {});

}  // namespace sgevp
