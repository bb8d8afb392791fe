#pragma once

#include <optional>

#include "sgevp/linalg.hpp"

namespace sgevp {

// min x'Ax / x'Cx subject to ||x||_0 <= s, x != 0, and optionally x >= lower_bound.
//
// A nonzero lower bound must be <= 0 so that zero stays feasible for every
// coordinate outside the support.
class ProblemInstance {
 public:
  ProblemInstance(SymMatrix A, SymMatrix C, Index s,
                  std::optional<double> lower_bound = std::nullopt);

  Index size() const noexcept { return A_.size(); }
  const SymMatrix& A() const noexcept { return A_; }
  const SymMatrix& C() const noexcept { return C_; }
  Index sparsity() const noexcept { return s_; }
  const std::optional<double>& lower_bound() const noexcept { return lower_; }

  /// Copy with a different sparsity budget.
  ProblemInstance with_sparsity(Index s) const;

 private:
  SymMatrix A_;
  SymMatrix C_;
  Index s_;
  std::optional<double> lower_;
};

/// x'Ax / x'Cx. Throws ZeroVector for x == 0.
double objective(const ProblemInstance& problem, const Vector& x);

Index count_nonzeros(const Vector& x);

/// Indices with x_i != 0, ascending.
IndexList support_of(const Vector& x);

/// Indices with x_i == 0, ascending.
IndexList zero_set_of(const Vector& x);

}  // namespace sgevp
