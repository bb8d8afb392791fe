#include "sgevp/problem.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "sgevp/error.hpp"

namespace sgevp {

ProblemInstance::ProblemInstance(SymMatrix A, SymMatrix C, Index s,
                                 std::optional<double> lower_bound)
    : A_(std::move(A)), C_(std::move(C)), s_(s), lower_(lower_bound) {
  if (A_.size() != C_.size())
    throw Error(Errc::DimensionMismatch, "A and C must have the same dimension");
  if (!A_.matrix().allFinite() || !C_.matrix().allFinite())
    throw Error(Errc::NonFinite, "A and C must be finite");
  if (s_ < 1 || s_ > A_.size())
    throw Error(Errc::InvalidArgument,
                "sparsity must lie in [1, " + std::to_string(A_.size()) + "]",
                static_cast<double>(s_));
  if (lower_ && !(std::isfinite(*lower_) && *lower_ <= 0.0))
    throw Error(Errc::InvalidArgument, "lower bound must be finite and <= 0", *lower_);
  require_positive_definite(C_, "C");
}

ProblemInstance ProblemInstance::with_sparsity(Index s) const {
  return ProblemInstance(A_, C_, s, lower_);
}

double objective(const ProblemInstance& problem, const Vector& x) {
  if (x.size() != problem.size())
    throw Error(Errc::DimensionMismatch, "x has the wrong dimension");
  if ((x.array() == 0.0).all()) throw Error(Errc::ZeroVector, "objective undefined at x = 0");
  return x.dot(problem.A().matrix() * x) / x.dot(problem.C().matrix() * x);
}

Index count_nonzeros(const Vector& x) { return (x.array() != 0.0).count(); }

IndexList support_of(const Vector& x) {
  IndexList out;
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) != 0.0) out.push_back(i);
  return out;
}

IndexList zero_set_of(const Vector& x) {
  IndexList out;
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) == 0.0) out.push_back(i);
  return out;
}

}  // namespace sgevp
