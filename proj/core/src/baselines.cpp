#include "sgevp/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "sgevp/decomposition.hpp"
#include "sgevp/error.hpp"

namespace sgevp {

namespace {

using Clock = std::chrono::steady_clock;

void check_config(const ProblemInstance& problem, Index s, const BaselineConfig& cfg) {
  if (s < 1 || s > problem.size())
    throw Error(Errc::InvalidArgument, "sparsity must lie in [1, n]", static_cast<double>(s));
  if (cfg.max_iters < 1) throw Error(Errc::InvalidArgument, "max_iters must be >= 1");
  if (cfg.step_size && !(*cfg.step_size > 0.0))
    throw Error(Errc::InvalidArgument, "step size must be positive", *cfg.step_size);
  if (!(cfg.tol >= 0.0)) throw Error(Errc::InvalidArgument, "tol must be >= 0");
}

bool small_change(double before, double after, double tol) {
  const double scale = before != 0.0 ? std::abs(before) : 1.0;
  return std::abs(after - before) <= tol * scale;
}

class Recorder {
 public:
  Recorder(const ProblemInstance& problem, const char* solver) : problem_(problem) {
    trace_.solver = solver;
  }

  void record(const Vector& x, const Vector& previous) {
    const double denom = x.dot(problem_.C().matrix() * x);
    const double f = objective(problem_, x);
    IterationRecord rec;
    rec.t = static_cast<Index>(trace_.iterations.size());
    rec.objective = f;
    if (!trace_.iterations.empty()) {
      const double f_old = trace_.iterations.back().objective;
      rec.relative_decrease = f_old != 0.0 ? (f_old - f) / std::abs(f_old) : f_old - f;
      rec.step_norm_sq = (x - previous).squaredNorm();
    }
    rec.denominator = denom;
    rec.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    trace_.iterations.push_back(std::move(rec));
  }

  SolveTrace finish(Vector x, TerminationReason reason) {
    trace_.objective = trace_.iterations.back().objective;
    trace_.x = std::move(x);
    trace_.reason = reason;
    return std::move(trace_);
  }

 private:
  const ProblemInstance& problem_;
  SolveTrace trace_;
  Clock::time_point start_ = Clock::now();
};

}  // namespace

Vector hard_threshold(const Vector& x, Index s) {
  if (s < 1) throw Error(Errc::InvalidArgument, "s must be >= 1", static_cast<double>(s));
  if (s >= x.size()) return x;
  std::vector<Index> order(static_cast<std::size_t>(x.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return std::abs(x(a)) > std::abs(x(b)); });
  Vector out = Vector::Zero(x.size());
  for (Index a = 0; a < s; ++a) out(order[static_cast<std::size_t>(a)]) = x(order[static_cast<std::size_t>(a)]);
  return out;
}

SolveTrace truncated_power_method(const ProblemInstance& problem, Index s,
                                  const BaselineConfig& cfg) {
  check_config(problem, s, cfg);
  const Index n = problem.size();
  if (!(problem.C().matrix().array() == Matrix::Identity(n, n).array()).all())
    throw Error(Errc::RequiresIdentityC, "the truncated power method needs C = I");

  const Matrix neg_a = -problem.A().matrix();
  const double shift = std::max(0.0, -min_eigenvalue(SymMatrix(neg_a)));
  Matrix M = neg_a;
  M.diagonal().array() += shift;

  Recorder rec(problem, "tpm");
  Vector x = initial_point(problem).normalized();
  rec.record(x, x);
  double f = objective(problem, x);
  for (Index t = 1; t <= cfg.max_iters; ++t) {
    Vector next = hard_threshold(M * x, s);
    const double norm = next.norm();
    if (norm == 0.0) return rec.finish(x, TerminationReason::Stalled);
    next /= norm;
    const double f_next = objective(problem, next);
    rec.record(next, x);
    x = std::move(next);
    const bool done = small_change(f, f_next, cfg.tol);
    f = f_next;
    if (done) return rec.finish(x, TerminationReason::Converged);
  }
  return rec.finish(x, TerminationReason::MaxIterations);
}

SolveTrace truncated_rayleigh_flow(const ProblemInstance& problem, Index s,
                                   const BaselineConfig& cfg) {
  check_config(problem, s, cfg);
  const Matrix& A = problem.A().matrix();
  const Matrix& C = problem.C().matrix();
  const double a_norm = A.norm();
  const double eta0 = cfg.step_size ? *cfg.step_size : (a_norm > 0.0 ? 0.5 / a_norm : 1.0);
  const auto c_normalize = [&](Vector v) {
    v /= std::sqrt(v.dot(C * v));
    return v;
  };

  Recorder rec(problem, "trf");
  Vector x = c_normalize(initial_point(problem));
  rec.record(x, x);
  double f = objective(problem, x);
  for (Index t = 1; t <= cfg.max_iters; ++t) {
    const Vector grad = 2.0 * (A * x - f * (C * x)) / x.dot(C * x);
    double eta = eta0;
    bool accepted = false;
    Vector next;
    double f_next = f;
    for (int trial = 0; trial <= 10; ++trial, eta *= 0.5) {
      Vector cand = hard_threshold(x - eta * grad, s);
      if (count_nonzeros(cand) == 0) continue;
      cand = c_normalize(std::move(cand));
      const double f_cand = objective(problem, cand);
      if (f_cand <= f) {
        next = std::move(cand);
        f_next = f_cand;
        accepted = true;
        break;
      }
    }
    if (!accepted) return rec.finish(x, TerminationReason::Stalled);
    rec.record(next, x);
    x = std::move(next);
    const bool done = small_change(f, f_next, cfg.tol);
    f = f_next;
    if (done) return rec.finish(x, TerminationReason::Converged);
  }
  return rec.finish(x, TerminationReason::MaxIterations);
}

}  // namespace sgevp
