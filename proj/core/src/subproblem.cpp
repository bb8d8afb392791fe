#include "sgevp/subproblem.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "sgevp/error.hpp"

namespace sgevp {

namespace {

void check_block(const IndexList& B, Index n) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Index i : B) {
    if (i < 0 || i >= n) throw Error(Errc::IndexOutOfRange, "block index out of range");
    if (seen[static_cast<std::size_t>(i)]) throw Error(Errc::DuplicateIndex, "block repeats an index");
    seen[static_cast<std::size_t>(i)] = 1;
  }
}

}  // namespace

double binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double out = 1.0;
  for (Index i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(out);
}

bool next_combination(IndexList& idx, Index n) {
  const Index k = static_cast<Index>(idx.size());
  Index i = k - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (Index j = i + 1; j < k; ++j)
    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

BlockSubproblem build_block_subproblem(const ProblemInstance& problem, const Vector& x,
                                       const IndexList& B, double theta) {
  const Index n = problem.size();
  if (x.size() != n) throw Error(Errc::DimensionMismatch, "x has the wrong dimension");
  if (!(theta >= 0.0)) throw Error(Errc::InvalidArgument, "theta must be >= 0", theta);
  if (B.empty()) throw Error(Errc::InvalidK, "block must not be empty");
  check_block(B, n);
  if (count_nonzeros(x) > problem.sparsity())
    throw Error(Errc::InvalidArgument, "x violates the sparsity budget");

  const Matrix& A = problem.A().matrix();
  const Matrix& C = problem.C().matrix();
  const Index k = static_cast<Index>(B.size());

  std::vector<char> in_block(static_cast<std::size_t>(n), 0);
  for (Index i : B) in_block[static_cast<std::size_t>(i)] = 1;
  Vector x_n = x;
  for (Index i : B) x_n(i) = 0.0;

  const Vector ax = A * x_n;
  const Vector cx = C * x_n;
  const Vector x_b = sub_vector(x, B);

  Matrix Q(k, k);
  Matrix R(k, k);
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b) {
      Q(a, b) = A(B[static_cast<std::size_t>(a)], B[static_cast<std::size_t>(b)]);
      R(a, b) = C(B[static_cast<std::size_t>(a)], B[static_cast<std::size_t>(b)]);
    }
  Q.diagonal().array() += theta;

  Vector p = sub_vector(ax, B) - theta * x_b;
  Vector c = sub_vector(cx, B);
  const double w = 0.5 * x_n.dot(ax) + 0.5 * theta * x_b.squaredNorm();
  const double v = 0.5 * x_n.dot(cx);

  Index outside = 0;
  for (Index i = 0; i < n; ++i)
    if (!in_block[static_cast<std::size_t>(i)] && x(i) != 0.0) ++outside;

  return BlockSubproblem{
      QfpSubproblem(SymMatrix(Q), std::move(p), w, SymMatrix(R), std::move(c), v,
                    problem.lower_bound()),
      problem.sparsity() - outside, B, x_b};
}

SubproblemSolution solve_exact(const BlockSubproblem& sub, SubproblemMethod method,
                               const CoordinateDescentOptions& cd) {
  const QfpSubproblem& q = sub.qfp;
  const Index k = q.size();
  if (sub.budget < 0) throw Error(Errc::InvalidArgument, "negative budget");
  if (method == SubproblemMethod::Bisection && q.lower_bound())
    throw Error(Errc::InvalidArgument, "bounded subproblems need coordinate descent");

  SubproblemSolution best;
  best.z = Vector::Zero(k);
  if (sub.budget == 0) {
    best.value = q.value(best.z);
    return best;
  }

  const Index size = std::min(sub.budget, k);
  IndexList idx(static_cast<std::size_t>(size));
  std::iota(idx.begin(), idx.end(), Index{0});
  bool found = false;
  do {
    const QfpSubproblem restricted = q.restricted(idx);
    QfpSolution sol;
    if (method == SubproblemMethod::Bisection) {
      sol = solve_bisection(restricted);
    } else {
      Vector start = sub_vector(sub.x_block, idx);
      const bool usable = restricted.denominator(start) > 0.0 &&
                          (!q.lower_bound() || (start.array() >= *q.lower_bound()).all());
      if (!usable) start = default_start(restricted);
      sol = solve_coordinate_descent(restricted, start, cd);
    }
    ++best.supports_tried;
    if (!found || sol.value < best.value) {
      found = true;
      best.value = sol.value;
      best.support = idx;
      best.z.setZero();
      for (std::size_t a = 0; a < idx.size(); ++a) best.z(idx[a]) = sol.y(static_cast<Index>(a));
    }
  } while (next_combination(idx, k));

  best.value = q.value(best.z);
  return best;
}

}  // namespace sgevp
