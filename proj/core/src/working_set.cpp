#include "sgevp/working_set.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <numeric>
#include <tuple>

#include "sgevp/error.hpp"
#include "sgevp/fractional_1d.hpp"

namespace sgevp {

namespace {

struct Moments {
  Vector ax;
  Vector cx;
  double xax;
  double xcx;
  double f;
};

Moments moments(const ProblemInstance& problem, const Vector& x) {
  Moments m;
  m.ax = problem.A().matrix() * x;
  m.cx = problem.C().matrix() * x;
  m.xax = x.dot(m.ax);
  m.xcx = x.dot(m.cx);
  m.f = m.xax / m.xcx;
  return m;
}

double one_dim_best(const OneDimCoefficients& coef) {
  return infimum_1d(coef).value;
}

// Scores for every j in zeros, given that coordinate i is dropped.
void exchange_row(const ProblemInstance& problem, const Vector& x, const Moments& m, Index i,
                  const IndexList& zeros, std::vector<SwapDescentEntry>& out) {
  const Matrix& A = problem.A().matrix();
  const Matrix& C = problem.C().matrix();
  const double xi = x(i);
  const double vav = m.xax - 2.0 * xi * m.ax(i) + xi * xi * A(i, i);
  const double vcv = m.xcx - 2.0 * xi * m.cx(i) + xi * xi * C(i, i);
  const bool empty = count_nonzeros(x) == 1;
  const double lower = problem.lower_bound() ? *problem.lower_bound()
                                             : -std::numeric_limits<double>::infinity();
  for (Index j : zeros) {
    double best;
    if (empty) {
      best = A(j, j) / C(j, j);
    } else {
      OneDimCoefficients coef;
      coef.a = A(j, j);
      coef.b = m.ax(j) - xi * A(j, i);
      coef.c = 0.5 * vav;
      coef.r = C(j, j);
      coef.s = m.cx(j) - xi * C(j, i);
      coef.t = 0.5 * vcv;
      coef.lower = lower;
      best = one_dim_best(coef);
    }
    out.push_back({i, j, best - m.f});
  }
}

// Best f along e_idx from x, minus f(x).
double line_score(const ProblemInstance& problem, const Vector& x, const Moments& m,
                  Index idx) {
  OneDimCoefficients coef;
  coef.a = problem.A()(idx, idx);
  coef.b = m.ax(idx);
  coef.c = 0.5 * m.xax;
  coef.r = problem.C()(idx, idx);
  coef.s = m.cx(idx);
  coef.t = 0.5 * m.xcx;
  if (problem.lower_bound()) coef.lower = *problem.lower_bound() - x(idx);
  // A singleton support makes the ratio constant along its own axis.
  if (!coef.denominator_bounded_away()) return 0.0;
  return one_dim_best(coef) - m.f;
}

void score_rows(const ProblemInstance& problem, const Vector& x, const Moments& m,
                const IndexList& support, const IndexList& zeros, SwapRule rule,
                std::vector<SwapDescentEntry>& out) {
  if (rule == SwapRule::Literal) {
    for (Index i : support) {
      const double d = line_score(problem, x, m, i);
      for (Index j : zeros) out.push_back({i, j, d});
    }
    return;
  }
  std::vector<double> enter;
  if (rule == SwapRule::PairBlock && count_nonzeros(x) < problem.sparsity())
    for (Index j : zeros) enter.push_back(line_score(problem, x, m, j));
  for (Index i : support) {
    const std::size_t first = out.size();
    exchange_row(problem, x, m, i, zeros, out);
    if (rule != SwapRule::PairBlock) continue;
    const double own = line_score(problem, x, m, i);
    for (std::size_t a = first; a < out.size(); ++a) {
      out[a].descent = std::min(out[a].descent, own);
      if (!enter.empty()) out[a].descent = std::min(out[a].descent, enter[a - first]);
    }
  }
}

void check_x(const ProblemInstance& problem, const Vector& x) {
  if (x.size() != problem.size()) throw Error(Errc::DimensionMismatch, "x has the wrong dimension");
  if (count_nonzeros(x) == 0) throw Error(Errc::ZeroVector, "x must be nonzero");
}

void sort_by_index(WorkingSetSelection& sel) {
  std::vector<std::size_t> order(sel.B.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sel.B[a] < sel.B[b]; });
  WorkingSetSelection out;
  for (std::size_t a : order) {
    out.B.push_back(sel.B[a]);
    out.provenance.push_back(sel.provenance[a]);
  }
  sel = std::move(out);
}

// Greedy non-overlapping pairs from a sorted table.
void take_pairs(const std::vector<SwapDescentEntry>& table, Index pairs, Index n,
                WorkingSetSelection& sel, std::vector<char>& used) {
  used.assign(static_cast<std::size_t>(n), 0);
  Index taken = 0;
  for (const SwapDescentEntry& e : table) {
    if (taken == pairs) break;
    if (used[static_cast<std::size_t>(e.i)] || used[static_cast<std::size_t>(e.j)]) continue;
    used[static_cast<std::size_t>(e.i)] = used[static_cast<std::size_t>(e.j)] = 1;
    sel.B.push_back(e.i);
    sel.provenance.push_back(Provenance::SwapSupport);
    sel.B.push_back(e.j);
    sel.provenance.push_back(Provenance::SwapZero);
    ++taken;
  }
}

}  // namespace

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Random: return "Random";
    case Provenance::SwapSupport: return "SwapSupport";
    case Provenance::SwapZero: return "SwapZero";
  }
  return "Unknown";
}

const char* to_string(SwapRule r) {
  switch (r) {
    case SwapRule::PairBlock: return "pair-block";
    case SwapRule::Exchange: return "exchange";
    case SwapRule::Literal: return "literal";
  }
  return "unknown";
}

WorkingSetSelection select_random(Index n, Index k, std::mt19937_64& rng) {
  if (k < 1 || k > n) throw Error(Errc::InvalidK, "working-set size must lie in [1, n]",
                                  static_cast<double>(k));
  IndexList all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), Index{0});
  WorkingSetSelection sel;
  std::sample(all.begin(), all.end(), std::back_inserter(sel.B), k, rng);
  sel.provenance.assign(sel.B.size(), Provenance::Random);
  return sel;
}

double swap_descent(const ProblemInstance& problem, const Vector& x, Index i, Index j,
                    SwapRule rule) {
  check_x(problem, x);
  const Index n = problem.size();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw Error(Errc::IndexOutOfRange, "swap index out of range");
  if (x(i) == 0.0) throw Error(Errc::InvalidArgument, "i must be in the support");
  if (x(j) != 0.0) throw Error(Errc::InvalidArgument, "j must be in the zero set");
  const Moments m = moments(problem, x);
  std::vector<SwapDescentEntry> row;
  score_rows(problem, x, m, IndexList{i}, IndexList{j}, rule, row);
  return row.front().descent;
}

std::vector<SwapDescentEntry> swap_descent_table(const ProblemInstance& problem,
                                                 const Vector& x, SwapRule rule) {
  check_x(problem, x);
  const Moments m = moments(problem, x);
  const IndexList support = support_of(x);
  const IndexList zeros = zero_set_of(x);
  std::vector<SwapDescentEntry> table;
  table.reserve(support.size() * zeros.size());
  score_rows(problem, x, m, support, zeros, rule, table);
  std::sort(table.begin(), table.end(), [](const SwapDescentEntry& a, const SwapDescentEntry& b) {
    return std::tie(a.descent, a.i, a.j) < std::tie(b.descent, b.i, b.j);
  });
  return table;
}

WorkingSetSelection select_swapping(const ProblemInstance& problem, const Vector& x,
                                    Index k_swap, SwapRule rule) {
  if (k_swap < 2 || k_swap % 2 != 0)
    throw Error(Errc::InvalidK, "swap count must be even and positive", static_cast<double>(k_swap));
  check_x(problem, x);
  const Index pairs = k_swap / 2;
  const Index nnz = count_nonzeros(x);
  if (nnz < pairs || problem.size() - nnz < pairs)
    throw Error(Errc::InsufficientCoordinates, "not enough support or zero coordinates to swap");
  WorkingSetSelection sel;
  std::vector<char> used;
  take_pairs(swap_descent_table(problem, x, rule), pairs, problem.size(), sel, used);
  sort_by_index(sel);
  return sel;
}

WorkingSetSelection select_hybrid(const ProblemInstance& problem, const Vector& x, Index r,
                                  Index w, std::mt19937_64& rng, SwapRule rule) {
  const Index n = problem.size();
  const Index k = r + w;
  if (r < 0 || w < 0 || w % 2 != 0 || k < 1 || k > n)
    throw Error(Errc::InvalidK, "need r, w >= 0, w even and 1 <= r + w <= n",
                static_cast<double>(k));
  check_x(problem, x);

  WorkingSetSelection sel;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  if (w > 0) {
    const Index nnz = count_nonzeros(x);
    const Index pairs = std::min({w / 2, nnz, n - nnz});
    if (pairs > 0) take_pairs(swap_descent_table(problem, x, rule), pairs, n, sel, used);
  }
  const Index missing = k - static_cast<Index>(sel.B.size());
  if (missing > 0) {
    IndexList unused;
    for (Index i = 0; i < n; ++i)
      if (!used[static_cast<std::size_t>(i)]) unused.push_back(i);
    IndexList drawn;
    std::sample(unused.begin(), unused.end(), std::back_inserter(drawn), missing, rng);
    for (Index i : drawn) {
      sel.B.push_back(i);
      sel.provenance.push_back(Provenance::Random);
    }
  }
  sort_by_index(sel);
  return sel;
}

}  // namespace sgevp
