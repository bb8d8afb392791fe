#pragma once

#include <random>
#include <vector>

#include "sgevp/problem.hpp"

namespace sgevp {

enum class Provenance { Random, SwapSupport, SwapZero };

const char* to_string(Provenance p);

// B is kept sorted ascending; provenance[a] describes B[a].
struct WorkingSetSelection {
  IndexList B;
  std::vector<Provenance> provenance;
};

struct SwapDescentEntry {
  Index i;  // leaves the support
  Index j;  // enters the support
  double descent;
};

// Exchange: drop x_i and move along e_j. Literal: keep x and move along e_i, which
// makes the score independent of j. PairBlock: the best of the exchange, the move
// along e_i, and (when the budget has room) the move along e_j alone; each is a
// point the block {i, j} can reach.
enum class SwapRule { PairBlock, Exchange, Literal };

const char* to_string(SwapRule r);

/// Uniform k-subset of {0..n-1}. Throws InvalidK unless 1 <= k <= n.
WorkingSetSelection select_random(Index n, Index k, std::mt19937_64& rng);

/// Best objective reachable by the pair move minus f(x). Requires x_i != 0, x_j == 0.
double swap_descent(const ProblemInstance& problem, const Vector& x, Index i, Index j,
                    SwapRule rule = SwapRule::PairBlock);

/// Every (support, zero) pair, sorted by (descent, i, j).
std::vector<SwapDescentEntry> swap_descent_table(const ProblemInstance& problem,
                                                 const Vector& x,
                                                 SwapRule rule = SwapRule::PairBlock);

/// Top k_swap/2 non-overlapping pairs. Throws InvalidK for odd or non-positive
/// k_swap and InsufficientCoordinates when S(x) or Z(x) is too small.
WorkingSetSelection select_swapping(const ProblemInstance& problem, const Vector& x,
                                    Index k_swap, SwapRule rule = SwapRule::PairBlock);

/// Up to w/2 swap pairs (fewer if S(x) or Z(x) runs out), then uniform backfill from
/// the unused indices so that |B| = r + w.
WorkingSetSelection select_hybrid(const ProblemInstance& problem, const Vector& x, Index r,
                                  Index w, std::mt19937_64& rng,
                                  SwapRule rule = SwapRule::PairBlock);

}  // namespace sgevp
