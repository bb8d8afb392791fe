#pragma once

#include "oracles.hpp"
#include "sgevp/problem.hpp"
#include "sgevp/qfp.hpp"
#include "sgevp/subproblem.hpp"

// Random library objects for the tests.
namespace testing_instances {

/// Random QFP with gamma in [0.1, 1.1].
inline sgevp::QfpSubproblem random_qfp(int m, oracle::Rng& rng,
                                       std::optional<double> lower = std::nullopt) {
  const Eigen::MatrixXd Q = oracle::random_symmetric(m, rng);
  const Eigen::MatrixXd R = oracle::random_spd(m, rng, 0.2);
  Eigen::VectorXd p(m), c(m);
  for (int i = 0; i < m; ++i) {
    p(i) = oracle::normal(rng);
    c(i) = oracle::normal(rng);
  }
  const double w = oracle::normal(rng);
  const double v = 0.5 * c.dot(R.ldlt().solve(c)) + 0.5 * oracle::uniform(rng, 0.1, 1.1);
  return sgevp::QfpSubproblem(sgevp::SymMatrix(Q), p, w, sgevp::SymMatrix(R), c, v, lower);
}

inline oracle::QuadRatio as_ratio(const sgevp::QfpSubproblem& q) {
  return {q.Q().matrix(), q.p(), q.w(), q.R().matrix(), q.c(), q.v()};
}

inline sgevp::ProblemInstance random_problem(int n, int s, oracle::Rng& rng,
                                             bool identity_c = false) {
  const Eigen::MatrixXd A = oracle::random_symmetric(n, rng);
  const Eigen::MatrixXd C =
      identity_c ? Eigen::MatrixXd::Identity(n, n) : oracle::random_spd(n, rng, 0.2);
  return sgevp::ProblemInstance(sgevp::SymMatrix(A), sgevp::SymMatrix(C), s);
}

/// Block subproblem of a random dense instance: block {0..m-1}, four fixed coordinates.
inline sgevp::QfpSubproblem random_block_qfp(int m, oracle::Rng& rng, double theta = 1e-5) {
  const int n = m + 4;
  const sgevp::ProblemInstance prob = random_problem(n, n, rng);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = oracle::normal(rng);
  sgevp::IndexList block(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) block[static_cast<std::size_t>(i)] = i;
  return sgevp::build_block_subproblem(prob, x, block, theta).qfp;
}

}  // namespace testing_instances
