#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sgevp/problem.hpp"

namespace sgevp {

// Rows are samples. Labels, when present, are +1 or -1.
struct Dataset {
  Matrix X;
  std::optional<Vector> y;
  std::string name;
};

constexpr double kDefaultRidge = 1e-6;

/// Unbiased covariance of the rows of X (columns are variables), centered at the mean.
Matrix sample_covariance(const Matrix& X);

/// A = -Sigma, C = I. Throws DegenerateData if m < 2 or Sigma vanishes.
ProblemInstance build_pca(const Dataset& data, Index s = 1);

/// A = -(mu_1 - mu_2)(mu_1 - mu_2)', C = S_1 + S_2 + ridge * tr(S_1 + S_2) / d * I.
/// Throws SingleClass unless both labels occur.
ProblemInstance build_fda(const Dataset& data, double ridge = kDefaultRidge, Index s = 1);

/// Views share the sample axis (columns). Variables are the m1 + m2 rows:
/// A = -[[0, S_xy], [S_yx, 0]], C = blockdiag(S_xx, S_yy) plus the trace-scaled ridge.
ProblemInstance build_cca(const Matrix& x_view, const Matrix& y_view,
                          double ridge = kDefaultRidge, Index s = 1);

/// X ~ N(0, 1) filled row by row, then y = sign(N(0, 1)) with 0 mapped to +1.
Dataset gen_randn(Index m, Index d, std::uint64_t seed);

}  // namespace sgevp
