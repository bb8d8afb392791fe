#include "sgevp/problems.hpp"

#include <random>
#include <string>

#include "sgevp/error.hpp"

namespace sgevp {

namespace {

SymMatrix ridged(const Matrix& S, double ridge) {
  if (!(ridge >= 0.0)) throw Error(Errc::InvalidArgument, "ridge must be >= 0", ridge);
  const Index d = S.rows();
  Matrix C = S;
  C.diagonal().array() += ridge * S.trace() / static_cast<double>(d);
  return SymMatrix(C);
}

void check_finite(const Matrix& X) {
  if (!X.allFinite()) throw Error(Errc::NonFinite, "data contains NaN or Inf");
}

}  // namespace

Matrix sample_covariance(const Matrix& X) {
  const Index m = X.rows();
  if (m < 2) return Matrix::Zero(X.cols(), X.cols());
  const Matrix centered = X.rowwise() - X.colwise().mean();
  return centered.transpose() * centered / static_cast<double>(m - 1);
}

ProblemInstance build_pca(const Dataset& data, Index s) {
  check_finite(data.X);
  if (data.X.rows() < 2) throw Error(Errc::DegenerateData, "PCA needs at least two samples");
  const Matrix sigma = sample_covariance(data.X);
  if ((sigma.array() == 0.0).all()) throw Error(Errc::DegenerateData, "covariance is zero");
  return ProblemInstance(SymMatrix(-sigma), SymMatrix::identity(sigma.rows()), s);
}

ProblemInstance build_fda(const Dataset& data, double ridge, Index s) {
  check_finite(data.X);
  if (!data.y) throw Error(Errc::SingleClass, "FDA needs labels");
  const Vector& y = *data.y;
  if (y.size() != data.X.rows()) throw Error(Errc::DimensionMismatch, "label count differs from rows");
  std::vector<Index> pos;
  std::vector<Index> neg;
  for (Index i = 0; i < y.size(); ++i) (y(i) > 0.0 ? pos : neg).push_back(i);
  if (pos.empty() || neg.empty()) throw Error(Errc::SingleClass, "FDA needs both classes");

  const Matrix X1 = data.X(pos, Eigen::all);
  const Matrix X2 = data.X(neg, Eigen::all);
  const Vector diff = (X1.colwise().mean() - X2.colwise().mean()).transpose();
  const Matrix within = sample_covariance(X1) + sample_covariance(X2);
  return ProblemInstance(SymMatrix(-diff * diff.transpose()), ridged(within, ridge), s);
}

ProblemInstance build_cca(const Matrix& x_view, const Matrix& y_view, double ridge, Index s) {
  check_finite(x_view);
  check_finite(y_view);
  if (x_view.cols() != y_view.cols())
    throw Error(Errc::DimensionMismatch, "views must share the sample count");
  if (x_view.rows() < 1 || y_view.rows() < 1)
    throw Error(Errc::DimensionMismatch, "views must not be empty");
  if (x_view.cols() < 2) throw Error(Errc::DegenerateData, "CCA needs at least two samples");

  const Index m1 = x_view.rows();
  const Index m2 = y_view.rows();
  Matrix stacked(m1 + m2, x_view.cols());
  stacked << x_view, y_view;
  // Samples run along the columns, so the covariance is taken over the transpose.
  const Matrix full = sample_covariance(stacked.transpose());

  Matrix A = Matrix::Zero(m1 + m2, m1 + m2);
  A.topRightCorner(m1, m2) = -full.topRightCorner(m1, m2);
  A.bottomLeftCorner(m2, m1) = -full.bottomLeftCorner(m2, m1);
  Matrix C = Matrix::Zero(m1 + m2, m1 + m2);
  C.topLeftCorner(m1, m1) = full.topLeftCorner(m1, m1);
  C.bottomRightCorner(m2, m2) = full.bottomRightCorner(m2, m2);
  return ProblemInstance(SymMatrix(A), ridged(C, ridge), s);
}

Dataset gen_randn(Index m, Index d, std::uint64_t seed) {
  if (m < 1 || d < 1) throw Error(Errc::InvalidArgument, "m and d must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Dataset data;
  data.X.resize(m, d);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < d; ++j) data.X(i, j) = normal(rng);
  Vector y(m);
  for (Index i = 0; i < m; ++i) y(i) = normal(rng) < 0.0 ? -1.0 : 1.0;
  data.y = std::move(y);
  data.name = "randn-" + std::to_string(m) + "x" + std::to_string(d) + "-" + std::to_string(seed);
  return data;
}

}  // namespace sgevp
