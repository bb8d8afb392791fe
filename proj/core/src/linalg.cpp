#include "sgevp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sgevp/error.hpp"

namespace sgevp {

namespace {

void require_finite(const Matrix& m) {
  if (!m.allFinite()) throw Error(Errc::NonFinite, "matrix contains NaN or Inf");
}

}  // namespace

SymMatrix::SymMatrix(const Matrix& m) {
  if (m.rows() != m.cols())
    throw Error(Errc::DimensionMismatch, "symmetric matrix must be square");
  if (m.rows() < 1) throw Error(Errc::InvalidArgument, "symmetric matrix must be non-empty");
  m_ = 0.5 * (m + m.transpose());
}

SymMatrix SymMatrix::identity(Index n) { return SymMatrix(Matrix::Identity(n, n)); }

SymMatrix SymMatrix::diagonal(const Vector& d) { return SymMatrix(Matrix(d.asDiagonal())); }

double pd_tolerance(const SymMatrix& m) { return 1e-10 * std::max(1.0, m.matrix().norm()); }

double shift_guard(double d_min) { return 1e-12 * std::max(1.0, std::abs(d_min)); }

EigDecomposition sym_eig(const SymMatrix& m) {
  require_finite(m.matrix());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.matrix());
  if (solver.info() != Eigen::Success)
    throw Error(Errc::NonFinite, "symmetric eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const SymMatrix& m) {
  require_finite(m.matrix());
  if (m.size() == 1) return m(0, 0);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error(Errc::NonFinite, "symmetric eigensolver did not converge");
  return solver.eigenvalues()(0);
}

void require_positive_definite(const SymMatrix& m, const char* what) {
  const double lmin = min_eigenvalue(m);
  if (!(lmin > pd_tolerance(m)))
    throw Error(Errc::NotPositiveDefinite,
                std::string(what) + " is not positive definite (lambda_min = " +
                    std::to_string(lmin) + ")",
                lmin);
}

SymMatrix inv_sqrt(const SymMatrix& m) {
  const EigDecomposition eig = sym_eig(m);
  const double lmin = eig.values(0);
  if (!(lmin > pd_tolerance(m)))
    throw Error(Errc::NotPositiveDefinite,
                "inverse square root needs a positive definite matrix (lambda_min = " +
                    std::to_string(lmin) + ")",
                lmin);
  const Vector scale = eig.values.cwiseSqrt().cwiseInverse();
  return SymMatrix(eig.vectors * scale.asDiagonal() * eig.vectors.transpose());
}

SymMatrix principal_submatrix(const SymMatrix& m, std::span<const Index> idx) {
  const Index n = m.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Index i : idx) {
    if (i < 0 || i >= n) throw Error(Errc::IndexOutOfRange, "principal_submatrix index out of range");
    if (seen[static_cast<std::size_t>(i)])
      throw Error(Errc::DuplicateIndex, "principal_submatrix index repeated");
    seen[static_cast<std::size_t>(i)] = true;
  }
  const auto k = static_cast<Index>(idx.size());
  Matrix out(k, k);
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b) out(a, b) = m(idx[a], idx[b]);
  return SymMatrix(out);
}

Vector solve_shifted(const EigDecomposition& eig, double alpha, const Vector& g) {
  const double d_min = eig.values(0);
  if (!(alpha <= d_min - shift_guard(d_min)))
    throw Error(Errc::ShiftTooClose, "shift is not safely below lambda_min", alpha);
  const Vector coeff = eig.vectors.transpose() * g;
  const Vector scaled = coeff.cwiseQuotient((eig.values.array() - alpha).matrix());
  return -(eig.vectors * scaled);
}

Vector sub_vector(const Vector& v, std::span<const Index> idx) {
  Vector out(static_cast<Index>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a) out(static_cast<Index>(a)) = v(idx[a]);
  return out;
}

}  // namespace sgevp
