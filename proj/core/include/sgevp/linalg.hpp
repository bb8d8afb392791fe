#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace sgevp {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using IndexList = std::vector<Index>;

// Dense symmetric matrix. The stored entries are exactly symmetric: the input is
// replaced by (M + M^T) / 2 on construction.
class SymMatrix {
 public:
  explicit SymMatrix(const Matrix& m);

  static SymMatrix identity(Index n);
  static SymMatrix diagonal(const Vector& d);

  Index size() const noexcept { return m_.rows(); }
  double operator()(Index i, Index j) const { return m_(i, j); }
  const Matrix& matrix() const noexcept { return m_; }

 private:
  Matrix m_;
};

// Eigenvalues ascending; column i of `vectors` pairs with values[i].
struct EigDecomposition {
  Vector values;
  Matrix vectors;
};

/// Smallest eigenvalue accepted as "strictly positive definite" for `m`:
/// 1e-10 * max(1, ||m||_F).
double pd_tolerance(const SymMatrix& m);

/// Distance below lambda_min that shifted solves must keep:
/// 1e-12 * max(1, |d_min|).
double shift_guard(double d_min);

EigDecomposition sym_eig(const SymMatrix& m);

/// W with W m W = I. Throws NotPositiveDefinite (value() = smallest eigenvalue)
/// when lambda_min(m) <= pd_tolerance(m).
SymMatrix inv_sqrt(const SymMatrix& m);

double min_eigenvalue(const SymMatrix& m);

/// Throws NotPositiveDefinite unless lambda_min(m) > pd_tolerance(m).
void require_positive_definite(const SymMatrix& m, const char* what);

SymMatrix principal_submatrix(const SymMatrix& m, std::span<const Index> idx);

/// Returns u = -(O - alpha I)^{-1} g using the eigendecomposition of O.
/// Throws ShiftTooClose when alpha > lambda_min(O) - shift_guard.
Vector solve_shifted(const EigDecomposition& eig, double alpha, const Vector& g);

Vector sub_vector(const Vector& v, std::span<const Index> idx);

}  // namespace sgevp
