#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "sgevp/linalg.hpp"

namespace sgevp {

// L(y) = (1/2 y'Qy + p'y + w) / (1/2 y'Ry + c'y + v), optionally with y >= lower_bound
// elementwise.
//
// R must be positive definite and the denominator positive everywhere, which is
// gamma = 2v - ||R^{-1/2} c||^2 > 0. The one exception is the homogeneous
// denominator (c = 0, v = 0 exactly): it vanishes only at y = 0, which is
// excluded, and arises when every fixed coordinate outside a block is zero.
class QfpSubproblem {
 public:
  QfpSubproblem(SymMatrix Q, Vector p, double w, SymMatrix R, Vector c, double v,
                std::optional<double> lower_bound = std::nullopt);

  Index size() const noexcept { return Q_.size(); }
  const SymMatrix& Q() const noexcept { return Q_; }
  const Vector& p() const noexcept { return p_; }
  double w() const noexcept { return w_; }
  const SymMatrix& R() const noexcept { return R_; }
  const Vector& c() const noexcept { return c_; }
  double v() const noexcept { return v_; }
  const std::optional<double>& lower_bound() const noexcept { return lower_; }

  /// R^{-1/2}, computed once at construction.
  const SymMatrix& r_inv_sqrt() const noexcept { return r_inv_sqrt_; }
  double gamma() const noexcept { return gamma_; }
  bool homogeneous() const noexcept { return homogeneous_; }

  double numerator(const Vector& y) const;
  double denominator(const Vector& y) const;
  /// Throws DegenerateDenominator if the denominator at y is not positive.
  double value(const Vector& y) const;

  QfpSubproblem restricted(std::span<const Index> idx) const;

 private:
  SymMatrix Q_;
  Vector p_;
  double w_;
  SymMatrix R_;
  Vector c_;
  double v_;
  std::optional<double> lower_;
  SymMatrix r_inv_sqrt_;
  double gamma_ = 0.0;
  bool homogeneous_ = false;
};

// Change of variables u = R^{1/2} y + R^{-1/2} c turns L into
// (1/2 u'Ou + u'g + delta/2) / (1/2 ||u||^2 + gamma/2).
struct ReducedQfp {
  SymMatrix O;
  Vector g;
  double gamma;
  double delta;
  SymMatrix Z;  // [[O, g/sqrt(gamma)], [g'/sqrt(gamma), delta/gamma]]
};

/// Throws NonPositiveGamma for homogeneous instances.
ReducedQfp assemble_reduced(const QfpSubproblem& q);

/// J(alpha) = delta/2 - alpha gamma/2 - 1/2 sum_i a_i^2 / (d_i - alpha), a = U'g.
double j_alpha(const EigDecomposition& eig_O, const Vector& g, double gamma, double delta,
               double alpha);

enum class QfpCertificate {
  BisectionRoot,
  BoundaryLower,
  BoundaryUpper,
  CoordinateWiseMin,
  HomogeneousEigen,
};

const char* to_string(QfpCertificate c);

struct QfpSolution {
  Vector y;
  double value = 0.0;
  double alpha_star = std::numeric_limits<double>::quiet_NaN();
  Index iterations = 0;
  QfpCertificate certificate = QfpCertificate::BisectionRoot;
};

/// Bisects until ub - lb <= tol. When `tol` is not positive it uses 1e-10 * max(1, bracket
/// width) and also keeps going until |J(alpha)| <= 1e-10 * (1 + |delta|) or the bracket
/// cannot shrink further in floating point.
QfpSolution solve_bisection(const QfpSubproblem& q, double tol = 0.0);

enum class CoordinateOrder { Cyclic, Random, GaussSouthwell };

struct CoordinateDescentOptions {
  CoordinateOrder order = CoordinateOrder::Cyclic;
  Index max_sweeps = 200;
  /// Non-positive selects 1e-12 * (1 + |L(y0)|).
  double obj_tol = 0.0;
  /// A sweep counts as converged only once every coordinate step is below
  /// step_tol * (1 + |y_i|) as well.
  double step_tol = 1e-10;
  std::uint64_t seed = 0;
};

/// Starting point used when none is given: 0 when the bound allows it, else lower_bound * 1.
/// Homogeneous instances start from the all-ones vector instead.
Vector default_start(const QfpSubproblem& q);

QfpSolution solve_coordinate_descent(const QfpSubproblem& q, const Vector& y0,
                                     const CoordinateDescentOptions& options = {});

/// Gradient of L with components at the lower bound replaced by min(0, grad_i).
Vector projected_gradient(const QfpSubproblem& q, const Vector& y);

}  // namespace sgevp
