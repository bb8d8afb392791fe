#include "sgevp/qfp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

#include "sgevp/error.hpp"
#include "sgevp/fractional_1d.hpp"

namespace sgevp {

namespace {

bool all_zero(const Vector& v) { return (v.array() == 0.0).all(); }

// J(alpha) with a_i^2 precomputed from the eigendecomposition of O.
struct ParametricValue {
  Vector a_sq;
  Vector d;
  double gamma;
  double delta;

  double operator()(double alpha) const {
    double sum = 0.0;
    for (Index i = 0; i < d.size(); ++i) sum += a_sq(i) / (d(i) - alpha);
    return 0.5 * delta - 0.5 * alpha * gamma - 0.5 * sum;
  }
};

QfpSolution finish(const QfpSubproblem& q, Vector y, double alpha, Index iterations,
                   QfpCertificate cert) {
  QfpSolution out;
  out.value = q.value(y);
  out.y = std::move(y);
  out.alpha_star = alpha;
  out.iterations = iterations;
  out.certificate = cert;
  return out;
}

// c = 0, v = 0: L(y) = (1/2 u'Ou + u'g + delta/2) / (1/2 ||u||^2) with u = R^{1/2} y.
// Writing u = rho e with ||e|| = 1 and minimizing over 1/rho gives the value
// lambda_min(O - g g' / delta), attained at rho = -delta / (e'g).
QfpSolution solve_homogeneous(const QfpSubproblem& q) {
  const Matrix& W = q.r_inv_sqrt().matrix();
  const SymMatrix O(W * q.Q().matrix() * W);
  const Vector g = W * q.p();
  const double delta = 2.0 * q.w();
  const double g_norm = g.norm();

  if (g_norm == 0.0 && delta == 0.0) {
    const EigDecomposition eig = sym_eig(O);
    Vector y = W * eig.vectors.col(0);
    return finish(q, std::move(y), eig.values(0), 0, QfpCertificate::HomogeneousEigen);
  }
  if (!(delta > 0.0))
    throw Error(Errc::UnboundedBelow,
                "homogeneous ratio with non-positive constant numerator is unbounded below");

  const SymMatrix M(O.matrix() - g * g.transpose() / delta);
  const EigDecomposition eig_m = sym_eig(M);
  Vector e = eig_m.vectors.col(0);
  double proj = e.dot(g);
  if (std::abs(proj) > 1e-12 * g_norm) {
    if (proj > 0.0) {
      e = -e;
      proj = -proj;
    }
    const double inv_rho = -proj / delta;
    Vector y = W * (e / inv_rho);
    return finish(q, std::move(y), eig_m.values(0), 0, QfpCertificate::HomogeneousEigen);
  }

  // The infimum lambda_min(O) is approached only as ||y|| grows.
  const EigDecomposition eig_o = sym_eig(O);
  const double d_min = eig_o.values(0);
  const double alpha = d_min - shift_guard(d_min);
  Vector u = solve_shifted(eig_o, alpha, g);
  if (u.norm() == 0.0) u = eig_o.vectors.col(0) * std::sqrt(delta / (1e-12 * (1.0 + std::abs(d_min))));
  Vector y = W * u;
  return finish(q, std::move(y), alpha, 0, QfpCertificate::BoundaryUpper);
}

}  // namespace

QfpSubproblem::QfpSubproblem(SymMatrix Q, Vector p, double w, SymMatrix R, Vector c, double v,
                             std::optional<double> lower_bound)
    : Q_(std::move(Q)),
      p_(std::move(p)),
      w_(w),
      R_(std::move(R)),
      c_(std::move(c)),
      v_(v),
      lower_(lower_bound),
      r_inv_sqrt_(SymMatrix::identity(1)) {
  const Index n = Q_.size();
  if (p_.size() != n || R_.size() != n || c_.size() != n)
    throw Error(Errc::DimensionMismatch, "QFP coefficient sizes disagree");
  if (!Q_.matrix().allFinite() || !p_.allFinite() || !std::isfinite(w_) || !c_.allFinite() ||
      !std::isfinite(v_))
    throw Error(Errc::NonFinite, "QFP coefficients must be finite");
  if (lower_ && !std::isfinite(*lower_))
    throw Error(Errc::NonFinite, "QFP lower bound must be finite when present");
  r_inv_sqrt_ = inv_sqrt(R_);
  homogeneous_ = v_ == 0.0 && all_zero(c_);
  gamma_ = 2.0 * v_ - (r_inv_sqrt_.matrix() * c_).squaredNorm();
  if (!homogeneous_ && !(gamma_ > 0.0))
    throw Error(Errc::NonPositiveGamma, "denominator is not positive everywhere", gamma_);
}

double QfpSubproblem::numerator(const Vector& y) const {
  return 0.5 * y.dot(Q_.matrix() * y) + p_.dot(y) + w_;
}

double QfpSubproblem::denominator(const Vector& y) const {
  return 0.5 * y.dot(R_.matrix() * y) + c_.dot(y) + v_;
}

double QfpSubproblem::value(const Vector& y) const {
  const double den = denominator(y);
  if (!(den > 0.0)) throw Error(Errc::DegenerateDenominator, "QFP denominator <= 0", den);
  return numerator(y) / den;
}

QfpSubproblem QfpSubproblem::restricted(std::span<const Index> idx) const {
  return QfpSubproblem(principal_submatrix(Q_, idx), sub_vector(p_, idx), w_,
                       principal_submatrix(R_, idx), sub_vector(c_, idx), v_, lower_);
}

ReducedQfp assemble_reduced(const QfpSubproblem& q) {
  if (q.homogeneous() || !(q.gamma() > 0.0))
    throw Error(Errc::NonPositiveGamma, "reduced form needs gamma > 0", q.gamma());
  const Matrix& W = q.r_inv_sqrt().matrix();
  const SymMatrix O(W * q.Q().matrix() * W);
  const Vector h = W * q.c();
  const Vector wp = W * q.p();
  const Vector g = wp - O.matrix() * h;
  const double gamma = q.gamma();
  const double delta = h.dot(O.matrix() * h) - 2.0 * h.dot(wp) + 2.0 * q.w();

  const Index m = q.size();
  Matrix Z(m + 1, m + 1);
  const double root_gamma = std::sqrt(gamma);
  Z.topLeftCorner(m, m) = O.matrix();
  Z.topRightCorner(m, 1) = g / root_gamma;
  Z.bottomLeftCorner(1, m) = g.transpose() / root_gamma;
  Z(m, m) = delta / gamma;
  return {O, g, gamma, delta, SymMatrix(Z)};
}

double j_alpha(const EigDecomposition& eig_O, const Vector& g, double gamma, double delta,
               double alpha) {
  const double d_min = eig_O.values(0);
  if (!(alpha <= d_min - shift_guard(d_min)))
    throw Error(Errc::ShiftTooClose, "J(alpha) needs alpha below lambda_min(O)", alpha);
  const Vector a = eig_O.vectors.transpose() * g;
  return ParametricValue{a.cwiseAbs2(), eig_O.values, gamma, delta}(alpha);
}

const char* to_string(QfpCertificate c) {
  switch (c) {
    case QfpCertificate::BisectionRoot: return "BisectionRoot";
    case QfpCertificate::BoundaryLower: return "BoundaryLower";
    case QfpCertificate::BoundaryUpper: return "BoundaryUpper";
    case QfpCertificate::CoordinateWiseMin: return "CoordinateWiseMin";
    case QfpCertificate::HomogeneousEigen: return "HomogeneousEigen";
  }
  return "Unknown";
}

QfpSolution solve_bisection(const QfpSubproblem& q, double tol) {
  if (q.lower_bound())
    throw Error(Errc::InvalidArgument, "bisection handles the unconstrained QFP only");
  if (q.homogeneous()) return solve_homogeneous(q);

  const ReducedQfp red = assemble_reduced(q);
  const EigDecomposition eig_o = sym_eig(red.O);
  const double d_min = eig_o.values(0);
  const double upper = d_min - shift_guard(d_min);
  const double lower = std::min(min_eigenvalue(red.Z), upper);

  const Vector a = eig_o.vectors.transpose() * red.g;
  const ParametricValue J{a.cwiseAbs2(), eig_o.values, red.gamma, red.delta};
  // The default also asks for a small residual: near a pole of J a narrow bracket
  // can still leave J(alpha) far from zero.
  const bool default_tol = !(tol > 0.0);
  if (default_tol) tol = 1e-10 * std::max(1.0, upper - lower);
  const double zero_tol = 1e-12 * (1.0 + std::abs(red.delta));
  const double root_tol = default_tol ? 1e-10 * (1.0 + std::abs(red.delta))
                                      : std::numeric_limits<double>::infinity();

  double alpha = 0.0;
  Index iterations = 0;
  QfpCertificate cert = QfpCertificate::BisectionRoot;
  if (J(lower) <= zero_tol) {
    alpha = lower;
    cert = QfpCertificate::BoundaryLower;
  } else if (J(upper) >= -zero_tol) {
    alpha = upper;
    cert = QfpCertificate::BoundaryUpper;
  } else {
    double lb = lower;
    double ub = upper;
    while (true) {
      const double mid = 0.5 * (lb + ub);
      if (mid <= lb || mid >= ub) break;
      const double j_mid = J(mid);
      if (ub - lb <= tol && std::abs(j_mid) <= root_tol) break;
      if (j_mid > 0.0)
        lb = mid;
      else
        ub = mid;
      ++iterations;
    }
    alpha = 0.5 * (lb + ub);
  }

  const Vector u = solve_shifted(eig_o, alpha, red.g);
  const Matrix& W = q.r_inv_sqrt().matrix();
  Vector y = W * (u - W * q.c());
  return finish(q, std::move(y), alpha, iterations, cert);
}

Vector default_start(const QfpSubproblem& q) {
  const Index m = q.size();
  if (q.homogeneous()) return Vector::Ones(m);
  if (q.lower_bound() && *q.lower_bound() > 0.0) return Vector::Constant(m, *q.lower_bound());
  return Vector::Zero(m);
}

QfpSolution solve_coordinate_descent(const QfpSubproblem& q, const Vector& y0,
                                     const CoordinateDescentOptions& options) {
  const Index m = q.size();
  if (y0.size() != m) throw Error(Errc::DimensionMismatch, "start point has the wrong size");
  const std::optional<double>& bound = q.lower_bound();
  if (bound && (y0.array() < *bound).any())
    throw Error(Errc::InvalidArgument, "start point violates the lower bound");

  const Matrix& Q = q.Q().matrix();
  const Matrix& R = q.R().matrix();
  Vector y = y0;
  Vector qy = Q * y;
  Vector ry = R * y;
  double num = q.numerator(y);
  double den = q.denominator(y);
  if (!(den > 0.0))
    throw Error(Errc::DegenerateDenominator, "denominator <= 0 at the start point", den);
  double value = num / den;
  const double obj_tol =
      options.obj_tol > 0.0 ? options.obj_tol : 1e-12 * (1.0 + std::abs(value));

  std::mt19937_64 rng(options.seed);
  std::vector<Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), Index{0});

  // Non-cyclic orders only stop after a cyclic pass confirms no coordinate moves.
  bool verifying = false;
  Index sweeps = 0;
  while (sweeps < options.max_sweeps) {
    ++sweeps;
    const bool cyclic = verifying || options.order == CoordinateOrder::Cyclic;
    if (!cyclic && options.order == CoordinateOrder::Random)
      std::shuffle(order.begin(), order.end(), rng);
    const double sweep_start = value;
    double max_step = 0.0;
    for (Index step = 0; step < m; ++step) {
      Index i = cyclic ? step : order[static_cast<std::size_t>(step)];
      if (!cyclic && options.order == CoordinateOrder::GaussSouthwell) {
        // Projected gradient from the running products.
        double largest = -1.0;
        for (Index j = 0; j < m; ++j) {
          double gj = ((qy(j) + q.p()(j)) * den - num * (ry(j) + q.c()(j))) / (den * den);
          if (bound && y(j) == *bound) gj = std::min(0.0, gj);
          if (std::abs(gj) > largest) {
            largest = std::abs(gj);
            i = j;
          }
        }
      }

      OneDimCoefficients coef;
      coef.a = Q(i, i);
      coef.b = qy(i) + q.p()(i);
      coef.c = num;
      coef.r = R(i, i);
      coef.s = ry(i) + q.c()(i);
      coef.t = den;
      if (bound) coef.lower = *bound - y(i);

      // The line through y may cross y = 0 when the program is homogeneous;
      // the ratio is then constant along it.
      if (!coef.denominator_bounded_away()) continue;
      const OneDimInfimum best = infimum_1d(coef);
      if (!best.attained || best.beta == 0.0) continue;
      const double new_num = coef.numerator(best.beta);
      const double new_den = coef.denominator(best.beta);
      const double new_value = new_num / new_den;
      if (!(new_value <= value + 4e-16 * std::abs(value))) continue;

      double beta = best.beta;
      double yi = y(i) + beta;
      if (bound && beta <= coef.lower) yi = *bound;
      beta = yi - y(i);
      y(i) = yi;
      qy += beta * Q.col(i);
      ry += beta * R.col(i);
      num = new_num;
      den = new_den;
      value = new_value;
      max_step = std::max(max_step, std::abs(beta) / (1.0 + std::abs(y(i))));
    }
    // Resynchronize the running quantities with the iterate.
    qy = Q * y;
    ry = R * y;
    num = q.numerator(y);
    den = q.denominator(y);
    value = num / den;
    const bool quiet = sweep_start - value < obj_tol && max_step <= options.step_tol;
    if (quiet && (cyclic || options.order == CoordinateOrder::Cyclic)) break;
    verifying = quiet;
  }

  QfpSolution out;
  out.value = q.value(y);
  out.y = std::move(y);
  out.iterations = sweeps;
  out.certificate = QfpCertificate::CoordinateWiseMin;
  return out;
}

Vector projected_gradient(const QfpSubproblem& q, const Vector& y) {
  const double num = q.numerator(y);
  const double den = q.denominator(y);
  if (!(den > 0.0)) throw Error(Errc::DegenerateDenominator, "denominator <= 0", den);
  const Vector grad_num = q.Q().matrix() * y + q.p();
  const Vector grad_den = q.R().matrix() * y + q.c();
  Vector grad = (grad_num * den - num * grad_den) / (den * den);
  if (q.lower_bound()) {
    const double lb = *q.lower_bound();
    for (Index i = 0; i < grad.size(); ++i)
      if (y(i) == lb) grad(i) = std::min(0.0, grad(i));
  }
  return grad;
}

}  // namespace sgevp
