#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

// Reference computations for the tests. Nothing here calls into the library's
// solvers; the formulas are written out again from their definitions.
namespace oracle {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using Rng = std::mt19937_64;

MatrixXd random_symmetric(int n, Rng& rng, double scale = 1.0);
/// B B' / n + floor * I with Gaussian B.
MatrixXd random_spd(int n, Rng& rng, double floor = 0.1);
double normal(Rng& rng);
double uniform(Rng& rng, double lo, double hi);

struct Ratio1d {
  double a, b, c, r, s, t;
  double lower = -1e300;
  double operator()(double beta) const {
    return (0.5 * a * beta * beta + b * beta + c) / (0.5 * r * beta * beta + s * beta + t);
  }
};

struct GridResult {
  double beta;
  double value;
};

/// Uniform scan of [lo, hi] with the given step, then repeated local rescans around the
/// best point until the spacing drops below `resolution`.
GridResult grid_min_1d(const Ratio1d& f, double lo, double hi, double step,
                       double resolution = 1e-8);

/// Generic ratio of quadratics N(y) / D(y) with explicit coefficients.
struct QuadRatio {
  MatrixXd Q;
  VectorXd p;
  double w;
  MatrixXd R;
  VectorXd c;
  double v;

  double numerator(const VectorXd& y) const { return 0.5 * y.dot(Q * y) + p.dot(y) + w; }
  double denominator(const VectorXd& y) const { return 0.5 * y.dot(R * y) + c.dot(y) + v; }
  double value(const VectorXd& y) const { return numerator(y) / denominator(y); }
  VectorXd gradient(const VectorXd& y) const;
};

/// BFGS with Armijo backtracking on an arbitrary smooth function.
struct Minimum {
  VectorXd x;
  double value;
};
Minimum bfgs(const std::function<double(const VectorXd&)>& f,
             const std::function<VectorXd(const VectorXd&)>& grad, VectorXd x0,
             int max_iters = 2000, double grad_tol = 1e-12);

/// Best of `starts` BFGS runs from Gaussian starting points.
Minimum multistart(const QuadRatio& q, int starts, Rng& rng);

/// Central difference of f at y along every coordinate.
VectorXd central_difference(const std::function<double(const VectorXd&)>& f, const VectorXd& y,
                            const VectorXd& h);

/// Every ascending index subset of {0..n-1} with the given size.
std::vector<std::vector<int>> subsets(int n, int size);

struct SparseOptimum {
  double value;
  std::vector<int> support;
  VectorXd x;
};

/// min x'Ax / x'Cx over supports of size exactly s, each solved with Eigen's generalized
/// symmetric eigensolver.
SparseOptimum sparse_gevp_by_enumeration(const MatrixXd& A, const MatrixXd& C, int s);

/// Smallest generalized eigenvalue of the pencil (A, C).
double min_generalized_eigenvalue(const MatrixXd& A, const MatrixXd& C);

double rayleigh(const MatrixXd& A, const MatrixXd& C, const VectorXd& x);

}  // namespace oracle
