#pragma once

#include <limits>
#include <vector>

namespace sgevp {

// psi(beta) = (1/2 a beta^2 + b beta + c) / (1/2 r beta^2 + s beta + t), beta >= lower.
struct OneDimCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double r = 1.0;
  double s = 0.0;
  double t = 1.0;
  double lower = -std::numeric_limits<double>::infinity();

  double numerator(double beta) const { return 0.5 * a * beta * beta + b * beta + c; }
  double denominator(double beta) const { return 0.5 * r * beta * beta + s * beta + t; }

  /// Smallest denominator value over the feasible range beta >= lower.
  double min_denominator() const;
  /// False when the smallest denominator is zero up to rounding, relative to t + s^2 / (2r).
  /// A line through the origin of a homogeneous denominator gives such coefficients.
  bool denominator_bounded_away() const;

  /// Throws NonFinite on NaN coefficients and DegenerateDenominator unless
  /// r > 0 and the denominator stays positive on the feasible range.
  void validate() const;
};

struct OneDimSolution {
  double beta = 0.0;
  double value = 0.0;
  std::vector<double> candidates;
};

// Infimum of psi over the feasible range. `attained` is false when the
// infimum is the limit a/r approached as |beta| grows; `beta` is then
// meaningless and `value` holds the limit.
struct OneDimInfimum {
  double beta = 0.0;
  double value = 0.0;
  bool attained = true;
  std::vector<double> candidates;
};

double psi_value(const OneDimCoefficients& c, double beta);

OneDimInfimum infimum_1d(const OneDimCoefficients& c);

/// Global minimizer of psi on [lower, inf). Throws UnboundedBelow (value() = a/r)
/// when no finite minimizer exists.
OneDimSolution solve_1d(const OneDimCoefficients& c);

}  // namespace sgevp
