#include "sgevp/fractional_1d.hpp"

#include <algorithm>
#include <cmath>

#include "sgevp/error.hpp"

namespace sgevp {

double OneDimCoefficients::min_denominator() const {
  // r > 0: the parabola's vertex is at -s / r.
  const double vertex = -s / r;
  if (vertex >= lower) return t - 0.5 * s * s / r;
  return denominator(lower);
}

bool OneDimCoefficients::denominator_bounded_away() const {
  return min_denominator() > 1e-12 * (std::abs(t) + 0.5 * s * s / r);
}

void OneDimCoefficients::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(r) ||
      !std::isfinite(s) || !std::isfinite(t) || std::isnan(lower) || lower == INFINITY)
    throw Error(Errc::NonFinite, "one-dimensional coefficients must be finite");
  if (!(r > 0.0))
    throw Error(Errc::DegenerateDenominator, "denominator needs a positive quadratic coefficient", r);
  const double dmin = min_denominator();
  if (!(dmin > 0.0))
    throw Error(Errc::DegenerateDenominator, "denominator is not positive on the feasible range",
                dmin);
}

double psi_value(const OneDimCoefficients& c, double beta) {
  const double den = c.denominator(beta);
  if (!(den > 0.0)) throw Error(Errc::DegenerateDenominator, "psi denominator <= 0", den);
  return c.numerator(beta) / den;
}

OneDimInfimum infimum_1d(const OneDimCoefficients& c) {
  c.validate();

  // Stationarity of psi: 1/2 pi beta^2 + theta beta + iota = 0.
  const double pi = c.a * c.s - c.b * c.r;
  const double theta = c.a * c.t - c.c * c.r;
  const double iota = c.t * c.b - c.c * c.s;

  const auto clamp = [&](double beta) { return std::max(c.lower, beta); };

  std::vector<double> roots;
  const double disc = theta * theta - 2.0 * pi * iota;
  if (disc >= 0.0) {
    const double q = -0.5 * (theta + std::copysign(std::sqrt(disc), theta));
    if (q != 0.0) {
      roots.push_back(iota / q);
      if (pi != 0.0) roots.push_back(2.0 * q / pi);
    } else if (pi != 0.0 || iota == 0.0) {
      // Double root at zero, or psi constant (pi = theta = iota = 0).
      roots.push_back(0.0);
    }
  }

  OneDimInfimum out;
  for (double beta : roots) out.candidates.push_back(clamp(beta));
  if (std::isfinite(c.lower)) out.candidates.push_back(c.lower);

  bool have = false;
  for (double beta : out.candidates) {
    const double value = psi_value(c, beta);
    if (!std::isfinite(value)) continue;
    if (!have || value < out.value - 1e-15 ||
        (std::abs(value - out.value) <= 1e-15 && beta < out.beta)) {
      out.beta = beta;
      out.value = value;
      have = true;
    }
  }

  const double limit = c.a / c.r;
  if (!have || limit < out.value - 1e-12 * (1.0 + std::abs(limit))) {
    out.attained = false;
    out.value = limit;
    out.beta = 0.0;
  }
  return out;
}

OneDimSolution solve_1d(const OneDimCoefficients& c) {
  OneDimInfimum inf = infimum_1d(c);
  if (!inf.attained)
    throw Error(Errc::UnboundedBelow, "psi has no finite minimizer; infimum is the limit a/r",
                inf.value);
  return {inf.beta, inf.value, std::move(inf.candidates)};
}

}  // namespace sgevp
