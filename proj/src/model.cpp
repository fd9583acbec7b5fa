#include "exner/model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace exner {

void PhysicalParams::validate() const {
  if (!(g > 0.0)) throw std::invalid_argument("g must be positive");
  if (!(a_g >= 0.0)) throw std::invalid_argument("a_g must be non-negative");
  if (!(m >= 1.0 && m <= 4.0)) throw std::invalid_argument("m must lie in [1, 4]");
  if (!(rho0 >= 0.0 && rho0 < 1.0)) throw std::invalid_argument("rho0 must lie in [0, 1)");
}

double EigenTriple::spectral_radius() const {
  return std::max({std::abs(lambda1), std::abs(lambda2), std::abs(lambda3)});
}

double grass_flux(double u, const PhysicalParams& p) {
  return p.xi() * p.a_g * u * std::pow(std::abs(u), p.m - 1.0);
}

GrassDerivatives grass_flux_derivatives(const PrimitiveCell& c, const PhysicalParams& p) {
  if (!(c.h > 0.0)) throw NumericalError("grass_flux_derivatives: non-positive depth");
  GrassDerivatives d;
  d.beta = p.m * p.xi() * p.a_g * std::pow(std::abs(c.u), p.m - 1.0) / c.h;
  d.alpha = -c.u * d.beta;
  return d;
}

double froude(const PrimitiveCell& c, double g) {
  if (!(c.h > 0.0)) throw NumericalError("froude: non-positive depth");
  return std::abs(c.u) / std::sqrt(g * c.h);
}

EigenTriple approx_eigenvalues(const PrimitiveCell& c, const PhysicalParams& p) {
  const double fr = froude(c, p.g);
  if (!(fr < 1.0)) throw NumericalError("approx_eigenvalues: flow is not subcritical");
  const double beta = grass_flux_derivatives(c, p).beta;
  const double cel = std::sqrt(p.g * c.h);
  EigenTriple e;
  e.lambda1 = c.u - cel - beta * cel / (2.0 * (1.0 - fr));
  e.lambda2 = beta * c.u / (1.0 - fr * fr);
  e.lambda3 = c.u + cel + beta * cel / (2.0 * (1.0 + fr));
  return e;
}

double characteristic_polynomial(double lambda, const PrimitiveCell& c, const PhysicalParams& p) {
  const double beta = grass_flux_derivatives(c, p).beta;
  const double gh = p.g * c.h;
  const double d = c.u - lambda;
  return -lambda * (d * d - gh) + gh * beta * (lambda - c.u);
}

EigenTriple exact_eigenvalues(const PrimitiveCell& c, const PhysicalParams& p) {
  const double beta = grass_flux_derivatives(c, p).beta;
  const double gh = p.g * c.h;
  // monic cubic l^3 + a2 l^2 + a1 l + a0
  const double a2 = -2.0 * c.u;
  const double a1 = c.u * c.u - gh - gh * beta;
  const double a0 = gh * beta * c.u;

  // depressed cubic t^3 + pp t + qq, l = t - a2/3
  const double shift = a2 / 3.0;
  const double pp = a1 - a2 * a2 / 3.0;
  const double qq = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;

  const double p3 = 4.0 * pp * pp * pp;
  const double q2 = 27.0 * qq * qq;
  const double disc = -(p3 + q2);
  if (!(pp < 0.0) || !(disc > 1e-12 * (std::abs(p3) + q2)))
    throw NumericalError("exact_eigenvalues: system is not strictly hyperbolic");

  const double r = 2.0 * std::sqrt(-pp / 3.0);
  const double arg = std::clamp(3.0 * qq / (pp * r), -1.0, 1.0);
  const double phi = std::acos(arg) / 3.0;
  std::array<double, 3> roots;
  for (int k = 0; k < 3; ++k)
    roots[k] = r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) - shift;

  // polish each root against the original cubic
  for (double& l : roots) {
    for (int it = 0; it < 3; ++it) {
      const double f = ((l + a2) * l + a1) * l + a0;
      const double df = (3.0 * l + 2.0 * a2) * l + a1;
      if (df == 0.0) break;
      l -= f / df;
    }
  }
  std::sort(roots.begin(), roots.end());
  return {roots[0], roots[1], roots[2]};
}

}  // namespace exner
