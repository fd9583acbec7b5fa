#pragma once

#include <stdexcept>
#include <string>

namespace exner {

/// Raised when a state leaves the regime the scheme is valid for
/// (non-positive depth, supercritical flow, non-hyperbolic system, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Constants of the Grass sediment closure plus gravity.
struct PhysicalParams {
  double g = 9.81;
  double a_g = 0.1;   // fluid/sediment interaction coefficient
  double m = 3.0;     // Grass exponent, in [1, 4]
  double rho0 = 0.2;  // porosity of the sediment layer, in [0, 1)

  double xi() const { return 1.0 / (1.0 - rho0); }

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Primitive description of one cell: depth, velocity, sediment, bathymetry.
struct PrimitiveCell {
  double h = 1.0;
  double u = 0.0;
  double zb = 0.0;
  double b = 0.0;

  double q() const { return h * u; }
  double bottom() const { return b + zb; }  // S = b + zb
  double eta() const { return h + b + zb; }
};

struct EigenTriple {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;

  double spectral_radius() const;
};

struct GrassDerivatives {
  double alpha = 0.0;  // d q_b / d h
  double beta = 0.0;   // d q_b / d q
};

/// Grass sediment flux q_b = xi * A_g * u |u|^(m-1).
double grass_flux(double u, const PhysicalParams& p);
inline double grass_flux(const PrimitiveCell& c, const PhysicalParams& p) { return grass_flux(c.u, p); }

/// Partial derivatives of q_b with respect to h and q. Uses |u| so beta >= 0 for reversed flow.
GrassDerivatives grass_flux_derivatives(const PrimitiveCell& c, const PhysicalParams& p);

double froude(const PrimitiveCell& c, double g);

/// First-order-in-beta expansion of the three characteristic speeds. Requires F_r < 1.
EigenTriple approx_eigenvalues(const PrimitiveCell& c, const PhysicalParams& p);

/// Sorted real roots of the characteristic cubic
///   l^3 - 2u l^2 + (u^2 - gh - gh beta) l + gh beta u = 0.
/// Throws NumericalError when the roots are not three distinct reals.
EigenTriple exact_eigenvalues(const PrimitiveCell& c, const PhysicalParams& p);

/// Characteristic polynomial as written in the model (not monic):
///   -l((u - l)^2 - gh) + gh beta (l - u).
double characteristic_polynomial(double lambda, const PrimitiveCell& c, const PhysicalParams& p);

}  // namespace exner
