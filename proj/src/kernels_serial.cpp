#include <algorithm>
#include <cmath>

#include "exner/kernels.hpp"
#include "exner/spatial.hpp"

namespace exner::kernels::serial {

EdgeFluxes explicit_edge_fluxes(const GhostedState& s, const PhysicalParams& p) {
  const EdgeValues eta = reconstruct(s.eta);
  const EdgeValues q = reconstruct(s.q);
  const EdgeValues zb = reconstruct(s.zb);
  const EdgeValues b = reconstruct(s.b);

  const std::size_t n_edges = eta.minus.size();
  EdgeFluxes f;
  f.qb.resize(n_edges);
  f.qu.resize(n_edges);
  for (std::size_t k = 0; k < n_edges; ++k) {
    const double h_m = eta.minus[k] - b.minus[k] - zb.minus[k];
    const double h_p = eta.plus[k] - b.plus[k] - zb.plus[k];
    if (!(h_m > 0.0) || !(h_p > 0.0))
      throw NumericalError("explicit fluxes: non-positive reconstructed depth");
    const double u_m = q.minus[k] / h_m;
    const double u_p = q.plus[k] / h_p;
    const double alpha = std::max(std::abs(u_m), std::abs(u_p));
    f.qb[k] = rusanov_flux(grass_flux(u_m, p), grass_flux(u_p, p), zb.minus[k], zb.plus[k], alpha);
    f.qu[k] = rusanov_flux(q.minus[k] * u_m, q.plus[k] * u_p, q.minus[k], q.plus[k], alpha);
  }
  return f;
}

double max_wave_speed(const State& s, const PhysicalParams& p) {
  double lam = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i)
    lam = std::max(lam, approx_eigenvalues(s.cell(i), p).spectral_radius());
  return lam;
}

}  // namespace exner::kernels::serial
