#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "exner/kernels.hpp"
#include "exner/spatial.hpp"

namespace exner::kernels::omp {

namespace {

// Limited slope of ghosted cell j; matches reconstruct().
inline double slope(const double* u, std::int64_t j, std::int64_t last) {
  if (j == 0) return u[1] - u[0];
  if (j == last) return u[last] - u[last - 1];
  return minmod(u[j] - u[j - 1], u[j + 1] - u[j]);
}

}  // namespace

EdgeFluxes explicit_edge_fluxes(const GhostedState& s, const PhysicalParams& p) {
  const auto n_edges = static_cast<std::int64_t>(s.eta.size()) - 1;
  const std::int64_t last = n_edges;
  const double* eta = s.eta.data();
  const double* q = s.q.data();
  const double* zb = s.zb.data();
  const double* b = s.b.data();

  EdgeFluxes f;
  f.qb.resize(n_edges);
  f.qu.resize(n_edges);
  double* qb_out = f.qb.data();
  double* qu_out = f.qu.data();
  int dry = 0;

#pragma omp parallel for reduction(| : dry) schedule(static)
  for (std::int64_t k = 0; k < n_edges; ++k) {
    const double eta_m = eta[k] + 0.5 * slope(eta, k, last);
    const double eta_p = eta[k + 1] - 0.5 * slope(eta, k + 1, last);
    const double q_m = q[k] + 0.5 * slope(q, k, last);
    const double q_p = q[k + 1] - 0.5 * slope(q, k + 1, last);
    const double zb_m = zb[k] + 0.5 * slope(zb, k, last);
    const double zb_p = zb[k + 1] - 0.5 * slope(zb, k + 1, last);
    const double b_m = b[k] + 0.5 * slope(b, k, last);
    const double b_p = b[k + 1] - 0.5 * slope(b, k + 1, last);

    const double h_m = eta_m - b_m - zb_m;
    const double h_p = eta_p - b_p - zb_p;
    if (!(h_m > 0.0) || !(h_p > 0.0)) {
      dry |= 1;
      continue;
    }
    const double u_m = q_m / h_m;
    const double u_p = q_p / h_p;
    const double alpha = std::max(std::abs(u_m), std::abs(u_p));
    qb_out[k] = rusanov_flux(grass_flux(u_m, p), grass_flux(u_p, p), zb_m, zb_p, alpha);
    qu_out[k] = rusanov_flux(q_m * u_m, q_p * u_p, q_m, q_p, alpha);
  }
  if (dry) throw NumericalError("explicit fluxes: non-positive reconstructed depth");
  return f;
}

double max_wave_speed(const State& s, const PhysicalParams& p) {
  const auto n = static_cast<std::int64_t>(s.size());
  double lam = 0.0;
  int bad = 0;
#pragma omp parallel for reduction(max : lam) reduction(| : bad) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const PrimitiveCell c = s.cell(static_cast<std::size_t>(i));
    if (!(c.h > 0.0) || !(std::abs(c.u) < std::sqrt(p.g * c.h))) {
      bad |= 1;
      continue;
    }
    lam = std::max(lam, approx_eigenvalues(c, p).spectral_radius());
  }
  if (bad) throw NumericalError("max_wave_speed: dry or non-subcritical cell");
  return lam;
}

}  // namespace exner::kernels::omp
