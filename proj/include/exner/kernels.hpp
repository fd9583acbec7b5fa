#pragma once

// Explicit-flux kernels. `serial` composes the reference operators from
// spatial.hpp one field at a time; `omp` fuses reconstruction and flux
// evaluation into a single OpenMP loop over edges. Both produce identical
// results; the serial path exists for testing and benchmarking.

#include <vector>

#include "exner/model.hpp"
#include "exner/state.hpp"

namespace exner {

/// Rusanov fluxes at the n+1 edges of the owned cells. qb is the Grass
/// sediment flux (dissipation acts on zb), qu the momentum advection flux
/// (dissipation acts on q). Edge speed alpha = max(|u-|, |u+|).
struct EdgeFluxes {
  std::vector<double> qb;
  std::vector<double> qu;
};

enum class Exec { serial, parallel };

namespace kernels::serial {
EdgeFluxes explicit_edge_fluxes(const GhostedState& s, const PhysicalParams& p);
double max_wave_speed(const State& s, const PhysicalParams& p);
}  // namespace kernels::serial

namespace kernels::omp {
EdgeFluxes explicit_edge_fluxes(const GhostedState& s, const PhysicalParams& p);
double max_wave_speed(const State& s, const PhysicalParams& p);
}  // namespace kernels::omp

inline EdgeFluxes explicit_edge_fluxes(const GhostedState& s, const PhysicalParams& p, Exec exec) {
  return exec == Exec::parallel ? kernels::omp::explicit_edge_fluxes(s, p)
                                : kernels::serial::explicit_edge_fluxes(s, p);
}

/// Largest |lambda| over owned cells, from the first-order eigenvalue expansion.
inline double max_wave_speed(const State& s, const PhysicalParams& p, Exec exec) {
  return exec == Exec::parallel ? kernels::omp::max_wave_speed(s, p)
                                : kernels::serial::max_wave_speed(s, p);
}

}  // namespace exner
