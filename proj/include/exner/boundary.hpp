#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "exner/model.hpp"
#include "exner/spatial.hpp"
#include "exner/state.hpp"

namespace exner {

/// Inflow velocity phi(t) = u_mean + amplitude * sin(omega t).
struct WaveTrainForcing {
  double u_mean = 0.2;
  double amplitude = 0.01;
  double omega = 14.0;

  double phi(double t) const;
  double phi_t(double t) const;
};

enum class BcKind { nc, sc, ac };

/// Right-boundary treatment: zero Neumann (NC), simple-wave extrapolation
/// (SC), or an absorbing layer with damping length sigma (AC).
struct BoundaryStrategy {
  BcKind kind = BcKind::nc;
  double sigma = 3.0;

  static BoundaryStrategy neumann() { return {BcKind::nc, 0.0}; }
  static BoundaryStrategy simple_wave() { return {BcKind::sc, 0.0}; }
  static BoundaryStrategy absorbing(double sigma) { return {BcKind::ac, sigma}; }
};

std::string to_string(BcKind kind);
BcKind parse_bc_kind(const std::string& s);

/// Persistent ghost memory of the SC closure: the outgoing invariant
/// u + 2 sqrt(gh) of the ghost cell, and the incoming invariant u - 2 sqrt(gh),
/// frozen at its undisturbed value (constant across a right-going simple wave).
struct SimpleWaveState {
  double w3_ghost = 0.0;
  double r_minus = 0.0;

  static SimpleWaveState from(const PrimitiveCell& c, double g);
};

/// Inflow ghost: u0 = 2 phi - u1, h0 from the compatibility condition of the
/// velocity equation; sediment and bathymetry are copied (flat bed at the inlet).
PrimitiveCell left_ghost(const PrimitiveCell& first, double phi, double phi_t, double dx, double g);
PrimitiveCell left_ghost(const PrimitiveCell& first, const WaveTrainForcing& forcing, double t,
                         double dx, double g);

PrimitiveCell right_ghost_nc(const PrimitiveCell& last);

/// Flat-bottom shallow-water state with Riemann invariants
/// (u + 2c, u - 2c) = (w, r_minus). Nullopt when w <= r_minus.
std::optional<PrimitiveCell> simple_wave_cell(double w, double r_minus, const PrimitiveCell& last,
                                              double g);

struct SimpleWaveGhost {
  PrimitiveCell ghost;
  SimpleWaveState state;
  bool fell_back = false;  // h_g <= 0: NC was used instead
};

/// Backward-Euler upwind step of w_t + lambda_3 w_x = 0 in the ghost cell,
/// lambda_3 = (3 w + R-) / 4 recovered from the invariants. Unconditionally
/// bounded, which matters at dt lambda_3 / dx ~ 8.
double simple_wave_update(double w_ghost, double r_minus, double w_last, double dt, double dx);

/// Advances w_g by dt toward the (new-time) last owned cell and rebuilds the
/// ghost from (w_g, R-).
SimpleWaveGhost right_ghost_sc(const PrimitiveCell& last, const SimpleWaveState& sw, double dt,
                               double dx, double g);

/// ((x - x_R) / sigma)^2 beyond x_R, zero before it.
double damping_profile(double x, double x_r, double sigma);

/// Everything a stage needs from the boundaries: ghost cells of the explicit
/// state, and affine closures for the implicit unknowns q* and eta^{new}.
struct BoundaryClosure {
  GhostCell left;
  GhostCell right;
  AffineClosure eta_left;
  AffineClosure eta_right;
  AffineClosure q_left;
  AffineClosure q_right;
};

/// Stage timing passed to the closure: absolute times of the explicit and
/// implicit abscissae, their fractions of the current step, and the stage's
/// implicit step tau.
struct StageTimes {
  double explicit_time = 0.0;
  double explicit_fraction = 0.0;
  double implicit_time = 0.0;
  double implicit_fraction = 1.0;
  double tau = 0.0;
};

/// Ghost-cell orchestration for one simulation. Not shareable between runs:
/// SC keeps its outgoing invariant between steps.
class BoundaryController {
 public:
  BoundaryController(const Grid& grid, BoundaryStrategy strategy, WaveTrainForcing forcing,
                     double g, const State& initial);

  /// Brackets each step. end_step commits the SC memory using the new state.
  void begin_step(const State& s, double dt);
  void end_step(const State& s);

  BoundaryClosure fill_ghosts(const State& explicit_state, const StageTimes& times) const;

  const BoundaryStrategy& strategy() const { return strategy_; }
  const WaveTrainForcing& forcing() const { return forcing_; }
  const SimpleWaveState& simple_wave_state() const { return sw_; }
  std::size_t sc_fallbacks() const { return sc_fallbacks_; }

 private:
  PrimitiveCell sc_ghost(const PrimitiveCell& last, double fraction) const;

  Grid grid_;
  BoundaryStrategy strategy_;
  WaveTrainForcing forcing_;
  double g_;
  SimpleWaveState sw_;  // at the start of the current step
  double dt_ = 0.0;
  std::size_t sc_fallbacks_ = 0;
};

}  // namespace exner
