#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "exner/boundary.hpp"
#include "exner/kernels.hpp"
#include "exner/model.hpp"
#include "exner/spatial.hpp"
#include "exner/state.hpp"

namespace exner {

/// Two-stage IMEX pair: explicit part with abscissae (0, c), implicit
/// stiffly accurate part with diagonal gamma; both share the weights
/// (1 - gamma, gamma).
struct ImexTableau {
  double gamma = 0.0;
  double c = 0.0;

  static ImexTableau second_order();

  static constexpr int stages = 2;
  std::array<std::array<double, 2>, 2> explicit_a() const { return {{{0.0, 0.0}, {c, 0.0}}}; }
  std::array<std::array<double, 2>, 2> implicit_a() const {
    return {{{gamma, 0.0}, {1.0 - gamma, gamma}}};
  }
  std::array<double, 2> weights() const { return {1.0 - gamma, gamma}; }
  std::array<double, 2> explicit_abscissae() const { return {0.0, c}; }
  std::array<double, 2> implicit_abscissae() const { return {gamma, 1.0}; }
  bool stiffly_accurate() const { return implicit_a()[1] == weights(); }
};

/// Sponge region: phi_i = ((x_i - x_R) / sigma)^2 per cell (zero in the
/// physical domain) and the initial state deviations are measured against.
struct DampingLayer {
  std::vector<double> phi;
  State reference;

  static DampingLayer build(const Grid& grid, double sigma, const State& reference);
};

/// field_i -= dt_eff * (current_i - reference_i) * phi_i. Returns dx * sum of
/// the subtracted source per unit dt_eff (for budgets).
double apply_absorbing_damping(std::span<double> field, std::span<const double> current,
                               std::span<const double> reference, std::span<const double> phi,
                               double dt_eff, double dx);

struct ExplicitTendencies {
  EdgeFluxes edges;
  std::vector<double> div_qb;
  std::vector<double> div_qu;
};

ExplicitTendencies explicit_tendencies(const State& s, const BoundaryClosure& ghosts,
                                       const PhysicalParams& p, const Grid& grid,
                                       Exec exec = Exec::serial);

/// Operands of one semi-implicit stage: start from `base`, evaluate the
/// explicit terms on `explicit_state`, implicit weight tau (= a_ii dt).
struct StageOperands {
  const State& base;
  const State& explicit_state;
  double tau = 0.0;
};

/// Outer-edge fluxes per unit tau, and damping sources per unit tau.
/// dx * sum(eta_new - base.eta) = -tau * (eta_right - eta_left + eta_damping),
/// likewise for zb.
struct StageFluxes {
  double eta_left = 0.0;
  double eta_right = 0.0;
  double zb_left = 0.0;
  double zb_right = 0.0;
  double eta_damping = 0.0;
  double zb_damping = 0.0;
};

struct StageResult {
  State state;
  StageFluxes fluxes;
};

struct StageSettings {
  const PhysicalParams& params;
  const Grid& grid;
  const DampingLayer* damping = nullptr;
  Exec exec = Exec::serial;
};

/// One elementary semi-implicit solve: q* and eta* predictors, the
/// tridiagonal eta solve, the momentum correction and the sediment update.
StageResult stage_solve(const StageOperands& ops, const BoundaryClosure& closure,
                        const StageSettings& settings);

/// Predicted change of the domain totals (dx * sum) over one step, split
/// into boundary-flux and damping contributions.
struct StepBudget {
  double eta_boundary = 0.0;
  double eta_damping = 0.0;
  double zb_boundary = 0.0;
  double zb_damping = 0.0;
};

struct StepResult {
  State state;
  StepBudget budget;
};

struct StepContext {
  const PhysicalParams& params;
  const Grid& grid;
  BoundaryController& boundary;
  const DampingLayer* damping = nullptr;
  Exec exec = Exec::serial;
};

StepResult first_order_step(const State& s, double t, double dt, StepContext& ctx);

StepResult second_order_step(const State& s, double t, double dt, StepContext& ctx,
                             const ImexTableau& tab = ImexTableau::second_order());

}  // namespace exner
