#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exner/boundary.hpp"
#include "exner/kernels.hpp"
#include "exner/model.hpp"
#include "exner/spatial.hpp"
#include "exner/state.hpp"
#include "exner/stepper.hpp"

namespace exner {

enum class Scheme { first_order, second_order };

/// Full description of one simulation. n_cells spans [x_left, x_right]; for
/// NC and SC the simulated grid stops at x_interface with the same spacing.
struct RunConfig {
  Scheme scheme = Scheme::second_order;
  double cfl = 7.7;
  std::optional<double> fixed_dt;

  double x_left = -2.0;
  double x_interface = 4.0;
  double x_right = 10.0;
  std::size_t n_cells = 1200;

  PhysicalParams params;

  double h0 = 1.0;
  double u0 = 0.2;   // initial velocity, also the mean inflow velocity
  double zb0 = 0.1;
  double forcing_amplitude = 0.01;
  double forcing_omega = 14.0;

  BoundaryStrategy strategy = BoundaryStrategy::absorbing(3.0);

  double t_final = 8.0;
  std::vector<double> snapshot_times{1.0, 4.0, 8.0};
  std::string out_dir = "out";

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  WaveTrainForcing forcing() const { return {u0, forcing_amplitude, forcing_omega}; }
  PrimitiveCell initial_cell() const { return {h0, u0, zb0, 0.0}; }
  /// The grid actually simulated (see class comment).
  Grid grid() const;
};

struct StepDiagnostics {
  double t = 0.0;
  double dt = 0.0;
  double mcfl = 0.0;
  double lambda_max = 0.0;
  double total_eta = 0.0;
  double total_zb = 0.0;
  double max_abs_u = 0.0;
  double min_h = 0.0;
};

struct Snapshot {
  double t = 0.0;
  State state;
};

/// Domain totals and what the fluxes say they should be.
struct BudgetLedger {
  double initial_eta = 0.0;
  double initial_zb = 0.0;
  double eta_boundary = 0.0;
  double eta_damping = 0.0;
  double zb_boundary = 0.0;
  double zb_damping = 0.0;
};

struct RunResult {
  Grid grid;
  std::vector<Snapshot> snapshots;
  std::vector<StepDiagnostics> diagnostics;
  BudgetLedger budget;
  State final_state;
  std::size_t steps = 0;
  std::size_t sc_fallbacks = 0;

  const Snapshot& at(double t) const;
};

/// A run stopped by an unrecoverable condition; carries the last diagnostics.
class RunAborted : public std::runtime_error {
 public:
  RunAborted(const std::string& what, StepDiagnostics last)
      : std::runtime_error(what), last_(last) {}
  const StepDiagnostics& last() const { return last_; }

 private:
  StepDiagnostics last_;
};

struct RunOptions {
  std::optional<State> initial;   // default: uniform (h0, u0, zb0), b = 0
  std::optional<std::size_t> max_steps;  // stop early after this many steps
  Exec exec = Exec::parallel;
  std::function<void(const StepDiagnostics&)> on_step;
};

struct DtChoice {
  double dt = 0.0;
  double lambda_max = 0.0;
  bool clamped = false;
};

/// dt = cfl dx / lambda_max (or the fixed override), shortened so that
/// t + dt does not pass next_stop.
DtChoice compute_dt(const State& s, const RunConfig& cfg, double dx, double t, double next_stop,
                    Exec exec = Exec::serial);

double material_cfl(const State& s, double dt, double dx);

double domain_total(std::span<const double> field, double dx);

RunResult run(const RunConfig& cfg, const RunOptions& options = {});

struct ReflectionMetric {
  double linf_h = 0.0;
  double l2_h = 0.0;  // sqrt(dx * sum d^2)
};

/// Depth error of `run` against `reference` on the physical cells of `run`
/// at time t_probe. Both grids must share x_left and dx.
ReflectionMetric reflection_metric(const RunResult& run, const RunResult& reference, double t_probe);

/// Same scenario on [x_left, x_far] with NC at x_far and no sponge; x_far is
/// rounded up to a cell edge of cfg's spacing.
RunConfig reference_config(const RunConfig& cfg, double x_far);

/// Far edge such that no wave leaving x_left reaches it and returns to
/// x_interface before t_final.
double reference_far_edge(const RunConfig& cfg);

struct ConvergenceLevel {
  std::size_t n_cells = 0;
  double l1_diff = 0.0;   // || h_N - coarsen(h_2N) ||_1, NaN on the finest level
  double order = 0.0;     // log2 of successive differences, NaN where undefined
};

/// Self-convergence of h at t_final, refining n_cells by 2 per level.
std::vector<ConvergenceLevel> convergence_study(const RunConfig& cfg, int levels,
                                                Exec exec = Exec::parallel);

}  // namespace exner
