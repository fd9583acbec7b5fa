#include "exner/driver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace exner {

void RunConfig::validate() const {
  params.validate();
  if (!(cfl > 0.0)) throw std::invalid_argument("cfl must be positive");
  if (fixed_dt && !(*fixed_dt > 0.0)) throw std::invalid_argument("fixed_dt must be positive");
  if (!(t_final > 0.0)) throw std::invalid_argument("t_final must be positive");
  if (!(h0 > 0.0)) throw std::invalid_argument("h0 must be positive");
  if (!(forcing_amplitude >= 0.0)) throw std::invalid_argument("forcing_amplitude must be non-negative");
  if (strategy.kind == BcKind::ac && !(strategy.sigma > 0.0))
    throw std::invalid_argument("sigma must be positive");
  for (double t : snapshot_times)
    if (!(t >= 0.0 && t <= t_final)) throw std::invalid_argument("snapshot_times must lie in [0, t_final]");
  (void)grid();
}

Grid RunConfig::grid() const {
  const Grid full = Grid::uniform(x_left, x_interface, x_right, n_cells);
  if (strategy.kind == BcKind::ac) {
    if (!full.has_absorbing_layer())
      throw std::invalid_argument("x_right must exceed x_interface when bc=ac");
    return full;
  }
  if (!full.has_absorbing_layer()) return full;
  return full.with_right_edge(x_interface, x_interface);
}

const Snapshot& RunResult::at(double t) const {
  for (const auto& s : snapshots)
    if (s.t == t) return s;
  std::ostringstream msg;
  msg << "no snapshot at t=" << t;
  throw std::out_of_range(msg.str());
}

DtChoice compute_dt(const State& s, const RunConfig& cfg, double dx, double t, double next_stop,
                    Exec exec) {
  if (!(cfg.cfl > 0.0)) throw std::invalid_argument("compute_dt: cfl must be positive");
  DtChoice c;
  c.lambda_max = max_wave_speed(s, cfg.params, exec);
  if (!std::isfinite(c.lambda_max) || !(c.lambda_max > 0.0))
    throw NumericalError("compute_dt: invalid maximum wave speed");
  c.dt = cfg.fixed_dt ? *cfg.fixed_dt : cfg.cfl * dx / c.lambda_max;
  if (t + c.dt >= next_stop) {
    c.dt = next_stop - t;
    c.clamped = true;
  }
  return c;
}

double material_cfl(const State& s, double dt, double dx) { return s.max_abs_velocity() * dt / dx; }

double domain_total(std::span<const double> field, double dx) {
  double sum = 0.0;
  for (double v : field) sum += v;
  return dx * sum;
}

RunResult run(const RunConfig& cfg, const RunOptions& options) {
  cfg.validate();
  RunResult result;
  result.grid = cfg.grid();
  const Grid& grid = result.grid;

  State s = options.initial ? *options.initial : State::uniform(grid.n_cells, cfg.initial_cell());
  if (s.size() != grid.n_cells) throw std::invalid_argument("initial state does not match the grid");

  BoundaryController boundary(grid, cfg.strategy, cfg.forcing(), cfg.params.g, s);
  std::optional<DampingLayer> damping;
  if (cfg.strategy.kind == BcKind::ac) damping = DampingLayer::build(grid, cfg.strategy.sigma, s);
  StepContext ctx{cfg.params, grid, boundary, damping ? &*damping : nullptr, options.exec};

  std::vector<double> stops = cfg.snapshot_times;
  stops.push_back(cfg.t_final);
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
  auto wants_snapshot = [&](double t) {
    return std::find(cfg.snapshot_times.begin(), cfg.snapshot_times.end(), t) != cfg.snapshot_times.end();
  };

  result.budget.initial_eta = domain_total(s.eta, grid.dx);
  result.budget.initial_zb = domain_total(s.zb, grid.dx);

  double t = 0.0;
  if (wants_snapshot(0.0)) result.snapshots.push_back({0.0, s});
  std::size_t stop_index = stops.front() == 0.0 ? 1 : 0;
  StepDiagnostics last{};

  while (stop_index < stops.size()) {
    if (options.max_steps && result.steps >= *options.max_steps) break;
    const double next_stop = stops[stop_index];
    StepDiagnostics d;
    try {
      const DtChoice dc = compute_dt(s, cfg, grid.dx, t, next_stop, options.exec);
      d.dt = dc.dt;
      d.lambda_max = dc.lambda_max;
      d.mcfl = material_cfl(s, dc.dt, grid.dx);
      if (!(d.mcfl < 1.0)) {
        d.t = t;
        std::ostringstream msg;
        msg << "material CFL " << d.mcfl << " >= 1 at t=" << t;
        throw RunAborted(msg.str(), d);
      }
      StepResult step = cfg.scheme == Scheme::first_order ? first_order_step(s, t, dc.dt, ctx)
                                                          : second_order_step(s, t, dc.dt, ctx);
      s = std::move(step.state);
      result.budget.eta_boundary += step.budget.eta_boundary;
      result.budget.eta_damping += step.budget.eta_damping;
      result.budget.zb_boundary += step.budget.zb_boundary;
      result.budget.zb_damping += step.budget.zb_damping;
      t = dc.clamped ? next_stop : t + dc.dt;
    } catch (const NumericalError& e) {
      std::ostringstream msg;
      msg << e.what() << " (step " << result.steps << ", t=" << t << ")";
      throw RunAborted(msg.str(), last);
    }
    ++result.steps;

    d.t = t;
    d.total_eta = domain_total(s.eta, grid.dx);
    d.total_zb = domain_total(s.zb, grid.dx);
    d.max_abs_u = s.max_abs_velocity();
    d.min_h = s.min_depth();
    if (!(d.min_h > 0.0)) throw RunAborted("non-positive depth", d);
    result.diagnostics.push_back(d);
    if (options.on_step) options.on_step(d);
    last = d;

    if (t == next_stop) {
      if (wants_snapshot(t)) result.snapshots.push_back({t, s});
      ++stop_index;
    }
  }
  result.sc_fallbacks = boundary.sc_fallbacks();
  result.final_state = std::move(s);
  return result;
}

ReflectionMetric reflection_metric(const RunResult& a, const RunResult& ref, double t_probe) {
  if (a.grid.x_left != ref.grid.x_left || std::abs(a.grid.dx - ref.grid.dx) > 1e-12 * a.grid.dx)
    throw std::invalid_argument("reflection_metric: grids do not share x_left and dx");
  const std::size_t n = a.grid.n_physical_cells();
  if (ref.grid.n_cells < n) throw std::invalid_argument("reflection_metric: reference domain too short");
  const State& sa = a.at(t_probe).state;
  const State& sr = ref.at(t_probe).state;
  ReflectionMetric m;
  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = sa.h(i) - sr.h(i);
    m.linf_h = std::max(m.linf_h, std::abs(d));
    sq += d * d;
  }
  m.l2_h = std::sqrt(a.grid.dx * sq);
  return m;
}

RunConfig reference_config(const RunConfig& cfg, double x_far) {
  const Grid g = cfg.grid();
  const auto n = static_cast<std::size_t>(std::ceil((x_far - cfg.x_left) / g.dx - 1e-9));
  RunConfig ref = cfg;
  ref.strategy.kind = BcKind::nc;
  ref.n_cells = n;
  ref.x_right = cfg.x_left + static_cast<double>(n) * g.dx;
  ref.x_interface = ref.x_right;
  return ref;
}

double reference_far_edge(const RunConfig& cfg) {
  const double lambda3 = approx_eigenvalues(cfg.initial_cell(), cfg.params).lambda3;
  return cfg.x_interface + std::ceil(1.1 * lambda3 * cfg.t_final + 1.0);
}

std::vector<ConvergenceLevel> convergence_study(const RunConfig& cfg, int levels, Exec exec) {
  if (levels < 2) throw std::invalid_argument("convergence_study needs at least two levels");
  std::vector<State> finals;
  std::vector<ConvergenceLevel> out;
  std::vector<double> dxs;
  for (int j = 0; j < levels; ++j) {
    RunConfig c = cfg;
    c.n_cells = cfg.n_cells << j;
    c.snapshot_times = {};
    RunOptions o;
    o.exec = exec;
    RunResult r = run(c, o);
    dxs.push_back(r.grid.dx);
    finals.push_back(std::move(r.final_state));
    out.push_back({r.grid.n_cells, std::numeric_limits<double>::quiet_NaN(),
                   std::numeric_limits<double>::quiet_NaN()});
  }
  for (int j = 0; j + 1 < levels; ++j) {
    const State& coarse = finals[j];
    const State& fine = finals[j + 1];
    double sum = 0.0;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      const double avg = 0.5 * (fine.h(2 * i) + fine.h(2 * i + 1));
      sum += std::abs(coarse.h(i) - avg);
    }
    out[j].l1_diff = dxs[j] * sum;
  }
  for (int j = 0; j + 2 < levels; ++j) out[j + 1].order = std::log2(out[j].l1_diff / out[j + 1].l1_diff);
  return out;
}

}  // namespace exner
