#include "exner/stepper.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace exner {

ImexTableau ImexTableau::second_order() {
  ImexTableau t;
  t.gamma = 1.0 - 1.0 / std::sqrt(2.0);
  t.c = 1.0 / (2.0 * t.gamma);
  return t;
}

DampingLayer DampingLayer::build(const Grid& grid, double sigma, const State& reference) {
  if (!(sigma > 0.0)) throw std::invalid_argument("damping layer needs sigma > 0");
  if (reference.size() != grid.n_cells) throw std::invalid_argument("damping reference does not match grid");
  DampingLayer layer;
  layer.phi.resize(grid.n_cells);
  for (std::size_t i = 0; i < grid.n_cells; ++i)
    layer.phi[i] = damping_profile(grid.center(i), grid.x_interface, sigma);
  layer.reference = reference;
  return layer;
}

double apply_absorbing_damping(std::span<double> field, std::span<const double> current,
                               std::span<const double> reference, std::span<const double> phi,
                               double dt_eff, double dx) {
  double integral = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    if (phi[i] == 0.0) continue;
    const double source = (current[i] - reference[i]) * phi[i];
    field[i] -= dt_eff * source;
    integral += source;
  }
  return dx * integral;
}

ExplicitTendencies explicit_tendencies(const State& s, const BoundaryClosure& ghosts,
                                       const PhysicalParams& p, const Grid& grid, Exec exec) {
  const GhostedState gs(s, ghosts.left, ghosts.right);
  ExplicitTendencies t;
  t.edges = explicit_edge_fluxes(gs, p, exec);
  t.div_qb = flux_divergence(t.edges.qb, grid.dx);
  t.div_qu = flux_divergence(t.edges.qu, grid.dx);
  return t;
}

StageResult stage_solve(const StageOperands& ops, const BoundaryClosure& closure,
                        const StageSettings& settings) {
  const State& base = ops.base;
  const State& e = ops.explicit_state;
  const double tau = ops.tau;
  const Grid& grid = settings.grid;
  const PhysicalParams& p = settings.params;
  const double dx = grid.dx;
  const std::size_t n = base.size();
  if (!(tau >= 0.0)) throw std::invalid_argument("stage_solve: negative tau");
  if (e.size() != n || n != grid.n_cells) throw std::invalid_argument("stage_solve: size mismatch");

  const ExplicitTendencies ex = explicit_tendencies(e, closure, p, grid, settings.exec);
  const bool parallel = settings.exec == Exec::parallel;
  const auto ni = static_cast<std::int64_t>(n);

  StageResult out;
  out.state = base;
  State& r = out.state;
  StageFluxes& fl = out.fluxes;

  // momentum predictor q*, ghosted
  std::vector<double> q_star(n + 2);
#pragma omp parallel for if (parallel) schedule(static)
  for (std::int64_t i = 0; i < ni; ++i) q_star[i + 1] = base.q[i] - tau * ex.div_qu[i];
  if (settings.damping) {
    apply_absorbing_damping(std::span(q_star).subspan(1, n), e.q, settings.damping->reference.q,
                            settings.damping->phi, tau, dx);
  }
  q_star[0] = closure.q_left.apply(q_star[1]);
  q_star[n + 1] = closure.q_right.apply(q_star[n]);

  // free-surface predictor eta*
  std::vector<double> eta_star(n);
#pragma omp parallel for if (parallel) schedule(static)
  for (std::int64_t i = 0; i < ni; ++i) {
    const double dq = (q_star[i + 2] - q_star[i]) / (2.0 * dx);
    eta_star[i] = base.eta[i] - tau * ex.div_qb[i] - tau * dq;
  }
  if (settings.damping) {
    fl.eta_damping = apply_absorbing_damping(eta_star, e.eta, settings.damping->reference.eta,
                                             settings.damping->phi, tau, dx);
  }

  // implicit free-surface solve with h of the explicit state
  const GhostedState ge(e, closure.left, closure.right);
  std::vector<double> h_e(n + 2);
  for (std::size_t j = 0; j < n + 2; ++j) h_e[j] = ge.h(j);
  const LinearSystem sys =
      assemble_eta_system(h_e, eta_star, tau, p.g, dx, closure.eta_left, closure.eta_right);
  const std::vector<double> eta_new = thomas_solve(sys.matrix, sys.rhs);

  std::vector<double> eta_g(n + 2);
  std::copy(eta_new.begin(), eta_new.end(), eta_g.begin() + 1);
  eta_g[0] = closure.eta_left.apply(eta_new.front());
  eta_g[n + 1] = closure.eta_right.apply(eta_new.back());

#pragma omp parallel for if (parallel) schedule(static)
  for (std::int64_t i = 0; i < ni; ++i) {
    r.eta[i] = eta_new[i];
    r.q[i] = q_star[i + 1] - tau * p.g * h_e[i + 1] * (eta_g[i + 2] - eta_g[i]) / (2.0 * dx);
    r.zb[i] = base.zb[i] - tau * ex.div_qb[i];
  }
  if (settings.damping) {
    fl.zb_damping = apply_absorbing_damping(r.zb, e.zb, settings.damping->reference.zb,
                                            settings.damping->phi, tau, dx);
  }

  for (std::size_t i = 0; i < n; ++i)
    if (!(r.h(i) > 0.0)) throw NumericalError("stage_solve: non-positive depth after update");

  // outer-edge fluxes; implicit diffusion enters as -g tau h_{edge} d(eta)/dx
  const double k = p.g * tau / dx;
  const double h_w = 0.5 * (h_e[0] + h_e[1]);
  const double h_e_edge = 0.5 * (h_e[n] + h_e[n + 1]);
  fl.zb_left = ex.edges.qb.front();
  fl.zb_right = ex.edges.qb.back();
  fl.eta_left = fl.zb_left + 0.5 * (q_star[0] + q_star[1]) - k * h_w * (eta_g[1] - eta_g[0]);
  fl.eta_right =
      fl.zb_right + 0.5 * (q_star[n] + q_star[n + 1]) - k * h_e_edge * (eta_g[n + 1] - eta_g[n]);
  return out;
}

namespace {

StageSettings settings_of(const StepContext& ctx) {
  return {ctx.params, ctx.grid, ctx.damping, ctx.exec};
}

void accumulate(StepBudget& b, const StageFluxes& f, double weight) {
  b.eta_boundary -= weight * (f.eta_right - f.eta_left);
  b.eta_damping -= weight * f.eta_damping;
  b.zb_boundary -= weight * (f.zb_right - f.zb_left);
  b.zb_damping -= weight * f.zb_damping;
}

}  // namespace

StepResult first_order_step(const State& s, double t, double dt, StepContext& ctx) {
  if (!(dt > 0.0)) throw std::invalid_argument("first_order_step: dt must be positive");
  ctx.boundary.begin_step(s, dt);
  const BoundaryClosure closure = ctx.boundary.fill_ghosts(s, {t, 0.0, t + dt, 1.0, dt});
  StageResult st = stage_solve({s, s, dt}, closure, settings_of(ctx));
  ctx.boundary.end_step(st.state);
  StepResult out{std::move(st.state), {}};
  accumulate(out.budget, st.fluxes, dt);
  return out;
}

StepResult second_order_step(const State& s, double t, double dt, StepContext& ctx,
                             const ImexTableau& tab) {
  if (!(dt > 0.0)) throw std::invalid_argument("second_order_step: dt must be positive");
  const double gamma = tab.gamma;
  const double tau = gamma * dt;
  const StageSettings settings = settings_of(ctx);
  ctx.boundary.begin_step(s, dt);

  // stage 1: U_E = U^n, U_I = U^n + gamma dt K
  const BoundaryClosure c1 = ctx.boundary.fill_ghosts(s, {t, 0.0, t + gamma * dt, gamma, tau});
  const StageResult st1 = stage_solve({s, s, tau}, c1, settings);

  // stage 2 operands rewritten in terms of U^n and U_I^(1)
  const State e2 = blend(tab.c / gamma, st1.state, s);
  const State base2 = blend((1.0 - gamma) / gamma, st1.state, s);
  const BoundaryClosure c2 = ctx.boundary.fill_ghosts(e2, {t + tab.c * dt, tab.c, t + dt, 1.0, tau});
  StageResult st2 = stage_solve({base2, e2, tau}, c2, settings);
  ctx.boundary.end_step(st2.state);

  StepResult out{std::move(st2.state), {}};
  const auto w = tab.weights();
  accumulate(out.budget, st1.fluxes, w[0] * dt);
  accumulate(out.budget, st2.fluxes, w[1] * dt);
  return out;
}

}  // namespace exner
