#include "exner/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace exner {

double WaveTrainForcing::phi(double t) const { return u_mean + amplitude * std::sin(omega * t); }

double WaveTrainForcing::phi_t(double t) const { return amplitude * omega * std::cos(omega * t); }

std::string to_string(BcKind kind) {
  switch (kind) {
    case BcKind::nc: return "nc";
    case BcKind::sc: return "sc";
    case BcKind::ac: return "ac";
  }
  return "?";
}

BcKind parse_bc_kind(const std::string& s) {
  if (s == "nc") return BcKind::nc;
  if (s == "sc") return BcKind::sc;
  if (s == "ac") return BcKind::ac;
  throw std::invalid_argument("unknown boundary strategy '" + s + "' (expected nc, sc or ac)");
}

SimpleWaveState SimpleWaveState::from(const PrimitiveCell& c, double g) {
  const double cel = std::sqrt(g * c.h);
  return {c.u + 2.0 * cel, c.u - 2.0 * cel};
}

PrimitiveCell left_ghost(const PrimitiveCell& first, double phi, double phi_t, double dx, double g) {
  if (!(first.h > 0.0)) throw NumericalError("left_ghost: non-positive depth in first cell");
  PrimitiveCell ghost = first;
  ghost.h = first.h + (phi_t * dx + 0.5 * (first.u * first.u - phi * phi)) / g;
  ghost.u = 2.0 * phi - first.u;
  if (!(ghost.h > 0.0)) throw NumericalError("left_ghost: forcing drives the inflow depth non-positive");
  return ghost;
}

PrimitiveCell left_ghost(const PrimitiveCell& first, const WaveTrainForcing& forcing, double t,
                         double dx, double g) {
  return left_ghost(first, forcing.phi(t), forcing.phi_t(t), dx, g);
}

PrimitiveCell right_ghost_nc(const PrimitiveCell& last) { return last; }

std::optional<PrimitiveCell> simple_wave_cell(double w, double r_minus, const PrimitiveCell& last,
                                              double g) {
  const double c = 0.25 * (w - r_minus);
  if (!(c > 0.0)) return std::nullopt;
  PrimitiveCell ghost = last;
  ghost.h = c * c / g;
  ghost.u = 0.5 * (w + r_minus);
  return ghost;
}

double simple_wave_update(double w_ghost, double r_minus, double w_last, double dt, double dx) {
  const double lambda3 = std::max(0.0, 0.25 * (3.0 * w_ghost + r_minus));
  const double nu = dt * lambda3 / dx;
  return (w_ghost + nu * w_last) / (1.0 + nu);
}

SimpleWaveGhost right_ghost_sc(const PrimitiveCell& last, const SimpleWaveState& sw, double dt,
                               double dx, double g) {
  if (!(last.h > 0.0)) throw NumericalError("right_ghost_sc: non-positive depth in last cell");
  const double w_last = last.u + 2.0 * std::sqrt(g * last.h);
  const double w_new = simple_wave_update(sw.w3_ghost, sw.r_minus, w_last, dt, dx);

  SimpleWaveGhost out;
  out.state = {w_new, sw.r_minus};
  if (auto ghost = simple_wave_cell(w_new, sw.r_minus, last, g)) {
    out.ghost = *ghost;
  } else {
    out.ghost = right_ghost_nc(last);
    out.state.w3_ghost = w_last;
    out.fell_back = true;
  }
  return out;
}

double damping_profile(double x, double x_r, double sigma) {
  if (x <= x_r) return 0.0;
  const double s = (x - x_r) / sigma;
  return s * s;
}

BoundaryController::BoundaryController(const Grid& grid, BoundaryStrategy strategy,
                                       WaveTrainForcing forcing, double g, const State& initial)
    : grid_(grid), strategy_(strategy), forcing_(forcing), g_(g) {
  if (initial.size() != grid.n_cells) throw std::invalid_argument("initial state does not match grid");
  if (strategy_.kind == BcKind::ac) {
    if (!(strategy_.sigma > 0.0)) throw std::invalid_argument("absorbing layer needs sigma > 0");
    if (!grid_.has_absorbing_layer())
      throw std::invalid_argument("absorbing layer requested but the grid has no cells beyond x_interface");
  }
  sw_ = SimpleWaveState::from(initial.cell(initial.size() - 1), g_);
}

void BoundaryController::begin_step(const State&, double dt) { dt_ = dt; }

void BoundaryController::end_step(const State& s) {
  if (strategy_.kind != BcKind::sc) return;
  const SimpleWaveGhost next = right_ghost_sc(s.cell(s.size() - 1), sw_, dt_, grid_.dx, g_);
  if (next.fell_back) ++sc_fallbacks_;
  sw_ = next.state;
}

PrimitiveCell BoundaryController::sc_ghost(const PrimitiveCell& last, double fraction) const {
  const double w_last = last.u + 2.0 * std::sqrt(g_ * last.h);
  const double w = simple_wave_update(sw_.w3_ghost, sw_.r_minus, w_last, fraction * dt_, grid_.dx);
  if (auto ghost = simple_wave_cell(w, sw_.r_minus, last, g_)) return *ghost;
  return right_ghost_nc(last);
}

BoundaryClosure BoundaryController::fill_ghosts(const State& e, const StageTimes& times) const {
  const std::size_t n = e.size();
  const PrimitiveCell first = e.cell(0);
  const PrimitiveCell last = e.cell(n - 1);

  BoundaryClosure c;
  c.left = GhostCell::from(left_ghost(first, forcing_, times.explicit_time, grid_.dx, g_));

  // Implicit side of the inflow: eta_0 - eta_1 is fixed by the compatibility
  // condition. The pressure correction will add -tau g h (eta_1 - eta_0) / dx
  // to the edge discharge, so q* is reflected about psi rather than phi to
  // land on q^{new} = h phi at the edge.
  {
    const double phi = forcing_.phi(times.implicit_time);
    const PrimitiveCell g0 = left_ghost(first, phi, forcing_.phi_t(times.implicit_time), grid_.dx, g_);
    const double psi = phi - times.tau * g_ * (g0.h - first.h) / grid_.dx;
    c.eta_left = {1.0, g0.h - first.h};
    c.q_left = {-g0.h / first.h, 2.0 * g0.h * psi};
  }

  switch (strategy_.kind) {
    case BcKind::nc:
    case BcKind::ac:
      c.right = GhostCell::from(right_ghost_nc(last));
      c.eta_right = AffineClosure::neumann();
      c.q_right = AffineClosure::neumann();
      break;
    case BcKind::sc: {
      c.right = GhostCell::from(sc_ghost(last, times.explicit_fraction));
      const GhostCell gi = GhostCell::from(sc_ghost(last, times.implicit_fraction));
      c.eta_right = AffineClosure::dirichlet(gi.eta);
      c.q_right = AffineClosure::dirichlet(gi.q);
      break;
    }
  }
  return c;
}

}  // namespace exner
