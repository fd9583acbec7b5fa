#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace exner {

/// Uniform 1D mesh over [x_left, x_right]. Cells to the right of x_interface
/// form the absorbing layer; without one, x_right == x_interface.
///
/// Per-cell fields are stored without ghosts (length n_cells). "Ghosted"
/// arrays have length n_cells + 2 with index 0 the left ghost and index
/// n_cells + 1 the right ghost.
struct Grid {
  double x_left = 0.0;
  double x_interface = 0.0;
  double x_right = 0.0;
  std::size_t n_cells = 0;
  double dx = 0.0;

  static constexpr std::size_t n_ghost = 1;

  /// Throws std::invalid_argument unless the interface falls on a cell edge.
  static Grid uniform(double x_left, double x_interface, double x_right, std::size_t n_cells);

  /// Same spacing, truncated/extended so the right edge is x_right. x_right must be cell aligned.
  Grid with_right_edge(double x_right, double x_interface) const;

  double center(std::size_t i) const { return x_left + (static_cast<double>(i) + 0.5) * dx; }
  bool has_absorbing_layer() const { return n_physical_cells() < n_cells; }
  /// Number of cells inside [x_left, x_interface].
  std::size_t n_physical_cells() const;
};

double minmod(double a, double b);

/// Limit values at the n+1 edges of n owned cells. minus[k] / plus[k] are the
/// left / right limits at the edge between ghosted cells k and k+1.
struct EdgeValues {
  std::vector<double> minus;
  std::vector<double> plus;
};

/// MUSCL reconstruction with the MinMod limiter. Ghost cells use the one-sided
/// difference toward the interior as their slope.
EdgeValues reconstruct(std::span<const double> ghosted);

/// Rusanov numerical flux 0.5 (F(U-) + F(U+) - alpha (U+ - U-)).
inline double rusanov_flux(double f_minus, double f_plus, double u_minus, double u_plus, double alpha) {
  return 0.5 * (f_minus + f_plus - alpha * (u_plus - u_minus));
}

/// Edge fluxes for a scalar conservation law U_t + F(U)_x = 0.
std::vector<double> rusanov_edge_fluxes(const std::function<double(double)>& flux_of,
                                        const EdgeValues& edges, std::span<const double> alpha);

/// (F_{i+1/2} - F_{i-1/2}) / dx for each owned cell; edge_flux has n+1 entries.
std::vector<double> flux_divergence(std::span<const double> edge_flux, double dx);

std::vector<double> rusanov_divergence(const std::function<double(double)>& flux_of,
                                       const EdgeValues& edges, std::span<const double> alpha,
                                       double dx);

/// (U_{i+1} - U_{i-1}) / (2 dx) on owned cells of a ghosted array.
std::vector<double> centered_gradient(std::span<const double> ghosted, double dx);

/// Ghost value written as an affine function of the adjacent owned cell.
struct AffineClosure {
  double coef = 1.0;
  double offset = 0.0;

  double apply(double inner) const { return coef * inner + offset; }
  static AffineClosure neumann() { return {1.0, 0.0}; }
  static AffineClosure dirichlet(double value) { return {0.0, value}; }
};

struct Tridiag {
  std::vector<double> sub;    // sub[0] unused
  std::vector<double> diag;
  std::vector<double> super;  // super[n-1] unused

  std::size_t size() const { return diag.size(); }
};

struct LinearSystem {
  Tridiag matrix;
  std::vector<double> rhs;
};

/// (I - g tau^2 D_x(h D_x .)) eta = eta_star with the compact h-weighted
/// stencil; h is ghosted, h_{i+1/2} = (h_i + h_{i+1}) / 2. The ghost values of
/// eta are eliminated with the given closures.
LinearSystem assemble_eta_system(std::span<const double> h_ghosted, std::span<const double> eta_star,
                                 double tau, double g, double dx, AffineClosure left,
                                 AffineClosure right);

/// Thomas algorithm. Throws NumericalError on a vanishing pivot.
std::vector<double> thomas_solve(const Tridiag& sys, std::span<const double> rhs);

/// y = A x, used by residual checks.
std::vector<double> tridiag_multiply(const Tridiag& sys, std::span<const double> x);

}  // namespace exner
