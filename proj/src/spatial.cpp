#include "exner/spatial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "exner/model.hpp"

namespace exner {

namespace {

bool is_cell_aligned(double offset, double dx) {
  const double k = offset / dx;
  return std::abs(k - std::round(k)) < 1e-9 * std::max(1.0, std::abs(k));
}

}  // namespace

Grid Grid::uniform(double x_left, double x_interface, double x_right, std::size_t n_cells) {
  if (n_cells == 0) throw std::invalid_argument("n_cells must be positive");
  if (!(x_right > x_left)) throw std::invalid_argument("x_right must exceed x_left");
  if (!(x_interface > x_left && x_interface <= x_right))
    throw std::invalid_argument("x_interface must lie in (x_left, x_right]");
  Grid grid;
  grid.x_left = x_left;
  grid.x_interface = x_interface;
  grid.x_right = x_right;
  grid.n_cells = n_cells;
  grid.dx = (x_right - x_left) / static_cast<double>(n_cells);
  if (!is_cell_aligned(x_interface - x_left, grid.dx))
    throw std::invalid_argument("x_interface does not coincide with a cell edge");
  return grid;
}

Grid Grid::with_right_edge(double new_right, double new_interface) const {
  if (!is_cell_aligned(new_right - x_left, dx))
    throw std::invalid_argument("new right edge does not coincide with a cell edge");
  const auto n = static_cast<std::size_t>(std::llround((new_right - x_left) / dx));
  Grid grid = uniform(x_left, new_interface, x_left + static_cast<double>(n) * dx, n);
  grid.dx = dx;
  return grid;
}

std::size_t Grid::n_physical_cells() const {
  return static_cast<std::size_t>(std::llround((x_interface - x_left) / dx));
}

double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::abs(a) < std::abs(b) ? a : b;
}

EdgeValues reconstruct(std::span<const double> u) {
  if (u.size() < 3) throw std::invalid_argument("reconstruct: need one owned cell and two ghosts");
  const std::size_t last = u.size() - 1;
  const std::size_t n_edges = u.size() - 1;

  auto slope = [&](std::size_t j) {
    if (j == 0) return u[1] - u[0];
    if (j == last) return u[last] - u[last - 1];
    return minmod(u[j] - u[j - 1], u[j + 1] - u[j]);
  };

  EdgeValues e;
  e.minus.resize(n_edges);
  e.plus.resize(n_edges);
  for (std::size_t k = 0; k < n_edges; ++k) {
    e.minus[k] = u[k] + 0.5 * slope(k);
    e.plus[k] = u[k + 1] - 0.5 * slope(k + 1);
  }
  return e;
}

std::vector<double> rusanov_edge_fluxes(const std::function<double(double)>& flux_of,
                                        const EdgeValues& edges, std::span<const double> alpha) {
  const std::size_t n = edges.minus.size();
  if (alpha.size() != n) throw std::invalid_argument("rusanov: one speed per edge required");
  std::vector<double> f(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (alpha[k] < 0.0) throw std::invalid_argument("rusanov: negative edge speed");
    f[k] = rusanov_flux(flux_of(edges.minus[k]), flux_of(edges.plus[k]), edges.minus[k],
                        edges.plus[k], alpha[k]);
  }
  return f;
}

std::vector<double> flux_divergence(std::span<const double> edge_flux, double dx) {
  std::vector<double> d(edge_flux.size() - 1);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (edge_flux[i + 1] - edge_flux[i]) / dx;
  return d;
}

std::vector<double> rusanov_divergence(const std::function<double(double)>& flux_of,
                                       const EdgeValues& edges, std::span<const double> alpha,
                                       double dx) {
  return flux_divergence(rusanov_edge_fluxes(flux_of, edges, alpha), dx);
}

std::vector<double> centered_gradient(std::span<const double> u, double dx) {
  if (u.size() < 3) throw std::invalid_argument("centered_gradient: need ghosts on both sides");
  std::vector<double> d(u.size() - 2);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (u[i + 2] - u[i]) / (2.0 * dx);
  return d;
}

LinearSystem assemble_eta_system(std::span<const double> h, std::span<const double> eta_star,
                                 double tau, double g, double dx, AffineClosure left,
                                 AffineClosure right) {
  const std::size_t n = eta_star.size();
  if (h.size() != n + 2) throw std::invalid_argument("assemble_eta_system: h must be ghosted");
  for (double v : h)
    if (!(v > 0.0)) throw NumericalError("assemble_eta_system: non-positive depth");

  const double k = g * tau * tau / (dx * dx);
  LinearSystem s;
  s.matrix.sub.assign(n, 0.0);
  s.matrix.diag.assign(n, 1.0);
  s.matrix.super.assign(n, 0.0);
  s.rhs.assign(eta_star.begin(), eta_star.end());

  for (std::size_t i = 0; i < n; ++i) {
    // ghosted index of owned cell i is i + 1
    const double h_w = 0.5 * (h[i] + h[i + 1]);
    const double h_e = 0.5 * (h[i + 1] + h[i + 2]);
    s.matrix.diag[i] += k * (h_w + h_e);
    if (i > 0) {
      s.matrix.sub[i] = -k * h_w;
    } else {
      s.matrix.diag[i] -= k * h_w * left.coef;
      s.rhs[i] += k * h_w * left.offset;
    }
    if (i + 1 < n) {
      s.matrix.super[i] = -k * h_e;
    } else {
      s.matrix.diag[i] -= k * h_e * right.coef;
      s.rhs[i] += k * h_e * right.offset;
    }
  }
  return s;
}

std::vector<double> thomas_solve(const Tridiag& a, std::span<const double> rhs) {
  const std::size_t n = a.size();
  if (rhs.size() != n) throw std::invalid_argument("thomas_solve: size mismatch");
  if (n == 0) return {};
  std::vector<double> c(n), d(n), x(n);
  auto check = [](double pivot) {
    if (!(std::abs(pivot) > 1e-300)) throw NumericalError("thomas_solve: singular system");
  };
  check(a.diag[0]);
  c[0] = a.super[0] / a.diag[0];
  d[0] = rhs[0] / a.diag[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double pivot = a.diag[i] - a.sub[i] * c[i - 1];
    check(pivot);
    c[i] = a.super[i] / pivot;
    d[i] = (rhs[i] - a.sub[i] * d[i - 1]) / pivot;
  }
  x[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

std::vector<double> tridiag_multiply(const Tridiag& a, std::span<const double> x) {
  const std::size_t n = a.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = a.diag[i] * x[i];
    if (i > 0) y[i] += a.sub[i] * x[i - 1];
    if (i + 1 < n) y[i] += a.super[i] * x[i + 1];
  }
  return y;
}

}  // namespace exner
