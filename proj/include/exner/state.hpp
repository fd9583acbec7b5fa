#pragma once

#include <cstddef>
#include <vector>

#include "exner/model.hpp"

namespace exner {

/// Cell averages of the evolved unknowns (eta, q, zb) and the fixed bathymetry b.
struct State {
  std::vector<double> eta;
  std::vector<double> q;
  std::vector<double> zb;
  std::vector<double> b;

  static State uniform(std::size_t n, const PrimitiveCell& c);

  std::size_t size() const { return eta.size(); }
  double h(std::size_t i) const { return eta[i] - b[i] - zb[i]; }
  double u(std::size_t i) const { return q[i] / h(i); }
  PrimitiveCell cell(std::size_t i) const { return {h(i), u(i), zb[i], b[i]}; }

  double min_depth() const;
  double max_abs_velocity() const;
};

/// a * x + (1 - a) * y on (eta, q, zb); bathymetry is taken from x.
State blend(double a, const State& x, const State& y);

/// Conserved-variable content of one ghost cell.
struct GhostCell {
  double eta = 0.0;
  double q = 0.0;
  double zb = 0.0;
  double b = 0.0;

  static GhostCell from(const PrimitiveCell& c) { return {c.eta(), c.q(), c.zb, c.b}; }
  double h() const { return eta - b - zb; }
};

/// Each field padded with one ghost per side (length n + 2).
struct GhostedState {
  std::vector<double> eta;
  std::vector<double> q;
  std::vector<double> zb;
  std::vector<double> b;

  GhostedState(const State& s, const GhostCell& left, const GhostCell& right);

  std::size_t n_owned() const { return eta.size() - 2; }
  double h(std::size_t j) const { return eta[j] - b[j] - zb[j]; }
};

}  // namespace exner
