#include "exner/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace exner {

State State::uniform(std::size_t n, const PrimitiveCell& c) {
  State s;
  s.eta.assign(n, c.eta());
  s.q.assign(n, c.q());
  s.zb.assign(n, c.zb);
  s.b.assign(n, c.b);
  return s;
}

double State::min_depth() const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < size(); ++i) m = std::min(m, h(i));
  return m;
}

double State::max_abs_velocity() const {
  double m = 0.0;
  for (std::size_t i = 0; i < size(); ++i) m = std::max(m, std::abs(u(i)));
  return m;
}

State blend(double a, const State& x, const State& y) {
  State r = x;
  const double c = 1.0 - a;
  for (std::size_t i = 0; i < x.size(); ++i) {
    r.eta[i] = a * x.eta[i] + c * y.eta[i];
    r.q[i] = a * x.q[i] + c * y.q[i];
    r.zb[i] = a * x.zb[i] + c * y.zb[i];
  }
  return r;
}

GhostedState::GhostedState(const State& s, const GhostCell& left, const GhostCell& right) {
  auto pad = [](const std::vector<double>& v, double l, double r) {
    std::vector<double> out;
    out.reserve(v.size() + 2);
    out.push_back(l);
    out.insert(out.end(), v.begin(), v.end());
    out.push_back(r);
    return out;
  };
  eta = pad(s.eta, left.eta, right.eta);
  q = pad(s.q, left.q, right.q);
  zb = pad(s.zb, left.zb, right.zb);
  b = pad(s.b, left.b, right.b);
}

}  // namespace exner
