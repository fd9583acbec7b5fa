#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "exner/boundary.hpp"

using namespace exner;

namespace {

constexpr double g = 9.81;

double w_of(const PrimitiveCell& c) { return c.u + 2.0 * std::sqrt(g * c.h); }
double r_of(const PrimitiveCell& c) { return c.u - 2.0 * std::sqrt(g * c.h); }

}  // namespace

TEST_CASE("wave-train forcing") {
  const WaveTrainForcing f;
  CHECK(f.phi(0.0) == 0.2);
  CHECK(f.phi_t(0.0) == doctest::Approx(0.14));
  const double t = 0.3, e = 1e-6;
  CHECK(f.phi_t(t) == doctest::Approx((f.phi(t + e) - f.phi(t - e)) / (2 * e)).epsilon(1e-8));
}

TEST_CASE("bc kind parsing") {
  CHECK(parse_bc_kind("nc") == BcKind::nc);
  CHECK(parse_bc_kind("sc") == BcKind::sc);
  CHECK(parse_bc_kind("ac") == BcKind::ac);
  CHECK(to_string(BcKind::sc) == "sc");
  CHECK_THROWS_AS(parse_bc_kind("xx"), std::invalid_argument);
}

TEST_CASE("left inflow ghost") {
  const PrimitiveCell first{1.0, 0.2, 0.1, 0.0};
  const auto same = left_ghost(first, 0.2, 0.0, 0.01, g);
  CHECK(same.h == 1.0);
  CHECK(same.u == doctest::Approx(0.2));

  const auto a = left_ghost(first, 0.21, 0.0, 0.01, g);
  CHECK(a.u == doctest::Approx(0.22));
  CHECK(a.h == doctest::Approx(1.0 + (0.04 - 0.0441) / (2.0 * 9.81)).epsilon(1e-14));
  CHECK(a.h == doctest::Approx(0.99979).epsilon(1e-5));
  CHECK(a.zb == first.zb);
  CHECK(a.b == first.b);

  const PrimitiveCell c{1.02, 0.19, 0.1, 0.0};
  const auto b = left_ghost(c, WaveTrainForcing{}, 0.0, 0.01, g);
  CHECK(b.h == doctest::Approx(1.02 + 0.14 * 0.01 / 9.81 + 0.5 * (0.19 * 0.19 - 0.04) / 9.81).epsilon(1e-14));
  CHECK(b.u == doctest::Approx(0.21));

  CHECK_THROWS_AS(left_ghost({1e-6, 0.2, 0.0, 0.0}, 0.2, -10.0, 0.01, g), NumericalError);
}

TEST_CASE("neumann ghost copies the last cell") {
  const PrimitiveCell c{0.8, -0.1, 0.3, 0.05};
  const auto gh = right_ghost_nc(c);
  CHECK(gh.h == c.h);
  CHECK(gh.u == c.u);
  CHECK(gh.zb == c.zb);
  CHECK(gh.b == c.b);
}

TEST_CASE("simple-wave ghost") {
  const PrimitiveCell last{1.0, 0.2, 0.1, 0.0};
  const SimpleWaveState sw = SimpleWaveState::from(last, g);
  CHECK(sw.w3_ghost == doctest::Approx(w_of(last)));
  CHECK(sw.r_minus == doctest::Approx(r_of(last)));

  SUBCASE("uniform state is a fixed point") {
    const auto r = right_ghost_sc(last, sw, 0.05, 0.01, g);
    CHECK_FALSE(r.fell_back);
    CHECK(r.ghost.h == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.ghost.u == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(r.state.w3_ghost == doctest::Approx(sw.w3_ghost).epsilon(1e-15));
  }
  SUBCASE("dt 0 uses only the stored invariants") {
    const PrimitiveCell other{1.1, 0.3, 0.2, 0.01};
    const SimpleWaveState s2{w_of(last) + 0.01, r_of(last)};
    const auto r = right_ghost_sc(other, s2, 0.0, 0.01, g);
    CHECK(r.state.w3_ghost == s2.w3_ghost);
    CHECK(w_of(r.ghost) == doctest::Approx(s2.w3_ghost).epsilon(1e-14));
    CHECK(r_of(r.ghost) == doctest::Approx(s2.r_minus).epsilon(1e-14));
    CHECK(r.ghost.zb == other.zb);
    CHECK(r.ghost.b == other.b);
  }
  SUBCASE("the ghost invariant relaxes toward the last cell") {
    const PrimitiveCell raised{1.01, 0.21, 0.1, 0.0};
    const double wl = w_of(raised);
    const auto r = right_ghost_sc(raised, sw, 0.02, 0.01, g);
    CHECK(r.state.w3_ghost > sw.w3_ghost);
    CHECK(r.state.w3_ghost < wl);
    const double lam = 0.25 * (3.0 * sw.w3_ghost + sw.r_minus);
    const double nu = 0.02 * lam / 0.01;
    // backward-Euler relation of the upwind update
    CHECK(r.state.w3_ghost - sw.w3_ghost == doctest::Approx(-nu * (r.state.w3_ghost - wl)).epsilon(1e-12));
    CHECK(r.state.r_minus == sw.r_minus);
  }
  SUBCASE("collapsed depth falls back to neumann") {
    const SimpleWaveState bad{-10.0, sw.r_minus};
    const auto r = right_ghost_sc(last, bad, 0.0, 0.01, g);
    CHECK(r.fell_back);
    CHECK(r.ghost.h == last.h);
  }
  CHECK_FALSE(simple_wave_cell(0.0, 1.0, last, g).has_value());
}

TEST_CASE("damping profile") {
  CHECK(damping_profile(4.0, 4.0, 3.0) == 0.0);
  CHECK(damping_profile(2.0, 4.0, 3.0) == 0.0);
  CHECK(damping_profile(7.0, 4.0, 3.0) == doctest::Approx(1.0));
  CHECK(damping_profile(10.0, 4.0, 3.0) == doctest::Approx(4.0));
}

TEST_CASE("controller closures") {
  const Grid grid = Grid::uniform(-2.0, 4.0, 4.0, 60);
  const State s = State::uniform(60, {1.0, 0.2, 0.1, 0.0});
  const WaveTrainForcing steady{0.2, 0.0, 14.0};

  SUBCASE("neumann with a uniform state") {
    BoundaryController bc(grid, BoundaryStrategy::neumann(), steady, g, s);
    bc.begin_step(s, 0.05);
    const auto c = bc.fill_ghosts(s, {0.0, 0.0, 0.05, 1.0, 0.05});
    CHECK(c.left.eta == doctest::Approx(s.eta[0]));
    CHECK(c.left.q == doctest::Approx(s.q[0]));
    CHECK(c.right.eta == s.eta.back());
    CHECK(c.right.q == s.q.back());
    CHECK(c.eta_right.coef == 1.0);
    CHECK(c.eta_right.offset == 0.0);
    CHECK(c.q_left.apply(s.q[0]) == doctest::Approx(s.q[0]));
    CHECK(c.eta_left.apply(s.eta[0]) == doctest::Approx(s.eta[0]));
  }
  SUBCASE("absorbing layer keeps neumann at the far edge") {
    const Grid full = Grid::uniform(-2.0, 4.0, 10.0, 120);
    const State s2 = State::uniform(120, {1.0, 0.2, 0.1, 0.0});
    BoundaryController bc(full, BoundaryStrategy::absorbing(3.0), steady, g, s2);
    const auto c = bc.fill_ghosts(s2, {0.0, 0.0, 0.05, 1.0, 0.05});
    CHECK(c.right.eta == s2.eta.back());
    CHECK(c.q_right.coef == 1.0);
    CHECK_THROWS_AS(BoundaryController(grid, BoundaryStrategy::absorbing(3.0), steady, g, s),
                    std::invalid_argument);
  }
  SUBCASE("simple-wave memory is shared by the stages of a step") {
    State p = s;
    p.eta.back() += 0.01;
    p.q.back() += 0.02;
    BoundaryController bc(grid, BoundaryStrategy::simple_wave(), steady, g, s);
    const double w0 = bc.simple_wave_state().w3_ghost;
    bc.begin_step(p, 0.05);
    const auto c1 = bc.fill_ghosts(p, {0.0, 0.0, 0.02, 0.4, 0.02});
    const auto c2 = bc.fill_ghosts(p, {0.0, 0.0, 0.02, 0.4, 0.02});
    CHECK(c1.right.eta == c2.right.eta);
    CHECK(c1.eta_right.offset == c2.eta_right.offset);
    // stages read the committed value, they do not advance it
    CHECK(bc.simple_wave_state().w3_ghost == w0);
    // explicit fraction 0 sees exactly the stored invariant
    const double h_g = c1.right.eta - c1.right.zb - c1.right.b;
    CHECK(c1.right.q / h_g + 2.0 * std::sqrt(g * h_g) == doctest::Approx(w0).epsilon(1e-14));
    // the implicit fraction has moved toward the last cell
    const double wl = w_of(p.cell(59));
    CHECK(c1.eta_right.coef == 0.0);
    CHECK(c1.eta_right.offset > c1.right.eta);
    CHECK(wl > w0);

    bc.end_step(p);
    const double w1 = bc.simple_wave_state().w3_ghost;
    CHECK(w1 > w0);
    CHECK(w1 < wl);
    CHECK(w1 == doctest::Approx(right_ghost_sc(p.cell(59), SimpleWaveState{w0, r_of(s.cell(59))}, 0.05, grid.dx, g).state.w3_ghost));
  }
}
