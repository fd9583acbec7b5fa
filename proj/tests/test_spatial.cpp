#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "exner/model.hpp"
#include "exner/spatial.hpp"

using namespace exner;

namespace {

using Dense = std::vector<std::vector<double>>;

// Gaussian elimination with partial pivoting.
std::vector<double> dense_solve(Dense a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

Dense to_dense(const Tridiag& t) {
  const std::size_t n = t.size();
  Dense a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = t.diag[i];
    if (i > 0) a[i][i - 1] = t.sub[i];
    if (i + 1 < n) a[i][i + 1] = t.super[i];
  }
  return a;
}

// eta - g tau^2 / dx^2 * [h_e (eta_{i+1} - eta_i) - h_w (eta_i - eta_{i-1})],
// ghosts from the closures.
std::vector<double> apply_operator(const std::vector<double>& h, const std::vector<double>& eta,
                                   double tau, double g, double dx, AffineClosure l,
                                   AffineClosure r) {
  const std::size_t n = eta.size();
  std::vector<double> e(n + 2);
  std::copy(eta.begin(), eta.end(), e.begin() + 1);
  e[0] = l.apply(eta.front());
  e[n + 1] = r.apply(eta.back());
  std::vector<double> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double hw = 0.5 * (h[i - 1] + h[i]), he = 0.5 * (h[i] + h[i + 1]);
    out[i - 1] = e[i] - g * tau * tau / (dx * dx) * (he * (e[i + 1] - e[i]) - hw * (e[i] - e[i - 1]));
  }
  return out;
}

}  // namespace

TEST_CASE("grid construction") {
  const Grid g = Grid::uniform(-2.0, 4.0, 10.0, 1200);
  CHECK(g.dx == doctest::Approx(0.01));
  CHECK(g.n_physical_cells() == 600);
  CHECK(g.has_absorbing_layer());
  CHECK(g.center(0) == doctest::Approx(-1.995));
  const Grid t = g.with_right_edge(4.0, 4.0);
  CHECK(t.n_cells == 600);
  CHECK(t.dx == g.dx);
  CHECK_FALSE(t.has_absorbing_layer());
  CHECK_THROWS_WITH(Grid::uniform(0.0, 1.0, 1.0, 0), doctest::Contains("n_cells"));
  CHECK_THROWS_WITH(Grid::uniform(1.0, 1.0, 0.0, 4), doctest::Contains("x_right"));
  CHECK_THROWS_WITH(Grid::uniform(0.0, 0.3, 1.0, 4), doctest::Contains("x_interface"));
  CHECK_THROWS_WITH(Grid::uniform(0.0, 2.0, 1.0, 4), doctest::Contains("x_interface"));
}

TEST_CASE("minmod") {
  CHECK(minmod(1.0, 2.0) == 1.0);
  CHECK(minmod(-1.0, 2.0) == 0.0);
  CHECK(minmod(-2.0, -1.0) == -1.0);
  CHECK(minmod(0.0, 3.0) == 0.0);
}

TEST_CASE("reconstruction of constants and linears") {
  const std::vector<double> c(8, 2.5);
  const auto ec = reconstruct(c);
  REQUIRE(ec.minus.size() == 7);
  for (std::size_t k = 0; k < 7; ++k) {
    CHECK(ec.minus[k] == 2.5);
    CHECK(ec.plus[k] == 2.5);
  }
  std::vector<double> lin(8);
  for (std::size_t j = 0; j < 8; ++j) lin[j] = 0.3 * static_cast<double>(j) - 1.0;
  const auto el = reconstruct(lin);
  for (std::size_t k = 0; k < 7; ++k) {
    const double edge = 0.3 * (static_cast<double>(k) + 0.5) - 1.0;
    CHECK(el.minus[k] == doctest::Approx(edge).epsilon(1e-14));
    CHECK(el.plus[k] == doctest::Approx(edge).epsilon(1e-14));
  }
}

TEST_CASE("reconstruction of a spike") {
  const std::vector<double> s{0, 0, 0, 1, 0, 0, 0};
  const auto e = reconstruct(s);
  // edge 2 separates the flat cell 2 from the spike cell 3
  CHECK(e.minus[2] == 0.0);
  CHECK(e.plus[2] == 1.0);
  CHECK(e.minus[3] == 1.0);
  CHECK(e.plus[3] == 0.0);
  for (std::size_t k : {0u, 1u, 4u, 5u}) {
    CHECK(e.minus[k] == 0.0);
    CHECK(e.plus[k] == 0.0);
  }
}

TEST_CASE("reconstruction creates no new extrema on monotone data") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> step(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> u(30);
    u[0] = 0.0;
    for (std::size_t j = 1; j < u.size(); ++j) u[j] = u[j - 1] + step(rng) * step(rng);
    const auto e = reconstruct(u);
    for (std::size_t k = 1; k + 2 < u.size(); ++k) {
      CHECK(e.minus[k] >= u[k] - 1e-15);
      CHECK(e.minus[k] <= u[k + 1] + 1e-15);
      CHECK(e.plus[k] >= u[k] - 1e-15);
      CHECK(e.plus[k] <= u[k + 1] + 1e-15);
    }
  }
  CHECK_THROWS_AS(reconstruct(std::vector<double>{1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("rusanov divergence") {
  auto burgers = [](double u) { return 0.5 * u * u; };

  const std::vector<double> c(6, 1.7);
  const auto ec = reconstruct(c);
  const std::vector<double> a5(5, 2.0);
  for (double d : rusanov_divergence(burgers, ec, a5, 0.1)) CHECK(d == 0.0);

  // two owned cells with Riemann data 1 | 0, ghosts continue each side
  const std::vector<double> r{1.0, 1.0, 0.0, 0.0};
  const auto er = reconstruct(r);
  const std::vector<double> a3(3, 1.0);
  const auto f = rusanov_edge_fluxes(burgers, er, a3);
  CHECK(f[0] == doctest::Approx(0.5));
  CHECK(f[1] == doctest::Approx(0.75));  // 0.5 (0.5 + 0 - 1 (0 - 1))
  CHECK(f[2] == doctest::Approx(0.0));
  const auto d = rusanov_divergence(burgers, er, a3, 1.0);
  CHECK(d[0] == doctest::Approx(0.25));
  CHECK(d[1] == doctest::Approx(-0.75));

  // equal edge limits: central flux difference
  const std::vector<double> lin{0.0, 1.0, 2.0, 3.0, 4.0};
  const auto el = reconstruct(lin);
  const std::vector<double> a4(4, 5.0);
  const auto dl = rusanov_divergence(burgers, el, a4, 1.0);
  for (std::size_t i = 0; i < dl.size(); ++i) {
    const double xl = static_cast<double>(i) + 0.5, xr = xl + 1.0;
    CHECK(dl[i] == doctest::Approx(burgers(xr) - burgers(xl)));
  }
  CHECK_THROWS_AS(rusanov_edge_fluxes(burgers, er, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("centered gradient") {
  for (double d : centered_gradient(std::vector<double>(5, 3.0), 0.1)) CHECK(d == 0.0);
  std::vector<double> lin(7);
  for (std::size_t j = 0; j < 7; ++j) lin[j] = -2.0 * 0.1 * static_cast<double>(j);
  for (double d : centered_gradient(lin, 0.1)) CHECK(d == doctest::Approx(-2.0));
  const auto q = centered_gradient(std::vector<double>{0.01, 0.0, 0.01}, 0.1);
  CHECK(q[0] == 0.0);
}

TEST_CASE("eta system: identity at tau 0 and constants preserved") {
  const std::vector<double> h{1.0, 1.2, 0.9, 1.1, 1.0};
  const std::vector<double> es{0.3, -0.2, 0.7};
  const auto s0 = assemble_eta_system(h, es, 0.0, 9.81, 0.5, AffineClosure::neumann(), AffineClosure::neumann());
  const auto x0 = thomas_solve(s0.matrix, s0.rhs);
  for (std::size_t i = 0; i < 3; ++i) CHECK(x0[i] == es[i]);

  const std::vector<double> c(3, 1.25);
  const auto sc = assemble_eta_system(h, c, 0.3, 9.81, 0.5, AffineClosure::neumann(), AffineClosure::neumann());
  for (double v : thomas_solve(sc.matrix, sc.rhs)) CHECK(v == doctest::Approx(1.25).epsilon(1e-14));
}

TEST_CASE("eta system: three cells against a dense oracle") {
  const std::vector<double> h(5, 1.0);
  const std::vector<double> es{1.0, 2.0, -1.0};
  const double tau = 0.1, g = 9.81, dx = 1.0;
  const auto s = assemble_eta_system(h, es, tau, g, dx, AffineClosure::dirichlet(0.5), AffineClosure::dirichlet(-0.25));
  CHECK(s.matrix.sub[1] == doctest::Approx(-0.0981));
  CHECK(s.matrix.super[1] == doctest::Approx(-0.0981));
  CHECK(s.matrix.diag[1] == doctest::Approx(1.0 + 2.0 * 0.0981));

  // dense matrix built column by column from the operator itself
  const AffineClosure l = AffineClosure::dirichlet(0.5), r = AffineClosure::dirichlet(-0.25);
  const auto off = apply_operator(h, {0.0, 0.0, 0.0}, tau, g, dx, l, r);
  Dense a(3, std::vector<double>(3));
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<double> e(3, 0.0);
    e[j] = 1.0;
    const auto col = apply_operator(h, e, tau, g, dx, l, r);
    for (std::size_t i = 0; i < 3; ++i) a[i][j] = col[i] - off[i];
  }
  std::vector<double> b(3);
  for (std::size_t i = 0; i < 3; ++i) b[i] = es[i] - off[i];
  const auto want = dense_solve(a, b);
  const auto got = thomas_solve(s.matrix, s.rhs);
  for (std::size_t i = 0; i < 3; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-13));
}

TEST_CASE("eta system: variable depth and affine closures solve the operator") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> U(0.5, 1.5);
  const std::size_t n = 40;
  std::vector<double> h(n + 2), es(n);
  for (double& v : h) v = U(rng);
  for (double& v : es) v = U(rng);
  const AffineClosure l{0.7, 0.2}, r{-0.4, 1.1};
  const auto s = assemble_eta_system(h, es, 0.2, 9.81, 0.05, l, r);
  const auto eta = thomas_solve(s.matrix, s.rhs);
  const auto back = apply_operator(h, eta, 0.2, 9.81, 0.05, l, r);
  for (std::size_t i = 0; i < n; ++i) CHECK(back[i] == doctest::Approx(es[i]).epsilon(1e-10));

  std::vector<double> bad(h);
  bad[3] = 0.0;
  CHECK_THROWS_AS(assemble_eta_system(bad, es, 0.2, 9.81, 0.05, l, r), NumericalError);
}

TEST_CASE("thomas solver") {
  Tridiag id{{0, 0, 0}, {1, 1, 1}, {0, 0, 0}};
  const auto x = thomas_solve(id, std::vector<double>{4.0, 5.0, 6.0});
  CHECK(x == std::vector<double>{4.0, 5.0, 6.0});

  Tridiag two{{0, 1}, {2, 2}, {1, 0}};
  const auto y = thomas_solve(two, std::vector<double>{3.0, 3.0});
  CHECK(y[0] == doctest::Approx(1.0));
  CHECK(y[1] == doctest::Approx(1.0));

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  const std::size_t n = 50;
  Tridiag t;
  t.sub.resize(n);
  t.diag.resize(n);
  t.super.resize(n);
  std::vector<double> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.sub[i] = i > 0 ? U(rng) : 0.0;
    t.super[i] = i + 1 < n ? U(rng) : 0.0;
    t.diag[i] = 2.5 + std::abs(U(rng));
    rhs[i] = U(rng);
  }
  const auto got = thomas_solve(t, rhs);
  const auto want = dense_solve(to_dense(t), rhs);
  for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(got[i] - want[i]) < 1e-10);
  const auto back = tridiag_multiply(t, got);
  for (std::size_t i = 0; i < n; ++i) CHECK(back[i] == doctest::Approx(rhs[i]).epsilon(1e-12));

  Tridiag sing{{0, 0}, {0, 1}, {1, 0}};
  CHECK_THROWS_AS(thomas_solve(sing, std::vector<double>{1.0, 1.0}), NumericalError);
}
