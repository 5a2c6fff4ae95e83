#include <cmath>
#include <cstddef>
#include <vector>

#include <doctest.h>

#include "mdstress/errors.hpp"
#include "mdstress/linalg.hpp"
#include "mdstress/rng.hpp"
#include "mdstress/spherical.hpp"

#include "spherical_fixture.hpp"

using namespace mdstress;
using mdstress_test::trig_grid;
using mdstress_test::trig_jet;

TEST_CASE("radial field coefficient: frozen rational fixture") {
  // With only sigma, sigma_r, j_a, j_a_r nonzero the radial coefficient
  // reduces to a rational number: -7/416 for these inputs.
  SphericalJet sj;
  sj.r = 2.0;
  sj.sigma = 2.0;
  sj.sigma_r = 0.5;
  sj.j_a = 1.5;
  sj.j_a_r = 0.25;
  SphericalParams p;
  p.sign = +1;
  p.charge = 1.3;
  p.mass = 0.7;
  const auto [F_a, F_b] = maxwell_coeffs(sj, p);
  CHECK(std::abs(F_a - (-7.0 / 416.0)) <= 1e-15);
  CHECK(std::abs(F_b - 1.0 / 20.8) <= 1e-15);
}

TEST_CASE("magnetic coefficient is the exact monopole profile") {
  SphericalParams p;
  p.charge = 1.0;
  p.mass = 1.0;
  const double radii[] = {0.5, 1.0, 2.0};
  const double expected[] = {4.0, 0.5, 0.0625};
  for (int s : {+1, -1}) {
    p.sign = s;
    for (int i = 0; i < 3; ++i) {
      SphericalJet sj = trig_jet(0.2, radii[i]);
      sj.r = radii[i];
      const auto [F_a, F_b] = maxwell_coeffs(sj, p);
      (void)F_a;
      CHECK(std::abs(F_b - s * expected[i]) <= 1e-15 * expected[i]);
    }
  }
}

TEST_CASE("evaluate_spherical bundles the three coefficient groups") {
  const SphericalJet sj = trig_jet(0.4, 1.6);
  SphericalParams p;
  p.sign = -1;
  p.charge = 1.2;
  p.mass = 0.8;
  const SphericalResult res = evaluate_spherical(sj, p);
  const auto [B_a, B_b] = potentials(sj, p);
  const auto [F_a, F_b] = maxwell_coeffs(sj, p);
  const auto [T_a, T_b, T_c, scriptF] = stress_functions(sj, p);
  CHECK(res.B_a == B_a);
  CHECK(res.B_b == B_b);
  CHECK(res.F_a == F_a);
  CHECK(res.F_b == F_b);
  CHECK(res.T_a == T_a);
  CHECK(res.T_b == T_b);
  CHECK(res.T_c == T_c);
  CHECK(res.scriptF == scriptF);
  CHECK(res.scriptF ==
        0.5 * sj.r * sj.r * (res.F_a * res.F_a + res.F_b * res.F_b));
}

TEST_CASE("normal and tangential stress share their current-derivative core") {
  // T_c - T_a must equal m sigma (j_a^2 - r^2 j_b^2)/(sigma^2 + w^2) - 2 scriptF.
  for (const double t : {0.1, 0.5, 0.9})
    for (const double r : {1.1, 1.5, 1.9}) {
      const SphericalJet sj = trig_jet(t, r);
      for (int s : {+1, -1}) {
        SphericalParams p;
        p.sign = s;
        p.charge = 1.3;
        p.mass = 0.7;
        const SphericalResult res = evaluate_spherical(sj, p);
        const double D = sj.invariant();
        const double want = p.mass * sj.sigma *
                                (sj.j_a * sj.j_a - r * r * sj.j_b * sj.j_b) / D -
                            2.0 * res.scriptF;
        CHECK(std::abs((res.T_c - res.T_a) - want) <=
              1e-13 * (1.0 + std::abs(res.T_a) + std::abs(res.T_c)));
      }
    }
}

TEST_CASE("reduced tensor matches the general machinery on the embedded jet") {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const SphericalJet sj = trig_jet(rng.uniform(0.0, 1.0), rng.uniform(1.0, 2.0));
    SphericalParams p;
    p.sign = (trial % 2 == 0) ? +1 : -1;
    p.charge = rng.uniform(0.5, 2.0);
    p.mass = rng.uniform(0.5, 2.0);

    // random direction scaled to the jet radius
    Vec4d x{};
    double n = 0.0;
    while (n < 1e-3) {
      for (int i = 1; i < 4; ++i) x[i] = rng.normal();
      n = std::sqrt(x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
    }
    for (int i = 1; i < 4; ++i) x[i] *= sj.r / n;

    const SphericalCrossCheck cc = embed_and_crosscheck(sj, p, x);
    CHECK(cc.normalized() <= 1e-12);
    CHECK(cc.eps_term_max <= 1e-12 * cc.eps_scale);
  }
}

TEST_CASE("embedding cross-check pins the sign of the mass term in the flux") {
  // Flipping the sign of the mass contribution to T_b moves the assembled
  // tensor by an amount orders of magnitude above the cross-check tolerance,
  // so the agreement test above discriminates between the two signs.
  const SphericalJet sj = trig_jet(0.3, 1.4);
  SphericalParams p;
  p.sign = +1;
  p.charge = 1.3;
  p.mass = 0.7;
  const Vec4d x{0.0, 0.7 * sj.r, 0.0, std::sqrt(1.0 - 0.49) * sj.r};

  const SphericalCrossCheck cc = embed_and_crosscheck(sj, p, x);
  CHECK(cc.max_abs <= 1e-12 * cc.scale);

  const SphericalResult res = evaluate_spherical(sj, p);
  SphericalResult flipped = res;
  flipped.T_b = res.T_b - 2.0 * p.mass * sj.sigma * sj.j_a * sj.r * sj.j_b /
                              sj.invariant();
  CHECK(std::abs(flipped.T_b - res.T_b) > 1e-3);

  const Tensor2 good = assemble_spherical(res, x);
  const Tensor2 bad = assemble_spherical(flipped, x);
  double diff = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      diff = std::max(diff, std::abs(good[mu][nu] - bad[mu][nu]));
  CHECK(diff > 1e-3);
}

TEST_CASE("assembled tensor has the advertised block structure") {
  SphericalResult res;
  res.T_a = 0.7;
  res.T_b = -0.4;
  res.T_c = 0.9;
  res.scriptF = 0.25;
  const Vec4d x{0.0, 1.0, 2.0, -2.0};
  const double r2 = 9.0;
  const double r = 3.0;
  const Tensor2 t = assemble_spherical(res, x);
  CHECK(t[0][0] == doctest::Approx(res.T_a + res.scriptF).epsilon(1e-15));
  for (int i = 1; i < 4; ++i) {
    CHECK(t[0][i] == doctest::Approx(x[i] / r * res.T_b).epsilon(1e-15));
    CHECK(t[i][0] == t[0][i]);
    for (int j = 1; j < 4; ++j) {
      const double want =
          x[i] * x[j] / r2 * res.T_c + (i == j ? res.scriptF : 0.0);
      CHECK(t[i][j] == doctest::Approx(want).epsilon(1e-14));
    }
  }
}

TEST_CASE("degenerate and invalid inputs are rejected") {
  SphericalParams p;

  SUBCASE("zero coupling") {
    p.charge = 0.0;
    CHECK_THROWS_AS(evaluate_spherical(trig_jet(0.2, 1.5), p), ZeroCharge);
  }
  SUBCASE("vanishing invariant") {
    SphericalJet sj = trig_jet(0.2, 1.5);
    sj.sigma = 0.0;
    sj.w = 0.0;
    CHECK_THROWS_AS(evaluate_spherical(sj, p), DegenerateInvariant);
  }
  SUBCASE("radius below the floor") {
    SphericalJet sj = trig_jet(0.2, 1.5);
    sj.r = 1e-9;
    CHECK_THROWS_AS(evaluate_spherical(sj, p), DegenerateInvariant);
  }
  SUBCASE("embedding point off the sphere") {
    const SphericalJet sj = trig_jet(0.2, 1.5);
    const Vec4d x{0.0, 1.0, 0.0, 0.0};  // |x| = 1 but sj.r = 1.5
    CHECK_THROWS_AS(embed_and_crosscheck(sj, p, x), RadiusMismatch);
  }
}

TEST_CASE("finite-difference weights reproduce the classical stencils") {
  const double h = 0.25;
  const std::vector<double> nodes{-h, 0.0, h};

  const std::vector<double> w1 = fd_weights(0.0, nodes, 1);
  CHECK(w1[0] == doctest::Approx(-1.0 / (2.0 * h)).epsilon(1e-14));
  CHECK(w1[1] == doctest::Approx(0.0));
  CHECK(w1[2] == doctest::Approx(1.0 / (2.0 * h)).epsilon(1e-14));

  const std::vector<double> w2 = fd_weights(0.0, nodes, 2);
  CHECK(w2[0] == doctest::Approx(1.0 / (h * h)).epsilon(1e-14));
  CHECK(w2[1] == doctest::Approx(-2.0 / (h * h)).epsilon(1e-14));
  CHECK(w2[2] == doctest::Approx(1.0 / (h * h)).epsilon(1e-14));

  // one-sided first derivative: {-3/(2h), 2/h, -1/(2h)}
  const std::vector<double> w3 = fd_weights(-h, nodes, 1);
  CHECK(w3[0] == doctest::Approx(-3.0 / (2.0 * h)).epsilon(1e-14));
  CHECK(w3[1] == doctest::Approx(2.0 / h).epsilon(1e-14));
  CHECK(w3[2] == doctest::Approx(-0.5 / h).epsilon(1e-14));
}

TEST_CASE("finite-difference weights are exact on low-degree polynomials") {
  const std::vector<double> nodes{0.3, 0.45, 0.7, 1.1};
  const double x0 = 0.52;
  const auto poly = [](double x) { return 3.0 * x * x * x - 2.0 * x * x + x - 5.0; };
  const auto dpoly = [](double x) { return 9.0 * x * x - 4.0 * x + 1.0; };
  const auto ddpoly = [](double x) { return 18.0 * x - 4.0; };

  for (int order = 0; order <= 2; ++order) {
    const std::vector<double> w = fd_weights(x0, nodes, order);
    REQUIRE(w.size() == nodes.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += w[i] * poly(nodes[i]);
    const double want = order == 0 ? poly(x0) : order == 1 ? dpoly(x0) : ddpoly(x0);
    CHECK(acc == doctest::Approx(want).epsilon(1e-12));
  }

  CHECK_THROWS_AS(fd_weights(0.0, std::vector<double>{0.0, 1.0}, 2), GridTooSmall);
}

TEST_CASE("grid jets are exact on quadratic data over irregular nodes") {
  GridTable grid;
  grid.t = {0.0, 0.1, 0.25, 0.45, 0.8};
  grid.r = {1.0, 1.15, 1.4, 1.9, 2.3};
  const auto f = [](double t, double r) {
    return 0.7 + 1.3 * t - 0.4 * t * t + 2.1 * r + 0.6 * r * r - 0.9 * t * r;
  };
  std::vector<double> field(25);
  for (std::size_t it = 0; it < 5; ++it)
    for (std::size_t ir = 0; ir < 5; ++ir)
      field[grid.index(it, ir)] = f(grid.t[it], grid.r[ir]);

  for (std::size_t it = 0; it < 5; ++it)
    for (std::size_t ir = 0; ir < 5; ++ir) {
      const double t = grid.t[it];
      const double r = grid.r[ir];
      const ScalarJet2 jet = grid_scalar_jet(grid, field, it, ir);
      CHECK(jet.v == doctest::Approx(f(t, r)).epsilon(1e-13));
      CHECK(jet.dt == doctest::Approx(1.3 - 0.8 * t - 0.9 * r).epsilon(1e-12));
      CHECK(jet.dr == doctest::Approx(2.1 + 1.2 * r - 0.9 * t).epsilon(1e-12));
      CHECK(jet.dtt == doctest::Approx(-0.8).epsilon(1e-11));
      CHECK(jet.drr == doctest::Approx(1.2).epsilon(1e-11));
    }
}

TEST_CASE("grid evaluation converges to the analytic reduced functions") {
  SphericalParams p;
  p.sign = +1;
  p.charge = 1.3;
  p.mass = 0.7;
  const GridTable grid = trig_grid(21, 21);
  const std::vector<GridNodeResult> out = grid_evaluate(grid, p, FdConfig{}, false);
  REQUIRE(out.size() == 441);

  double worst = 0.0;
  for (const GridNodeResult& node : out) {
    CHECK_FALSE(node.degenerate);
    const SphericalResult exact = evaluate_spherical(trig_jet(node.t, node.r), p);
    worst = std::max(worst, std::abs(node.res.T_a - exact.T_a));
    worst = std::max(worst, std::abs(node.res.F_a - exact.F_a));
    worst = std::max(worst, std::abs(node.res.B_b - exact.B_b));
  }
  CHECK(worst <= 5e-3);   // second-order differences on h = 1/20
  CHECK(worst >= 1e-10);  // the comparison is not vacuous
}

TEST_CASE("grids that cannot support the stencils are rejected") {
  GridTable grid = trig_grid(2, 5);
  SphericalParams p;
  CHECK_THROWS_AS(grid_evaluate(grid, p, FdConfig{}, false), GridTooSmall);
}

TEST_CASE("degenerate grid nodes are flagged instead of fatal when allowed") {
  GridTable grid = trig_grid(5, 5);
  const std::size_t bad = grid.index(2, 2);
  grid.sigma[bad] = 0.0;
  grid.w[bad] = 0.0;
  SphericalParams p;

  CHECK_THROWS_AS(grid_evaluate(grid, p, FdConfig{}, false), DegenerateInvariant);

  const std::vector<GridNodeResult> out = grid_evaluate(grid, p, FdConfig{}, true);
  REQUIRE(out.size() == 25);
  int flagged = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].degenerate) {
      ++flagged;
      CHECK(std::isnan(out[i].res.T_a));
      CHECK(std::isnan(out[i].res.F_b));
    } else {
      CHECK_FALSE(std::isnan(out[i].res.T_a));
    }
  }
  CHECK(flagged == 1);
  CHECK(out[bad].degenerate);
}
