#include <array>
#include <cmath>
#include <complex>

#include <doctest.h>

#include "mdstress/bilinear.hpp"
#include "mdstress/clifford.hpp"
#include "mdstress/errors.hpp"
#include "mdstress/linalg.hpp"
#include "mdstress/rng.hpp"
#include "mdstress/stress.hpp"

using namespace mdstress;

namespace {

double tensor_diff(const Tensor2& a, const Tensor2& b) {
  double r = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      r = std::max(r, std::abs(a[mu][nu] - b[mu][nu]));
  return r;
}

/// Plane-wave jet psi = u e^{-i p.x} at x = 0, with p on the mass shell and
/// u = (gamma.p + m) w normalized to unit norm.  Returns the upper-index
/// momentum alongside the jet.
struct PlaneWave {
  SpinorJet jet;
  Vec4d p{};
};

PlaneWave plane_wave(const Vec4d& p_spatial, double mass, const Vec4c& seed) {
  const GammaBasis& g = dirac_basis();
  PlaneWave pw;
  pw.p = p_spatial;
  double p2 = 0.0;
  for (int i = 1; i < 4; ++i) p2 += p_spatial[i] * p_spatial[i];
  pw.p[0] = std::sqrt(mass * mass + p2);

  Mat4 slash = mass * Mat4::identity();
  for (int mu = 0; mu < 4; ++mu)
    slash += eta_sign(mu) * pw.p[mu] * g.gamma[static_cast<std::size_t>(mu)];
  Spinor w;
  w.c = seed;
  Spinor u;
  u.c = slash * w.c;
  const double inv = 1.0 / std::sqrt(norm2(u));
  for (auto& z : u.c) z *= inv;

  pw.jet.value = u;
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < 4; ++a)
      pw.jet.d[static_cast<std::size_t>(mu)].c[static_cast<std::size_t>(a)] =
          -kImag * eta_sign(mu) * pw.p[mu] * u.c[static_cast<std::size_t>(a)];
  return pw;
}

}  // namespace

TEST_CASE("plane-wave solution: canonical tensor is minus momentum times current") {
  const PlaneWave pw = plane_wave(Vec4d{0.0, 0.3, -0.4, 0.5}, 1.0,
                                  Vec4c{Complex(0.8, 0.1), Complex(-0.3, 0.2),
                                        Complex(0.45, -0.25), Complex(0.0, 0.15)});
  const BilinearJet bj = bilinear_jet(pw.jet);
  const Tensor2 canon = canonical_tensor(bj);
  const Tensor2 sym = belinfante_spinor(bj);
  const Vec4d j_lo = lower_real(bj.value.j);
  const Vec4d p_lo = lower_index(pw.p);

  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      CHECK(std::abs(canon[mu][nu] + p_lo[nu] * j_lo[mu]) <= 1e-13 * bj.scale);
      CHECK(std::abs(sym[mu][nu] +
                     0.5 * (p_lo[mu] * j_lo[nu] + p_lo[nu] * j_lo[mu])) <=
            1e-13 * bj.scale);
    }

  // p.j = m sigma on shell, and the free Lagrangian vanishes
  double pj = 0.0;
  for (int mu = 0; mu < 4; ++mu) pj += p_lo[mu] * bj.value.j[mu].real();
  CHECK(std::abs(pj - 1.0 * bj.value.sigma.real()) <= 1e-13 * bj.scale);
  const EMField free_field = EMField::from_potential(Vec4d{}, Rank2d{}, 1.0, 1.0);
  CHECK(std::abs(spinor_lagrangian(bj, free_field)) <= 1e-13 * bj.scale);
  CHECK(std::abs(bilinear_lagrangian(bj, free_field)) <= 1e-12 * bj.scale);
}

TEST_CASE("current-form tensor equals the symmetrized spinor tensor") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const BilinearJet bj = bilinear_jet(rng.spinor_jet());
    const Tensor2 spinor_route = belinfante_spinor(bj);
    const Tensor2 current_route = belinfante_bilinear(bj);
    CHECK(tensor_diff(spinor_route, current_route) <= 1e-12 * bj.scale);

    // the split into the three named pieces sums back to the total
    const BelinfanteParts parts = belinfante_bilinear_parts(bj);
    Tensor2 sum{};
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        sum[mu][nu] = parts.k_term[mu][nu] + parts.eps_term[mu][nu] +
                      parts.mn_term[mu][nu];
    CHECK(tensor_diff(sum, parts.total()) <= 1e-15 * (1.0 + max_abs(sum)));

    // both routes are symmetric, and the spinor route is the explicit
    // symmetrization of the canonical tensor
    const Tensor2 canon = canonical_tensor(bj);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        CHECK(std::abs(spinor_route[mu][nu] - spinor_route[nu][mu]) <=
              1e-15 * (1.0 + max_abs(spinor_route)));
        CHECK(std::abs(spinor_route[mu][nu] -
                       0.5 * (canon[mu][nu] + canon[nu][mu])) <=
              1e-15 * (1.0 + max_abs(canon)));
      }
  }
}

TEST_CASE("current-form tensor rejects a degenerate invariant") {
  SpinorJet jet;
  jet.value.c = Vec4c{Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0),
                      Complex(0.0, 0.0)};
  jet.d[1].c = Vec4c{Complex(0.1, 0.0), Complex(0.0, 0.2), Complex(0.0, 0.0),
                     Complex(0.3, 0.0)};
  const BilinearJet bj = bilinear_jet(jet);
  CHECK_THROWS_AS(belinfante_bilinear(bj), DegenerateInvariant);
}

TEST_CASE("spin-density tensor is totally antisymmetric in its outer indices") {
  Rng rng(32);
  const GammaBasis& g = dirac_basis();
  for (int trial = 0; trial < 50; ++trial) {
    const Spinor psi = rng.spinor();
    CHECK(spin_density_residual(psi) <= 1e-13 * quadratic_scale(psi));

    // independent rebuild straight from the matrix algebra
    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int sig = 0; sig < 4; ++sig)
        for (int nu = 0; nu < 4; ++nu) {
          const Mat4 m1 = anticommutator(g.gamma[static_cast<std::size_t>(mu)],
                                         g.sigma[static_cast<std::size_t>(sig)]
                                                [static_cast<std::size_t>(nu)]);
          const Mat4 m2 = anticommutator(g.gamma[static_cast<std::size_t>(nu)],
                                         g.sigma[static_cast<std::size_t>(sig)]
                                                [static_cast<std::size_t>(mu)]);
          const Complex s1 = -0.25 * bilinear_form(psi, m1, psi);
          const Complex s2 = -0.25 * bilinear_form(psi, m2, psi);
          worst = std::max(worst, std::abs(s1 + s2));
        }
    CHECK(worst <= 1e-13 * quadratic_scale(psi));
  }
}

TEST_CASE("free-field tensor: frozen uniform-field values and invariants") {
  SUBCASE("uniform field along the third axis") {
    const double E = 1.7;
    Rank2d dA{};
    dA[3][0] = -E;  // d_3 A^0
    const EMField em = EMField::from_potential(Vec4d{}, dA, 1.0, 1.0);
    CHECK(em.F[0][3] == doctest::Approx(E).epsilon(1e-15));
    CHECK(em.F[3][0] == doctest::Approx(-E).epsilon(1e-15));
    const Tensor2 th = maxwell_tensor(em);
    CHECK(std::abs(th[0][0] - 0.5 * E * E) <= 1e-14 * E * E);
    CHECK(std::abs(th[1][1] - 0.5 * E * E) <= 1e-14 * E * E);
    CHECK(std::abs(th[2][2] - 0.5 * E * E) <= 1e-14 * E * E);
    CHECK(std::abs(th[3][3] + 0.5 * E * E) <= 1e-14 * E * E);
    CHECK(std::abs(th[0][3]) <= 1e-14 * E * E);
  }

  SUBCASE("random fields: symmetry, tracelessness, energy density, flux") {
    Rng rng(33);
    for (int trial = 0; trial < 200; ++trial) {
      const EMField em = rng.em_field(1.0, 1.0);
      const Tensor2 th = maxwell_tensor(em);
      const double scale = 1.0 + max_abs(th);

      double trace_eta = 0.0;
      for (int mu = 0; mu < 4; ++mu) trace_eta += eta_sign(mu) * th[mu][mu];
      CHECK(std::abs(trace_eta) <= 1e-13 * scale);
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          CHECK(std::abs(th[mu][nu] - th[nu][mu]) <= 1e-13 * scale);

      // electric and magnetic vectors read off the field strength
      std::array<double, 3> Ev{}, Bv{};
      for (int i = 0; i < 3; ++i) Ev[static_cast<std::size_t>(i)] = em.F[0][i + 1];
      Bv[0] = -em.F[2][3];
      Bv[1] = -em.F[3][1];
      Bv[2] = -em.F[1][2];
      const double u = 0.5 * (Ev[0] * Ev[0] + Ev[1] * Ev[1] + Ev[2] * Ev[2] +
                              Bv[0] * Bv[0] + Bv[1] * Bv[1] + Bv[2] * Bv[2]);
      CHECK(std::abs(th[0][0] - u) <= 1e-13 * scale);
      const std::array<double, 3> S{Ev[1] * Bv[2] - Ev[2] * Bv[1],
                                    Ev[2] * Bv[0] - Ev[0] * Bv[2],
                                    Ev[0] * Bv[1] - Ev[1] * Bv[0]};
      for (int i = 0; i < 3; ++i)
        CHECK(std::abs(th[0][i + 1] + S[static_cast<std::size_t>(i)]) <=
              1e-13 * scale);
    }
  }
}

TEST_CASE("interaction tensor is the symmetrized current-potential product") {
  Rng rng(34);
  const BilinearJet bj = bilinear_jet(rng.spinor_jet());
  const Vec4d X = rng.vec4();
  const double q = 1.3;
  const Tensor2 t = interaction_tensor(bj, X, q);
  const Vec4d j_lo = lower_real(bj.value.j);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const double want = 0.5 * q * (j_lo[mu] * X[nu] + j_lo[nu] * X[mu]);
      CHECK(std::abs(t[mu][nu] - want) <= 1e-15 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("composite potential requires a nonzero coupling") {
  Rng rng(35);
  const BilinearJet bj = bilinear_jet(rng.spinor_jet());
  const EMField em = EMField::from_potential(rng.vec4(), rng.rank2(), 0.0, 1.0);
  CHECK_THROWS_AS(b_field(bj, em), ZeroCharge);
}

TEST_CASE("both full-tensor routes agree in the presence of a field") {
  Rng rng(36);
  for (int trial = 0; trial < 200; ++trial) {
    const BilinearJet bj = bilinear_jet(rng.spinor_jet());
    const EMField em = rng.em_field(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0));
    const Tensor2 lhs = assemble_md(bj, em);
    const Tensor2 rhs = assemble_md_spinor_route(bj, em);
    const double scale = 1.0 + max_abs(lhs) + max_abs(rhs) + bj.scale;
    CHECK(tensor_diff(lhs, rhs) <= 1e-11 * scale);
  }
}

TEST_CASE("metric-variation tensor decomposes exactly off shell") {
  Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const BilinearJet bj = bilinear_jet(rng.spinor_jet());
    const EMField em = rng.em_field(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0));
    const Tensor2 pre = variational_pre_tensor(bj, em);
    const BelinfanteParts parts = belinfante_bilinear_parts(bj);
    const Tensor2 inter = interaction_tensor(bj, b_field(bj, em), em.charge);
    const double L = bilinear_lagrangian(bj, em);
    Tensor2 rhs{};
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        rhs[mu][nu] = parts.k_term[mu][nu] + parts.eps_term[mu][nu] +
                      inter[mu][nu] - eta(mu, nu) * L;
    const double scale = 1.0 + max_abs(pre) + max_abs(rhs) + bj.scale;
    CHECK(tensor_diff(pre, rhs) <= 1e-12 * scale);
  }
}

TEST_CASE("the two Lagrangian forms agree for generic off-shell data") {
  Rng rng(38);
  for (int trial = 0; trial < 300; ++trial) {
    const BilinearJet bj = bilinear_jet(rng.spinor_jet());
    const EMField em = rng.em_field(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0));
    const double l1 = spinor_lagrangian(bj, em);
    const double l2 = bilinear_lagrangian(bj, em);
    CHECK(std::abs(l1 - l2) <= 1e-11 * (1.0 + std::abs(l1) + bj.scale));
  }
}

TEST_CASE("assembled tensor responds to each physical input") {
  Rng rng(39);
  const BilinearJet bj = bilinear_jet(rng.spinor_jet());
  const Vec4d A = rng.vec4();
  const Rank2d dA = rng.rank2();
  const EMField em = EMField::from_potential(A, dA, 1.1, 0.9);
  const Tensor2 base = assemble_md(bj, em);

  const EMField em_q = EMField::from_potential(A, dA, 1.6, 0.9);
  CHECK(tensor_diff(base, assemble_md(bj, em_q)) > 1e-6);

  Rank2d dA2 = dA;
  dA2[1][2] += 0.5;
  const EMField em_f = EMField::from_potential(A, dA2, 1.1, 0.9);
  CHECK(tensor_diff(base, assemble_md(bj, em_f)) > 1e-6);
}
