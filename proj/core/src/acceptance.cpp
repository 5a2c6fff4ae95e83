#include "mdstress/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "mdstress/bilinear.hpp"
#include "mdstress/clifford.hpp"
#include "mdstress/fierz.hpp"
#include "mdstress/io.hpp"
#include "mdstress/linalg.hpp"
#include "mdstress/report.hpp"
#include "mdstress/rng.hpp"
#include "mdstress/spherical.hpp"
#include "mdstress/stress.hpp"

namespace mdstress {

namespace {

double diff_max(const Tensor2& a, const Tensor2& b) {
  double r = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      r = std::max(r, std::abs(a[mu][nu] - b[mu][nu]));
  return r;
}

double vec_max(const Vec4d& v) {
  double r = 0.0;
  for (double x : v) r = std::max(r, std::abs(x));
  return r;
}

double vec_diff_max(const Vec4d& a, const Vec4d& b) {
  double r = 0.0;
  for (int mu = 0; mu < 4; ++mu) r = std::max(r, std::abs(a[mu] - b[mu]));
  return r;
}

double rank2_max(const Rank2d& t) {
  double r = 0.0;
  for (const auto& row : t)
    for (double x : row) r = std::max(r, std::abs(x));
  return r;
}

double nonzero_charge(Rng& rng) {
  const double s = rng.uniform() < 0.5 ? -1.0 : 1.0;
  return s * rng.uniform(0.5, 2.0);
}

struct WorstTracker {
  double value = 0.0;
  std::string name;

  void feed(double normalized, const std::string& label) {
    if (normalized > value) {
      value = normalized;
      name = label;
    }
  }
};

// ---------------------------------------------------------------------------
// 1. Gamma-matrix algebra catalogue.

CriterionResult dirac_criterion(const AcceptanceConfig& cfg) {
  GammaBasis g = build_gamma_basis();
  if (cfg.corrupt_gamma) g.gamma[2](1, 2) += Complex(1e-3, 0.0);
  const IdentityReport rep = verify_dirac_identities(g, 1e-13);
  CriterionResult out;
  out.name = "dirac_algebra";
  out.threshold = 1e-13;
  out.worst = rep.worst_normalized();
  out.pass = rep.all_pass();
  out.detail = std::to_string(rep.entries.size()) + " matrix identities";
  return out;
}

// ---------------------------------------------------------------------------
// 2. Bilinear-identity suite over random jets: fundamental quadratics,
// rank-2 replacement, anti-product rules, the vector-current derivative
// identity (full and contracted), every intermediate expansion, and the
// outer-product expansion itself.

CriterionResult fierz_criterion(const AcceptanceConfig& cfg) {
  Rng rng(cfg.seed + 1);
  const double tol = 1e-9;
  WorstTracker worst;
  for (int trial = 0; trial < cfg.heavy_trials; ++trial) {
    const SpinorJet jet = rng.generic_jet();
    const BilinearJet bj = bilinear_jet(jet);

    const IdentityReport fund = fundamental_identities(bj.value, tol);
    for (const auto& e : fund.entries) worst.feed(e.normalized(), e.name);

    for (const auto& res : fierz_expansion_suite(bj))
      worst.feed(res.normalized(), res.name);

    const BelinfanteResidual bel = belinfante_identity_residual(bj);
    worst.feed(bel.full.normalized(), bel.full.name);
    worst.feed(bel.contracted.normalized(), bel.contracted.name);

    const Spinor chi = rng.spinor();
    const Mat4 outer = outer_product(jet.value, chi);
    const Mat4 rebuilt = fierz_reconstruct(fierz_expand(chi, jet.value));
    const double oscale = 1.0 + std::sqrt(norm2(jet.value) * norm2(chi));
    worst.feed(max_abs_diff(outer, rebuilt) / oscale, "outer_product_expansion");
  }
  CriterionResult out;
  out.name = "bilinear_identity_suite";
  out.threshold = tol;
  out.worst = worst.value;
  out.pass = worst.value <= tol;
  out.detail = std::to_string(cfg.heavy_trials) + " jets, worst entry " + worst.name;
  return out;
}

// ---------------------------------------------------------------------------
// 3. Route equivalence: the symmetrized derivative-form tensor equals the
// current-form tensor entrywise on every sampled jet.

CriterionResult route_criterion(const AcceptanceConfig& cfg) {
  Rng rng(cfg.seed + 2);
  const double tol = 1e-9;
  double worst = 0.0;
  for (int trial = 0; trial < cfg.heavy_trials; ++trial) {
    const SpinorJet jet = rng.generic_jet();
    const BilinearJet bj = bilinear_jet(jet);
    const double d = diff_max(belinfante_bilinear(bj), belinfante_spinor(bj));
    worst = std::max(worst, d / bj.scale);
  }
  CriterionResult out;
  out.name = "route_equivalence";
  out.threshold = tol;
  out.worst = worst;
  out.pass = worst <= tol;
  out.detail = std::to_string(cfg.heavy_trials) +
               " jets, derivative form vs current form";
  return out;
}

// ---------------------------------------------------------------------------
// 4. Combinatorial index identity on arbitrary tensors (not bilinear data).

CriterionResult combinatorial_criterion(const AcceptanceConfig& cfg) {
  Rng rng(cfg.seed + 3);
  const double tol = 1e-11;
  double worst = 0.0;
  for (int trial = 0; trial < cfg.heavy_trials; ++trial) {
    const Rank2d dj = rng.rank2();
    const Vec4d j = rng.vec4();
    const Vec4d k = rng.vec4();
    const double scale =
        (1.0 + rank2_max(dj)) * (1.0 + vec_max(j)) * (1.0 + vec_max(k));
    worst = std::max(worst, combinatorial_residual(dj, j, k) / scale);
  }
  CriterionResult out;
  out.name = "combinatorial_identity";
  out.threshold = tol;
  out.worst = worst;
  out.pass = worst <= tol;
  out.detail = std::to_string(cfg.heavy_trials) + " arbitrary tensor triples";
  return out;
}

// ---------------------------------------------------------------------------
// 5. Variational decomposition: metric-variation tensor = gauge-invariant
// matter tensor + interaction - eta L off-shell; on plane-wave data the
// Lagrangian vanishes and the decomposition loses its trace term.

Tensor2 decomposition_rhs(const BilinearJet& bj, const EMField& em,
                          double* lagrangian_out) {
  const BelinfanteParts parts = belinfante_bilinear_parts(bj);
  const Vec4d B = b_field(bj, em);
  const Tensor2 inter = interaction_tensor(bj, B, em.charge);
  const double L = bilinear_lagrangian(bj, em);
  if (lagrangian_out != nullptr) *lagrangian_out = L;
  Tensor2 rhs{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      rhs[mu][nu] = parts.k_term[mu][nu] + parts.eps_term[mu][nu] +
                    inter[mu][nu] - eta(mu, nu) * L;
  return rhs;
}

SpinorJet plane_wave_jet(Rng& rng, const GammaBasis& g, double mass) {
  for (;;) {
    Vec4d p{};
    for (int i = 1; i < 4; ++i) p[i] = rng.normal();
    p[0] = std::sqrt(mass * mass + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);

    // u = (gamma.p + m) w solves the free equation since p^2 = m^2.
    Mat4 slash = Mat4::zero();
    for (int mu = 0; mu < 4; ++mu) slash += (eta_sign(mu) * p[mu]) * g.gamma[mu];
    slash += mass * Mat4::identity();
    const Spinor w = rng.spinor();
    Spinor u;
    u.c = slash * w.c;
    if (norm2(u) < 1e-2) continue;
    const double inv_norm = 1.0 / std::sqrt(norm2(u));
    for (auto& z : u.c) z *= inv_norm;

    SpinorJet jet;
    jet.value = u;
    for (int mu = 0; mu < 4; ++mu) {
      const double p_lo = eta_sign(mu) * p[mu];
      for (int a = 0; a < 4; ++a) jet.d[mu].c[a] = -kImag * p_lo * u.c[a];
    }
    const BilinearSet b = compute_bilinears(u);
    if (invariant_quadratic(b) <= 4.0 * degeneracy_threshold(b)) continue;
    return jet;
  }
}

CriterionResult variational_criterion(const AcceptanceConfig& cfg) {
  const GammaBasis g = build_gamma_basis();
  Rng rng(cfg.seed + 4);
  const double tol_decomp = 1e-9;
  const double tol_lag = 1e-12;

  double worst_off = 0.0;
  for (int trial = 0; trial < cfg.heavy_trials; ++trial) {
    const SpinorJet jet = rng.generic_jet();
    const BilinearJet bj = bilinear_jet(jet);
    const EMField em = rng.em_field(nonzero_charge(rng), rng.uniform(0.2, 2.0));
    const Tensor2 pre = variational_pre_tensor(bj, em);
    const Tensor2 rhs = decomposition_rhs(bj, em, nullptr);
    const double scale =
        1.0 + rank2_max(pre) + rank2_max(rhs) + bj.scale;
    worst_off = std::max(worst_off, diff_max(pre, rhs) / scale);
  }

  double worst_on = 0.0;
  double worst_lag = 0.0;
  for (int trial = 0; trial < cfg.light_trials; ++trial) {
    const double mass = rng.uniform(0.5, 2.0);
    const double charge = nonzero_charge(rng);
    const SpinorJet jet = plane_wave_jet(rng, g, mass);
    const BilinearJet bj = bilinear_jet(jet);
    const EMField em = EMField::from_potential(Vec4d{}, Rank2d{}, charge, mass);

    double L_bilinear = 0.0;
    const Tensor2 pre = variational_pre_tensor(bj, em);
    const Tensor2 rhs = decomposition_rhs(bj, em, &L_bilinear);
    const double scale = 1.0 + rank2_max(pre) + rank2_max(rhs) + bj.scale;
    worst_on = std::max(worst_on, diff_max(pre, rhs) / scale);
    worst_lag = std::max(worst_lag, std::abs(spinor_lagrangian(bj, em)));
    worst_lag = std::max(worst_lag, std::abs(L_bilinear));
  }

  const double ratio = std::max({worst_off / tol_decomp, worst_on / tol_decomp,
                                 worst_lag / tol_lag});
  CriterionResult out;
  out.name = "variational_decomposition";
  out.threshold = 1.0;
  out.worst = ratio;
  out.pass = ratio <= 1.0;
  out.detail = "off-shell " + format_double(worst_off) + " (tol 1e-9), on-shell " +
               format_double(worst_on) + " (tol 1e-9), plane-wave |L| " +
               format_double(worst_lag) + " (tol 1e-12); worst is the ratio";
  return out;
}

// ---------------------------------------------------------------------------
// 6. Gauge invariance of the sixteen bilinears, the composite potential, and
// the assembled total tensor under random local phase rotations with the
// matching potential shift.

CriterionResult gauge_criterion(const AcceptanceConfig& cfg) {
  Rng rng(cfg.seed + 5);
  const double tol = 1e-9;
  WorstTracker worst;
  for (int trial = 0; trial < cfg.light_trials; ++trial) {
    const SpinorJet jet = rng.generic_jet();
    const BilinearJet bj = bilinear_jet(jet);
    const double q = nonzero_charge(rng);
    const double mass = rng.uniform(0.2, 2.0);
    const EMField em = rng.em_field(q, mass);

    const double theta = rng.normal();
    const Vec4d dtheta = rng.vec4();
    Rank2d hess = rng.rank2();
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu + 1; nu < 4; ++nu)
        hess[mu][nu] = hess[nu][mu] = 0.5 * (hess[mu][nu] + hess[nu][mu]);

    const SpinorJet jet2 = gauge_transform(jet, theta, dtheta);
    const BilinearJet bj2 = bilinear_jet(jet2);

    // psi -> e^{i theta} psi pairs with A_mu -> A_mu - d_mu theta / q;
    // with upper indices the shift picks up a metric sign.
    Vec4d A2 = em.A;
    Rank2d dA2 = em.dA;
    for (int mu = 0; mu < 4; ++mu) {
      A2[mu] -= eta_sign(mu) * dtheta[mu] / q;
      for (int nu = 0; nu < 4; ++nu) dA2[mu][nu] -= eta_sign(nu) * hess[mu][nu] / q;
    }
    const EMField em2 = EMField::from_potential(A2, dA2, q, mass);

    const double vscale = quadratic_scale(jet.value);
    const BilinearSet& b1 = bj.value;
    const BilinearSet& b2 = bj2.value;
    worst.feed(std::abs(b1.sigma - b2.sigma) / vscale, "scalar");
    worst.feed(std::abs(b1.omega - b2.omega) / vscale, "pseudoscalar");
    double dv = 0.0, dk = 0.0, ds = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
      dv = std::max(dv, std::abs(b1.j[mu] - b2.j[mu]));
      dk = std::max(dk, std::abs(b1.k[mu] - b2.k[mu]));
      for (int nu = 0; nu < 4; ++nu)
        ds = std::max(ds, std::abs(b1.s[mu][nu] - b2.s[mu][nu]));
    }
    worst.feed(dv / vscale, "vector");
    worst.feed(dk / vscale, "axial_vector");
    worst.feed(ds / vscale, "tensor");

    const Vec4d B1 = b_field(bj, em);
    const Vec4d B2 = b_field(bj2, em2);
    const double jscale = std::max(bj.scale, bj2.scale);
    worst.feed(vec_diff_max(B1, B2) /
                   (1.0 + vec_max(B1) + vec_max(B2) + jscale),
               "composite_potential");

    const Tensor2 T1 = assemble_md(bj, em);
    const Tensor2 T2 = assemble_md(bj2, em2);
    worst.feed(diff_max(T1, T2) / (1.0 + rank2_max(T1) + rank2_max(T2) + jscale),
               "total_tensor");
  }
  CriterionResult out;
  out.name = "gauge_invariance";
  out.threshold = tol;
  out.worst = worst.value;
  out.pass = worst.value <= tol;
  out.detail = std::to_string(cfg.light_trials) +
               " random local transformations, worst entry " + worst.name;
  return out;
}

// ---------------------------------------------------------------------------
// 7. Rotationally symmetric reduction: embedded general-formula evaluation
// against the closed-form reduced functions, the vanishing of the
// Levi-Civita term under the ansatz, and the exact monopole coefficient.

CriterionResult spherical_criterion(const AcceptanceConfig& cfg) {
  Rng rng(cfg.seed + 6);
  const double tol_main = 1e-10;
  const double tol_eps = 1e-11;
  const double tol_mono = 1e-15;

  double worst_main = 0.0, worst_eps = 0.0;
  for (int trial = 0; trial < cfg.light_trials; ++trial) {
    const SphericalJet sj = rng.spherical_jet();
    SphericalParams p;
    p.sign = rng.uniform() < 0.5 ? -1 : 1;
    p.charge = nonzero_charge(rng);
    p.mass = rng.uniform(0.2, 2.0);

    double d1 = 0.0, d2 = 0.0, d3 = 0.0, n = 0.0;
    do {
      d1 = rng.normal();
      d2 = rng.normal();
      d3 = rng.normal();
      n = std::sqrt(d1 * d1 + d2 * d2 + d3 * d3);
    } while (n < 1e-3);
    Vec4d x{};
    x[0] = sj.t;
    x[1] = sj.r * d1 / n;
    x[2] = sj.r * d2 / n;
    x[3] = sj.r * d3 / n;

    const SphericalCrossCheck cc = embed_and_crosscheck(sj, p, x);
    worst_main = std::max(worst_main, cc.max_abs / cc.scale);
    worst_eps = std::max(worst_eps, cc.eps_term_max / cc.eps_scale);
  }

  // Frozen closed-form magnetic coefficient at unit charge: |F_b| = 1/(2 r^3).
  double worst_mono = 0.0;
  const double radii[3] = {0.5, 1.0, 2.0};
  const double expected[3] = {4.0, 0.5, 0.0625};
  for (int s = -1; s <= 1; s += 2)
    for (int i = 0; i < 3; ++i) {
      SphericalJet sj = rng.spherical_jet();
      sj.r = radii[i];
      SphericalParams p;
      p.sign = s;
      p.charge = 1.0;
      p.mass = rng.uniform(0.2, 2.0);
      const double F_b = maxwell_coeffs(sj, p)[1];
      const double want = s * expected[i];
      worst_mono = std::max(worst_mono, std::abs(F_b - want) / std::abs(want));
    }

  const double ratio = std::max(
      {worst_main / tol_main, worst_eps / tol_eps, worst_mono / tol_mono});
  CriterionResult out;
  out.name = "spherical_reduction";
  out.threshold = 1.0;
  out.worst = ratio;
  out.pass = ratio <= 1.0;
  out.detail = "embedding " + format_double(worst_main) +
               " (tol 1e-10), Levi-Civita term " + format_double(worst_eps) +
               " (tol 1e-11), monopole " + format_double(worst_mono) +
               " (tol 1e-15); worst is the ratio";
  return out;
}

// ---------------------------------------------------------------------------
// 8. Total antisymmetry of the spin-density combination.

CriterionResult spin_density_criterion(const AcceptanceConfig& cfg) {
  Rng rng(cfg.seed + 7);
  const double tol = 1e-12;
  double worst = 0.0;
  for (int trial = 0; trial < cfg.light_trials; ++trial) {
    const Spinor psi = rng.spinor();
    worst = std::max(worst, spin_density_residual(psi) / quadratic_scale(psi));
  }
  CriterionResult out;
  out.name = "spin_density_antisymmetry";
  out.threshold = tol;
  out.worst = worst;
  out.pass = worst <= tol;
  out.detail = std::to_string(cfg.light_trials) + " random spinors";
  return out;
}

// ---------------------------------------------------------------------------
// 9. Finite-difference grid evaluator: second-order convergence against an
// analytic trigonometric fixture.

struct TrigFixture {
  static SphericalJet exact(double t, double r) {
    SphericalJet sj;
    sj.t = t;
    sj.r = r;
    sj.sigma = 2.0 + 0.3 * std::sin(t) * std::cos(r);
    sj.sigma_t = 0.3 * std::cos(t) * std::cos(r);
    sj.sigma_r = -0.3 * std::sin(t) * std::sin(r);
    sj.sigma_tt = -0.3 * std::sin(t) * std::cos(r);
    sj.sigma_rr = -0.3 * std::sin(t) * std::cos(r);
    sj.w = 0.5 + 0.2 * std::cos(t) * std::sin(r);
    sj.w_t = -0.2 * std::sin(t) * std::sin(r);
    sj.w_r = 0.2 * std::cos(t) * std::cos(r);
    sj.w_tt = -0.2 * std::cos(t) * std::sin(r);
    sj.w_rr = -0.2 * std::cos(t) * std::sin(r);
    sj.j_a = 1.0 + 0.4 * std::sin(t + r);
    sj.j_a_t = 0.4 * std::cos(t + r);
    sj.j_a_r = 0.4 * std::cos(t + r);
    sj.j_b = 0.3 + 0.1 * std::cos(t - r);
    sj.j_b_t = -0.1 * std::sin(t - r);
    sj.j_b_r = 0.1 * std::sin(t - r);
    return sj;
  }

  static GridTable grid(std::size_t nt, std::size_t nr) {
    GridTable g;
    g.t.resize(nt);
    g.r.resize(nr);
    for (std::size_t i = 0; i < nt; ++i)
      g.t[i] = static_cast<double>(i) / static_cast<double>(nt - 1);
    for (std::size_t i = 0; i < nr; ++i)
      g.r[i] = 1.0 + static_cast<double>(i) / static_cast<double>(nr - 1);
    g.sigma.resize(nt * nr);
    g.w.resize(nt * nr);
    g.j_a.resize(nt * nr);
    g.j_b.resize(nt * nr);
    for (std::size_t it = 0; it < nt; ++it)
      for (std::size_t ir = 0; ir < nr; ++ir) {
        const SphericalJet sj = exact(g.t[it], g.r[ir]);
        const std::size_t idx = it * nr + ir;
        g.sigma[idx] = sj.sigma;
        g.w[idx] = sj.w;
        g.j_a[idx] = sj.j_a;
        g.j_b[idx] = sj.j_b;
      }
    return g;
  }
};

double grid_worst_error(std::size_t nt, std::size_t nr, const SphericalParams& p) {
  const GridTable g = TrigFixture::grid(nt, nr);
  const std::vector<GridNodeResult> nodes = grid_evaluate(g, p, FdConfig{}, false);
  double err = 0.0;
  for (const auto& node : nodes) {
    const SphericalResult want = evaluate_spherical(TrigFixture::exact(node.t, node.r), p);
    const SphericalResult& got = node.res;
    err = std::max({err, std::abs(got.B_a - want.B_a), std::abs(got.B_b - want.B_b),
                    std::abs(got.F_a - want.F_a), std::abs(got.F_b - want.F_b),
                    std::abs(got.T_a - want.T_a), std::abs(got.T_b - want.T_b),
                    std::abs(got.T_c - want.T_c),
                    std::abs(got.scriptF - want.scriptF)});
  }
  return err;
}

CriterionResult convergence_criterion(const AcceptanceConfig&) {
  SphericalParams p;
  p.sign = 1;
  p.charge = 1.3;
  p.mass = 0.7;
  const double coarse = grid_worst_error(11, 11, p);
  const double fine = grid_worst_error(21, 21, p);
  const double ratio = coarse / fine;
  CriterionResult out;
  out.name = "grid_convergence";
  out.threshold = 3.5;
  out.worst = ratio;
  out.pass = ratio >= 3.5;
  out.detail = "mesh halving 11x11 -> 21x21, error " + format_double(coarse) +
               " -> " + format_double(fine) + "; worst is the ratio (higher is better)";
  return out;
}

// ---------------------------------------------------------------------------
// 10. Determinism: the full reporting pipeline run twice from the same seed
// must produce byte-identical output.

std::string determinism_digest(const AcceptanceConfig& cfg) {
  std::string out;
  Rng rng(cfg.seed + 9);

  const GammaBasis g = build_gamma_basis();
  out += report_json(verify_dirac_identities(g, 1e-13));

  std::vector<StressRecord> recs;
  for (int i = 0; i < 100; ++i) {
    const SpinorJet jet = rng.generic_jet();
    const BilinearJet bj = bilinear_jet(jet);
    const EMField em = rng.em_field(nonzero_charge(rng), rng.uniform(0.2, 2.0));
    StressRecord rec;
    rec.bilinear_route = assemble_md(bj, em);
    rec.spinor_route = assemble_md_spinor_route(bj, em);
    rec.max_abs_diff = diff_max(rec.bilinear_route, rec.spinor_route);
    rec.scale = 1.0 + rank2_max(rec.bilinear_route) +
                rank2_max(rec.spinor_route) + bj.scale;
    rec.pass = rec.max_abs_diff <= 1e-9 * rec.scale;
    recs.push_back(rec);
  }
  out += stress_records_json(recs, 1e-9);
  out += stress_records_csv(recs);

  SphericalParams p;
  p.sign = -1;
  p.charge = 1.1;
  p.mass = 0.9;
  const GridTable grid = TrigFixture::grid(7, 7);
  const std::vector<GridNodeResult> nodes = grid_evaluate(grid, p, FdConfig{}, false);
  out += grid_results_csv(nodes);
  out += grid_results_json(nodes);
  return out;
}

CriterionResult determinism_criterion(const AcceptanceConfig& cfg) {
  const std::string first = determinism_digest(cfg);
  const std::string second = determinism_digest(cfg);
  const bool same = first == second;
  CriterionResult out;
  out.name = "determinism";
  out.threshold = 0.0;
  out.worst = same ? 0.0 : 1.0;
  out.pass = same;
  out.detail = "repeated pipeline digest of " + std::to_string(first.size()) +
               " bytes is " + (same ? "byte-identical" : "DIFFERENT");
  return out;
}

}  // namespace

bool AcceptanceOutcome::all_pass() const {
  for (const auto& c : criteria)
    if (!c.pass) return false;
  return true;
}

AcceptanceOutcome run_acceptance(const AcceptanceConfig& cfg) {
  AcceptanceOutcome out;
  out.criteria.push_back(dirac_criterion(cfg));
  out.criteria.push_back(fierz_criterion(cfg));
  out.criteria.push_back(route_criterion(cfg));
  out.criteria.push_back(combinatorial_criterion(cfg));
  out.criteria.push_back(variational_criterion(cfg));
  out.criteria.push_back(gauge_criterion(cfg));
  out.criteria.push_back(spherical_criterion(cfg));
  out.criteria.push_back(spin_density_criterion(cfg));
  out.criteria.push_back(convergence_criterion(cfg));
  out.criteria.push_back(determinism_criterion(cfg));
  return out;
}

std::string acceptance_report(const AcceptanceOutcome& outcome) {
  std::string out;
  for (const auto& c : outcome.criteria) {
    out += c.pass ? "[PASS] " : "[FAIL] ";
    out += c.name;
    out += ": worst ";
    out += format_double(c.worst);
    out += ", threshold ";
    out += format_double(c.threshold);
    out += " (";
    out += c.detail;
    out += ")\n";
  }
  out += outcome.all_pass() ? "ALL CRITERIA PASSED\n" : "CRITERIA FAILED\n";
  return out;
}

}  // namespace mdstress
