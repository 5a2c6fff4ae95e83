#include "mdstress/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "mdstress/errors.hpp"

namespace mdstress {

double spherical_W_r(const SphericalJet& sj) {
  return sj.sigma_r * sj.w - sj.sigma * sj.w_r;
}

double spherical_W_t(const SphericalJet& sj) {
  return sj.sigma_t * sj.w - sj.sigma * sj.w_t;
}

namespace {

void require_valid(const SphericalJet& sj, const SphericalParams& p,
                   const FdConfig& cfg) {
  if (p.charge == 0.0) throw ZeroCharge();
  if (sj.r < cfg.r_floor) throw DegenerateInvariant(sj.r, cfg.r_floor);
  if (sj.invariant() <= cfg.degeneracy_floor)
    throw DegenerateInvariant(sj.invariant(), cfg.degeneracy_floor);
}

}  // namespace

std::array<double, 2> potentials(const SphericalJet& sj, const SphericalParams& p) {
  const double s = static_cast<double>(p.sign);
  const double D = sj.invariant();
  const double W_r = spherical_W_r(sj);
  const double W_t = spherical_W_t(sj);
  const double B_a =
      (-s * 0.5 * W_r - p.mass * sj.sigma * sj.j_a) / (p.charge * D);
  const double B_b =
      (s * W_t / (2.0 * sj.r) - p.mass * sj.sigma * sj.j_b) / (p.charge * D);
  return {B_a, B_b};
}

std::array<double, 2> maxwell_coeffs(const SphericalJet& sj,
                                     const SphericalParams& p) {
  const double s = static_cast<double>(p.sign);
  const double D = sj.invariant();
  const double q = p.charge;
  const double m = p.mass;
  const double r = sj.r;
  const double sg = sj.sigma, w = sj.w;

  const double quadratic =
      -2.0 * m *
          (sg * sj.j_a * (sg * sj.sigma_r + w * sj.w_r) +
           r * sg * sj.j_b * (sg * sj.sigma_t + w * sj.w_t)) -
      s * (sg * w *
               (sj.sigma_r * sj.sigma_r - sj.sigma_t * sj.sigma_t -
                sj.w_r * sj.w_r + sj.w_t * sj.w_t) +
           (sg * sg - w * w) * (sj.sigma_t * sj.w_t - sj.sigma_r * sj.w_r));
  const double linear =
      m * (sj.sigma_r * sj.j_a + sg * sj.j_a_r + r * sj.sigma_t * sj.j_b +
           r * sg * sj.j_b_t) -
      s * 0.5 * (sj.sigma_tt * w - sg * sj.w_tt - sj.sigma_rr * w + sg * sj.w_rr);

  const double F_a = quadratic / (q * r * D * D) + linear / (q * r * D);
  const double F_b = s / (2.0 * q * r * r * r);
  return {F_a, F_b};
}

std::array<double, 4> stress_functions(const SphericalJet& sj,
                                       const SphericalParams& p) {
  const double s = static_cast<double>(p.sign);
  const double D = sj.invariant();
  const double W_r = spherical_W_r(sj);
  const double W_t = spherical_W_t(sj);
  const double r = sj.r;
  const double msig = p.mass * sj.sigma;

  const auto [F_a, F_b] = maxwell_coeffs(sj, p);
  const double scriptF = r * r * (F_a * F_a + F_b * F_b) / 2.0;

  const double T_a =
      (-s * 0.5 * (sj.j_a * W_r - r * sj.j_b * W_t) - msig * sj.j_a * sj.j_a) / D;
  const double T_b =
      (-s * 0.5 * (sj.j_a * W_t - r * sj.j_b * W_r) + msig * sj.j_a * r * sj.j_b) /
      D;
  const double T_c = (-s * 0.5 * (sj.j_a * W_r - r * sj.j_b * W_t) -
                      msig * r * r * sj.j_b * sj.j_b) /
                         D -
                     2.0 * scriptF;
  return {T_a, T_b, T_c, scriptF};
}

SphericalResult evaluate_spherical(const SphericalJet& sj, const SphericalParams& p,
                                   const FdConfig& cfg) {
  require_valid(sj, p, cfg);
  SphericalResult res;
  const auto [B_a, B_b] = potentials(sj, p);
  const auto [F_a, F_b] = maxwell_coeffs(sj, p);
  const auto [T_a, T_b, T_c, scriptF] = stress_functions(sj, p);
  res.B_a = B_a;
  res.B_b = B_b;
  res.F_a = F_a;
  res.F_b = F_b;
  res.T_a = T_a;
  res.T_b = T_b;
  res.T_c = T_c;
  res.scriptF = scriptF;
  return res;
}

Tensor2 assemble_spherical(const SphericalResult& res, const Vec4d& x) {
  const double r2 = x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
  const double r = std::sqrt(r2);
  Tensor2 t{};
  t[0][0] = res.T_a + res.scriptF;
  for (int i = 1; i < 4; ++i) {
    t[0][i] = t[i][0] = (x[i] / r) * res.T_b;
    for (int j = 1; j < 4; ++j) {
      t[i][j] = (x[i] * x[j] / r2) * res.T_c;
      if (i == j) t[i][j] += res.scriptF;
    }
  }
  return t;
}

SphericalCrossCheck embed_and_crosscheck(const SphericalJet& sj,
                                         const SphericalParams& p,
                                         const Vec4d& x) {
  const double r = std::sqrt(x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
  if (std::abs(r - sj.r) > 1e-9 * std::max(1.0, sj.r))
    throw RadiusMismatch(sj.r, r);

  const double s = static_cast<double>(p.sign);

  // Embed the reduced data as a full bilinear jet (only the fields the
  // current-form tensor reads are populated; the charge-conjugate vectors
  // vanish in this representation of the embedding).
  BilinearJet bj;
  bj.value.sigma = sj.sigma;
  bj.value.omega = kImag * sj.w;
  bj.value.j[0] = sj.j_a;
  bj.value.k[0] = s * sj.r * sj.j_b;
  for (int i = 1; i < 4; ++i) {
    bj.value.j[i] = x[i] * sj.j_b;
    bj.value.k[i] = s * x[i] * sj.j_a / r;
  }

  // First derivatives.  Scalars obey d_0 f = f_t, d_i f = f_r x_i / r; the
  // vector components follow from the ansatz by the product rule.
  bj.d[0].sigma = sj.sigma_t;
  bj.d[0].omega = kImag * sj.w_t;
  bj.d[0].j[0] = sj.j_a_t;
  bj.d[0].k[0] = s * sj.r * sj.j_b_t;
  for (int i = 1; i < 4; ++i) {
    bj.d[0].j[i] = x[i] * sj.j_b_t;
    bj.d[0].k[i] = s * x[i] * sj.j_a_t / r;
    bj.d[i].sigma = sj.sigma_r * x[i] / r;
    bj.d[i].omega = kImag * sj.w_r * x[i] / r;
    bj.d[i].j[0] = sj.j_a_r * x[i] / r;
    bj.d[i].k[0] = s * x[i] * (sj.j_b / r + sj.j_b_r);
    for (int k = 1; k < 4; ++k) {
      bj.d[i].j[k] = (i == k ? sj.j_b : 0.0) + x[k] * sj.j_b_r * x[i] / r;
      bj.d[i].k[k] = s * ((i == k ? sj.j_a / r : 0.0) +
                          x[i] * x[k] * (sj.j_a_r / (r * r) - sj.j_a / (r * r * r)));
    }
  }

  const SphericalResult res = evaluate_spherical(sj, p, FdConfig{});

  // Field strength from the reduced coefficients, F_{0i} = x_i F_a,
  // F_{ij} = eps_{ijk} x^k F_b.
  EMField em;
  em.charge = p.charge;
  em.mass = p.mass;
  for (int i = 1; i < 4; ++i) {
    em.F[0][i] = x[i] * res.F_a;
    em.F[i][0] = -x[i] * res.F_a;
    for (int j = 1; j < 4; ++j) {
      const int a = i - 1, b = j - 1;
      double acc = 0.0;
      for (int c = 0; c < 3; ++c) {
        // three-dimensional permutation symbol
        const int sign3 = (a == b || b == c || a == c)
                              ? 0
                              : (((b - a + 3) % 3 == 1 && (c - b + 3) % 3 == 1) ? 1 : -1);
        acc += sign3 * x[c + 1] * res.F_b;
      }
      em.F[i][j] = acc;
    }
  }

  // Lower-index composite potential B_mu built from (B_a, B_b).
  Vec4d B{};
  B[0] = res.B_a;
  for (int i = 1; i < 4; ++i) B[i] = -x[i] * res.B_b;

  const BelinfanteParts parts = belinfante_bilinear_parts(bj);
  Tensor2 full = parts.k_term;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) full[mu][nu] += parts.eps_term[mu][nu];
  const Tensor2 inter = interaction_tensor(bj, B, p.charge);
  const Tensor2 maxw = maxwell_tensor(em);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) full[mu][nu] += inter[mu][nu] + maxw[mu][nu];

  const Tensor2 reduced = assemble_spherical(res, x);

  SphericalCrossCheck out;
  double wfull = 0.0, wred = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      out.max_abs = std::max(out.max_abs, std::abs(full[mu][nu] - reduced[mu][nu]));
      wfull = std::max(wfull, std::abs(full[mu][nu]));
      wred = std::max(wred, std::abs(reduced[mu][nu]));
    }
  out.scale = 1.0 + wfull + wred;
  out.eps_term_max = max_abs(parts.eps_term);
  out.eps_scale = out.scale;
  return out;
}

std::vector<double> fd_weights(double x0, const std::vector<double>& nodes,
                               int order) {
  const std::size_t n = nodes.size();
  if (n <= static_cast<std::size_t>(order))
    throw GridTooSmall(n, n);
  // Weight recursion on arbitrary nodes; c[k][j] is the weight of node j in
  // the k-th derivative at x0.
  std::vector<std::vector<double>> c(static_cast<std::size_t>(order) + 1,
                                     std::vector<double>(n, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const int mn = std::min<int>(static_cast<int>(i), order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[k][i] = c1 *
                    (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c[static_cast<std::size_t>(order)];
}

namespace {

/// Windowed finite-difference derivative along one axis: `width` nodes
/// clamped to the axis range, centred on `at` when possible.
double axis_derivative(const std::vector<double>& axis,
                       const std::vector<double>& values, std::size_t at,
                       int order, std::size_t width) {
  const std::size_t n = axis.size();
  width = std::min(width, n);
  std::size_t start = at > 0 ? at - 1 : 0;
  if (start + width > n) start = n - width;
  std::vector<double> nodes(axis.begin() + static_cast<std::ptrdiff_t>(start),
                            axis.begin() + static_cast<std::ptrdiff_t>(start + width));
  const std::vector<double> wgt = fd_weights(axis[at], nodes, order);
  double acc = 0.0;
  for (std::size_t j = 0; j < width; ++j) acc += wgt[j] * values[start + j];
  return acc;
}

}  // namespace

ScalarJet2 grid_scalar_jet(const GridTable& grid, const std::vector<double>& field,
                           std::size_t it, std::size_t ir) {
  const std::size_t nt = grid.nt(), nr = grid.nr();
  if (nt < 3 || nr < 3) throw GridTooSmall(nt, nr);

  ScalarJet2 out;
  out.v = field[grid.index(it, ir)];

  std::vector<double> row_t(nt), row_r(nr);
  for (std::size_t i = 0; i < nt; ++i) row_t[i] = field[grid.index(i, ir)];
  for (std::size_t i = 0; i < nr; ++i) row_r[i] = field[grid.index(it, i)];

  out.dt = axis_derivative(grid.t, row_t, it, 1, 3);
  out.dr = axis_derivative(grid.r, row_r, ir, 1, 3);
  out.dtt = axis_derivative(grid.t, row_t, it, 2, 4);
  out.drr = axis_derivative(grid.r, row_r, ir, 2, 4);
  return out;
}

std::vector<GridNodeResult> grid_evaluate(const GridTable& grid,
                                          const SphericalParams& p,
                                          const FdConfig& cfg,
                                          bool allow_degenerate) {
  const std::size_t nt = grid.nt(), nr = grid.nr();
  if (nt < 3 || nr < 3) throw GridTooSmall(nt, nr);
  const std::size_t need = nt * nr;
  if (grid.sigma.size() != need || grid.w.size() != need ||
      grid.j_a.size() != need || grid.j_b.size() != need)
    throw SchemaError("grid field arrays must hold nt*nr values");
  if (p.charge == 0.0) throw ZeroCharge();

  std::vector<GridNodeResult> out;
  out.reserve(need);
  for (std::size_t it = 0; it < nt; ++it)
    for (std::size_t ir = 0; ir < nr; ++ir) {
      SphericalJet sj;
      sj.t = grid.t[it];
      sj.r = grid.r[ir];
      const ScalarJet2 js = grid_scalar_jet(grid, grid.sigma, it, ir);
      const ScalarJet2 jw = grid_scalar_jet(grid, grid.w, it, ir);
      const ScalarJet2 ja = grid_scalar_jet(grid, grid.j_a, it, ir);
      const ScalarJet2 jb = grid_scalar_jet(grid, grid.j_b, it, ir);
      sj.sigma = js.v;
      sj.sigma_t = js.dt;
      sj.sigma_r = js.dr;
      sj.sigma_tt = js.dtt;
      sj.sigma_rr = js.drr;
      sj.w = jw.v;
      sj.w_t = jw.dt;
      sj.w_r = jw.dr;
      sj.w_tt = jw.dtt;
      sj.w_rr = jw.drr;
      sj.j_a = ja.v;
      sj.j_a_t = ja.dt;
      sj.j_a_r = ja.dr;
      sj.j_b = jb.v;
      sj.j_b_t = jb.dt;
      sj.j_b_r = jb.dr;

      GridNodeResult node;
      node.t = sj.t;
      node.r = sj.r;
      const bool bad = sj.r < cfg.r_floor || sj.invariant() <= cfg.degeneracy_floor;
      if (bad) {
        if (!allow_degenerate) {
          if (sj.r < cfg.r_floor) throw DegenerateInvariant(sj.r, cfg.r_floor);
          throw DegenerateInvariant(sj.invariant(), cfg.degeneracy_floor);
        }
        node.degenerate = true;
        const double nan = std::numeric_limits<double>::quiet_NaN();
        node.res = SphericalResult{nan, nan, nan, nan, nan, nan, nan, nan};
      } else {
        node.res = evaluate_spherical(sj, p, cfg);
      }
      out.push_back(node);
    }
  return out;
}

}  // namespace mdstress
