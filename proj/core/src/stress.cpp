#include "mdstress/stress.hpp"

#include <cmath>

#include "mdstress/clifford.hpp"
#include "mdstress/errors.hpp"

namespace mdstress {

namespace {

Complex mdn_contraction(const BilinearJet& bj, int mu) {
  Complex acc{};
  for (int s = 0; s < 4; ++s)
    acc += eta_sign(s) * bj.value.m[s] * bj.d[mu].n[s];
  return acc;
}

/// eps_{nu rho sig kap} (d_mu j^rho) j^sig k^kap -- the epsilon block of the
/// current-form tensor, before symmetrization in (mu, nu).
Complex eps_block(const BilinearJet& bj, int mu, int nu) {
  const BilinearSet& b = bj.value;
  Complex acc{};
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      for (int k = 0; k < 4; ++k) {
        const double eps = epsilon_lower(nu, r, s, k);
        if (eps == 0.0) continue;
        acc += eps * bj.d[mu].j[r] * b.j[s] * b.k[k];
      }
  return acc;
}

void accumulate(Tensor2& into, const Tensor2& other) {
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) into[mu][nu] += other[mu][nu];
}

}  // namespace

EMField EMField::from_potential(const Vec4d& A, const Rank2d& dA, double charge,
                                double mass) {
  EMField em;
  em.A = A;
  em.dA = dA;
  em.charge = charge;
  em.mass = mass;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      em.F[mu][nu] = eta_sign(nu) * dA[mu][nu] - eta_sign(mu) * dA[nu][mu];
  return em;
}

Tensor2 canonical_tensor(const BilinearJet& bj) {
  Tensor2 t{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      t[mu][nu] = std::real(-0.5 * kImag * bj.antisym_vector[nu][mu]);
  return t;
}

Tensor2 belinfante_spinor(const BilinearJet& bj) {
  const Tensor2 c = canonical_tensor(bj);
  Tensor2 t{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) t[mu][nu] = 0.5 * (c[mu][nu] + c[nu][mu]);
  return t;
}

double spin_density_residual(const Spinor& psi) {
  const GammaBasis& g = dirac_basis();
  Complex S[4][4][4];
  for (int mu = 0; mu < 4; ++mu)
    for (int s = 0; s < 4; ++s)
      for (int nu = 0; nu < 4; ++nu)
        S[mu][s][nu] = -0.25 * bilinear_form(
                                   psi, anticommutator(g.gamma[mu], g.sigma[s][nu]),
                                   psi);
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int s = 0; s < 4; ++s)
      for (int nu = 0; nu < 4; ++nu)
        worst = std::max(worst, std::abs(S[mu][s][nu] + S[nu][s][mu]));
  return worst;
}

Tensor2 BelinfanteParts::total() const {
  Tensor2 t = k_term;
  accumulate(t, eps_term);
  accumulate(t, mn_term);
  return t;
}

BelinfanteParts belinfante_bilinear_parts(const BilinearJet& bj) {
  require_nondegenerate(bj.value);
  const BilinearSet& b = bj.value;
  const Complex Cinv = 1.0 / (b.sigma * b.sigma - b.omega * b.omega);

  Vec4c k_lo{}, j_lo{}, dsig{}, dom{}, mdn{};
  for (int mu = 0; mu < 4; ++mu) {
    k_lo[mu] = eta_sign(mu) * b.k[mu];
    j_lo[mu] = eta_sign(mu) * b.j[mu];
    dsig[mu] = bj.d[mu].sigma;
    dom[mu] = bj.d[mu].omega;
    mdn[mu] = mdn_contraction(bj, mu);
  }

  BelinfanteParts p;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Complex kk =
          k_lo[mu] * (b.omega * dsig[nu] - b.sigma * dom[nu]) +
          k_lo[nu] * (b.omega * dsig[mu] - b.sigma * dom[mu]);
      p.k_term[mu][nu] = std::real(-0.25 * kImag * Cinv * kk);
      p.eps_term[mu][nu] =
          std::real(-0.25 * Cinv * (eps_block(bj, mu, nu) + eps_block(bj, nu, mu)));
      p.mn_term[mu][nu] =
          std::real(-0.25 * Cinv * (j_lo[mu] * mdn[nu] + j_lo[nu] * mdn[mu]));
    }
  return p;
}

Tensor2 belinfante_bilinear(const BilinearJet& bj) {
  return belinfante_bilinear_parts(bj).total();
}

Vec4d b_field(const BilinearJet& bj, const EMField& em) {
  if (em.charge == 0.0) throw ZeroCharge();
  require_nondegenerate(bj.value);
  const BilinearSet& b = bj.value;
  const Complex Cinv = 1.0 / (b.sigma * b.sigma - b.omega * b.omega);
  Vec4d B{};
  for (int mu = 0; mu < 4; ++mu)
    B[mu] = eta_sign(mu) * em.A[mu] -
            std::real(Cinv * mdn_contraction(bj, mu)) / (2.0 * em.charge);
  return B;
}

Tensor2 interaction_tensor(const BilinearJet& bj, const Vec4d& X_lower,
                           double charge) {
  Vec4d j_lo{};
  for (int mu = 0; mu < 4; ++mu)
    j_lo[mu] = eta_sign(mu) * bj.value.j[mu].real();
  Tensor2 t{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      t[mu][nu] = 0.5 * charge * (j_lo[mu] * X_lower[nu] + j_lo[nu] * X_lower[mu]);
  return t;
}

Tensor2 maxwell_tensor(const EMField& em) {
  double f2 = 0.0;
  for (int s = 0; s < 4; ++s)
    for (int r = 0; r < 4; ++r)
      f2 += eta_sign(s) * eta_sign(r) * em.F[s][r] * em.F[s][r];
  Tensor2 t{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      double fmfn = 0.0;
      for (int s = 0; s < 4; ++s)
        fmfn += eta_sign(s) * em.F[mu][s] * em.F[nu][s];
      t[mu][nu] = 0.25 * eta(mu, nu) * f2 - fmfn;
    }
  return t;
}

Tensor2 assemble_md(const BilinearJet& bj, const EMField& em) {
  const BelinfanteParts parts = belinfante_bilinear_parts(bj);
  Tensor2 t = parts.k_term;
  accumulate(t, parts.eps_term);
  accumulate(t, interaction_tensor(bj, b_field(bj, em), em.charge));
  accumulate(t, maxwell_tensor(em));
  return t;
}

Tensor2 assemble_md_spinor_route(const BilinearJet& bj, const EMField& em) {
  Tensor2 t = belinfante_spinor(bj);
  accumulate(t, interaction_tensor(bj, lower_index(em.A), em.charge));
  accumulate(t, maxwell_tensor(em));
  return t;
}

double spinor_lagrangian(const BilinearJet& bj, const EMField& em) {
  Complex kin{}, jA{};
  for (int mu = 0; mu < 4; ++mu) {
    kin += eta_sign(mu) * bj.antisym_vector[mu][mu];
    jA += eta_sign(mu) * bj.value.j[mu] * em.A[mu];
  }
  return std::real(0.5 * kImag * kin - em.mass * bj.value.sigma -
                   em.charge * jA);
}

double bilinear_lagrangian(const BilinearJet& bj, const EMField& em) {
  const BilinearSet& b = bj.value;
  require_nondegenerate(b);
  const Complex Cinv = 1.0 / (b.sigma * b.sigma - b.omega * b.omega);

  Complex keps{};
  for (int r = 0; r < 4; ++r)
    keps += b.k[r] * (b.omega * bj.d[r].sigma - b.sigma * bj.d[r].omega);

  Complex E{};
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      for (int k = 0; k < 4; ++k)
        for (int t = 0; t < 4; ++t) {
          const double eps = epsilon_upper(r, s, k, t);
          if (eps == 0.0) continue;
          E += eps * (eta_sign(s) * bj.d[r].j[s]) * (eta_sign(k) * b.j[k]) *
               (eta_sign(t) * b.k[t]);
        }

  const Vec4d B = b_field(bj, em);
  Complex jB{};
  for (int mu = 0; mu < 4; ++mu) jB += b.j[mu] * B[mu];

  return std::real(0.5 * Cinv * (kImag * keps + E) - em.mass * b.sigma -
                   em.charge * jB);
}

double combinatorial_residual(const Rank2d& dj, const Vec4d& j_lower,
                              const Vec4d& k_lower) {
  double E = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      for (int k = 0; k < 4; ++k)
        for (int t = 0; t < 4; ++t) {
          const double eps = epsilon_upper(r, s, k, t);
          if (eps == 0.0) continue;
          E += eps * dj[r][s] * j_lower[k] * k_lower[t];
        }

  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      double lhs = 0.0, rhs = -2.0 * eta(mu, nu) * E;
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
          for (int k = 0; k < 4; ++k) {
            lhs -= epsilon_mixed({mu, r, s, k}, {true, false, false, false}) *
                       dj[nu][r] * j_lower[s] * k_lower[k] +
                   epsilon_mixed({nu, r, s, k}, {true, false, false, false}) *
                       dj[mu][r] * j_lower[s] * k_lower[k];
            rhs += epsilon_mixed({r, mu, s, k}, {false, true, false, false}) *
                       dj[r][nu] * j_lower[s] * k_lower[k] +
                   epsilon_mixed({r, s, mu, k}, {false, false, true, false}) *
                       dj[r][s] * j_lower[nu] * k_lower[k] +
                   epsilon_mixed({r, s, k, mu}, {false, false, false, true}) *
                       dj[r][s] * j_lower[k] * k_lower[nu] +
                   epsilon_mixed({r, nu, s, k}, {false, true, false, false}) *
                       dj[r][mu] * j_lower[s] * k_lower[k] +
                   epsilon_mixed({r, s, nu, k}, {false, false, true, false}) *
                       dj[r][s] * j_lower[mu] * k_lower[k] +
                   epsilon_mixed({r, s, k, nu}, {false, false, false, true}) *
                       dj[r][s] * j_lower[k] * k_lower[mu];
          }
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  return worst;
}

Tensor2 variational_pre_tensor(const BilinearJet& bj, const EMField& em) {
  const BilinearSet& b = bj.value;
  require_nondegenerate(b);
  const Complex Cinv = 1.0 / (b.sigma * b.sigma - b.omega * b.omega);
  const double L = bilinear_lagrangian(bj, em);
  const Vec4d B = b_field(bj, em);

  Vec4c j_lo{}, k_lo{}, dsig{}, dom{};
  Rank2c dj_lo{};
  for (int mu = 0; mu < 4; ++mu) {
    j_lo[mu] = eta_sign(mu) * b.j[mu];
    k_lo[mu] = eta_sign(mu) * b.k[mu];
    dsig[mu] = bj.d[mu].sigma;
    dom[mu] = bj.d[mu].omega;
    for (int nu = 0; nu < 4; ++nu)
      dj_lo[mu][nu] = eta_sign(nu) * bj.d[mu].j[nu];
  }

  Complex E{};
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      for (int k = 0; k < 4; ++k)
        for (int t = 0; t < 4; ++t) {
          const double eps = epsilon_upper(r, s, k, t);
          if (eps == 0.0) continue;
          E += eps * dj_lo[r][s] * j_lo[k] * k_lo[t];
        }

  Tensor2 out{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Complex acc = -kImag * (k_lo[mu] * (b.omega * dsig[nu] - b.sigma * dom[nu]) +
                              k_lo[nu] * (b.omega * dsig[mu] - b.sigma * dom[mu]));
      acc += -2.0 * eta(mu, nu) * E;
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
          for (int k = 0; k < 4; ++k) {
            acc += epsilon_mixed({r, mu, s, k}, {false, true, false, false}) *
                       dj_lo[r][nu] * j_lo[s] * k_lo[k] +
                   epsilon_mixed({r, s, mu, k}, {false, false, true, false}) *
                       dj_lo[r][s] * j_lo[nu] * k_lo[k] +
                   epsilon_mixed({r, s, k, mu}, {false, false, false, true}) *
                       dj_lo[r][s] * j_lo[k] * k_lo[nu] +
                   epsilon_mixed({r, nu, s, k}, {false, true, false, false}) *
                       dj_lo[r][mu] * j_lo[s] * k_lo[k] +
                   epsilon_mixed({r, s, nu, k}, {false, false, true, false}) *
                       dj_lo[r][s] * j_lo[mu] * k_lo[k] +
                   epsilon_mixed({r, s, k, nu}, {false, false, false, true}) *
                       dj_lo[r][s] * j_lo[k] * k_lo[mu];
          }
      out[mu][nu] = -eta(mu, nu) * L + std::real(0.25 * Cinv * acc) +
                    0.5 * em.charge *
                        (j_lo[mu].real() * B[nu] + j_lo[nu].real() * B[mu]);
    }
  return out;
}

Vec4d lower_real(const Vec4c& upper) {
  Vec4d v{};
  for (int mu = 0; mu < 4; ++mu) v[mu] = eta_sign(mu) * upper[mu].real();
  return v;
}

Vec4d lower_index(const Vec4d& upper) {
  Vec4d v{};
  for (int mu = 0; mu < 4; ++mu) v[mu] = eta_sign(mu) * upper[mu];
  return v;
}

}  // namespace mdstress
