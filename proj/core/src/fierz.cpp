#include "mdstress/fierz.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "mdstress/clifford.hpp"
#include "mdstress/errors.hpp"

namespace mdstress {

namespace {

using C4 = std::array<Complex, 4>;
using C44 = std::array<std::array<Complex, 4>, 4>;
using C444 = std::array<std::array<std::array<Complex, 4>, 4>, 4>;

double max_abs44(const C44& a) {
  double w = 0.0;
  for (const auto& row : a)
    for (const Complex& v : row) w = std::max(w, std::abs(v));
  return w;
}

/// Every index contraction the expansion-chain identities need, computed
/// once per jet.  Index conventions:
///   j_lo, k_lo            lower-index currents
///   dsig, dom             d_mu sigma, d_mu omega
///   dk_lo[mu][nu]         d_mu k_nu (nu lower)
///   djs[mu][nu]           (d_mu j^sig) s_{nu sig}
///   jds[mu][nu]           j^sig (d_mu s_{nu sig})
///   djsd, jdsd            same with the dual tensor
///   sA[mu][nu]            s_{nu sig} [psibar g5 g^sig d_mu psi - h.a.]
///   sdA[mu][nu]           dual-tensor version of sA
///   kT[mu][nu]            k^sig [psibar sig_{nu sig} d_mu psi - h.a.]
///   kT5[mu][nu]           k^sig [psibar g5 sig_{nu sig} d_mu psi - h.a.]
///   jdk[mu]               j^sig (d_mu k_sig)
///   mdn[mu]               m^sig (d_mu n_sig)
///   E1[mu][nu]            eps_{nu sig rho eps} j^sig (d_mu j^rho) k^eps
///   E2[mu][nu]            eps_{nu sig rho eps} (d_mu j^sig) j^rho k^eps
struct JetContractions {
  Complex sigma{}, omega{}, C{}, Cinv{}, so{}, sq{};
  C4 j_lo{}, k_lo{}, dsig{}, dom{}, jdk{}, mdn{};
  C44 dk_lo{}, djs{}, jds{}, djsd{}, jdsd{}, sA{}, sdA{}, kT{}, kT5{}, E1{}, E2{};
};

JetContractions make_contractions(const BilinearJet& bj) {
  const BilinearSet& b = bj.value;
  JetContractions cx;
  cx.sigma = b.sigma;
  cx.omega = b.omega;
  cx.C = b.sigma * b.sigma - b.omega * b.omega;
  cx.Cinv = 1.0 / cx.C;
  cx.so = b.sigma * b.omega;
  cx.sq = b.sigma * b.sigma + b.omega * b.omega;
  for (int mu = 0; mu < 4; ++mu) {
    cx.j_lo[mu] = eta_sign(mu) * b.j[mu];
    cx.k_lo[mu] = eta_sign(mu) * b.k[mu];
    cx.dsig[mu] = bj.d[mu].sigma;
    cx.dom[mu] = bj.d[mu].omega;
    Complex jdk{}, mdn{};
    for (int s = 0; s < 4; ++s) {
      jdk += eta_sign(s) * b.j[s] * bj.d[mu].k[s];
      mdn += eta_sign(s) * b.m[s] * bj.d[mu].n[s];
    }
    cx.jdk[mu] = jdk;
    cx.mdn[mu] = mdn;
    for (int nu = 0; nu < 4; ++nu) {
      cx.dk_lo[mu][nu] = eta_sign(nu) * bj.d[mu].k[nu];
      Complex djs{}, jds{}, djsd{}, jdsd{}, sA{}, sdA{}, kT{}, kT5{};
      for (int s = 0; s < 4; ++s) {
        djs += eta_sign(s) * bj.d[mu].j[s] * b.s[nu][s];
        jds += eta_sign(s) * b.j[s] * bj.d[mu].s[nu][s];
        djsd += eta_sign(s) * bj.d[mu].j[s] * b.sdual[nu][s];
        jdsd += eta_sign(s) * b.j[s] * bj.d[mu].sdual[nu][s];
        sA += b.s[nu][s] * bj.antisym_axial[mu][s];
        sdA += b.sdual[nu][s] * bj.antisym_axial[mu][s];
        kT += b.k[s] * bj.antisym_tensor[mu][nu][s];
        kT5 += b.k[s] * bj.antisym_tensor5[mu][nu][s];
      }
      const double en = eta_sign(nu);
      cx.djs[mu][nu] = en * djs;
      cx.jds[mu][nu] = en * jds;
      cx.djsd[mu][nu] = en * djsd;
      cx.jdsd[mu][nu] = en * jdsd;
      cx.sA[mu][nu] = en * sA;
      cx.sdA[mu][nu] = en * sdA;
      cx.kT[mu][nu] = kT;
      cx.kT5[mu][nu] = kT5;
      Complex e1{}, e2{};
      for (int s = 0; s < 4; ++s)
        for (int r = 0; r < 4; ++r)
          for (int e = 0; e < 4; ++e) {
            const double eps = epsilon_lower(nu, s, r, e);
            if (eps == 0.0) continue;
            e1 += eps * b.j[s] * bj.d[mu].j[r] * b.k[e];
            e2 += eps * bj.d[mu].j[s] * b.j[r] * b.k[e];
          }
      cx.E1[mu][nu] = e1;
      cx.E2[mu][nu] = e2;
    }
  }
  return cx;
}

}  // namespace

FierzCoefficients fierz_expand(const Spinor& chi, const Spinor& psi) {
  const GammaBasis& g = dirac_basis();
  FierzCoefficients f;
  f.a_s = 0.25 * bilinear_form(chi, Mat4::identity(), psi);
  f.a_p = 0.25 * bilinear_form(chi, g.gamma5, psi);
  for (int mu = 0; mu < 4; ++mu) {
    f.a_v[mu] = 0.25 * eta_sign(mu) * bilinear_form(chi, g.gamma[mu], psi);
    f.a_a[mu] = 0.25 * eta_sign(mu) * bilinear_form(chi, g.gamma5_gamma[mu], psi);
    for (int nu = 0; nu < 4; ++nu)
      f.a_t[mu][nu] = 0.25 * eta_sign(mu) * eta_sign(nu) *
                      bilinear_form(chi, g.sigma[mu][nu], psi);
  }
  return f;
}

Mat4 fierz_reconstruct(const FierzCoefficients& f) {
  const GammaBasis& g = dirac_basis();
  Mat4 m = Mat4::zero();
  m += f.a_s * Mat4::identity();
  m += f.a_p * g.gamma5;
  for (int mu = 0; mu < 4; ++mu) {
    m += f.a_v[mu] * g.gamma[mu];
    m -= f.a_a[mu] * g.gamma5_gamma[mu];
    for (int nu = 0; nu < 4; ++nu)
      m += 0.5 * f.a_t[mu][nu] * g.sigma[mu][nu];
  }
  return m;
}

Mat4 outer_product(const Spinor& psi, const Spinor& chi) {
  const Vec4c chibar = bar(chi);
  Mat4 m = Mat4::zero();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = psi.c[r] * chibar[c];
  return m;
}

std::pair<Rank2c, Rank2c> rank2_replacement(const BilinearSet& b) {
  require_nondegenerate(b);
  const Complex Cinv = 1.0 / (b.sigma * b.sigma - b.omega * b.omega);
  Rank2c s{}, sdual{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Complex eps_c{};
      for (int r = 0; r < 4; ++r)
        for (int s2 = 0; s2 < 4; ++s2) {
          const double e = epsilon_upper(mu, nu, r, s2);
          if (e == 0.0) continue;
          eps_c += e * eta_sign(r) * b.j[r] * eta_sign(s2) * b.k[s2];
        }
      const Complex delta_c = kImag * (b.j[mu] * b.k[nu] - b.j[nu] * b.k[mu]);
      s[mu][nu] = Cinv * (b.sigma * eps_c - b.omega * delta_c);
      sdual[mu][nu] = Cinv * (b.omega * eps_c - b.sigma * delta_c);
    }
  return {s, sdual};
}

std::array<IdentityResidual, 2> antiproduct_residuals(const BilinearJet& bj) {
  require_nondegenerate(bj.value);
  const JetContractions cx = make_contractions(bj);
  double worst_s = 0.0, worst_p = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const Complex rs = bj.antisym_scalar[mu] +
                       cx.Cinv * (cx.jdk[mu] * cx.omega + kImag * cx.mdn[mu] * cx.sigma);
    const Complex rp = bj.antisym_pseudo[mu] +
                       cx.Cinv * (cx.jdk[mu] * cx.sigma + kImag * cx.mdn[mu] * cx.omega);
    worst_s = std::max(worst_s, std::abs(rs));
    worst_p = std::max(worst_p, std::abs(rp));
  }
  return {IdentityResidual{"scalar_gradient_current_rule", worst_s, bj.scale},
          IdentityResidual{"pseudoscalar_gradient_current_rule", worst_p, bj.scale}};
}

BelinfanteResidual belinfante_identity_residual(const BilinearJet& bj) {
  require_nondegenerate(bj.value);
  const JetContractions cx = make_contractions(bj);
  const BilinearSet& b = bj.value;

  BelinfanteResidual out;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Complex rhs =
          cx.Cinv * (cx.k_lo[nu] * (cx.omega * cx.dsig[mu] - cx.sigma * cx.dom[mu]) -
                     kImag * cx.E2[mu][nu] - kImag * cx.j_lo[nu] * cx.mdn[mu]);
      out.residual[mu][nu] = bj.antisym_vector[mu][nu] - rhs;
    }

  // Contracted form, evaluated independently with the epsilon indices up and
  // the field indices down.
  Complex lhs_c{}, keps{}, jm{}, eps_c{};
  for (int mu = 0; mu < 4; ++mu) {
    lhs_c += eta_sign(mu) * bj.antisym_vector[mu][mu];
    keps += b.k[mu] * (cx.omega * cx.dsig[mu] - cx.sigma * cx.dom[mu]);
    jm += b.j[mu] * cx.mdn[mu];
    for (int s = 0; s < 4; ++s)
      for (int r = 0; r < 4; ++r)
        for (int e = 0; e < 4; ++e) {
          const double eps = epsilon_upper(mu, s, r, e);
          if (eps == 0.0) continue;
          eps_c += eps * eta_sign(s) * bj.d[mu].j[s] * cx.j_lo[r] * cx.k_lo[e];
        }
  }
  out.contracted_residual = lhs_c - cx.Cinv * (keps - kImag * eps_c - kImag * jm);

  out.full = IdentityResidual{"vector_current_derivative_identity",
                              max_abs44(out.residual), bj.scale};
  out.contracted = IdentityResidual{"vector_current_derivative_identity_contracted",
                                    std::abs(out.contracted_residual), bj.scale};
  return out;
}

std::vector<IdentityResidual> fierz_expansion_suite(const BilinearJet& bj) {
  require_nondegenerate(bj.value);
  const JetContractions cx = make_contractions(bj);
  const BilinearSet& b = bj.value;
  const Complex third = 1.0 / 3.0;
  const Complex kI = kImag;
  const Complex sigma = cx.sigma, omega = cx.omega;

  std::vector<IdentityResidual> out;
  auto push = [&](const char* name, double worst) {
    out.push_back(IdentityResidual{name, worst, bj.scale});
  };

  const auto& S = bj.antisym_scalar;
  const auto& P = bj.antisym_pseudo;
  const auto& V = bj.antisym_vector;

  // Combined current-rule contraction appearing in several reductions:
  //   j^sig (d_mu k_sig)(sigma^2 + omega^2) + 2 i m^sig (d_mu n_sig) sigma omega
  C4 mix{};
  for (int mu = 0; mu < 4; ++mu)
    mix[mu] = cx.jdk[mu] * cx.sq + 2.0 * kI * cx.mdn[mu] * cx.so;

  double w1 = 0, w2 = 0, w3 = 0, w4 = 0, w5 = 0, w6 = 0, w7 = 0, w8 = 0;
  double w9 = 0, w10 = 0, w11 = 0, w12 = 0, w16 = 0, w20 = 0, w21 = 0, w22 = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Complex djs = cx.djs[mu][nu], jds = cx.jds[mu][nu];
      const Complex djsd = cx.djsd[mu][nu], jdsd = cx.jdsd[mu][nu];
      const Complex sA = cx.sA[mu][nu], sdA = cx.sdA[mu][nu];
      const Complex kT = cx.kT[mu][nu], kT5 = cx.kT5[mu][nu];
      const Complex dk = cx.dk_lo[mu][nu];
      const Complex jl = cx.j_lo[nu], kl = cx.k_lo[nu];
      const Complex dsig = cx.dsig[mu], dom = cx.dom[mu];
      const Complex v = V[mu][nu];

      // Scalar-projected expansion of the derivative outer product.
      const Complex r1 =
          jl * S[mu] - (third * kI * (djs - jds) + third * dom * kl -
                        third * omega * dk + third * sigma * v -
                        third * kI * sdA - third * kI * kT5);
      // Pseudoscalar-projected expansion.
      const Complex r2 =
          jl * P[mu] - (third * kI * (djsd - jdsd) + third * dsig * kl -
                        third * sigma * dk + third * omega * v -
                        third * kI * sA - third * kI * kT);
      // Expansion solved for k_nu d_mu sigma.
      const Complex r3 =
          kl * dsig - (third * sigma * dk - third * kI * (djsd + jdsd) +
                       third * jl * P[mu] + third * kI * sA - third * kI * kT -
                       third * omega * v);
      // Expansion solved for k_nu d_mu omega.
      const Complex r4 =
          kl * dom - (third * omega * dk - third * kI * (djs + jds) +
                      third * jl * S[mu] + third * kI * sdA - third * kI * kT5 -
                      third * sigma * v);
      // Vector current solved from the four base expansions; still contains
      // spinor-side terms on the right.
      const Complex r5 =
          v - (1.0 / cx.so) *
                  (-0.5 * kI * (omega * djs + sigma * djsd) -
                   kl * (sigma * dsig + omega * dom) + 0.5 * cx.sq * dk +
                   jl * (omega * S[mu] + sigma * P[mu]) +
                   0.5 * kI * (sigma * sA + omega * sdA));
      // Axial derivative current contracted with the rank-2 tensor.
      const Complex r6 =
          sA - (0.6 * kI * sigma * dk - 0.6 * kI * dsig * kl + 0.2 * jdsd -
                0.2 * djsd + 0.6 * kI * jl * P[mu] - 0.2 * kT + 0.6 * kI * omega * v);
      // Same with the dual tensor.
      const Complex r7 =
          sdA - (0.6 * kI * omega * dk - 0.6 * kI * dom * kl + 0.2 * jds -
                 0.2 * djs + 0.6 * kI * jl * S[mu] - 0.2 * kT5 + 0.6 * kI * sigma * v);
      // Mixed rank-2 / axial combination, first reduction step.
      const Complex r8 =
          0.5 * kI * (sigma * sA + omega * sdA) -
          (0.3 * kl * (sigma * dsig + omega * dom) - 0.3 * cx.sq * dk -
           0.1 * kI * (sigma * djsd + omega * djs) +
           0.1 * kI * (sigma * jdsd + omega * jds) +
           0.3 * jl * cx.Cinv * mix[mu] - 0.1 * kI * (sigma * kT + omega * kT5) -
           0.6 * cx.so * v);
      // Tensor derivative current contracted with the axial vector.
      const Complex r9 =
          kT - (0.2 * djsd - 0.2 * jdsd + 0.6 * kI * dsig * kl -
                0.6 * kI * sigma * dk + 0.6 * kI * jl * P[mu] - 0.2 * sA +
                0.6 * kI * omega * v);
      // Dual-tensor derivative current contracted with the axial vector.
      const Complex r10 =
          kT5 - (0.2 * djs - 0.2 * jds + 0.6 * kI * dom * kl -
                 0.6 * kI * omega * dk + 0.6 * kI * jl * S[mu] - 0.2 * sdA +
                 0.6 * kI * sigma * v);
      // Second reduction: the tensor mixture in terms of the axial mixture.
      const Complex r11 =
          -0.1 * kI * (sigma * kT + omega * kT5) -
          (0.02 * kI * (sigma * sA + omega * sdA) + 0.12 * cx.so * v -
           0.06 * jl * cx.Cinv * mix[mu] - 0.06 * cx.sq * dk +
           0.06 * kl * (sigma * dsig + omega * dom) +
           0.02 * kI * (sigma * jdsd + omega * jds) -
           0.02 * kI * (sigma * djsd + omega * djs));
      // Axial mixture fully reduced to bilinears.
      const Complex r12 =
          0.5 * kI * (sigma * sA + omega * sdA) -
          (-0.5 * cx.so * v + 0.25 * jl * cx.Cinv * mix[mu] -
           0.375 * cx.sq * dk + 0.375 * kl * (sigma * dsig + omega * dom) -
           0.125 * kI * (sigma * djsd + omega * djs) +
           0.125 * kI * (sigma * jdsd + omega * jds));
      // Vector current with all spinor terms eliminated, rank-2 still present.
      const Complex r16 =
          v - (1.0 / cx.so) *
                  (-0.5 * jl * cx.Cinv * mix[mu] + cx.sq * dk / 12.0 -
                   (5.0 / 12.0) * kl * (sigma * dsig + omega * dom) +
                   (kI / 12.0) * (sigma * jdsd + omega * jds) -
                   (5.0 * kI / 12.0) * (sigma * djsd + omega * djs));
      // Rank-2 derivative terms reduced through the replacement identity.
      const Complex r20 =
          (kI / 12.0) * (sigma * jdsd + omega * jds) -
          ((cx.Cinv / 12.0) * (2.0 * cx.so * kl * (omega * dsig - sigma * dom) +
                               2.0 * kI * cx.so * cx.E1[mu][nu] +
                               jl * cx.jdk[mu] * cx.sq) -
           cx.sq * dk / 12.0);
      // Current-gradient terms reduced through the replacement identity.
      const Complex r21 =
          -(5.0 * kI / 12.0) * (sigma * djsd + omega * djs) -
          cx.Cinv * ((5.0 / 12.0) * jl * cx.jdk[mu] * cx.sq -
                     (5.0 * kI / 6.0) * cx.so * cx.E2[mu][nu] -
                     (5.0 / 12.0) * kl * cx.sq * (omega * dom - sigma * dsig));
      // Final pure-current form of the vector derivative current.
      const Complex r22 =
          v - cx.Cinv * (kl * (omega * dsig - sigma * dom) -
                         kI * cx.E2[mu][nu] - kI * jl * cx.mdn[mu]);

      w1 = std::max(w1, std::abs(r1));
      w2 = std::max(w2, std::abs(r2));
      w3 = std::max(w3, std::abs(r3));
      w4 = std::max(w4, std::abs(r4));
      w5 = std::max(w5, std::abs(r5));
      w6 = std::max(w6, std::abs(r6));
      w7 = std::max(w7, std::abs(r7));
      w8 = std::max(w8, std::abs(r8));
      w9 = std::max(w9, std::abs(r9));
      w10 = std::max(w10, std::abs(r10));
      w11 = std::max(w11, std::abs(r11));
      w12 = std::max(w12, std::abs(r12));
      w16 = std::max(w16, std::abs(r16));
      w20 = std::max(w20, std::abs(r20));
      w21 = std::max(w21, std::abs(r21));
      w22 = std::max(w22, std::abs(r22));
    }

  // Scalar (per-mu) rules: the two gradient-current rules and their weighted
  // combination.
  double w13 = 0, w14 = 0, w15 = 0;
  for (int mu = 0; mu < 4; ++mu) {
    const Complex r13 =
        S[mu] + cx.Cinv * (cx.jdk[mu] * omega + kI * cx.mdn[mu] * sigma);
    const Complex r14 =
        P[mu] + cx.Cinv * (cx.jdk[mu] * sigma + kI * cx.mdn[mu] * omega);
    const Complex r15 = omega * S[mu] + sigma * P[mu] + cx.Cinv * mix[mu];
    w13 = std::max(w13, std::abs(r13));
    w14 = std::max(w14, std::abs(r14));
    w15 = std::max(w15, std::abs(r15));
  }

  // Derivatives of the rank-2 replacement.  epsL/deltaL are the lower-index
  // contractions eps_{nu sig rho eps} j^rho k^eps and
  // i (j_nu k_sig - k_nu j_sig); d_* are their product-rule derivatives.
  C44 epsL{}, deltaL{};
  C444 d_epsL{}, d_deltaL{};
  for (int nu = 0; nu < 4; ++nu)
    for (int s = 0; s < 4; ++s) {
      Complex acc{};
      for (int r = 0; r < 4; ++r)
        for (int e = 0; e < 4; ++e) {
          const double eps = epsilon_lower(nu, s, r, e);
          if (eps == 0.0) continue;
          acc += eps * b.j[r] * b.k[e];
        }
      epsL[nu][s] = acc;
      deltaL[nu][s] = kI * (cx.j_lo[nu] * cx.k_lo[s] - cx.k_lo[nu] * cx.j_lo[s]);
      for (int mu = 0; mu < 4; ++mu) {
        Complex dacc{};
        for (int r = 0; r < 4; ++r)
          for (int e = 0; e < 4; ++e) {
            const double eps = epsilon_lower(nu, s, r, e);
            if (eps == 0.0) continue;
            dacc += eps * (bj.d[mu].j[r] * b.k[e] + b.j[r] * bj.d[mu].k[e]);
          }
        d_epsL[mu][nu][s] = dacc;
        d_deltaL[mu][nu][s] =
            kI * (cx.dk_lo[mu][s] * cx.j_lo[nu] +
                  eta_sign(nu) * bj.d[mu].j[nu] * cx.k_lo[s] -
                  cx.dk_lo[mu][nu] * cx.j_lo[s] -
                  eta_sign(s) * bj.d[mu].j[s] * cx.k_lo[nu]);
      }
    }

  const Complex Cinv2 = cx.Cinv * cx.Cinv;
  double w18 = 0, w19 = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int s = 0; s < 4; ++s) {
        const Complex ds_lo = eta_sign(nu) * eta_sign(s) * bj.d[mu].s[nu][s];
        const Complex dsd_lo = eta_sign(nu) * eta_sign(s) * bj.d[mu].sdual[nu][s];
        const Complex r18 =
            ds_lo -
            (((2.0 * cx.so * cx.dom[mu] - cx.sq * cx.dsig[mu]) * epsL[nu][s] +
              (2.0 * cx.so * cx.dsig[mu] - cx.sq * cx.dom[mu]) * deltaL[nu][s]) *
                 Cinv2 +
             (sigma * d_epsL[mu][nu][s] - omega * d_deltaL[mu][nu][s]) * cx.Cinv);
        const Complex r19 =
            dsd_lo -
            (((-2.0 * cx.so * cx.dsig[mu] + cx.sq * cx.dom[mu]) * epsL[nu][s] +
              (-2.0 * cx.so * cx.dom[mu] + cx.sq * cx.dsig[mu]) * deltaL[nu][s]) *
                 Cinv2 +
             (omega * d_epsL[mu][nu][s] - sigma * d_deltaL[mu][nu][s]) * cx.Cinv);
        w18 = std::max(w18, std::abs(r18));
        w19 = std::max(w19, std::abs(r19));
      }

  push("scalar_gradient_expansion", w1);
  push("pseudoscalar_gradient_expansion", w2);
  push("sigma_gradient_projection", w3);
  push("omega_gradient_projection", w4);
  push("vector_current_mixed_form", w5);
  push("tensor_axial_contraction", w6);
  push("tensor_dual_axial_contraction", w7);
  push("rank2_axial_mixed_reduction", w8);
  push("tensor_current_contraction", w9);
  push("pseudotensor_current_contraction", w10);
  push("tensor_mixture_reduction", w11);
  push("rank2_axial_pure_bilinear", w12);
  push("scalar_gradient_current_rule", w13);
  push("pseudoscalar_gradient_current_rule", w14);
  push("scalar_pseudo_combination", w15);
  push("vector_current_tensor_form", w16);
  push("tensor_derivative_replacement", w18);
  push("tensor_dual_derivative_replacement", w19);
  push("tensor_derivative_reduction", w20);
  push("current_gradient_reduction", w21);
  push("vector_current_pure_current_form", w22);
  return out;
}

IdentityReport fundamental_identities(const BilinearSet& b, double tol) {
  IdentityReport rep;
  rep.title = "fundamental bilinear identities";
  // Quadratic normalizer (1 + |psi|^2)^2 with |psi|^2 read off j^0.
  const double base = 1.0 + std::max(b.j[0].real(), 0.0);
  const double scale = base * base;

  const Complex C = b.sigma * b.sigma - b.omega * b.omega;
  auto dot = [](const Vec4c& a, const Vec4c& c) {
    Complex acc{};
    for (int mu = 0; mu < 4; ++mu) acc += eta_sign(mu) * a[mu] * c[mu];
    return acc;
  };

  rep.add("current_normalization", std::abs(dot(b.j, b.j) - C), scale, tol);
  rep.add("axial_normalization", std::abs(dot(b.k, b.k) + C), scale, tol);
  rep.add("current_axial_orthogonality", std::abs(dot(b.j, b.k)), scale, tol);
  rep.add("m_normalization", std::abs(dot(b.m, b.m) + C), scale, tol);
  rep.add("n_normalization", std::abs(dot(b.n, b.n) + C), scale, tol);
  rep.add("m_n_orthogonality", std::abs(dot(b.m, b.n)), scale, tol);

  double im_s = std::abs(b.sigma.imag());
  double re_o = std::abs(b.omega.real());
  double im_j = 0, im_k = 0, im_t = 0, re_t5 = 0, anti = 0, anti5 = 0;
  for (int mu = 0; mu < 4; ++mu) {
    im_j = std::max(im_j, std::abs(b.j[mu].imag()));
    im_k = std::max(im_k, std::abs(b.k[mu].imag()));
    for (int nu = 0; nu < 4; ++nu) {
      im_t = std::max(im_t, std::abs(b.s[mu][nu].imag()));
      re_t5 = std::max(re_t5, std::abs(b.sdual[mu][nu].real()));
      anti = std::max(anti, std::abs(b.s[mu][nu] + b.s[nu][mu]));
      anti5 = std::max(anti5, std::abs(b.sdual[mu][nu] + b.sdual[nu][mu]));
    }
  }
  rep.add("sigma_reality", im_s, scale, tol);
  rep.add("omega_imaginarity", re_o, scale, tol);
  rep.add("current_reality", im_j, scale, tol);
  rep.add("axial_reality", im_k, scale, tol);
  rep.add("tensor_reality", im_t, scale, tol);
  rep.add("tensor_dual_imaginarity", re_t5, scale, tol);
  rep.add("tensor_antisymmetry", anti, scale, tol);
  rep.add("tensor_dual_antisymmetry", anti5, scale, tol);

  try {
    const auto [s_re, sd_re] = rank2_replacement(b);
    double ws = 0, wsd = 0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        ws = std::max(ws, std::abs(b.s[mu][nu] - s_re[mu][nu]));
        wsd = std::max(wsd, std::abs(b.sdual[mu][nu] - sd_re[mu][nu]));
      }
    rep.add("rank2_tensor_rebuild", ws, scale, tol);
    rep.add("rank2_tensor_dual_rebuild", wsd, scale, tol);
  } catch (const DegenerateInvariant&) {
    // Near sigma^2 = omega^2 the rebuild is undefined; the quadratic checks
    // above still apply.
  }
  return rep;
}

}  // namespace mdstress
