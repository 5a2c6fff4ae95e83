#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "mdstress/bilinear.hpp"
#include "mdstress/report.hpp"

namespace mdstress {

/// Expansion coefficients of the outer product psi chibar over the
/// 16-element Clifford basis.  Reconstruction:
///   psi chibar = a_s 1 + a_v[mu] gamma^mu + (1/2) a_t[mu][nu] sigma^{mu nu}
///                - a_a[mu] gamma_5 gamma^mu + a_p gamma_5
/// with a_s = (1/4) chibar psi, a_v = (1/4) chibar gamma_mu psi,
/// a_t = (1/4) chibar sigma_{mu nu} psi, a_a = (1/4) chibar gamma_5 gamma_mu psi,
/// a_p = (1/4) chibar gamma_5 psi (coefficient indices lower).
struct FierzCoefficients {
  Complex a_s{};
  Vec4c a_v{};
  Rank2c a_t{};
  Vec4c a_a{};
  Complex a_p{};
};

FierzCoefficients fierz_expand(const Spinor& chi, const Spinor& psi);

Mat4 fierz_reconstruct(const FierzCoefficients& f);

/// psi chibar as a matrix.
Mat4 outer_product(const Spinor& psi, const Spinor& chi);

/// One evaluated identity: worst absolute component residual and the
/// input-scale normalizer.
struct IdentityResidual {
  std::string name;
  double max_abs = 0.0;
  double scale = 1.0;

  double normalized() const { return scale > 0.0 ? max_abs / scale : max_abs; }
};

/// Rank-2 bilinears rebuilt from the rank-1 set:
///   s^{mu nu}     = (sigma eps^{mu nu rho sig} - omega delta^{mu nu rho sig}) j_rho k_sig / (sigma^2 - omega^2)
///   sdual^{mu nu} = (omega eps^{mu nu rho sig} - sigma delta^{mu nu rho sig}) j_rho k_sig / (sigma^2 - omega^2)
/// Throws DegenerateInvariant near sigma^2 - omega^2 = 0.
std::pair<Rank2c, Rank2c> rank2_replacement(const BilinearSet& b);

/// The two scalar anti-product rules
///   [psibar d_mu psi - d_mu psibar psi]         = -(j.(d_mu k) omega + i m.(d_mu n) sigma)/(sigma^2-omega^2)
///   [psibar g5 d_mu psi - d_mu psibar g5 psi]   = -(j.(d_mu k) sigma + i m.(d_mu n) omega)/(sigma^2-omega^2)
/// evaluated two-sided (spinor-built left, bilinear-built right).
std::array<IdentityResidual, 2> antiproduct_residuals(const BilinearJet& bj);

struct BelinfanteResidual {
  IdentityResidual full;        // 16 components (mu, nu)
  IdentityResidual contracted;  // gamma index contracted against d_mu
  Rank2c residual{};            // componentwise LHS - RHS of the full form
  Complex contracted_residual{};
};

/// The vector-current derivative identity
///   [psibar gamma_nu d_mu psi - d_mu psibar gamma_nu psi]
///     = { k_nu (omega d_mu sigma - sigma d_mu omega)
///         - i eps_{nu sig rho eps} (d_mu j^sig) j^rho k^eps
///         - i j_nu m^sig (d_mu n_sig) } / (sigma^2 - omega^2)
/// plus its metric-contracted form.
BelinfanteResidual belinfante_identity_residual(const BilinearJet& bj);

/// Residuals of the full chain of intermediate Fierz expansions used to
/// derive the vector-current identity (base expansions, axial-contracted
/// expansions, sigma-contracted expansions, combined forms, derivative
/// formulas for the rank-2 bilinears, rank-2 replacement corollaries).
std::vector<IdentityResidual> fierz_expansion_suite(const BilinearJet& bj);

/// Fundamental quadratic identities j.j = sigma^2 - omega^2 = -k.k, j.k = 0,
/// m.m = n.n = -(sigma^2 - omega^2), m.n = 0, plus the rank-2 replacement
/// agreement when the invariant is non-degenerate.
IdentityReport fundamental_identities(const BilinearSet& b, double tol);

}  // namespace mdstress
