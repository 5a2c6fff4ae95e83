#pragma once

#include <array>

#include "mdstress/bilinear.hpp"
#include "mdstress/fierz.hpp"
#include "mdstress/report.hpp"

namespace mdstress {

/// Real symmetric-capable rank-2 tensor with both indices lower.
using Tensor2 = Rank2d;

struct PhysParams {
  double charge = 1.0;
  double mass = 1.0;
};

/// Electromagnetic data at a point: potential (upper index), its gradient
/// dA[mu][nu] = d_mu A^nu, and the field strength with both indices lower,
/// F[mu][nu] = d_mu A_nu - d_nu A_mu.
struct EMField {
  Vec4d A{};
  Rank2d dA{};   // dA[mu][nu] = d_mu A^nu
  Rank2d F{};    // F_{mu nu}, both lower
  double charge = 1.0;
  double mass = 1.0;

  static EMField from_potential(const Vec4d& A, const Rank2d& dA,
                                double charge, double mass);
  PhysParams params() const { return PhysParams{charge, mass}; }
};

/// Canonical spinor tensor (both indices lower):
///   T~_{mu nu} = -(i/2) [ psibar gamma_mu d_nu psi - d_nu psibar gamma_mu psi ]
Tensor2 canonical_tensor(const BilinearJet& bj);

/// Belinfante symmetrization of the canonical tensor (spinor route):
///   Theta_{mu nu} = (1/2)(T~_{mu nu} + T~_{nu mu})
Tensor2 belinfante_spinor(const BilinearJet& bj);

/// Totally antisymmetric spin-density contribution that vanishes identically:
///   S^{mu sig nu} + S^{nu sig mu} with
///   S^{mu sig nu} = -(1/4) psibar {gamma^mu, sigma^{sig nu}} psi.
/// Returns the worst absolute component over all (mu, sig, nu).  Only the
/// spinor value enters; no derivatives are involved.
double spin_density_residual(const Spinor& psi);

/// Pieces of the Dirac Belinfante tensor in current form.
struct BelinfanteParts {
  Tensor2 k_term{};      // -(i/4) C^-1 [k_mu (omega d_nu sigma - sigma d_nu omega) + (mu<->nu)]
  Tensor2 eps_term{};    // -(1/4) C^-1 j^sig k^kap [eps_{nu rho sig kap} d_mu j^rho + (mu<->nu)]
  Tensor2 mn_term{};     // -(1/4) C^-1 [j_mu m^sig d_nu n_sig + (mu<->nu)]
  Tensor2 total() const;
};

/// Dirac Belinfante tensor written purely in bilinear currents (both indices
/// lower).  Throws DegenerateInvariant near sigma^2 = omega^2.
BelinfanteParts belinfante_bilinear_parts(const BilinearJet& bj);
Tensor2 belinfante_bilinear(const BilinearJet& bj);

/// Composite potential absorbing the gauge-variant current term:
///   B_mu = A_mu - m^sig (d_mu n_sig) / (2 q (sigma^2 - omega^2))
/// (returned with lower index; input A has upper index).
Vec4d b_field(const BilinearJet& bj, const EMField& em);

/// Interaction tensor (q/2)(j_mu X_nu + j_nu X_mu) for a lower-index
/// potential X.
Tensor2 interaction_tensor(const BilinearJet& bj, const Vec4d& X_lower,
                           double charge);

/// Source-free Maxwell tensor (both indices lower, traceless):
///   Theta_{mu nu} = (1/4) eta_{mu nu} F^2 - F_{mu sig} F_nu{}^sig
Tensor2 maxwell_tensor(const EMField& em);

/// Full Maxwell-Dirac tensor via the bilinear route:
///   Theta^{gi}_{mu nu} + interaction(B) + Maxwell,
/// where Theta^{gi} drops the gauge-variant mn_term (absorbed into B).
Tensor2 assemble_md(const BilinearJet& bj, const EMField& em);

/// Same tensor via the spinor route: symmetrized canonical + interaction(A)
/// + Maxwell.
Tensor2 assemble_md_spinor_route(const BilinearJet& bj, const EMField& em);

/// Dirac Lagrangian evaluated from the spinor jet:
///   L = (i/2)[psibar gamma^mu d_mu psi - d_mu psibar gamma^mu psi]
///       - m sigma - q j.A
double spinor_lagrangian(const BilinearJet& bj, const EMField& em);

/// Same Lagrangian written purely in currents (A enters through B):
///   L = { i k^rho (omega d_rho sigma - sigma d_rho omega)
///         + eps^{rho sig kap tau} (d_rho j_sig) j_kap k_tau } / (2 (sigma^2-omega^2))
///       - m sigma - q j.B
double bilinear_lagrangian(const BilinearJet& bj, const EMField& em);

/// Purely combinatorial rearrangement behind the variational tensor, valid
/// for arbitrary real inputs dj[mu][nu] = d_mu j_nu, j, k (all lower):
///   -eps_mu{}^{rho sig kap} (d_nu j_rho) j_sig k_kap
///   -eps_nu{}^{rho sig kap} (d_mu j_rho) j_sig k_kap
///   = -2 eta_{mu nu} E + six mixed-epsilon terms,
/// with E = eps^{rho sig kap tau} (d_rho j_sig) j_kap k_tau.
/// Returns the worst absolute component residual over (mu, nu).
double combinatorial_residual(const Rank2d& dj, const Vec4d& j_lower,
                              const Vec4d& k_lower);

/// Stress tensor obtained by varying the current-form action with respect to
/// the metric (before moving to the gauge-invariant split):
///   T_{mu nu} = -eta_{mu nu} L + (1/4) C^-1 { k- and epsilon-terms }
///               + (q/2)(j_mu B_nu + j_nu B_mu).
/// Satisfies T = Theta^{gi} + interaction(B) - eta L exactly, off shell.
Tensor2 variational_pre_tensor(const BilinearJet& bj, const EMField& em);

/// Lower-index real projection helpers.
Vec4d lower_real(const Vec4c& upper);
Vec4d lower_index(const Vec4d& upper);

}  // namespace mdstress
