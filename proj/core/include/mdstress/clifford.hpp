#pragma once

#include <array>
#include <string>

#include "mdstress/linalg.hpp"
#include "mdstress/report.hpp"

namespace mdstress {

/// Dirac-representation gamma matrices and every derived constant matrix the
/// bilinear machinery needs.  Conventions:
///   gamma^0 = diag(1,1,-1,-1), metric (+,-,-,-),
///   sigma^{mu nu} = (i/2)[gamma^mu, gamma^nu],
///   gamma_5 = i gamma^0 gamma^1 gamma^2 gamma^3,
///   charge conjugation C = i gamma^2 gamma^0.
struct GammaBasis {
  std::array<Mat4, 4> gamma;                       // gamma^mu (upper index)
  Mat4 gamma5;
  std::array<std::array<Mat4, 4>, 4> sigma;        // sigma^{mu nu}
  std::array<Mat4, 4> gamma5_gamma;                // gamma_5 gamma^mu
  std::array<std::array<Mat4, 4>, 4> gamma5_sigma; // gamma_5 sigma^{mu nu}
  Mat4 conjugation;                                // C
  std::array<Mat4, 16> basis;                      // {1, gamma^mu, sigma^{mu<nu}, gamma_5 gamma^mu, gamma_5}
  std::array<std::string, 16> basis_labels;

  Mat4 gamma_lower(int mu) const { return eta_sign(mu) * gamma[static_cast<std::size_t>(mu)]; }
};

GammaBasis build_gamma_basis();

/// Shared immutable instance used by every evaluator.
const GammaBasis& dirac_basis();

/// Sign of the permutation (a,b,c,d) of (0,1,2,3); 0 on repeated indices.
int levi_civita(int a, int b, int c, int d);

/// Totally antisymmetric tensor with eps^{0123} = +1 (all indices upper).
double epsilon_upper(int a, int b, int c, int d);

/// All indices lower: eps_{0123} = -1.
double epsilon_lower(int a, int b, int c, int d);

/// Arbitrary variance: lower[i] marks index i as lowered.  Each lowered
/// index contributes its diagonal metric factor.
double epsilon_mixed(const std::array<int, 4>& idx, const std::array<bool, 4>& lower);

/// Antisymmetrized metric combination i(eta^{mu rho} eta^{nu sig} -
/// eta^{mu sig} eta^{nu rho}); identical with all indices lowered.
Complex delta4(int mu, int nu, int rho, int sig);

/// Evaluates the full catalogue of Dirac matrix identities (commutation
/// relations, contraction identities, product expansions, the double-epsilon
/// contraction, trace orthogonality, basis completeness) on the given basis.
/// Every residual is an exact-arithmetic zero for the canonical basis.
IdentityReport verify_dirac_identities(const GammaBasis& g, double tol);

}  // namespace mdstress
