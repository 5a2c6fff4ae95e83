#pragma once

#include <array>

#include "mdstress/clifford.hpp"
#include "mdstress/linalg.hpp"

namespace mdstress {

struct Spinor {
  Vec4c c{};
};

/// First-order jet of a spinor field at a point: value and the four
/// partial derivatives d[mu] = partial_mu psi.
struct SpinorJet {
  Spinor value;
  std::array<Spinor, 4> d{};
};

/// The sixteen bilinear densities of a single spinor, plus the two
/// charge-conjugate vectors.  Index placement: all vector/tensor components
/// carry upper indices; lower them with the metric where a formula needs it.
///   sigma = psibar psi                    (real)
///   j^mu  = psibar gamma^mu psi           (real)
///   s^{mu nu} = psibar sigma^{mu nu} psi  (real, antisymmetric)
///   k^mu  = psibar gamma_5 gamma^mu psi   (real)
///   omega = psibar gamma_5 psi            (pure imaginary)
///   sdual^{mu nu} = psibar gamma_5 sigma^{mu nu} psi (pure imaginary)
///   m^mu + i n^mu = psibar^c gamma^mu psi (m, n real)
struct BilinearSet {
  Complex sigma{};
  Vec4c j{};
  Rank2c s{};
  Vec4c k{};
  Complex omega{};
  Rank2c sdual{};
  Vec4c m{};
  Vec4c n{};
};

/// Bilinears, their first derivatives, and the antisymmetric derivative
/// currents evaluated directly on the spinor side.  The antisym blocks are
/// [psibar Gamma (d_mu psi) - (d_mu psibar) Gamma psi] with
///   antisym_scalar[mu]          Gamma = 1
///   antisym_pseudo[mu]          Gamma = gamma_5
///   antisym_vector[mu][nu]      Gamma = gamma_nu        (lower nu)
///   antisym_axial[mu][nu]       Gamma = gamma_5 gamma_nu (lower nu)
///   antisym_tensor[mu][nu][sig] Gamma = sigma_{nu sig}   (both lower)
///   antisym_tensor5[mu][nu][sig] Gamma = gamma_5 sigma_{nu sig}
struct BilinearJet {
  BilinearSet value;
  std::array<BilinearSet, 4> d{};
  Vec4c antisym_scalar{};
  Vec4c antisym_pseudo{};
  Rank2c antisym_vector{};
  Rank2c antisym_axial{};
  Rank3c antisym_tensor{};
  Rank3c antisym_tensor5{};
  /// Residual normalizer carried along from the source spinor jet,
  /// (1 + |psi|^2 + sum |d psi|^2)^2.  Defaults to 1 for hand-built jets.
  double scale = 1.0;
};

/// psibar = psi^dagger gamma^0 as a row vector.
Vec4c bar(const Spinor& psi);

/// abar M b.
Complex bilinear_form(const Spinor& a, const Mat4& m, const Spinor& b);

/// psi^c = C (psibar)^T.
Spinor charge_conjugate(const Spinor& psi);

BilinearSet compute_bilinears(const Spinor& psi);

BilinearJet bilinear_jet(const SpinorJet& jet);

/// psi -> e^{i theta} psi with the jet transported consistently:
/// d[mu] -> e^{i theta} (d[mu] + i dtheta[mu] psi).
SpinorJet gauge_transform(const SpinorJet& jet, double theta, const Vec4d& dtheta);

double norm2(const Spinor& psi);

/// |psi|^2 + sum_mu |d_mu psi|^2.
double jet_norm2(const SpinorJet& jet);

/// (1 + |psi|^2)^2 — the quadratic-bilinear residual normalizer.
double quadratic_scale(const Spinor& psi);

/// (1 + |psi|^2 + sum |d psi|^2)^2 — the jet-identity residual normalizer.
double jet_scale(const SpinorJet& jet);

/// sigma^2 - omega^2 from the stored bilinears (real part; the imaginary
/// part is a rounding residue).
double invariant_quadratic(const BilinearSet& b);

/// Degeneracy threshold 1e-8 (1 + |psi|^2)^2, with |psi|^2 read off the
/// timelike current component j^0 = psi^dagger psi.
double degeneracy_threshold(const BilinearSet& b);

/// Throws DegenerateInvariant when |sigma^2 - omega^2| is at or below the
/// threshold.
void require_nondegenerate(const BilinearSet& b);

}  // namespace mdstress
