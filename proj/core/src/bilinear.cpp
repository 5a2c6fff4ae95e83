#include "mdstress/bilinear.hpp"

#include <cmath>

#include "mdstress/errors.hpp"

namespace mdstress {

namespace {

/// Split z = m + i n into its exactly-real pieces (no arithmetic, so no
/// extra rounding enters the conjugate-current identities).
void split_real_imag(const Vec4c& z, Vec4c& re, Vec4c& im) {
  for (int mu = 0; mu < 4; ++mu) {
    re[static_cast<std::size_t>(mu)] = Complex{z[static_cast<std::size_t>(mu)].real(), 0.0};
    im[static_cast<std::size_t>(mu)] = Complex{z[static_cast<std::size_t>(mu)].imag(), 0.0};
  }
}

}  // namespace

Vec4c bar(const Spinor& psi) {
  // gamma^0 = diag(1,1,-1,-1): psibar = (psi0*, psi1*, -psi2*, -psi3*)
  return Vec4c{std::conj(psi.c[0]), std::conj(psi.c[1]), -std::conj(psi.c[2]),
               -std::conj(psi.c[3])};
}

Complex bilinear_form(const Spinor& a, const Mat4& m, const Spinor& b) {
  const Vec4c abar = bar(a);
  Complex acc{0.0, 0.0};
  for (int i = 0; i < 4; ++i) {
    const Complex ai = abar[static_cast<std::size_t>(i)];
    if (ai == Complex{}) continue;
    Complex row{0.0, 0.0};
    for (int j = 0; j < 4; ++j) row += m(i, j) * b.c[static_cast<std::size_t>(j)];
    acc += ai * row;
  }
  return acc;
}

Spinor charge_conjugate(const Spinor& psi) {
  const GammaBasis& g = dirac_basis();
  const Vec4c pb = bar(psi);
  Spinor out;
  for (int i = 0; i < 4; ++i) {
    Complex acc{0.0, 0.0};
    for (int j = 0; j < 4; ++j) acc += g.conjugation(i, j) * pb[static_cast<std::size_t>(j)];
    out.c[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

BilinearSet compute_bilinears(const Spinor& psi) {
  const GammaBasis& g = dirac_basis();
  BilinearSet b;
  b.sigma = bilinear_form(psi, Mat4::identity(), psi);
  b.omega = bilinear_form(psi, g.gamma5, psi);
  const Spinor psic = charge_conjugate(psi);
  Vec4c mn{};
  for (int mu = 0; mu < 4; ++mu) {
    b.j[static_cast<std::size_t>(mu)] = bilinear_form(psi, g.gamma[static_cast<std::size_t>(mu)], psi);
    b.k[static_cast<std::size_t>(mu)] =
        bilinear_form(psi, g.gamma5_gamma[static_cast<std::size_t>(mu)], psi);
    mn[static_cast<std::size_t>(mu)] =
        bilinear_form(psic, g.gamma[static_cast<std::size_t>(mu)], psi);
    for (int nu = 0; nu < 4; ++nu) {
      b.s[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = bilinear_form(
          psi, g.sigma[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)], psi);
      b.sdual[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = bilinear_form(
          psi, g.gamma5_sigma[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)], psi);
    }
  }
  split_real_imag(mn, b.m, b.n);
  return b;
}

BilinearJet bilinear_jet(const SpinorJet& jet) {
  const GammaBasis& g = dirac_basis();
  BilinearJet bj;
  bj.value = compute_bilinears(jet.value);
  bj.scale = jet_scale(jet);

  const Spinor psic = charge_conjugate(jet.value);
  for (int mu = 0; mu < 4; ++mu) {
    const Spinor& dp = jet.d[static_cast<std::size_t>(mu)];
    const Spinor dpc = charge_conjugate(dp);
    BilinearSet& db = bj.d[static_cast<std::size_t>(mu)];

    auto deriv = [&](const Mat4& m) {
      return bilinear_form(dp, m, jet.value) + bilinear_form(jet.value, m, dp);
    };

    db.sigma = deriv(Mat4::identity());
    db.omega = deriv(g.gamma5);
    Vec4c dmn{};
    for (int a = 0; a < 4; ++a) {
      db.j[static_cast<std::size_t>(a)] = deriv(g.gamma[static_cast<std::size_t>(a)]);
      db.k[static_cast<std::size_t>(a)] = deriv(g.gamma5_gamma[static_cast<std::size_t>(a)]);
      dmn[static_cast<std::size_t>(a)] =
          bilinear_form(dpc, g.gamma[static_cast<std::size_t>(a)], jet.value) +
          bilinear_form(psic, g.gamma[static_cast<std::size_t>(a)], dp);
      for (int bq = 0; bq < 4; ++bq) {
        db.s[static_cast<std::size_t>(a)][static_cast<std::size_t>(bq)] =
            deriv(g.sigma[static_cast<std::size_t>(a)][static_cast<std::size_t>(bq)]);
        db.sdual[static_cast<std::size_t>(a)][static_cast<std::size_t>(bq)] =
            deriv(g.gamma5_sigma[static_cast<std::size_t>(a)][static_cast<std::size_t>(bq)]);
      }
    }
    split_real_imag(dmn, db.m, db.n);

    auto antisym = [&](const Mat4& m) {
      return bilinear_form(jet.value, m, dp) - bilinear_form(dp, m, jet.value);
    };

    bj.antisym_scalar[static_cast<std::size_t>(mu)] = antisym(Mat4::identity());
    bj.antisym_pseudo[static_cast<std::size_t>(mu)] = antisym(g.gamma5);
    for (int nu = 0; nu < 4; ++nu) {
      bj.antisym_vector[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] =
          antisym(eta_sign(nu) * g.gamma[static_cast<std::size_t>(nu)]);
      bj.antisym_axial[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] =
          antisym(eta_sign(nu) * g.gamma5_gamma[static_cast<std::size_t>(nu)]);
      for (int so = 0; so < 4; ++so) {
        const double low = eta_sign(nu) * eta_sign(so);
        bj.antisym_tensor[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)]
                         [static_cast<std::size_t>(so)] =
            antisym(low * g.sigma[static_cast<std::size_t>(nu)][static_cast<std::size_t>(so)]);
        bj.antisym_tensor5[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)]
                          [static_cast<std::size_t>(so)] =
            antisym(low *
                    g.gamma5_sigma[static_cast<std::size_t>(nu)][static_cast<std::size_t>(so)]);
      }
    }
  }
  return bj;
}

SpinorJet gauge_transform(const SpinorJet& jet, double theta, const Vec4d& dtheta) {
  const Complex phase = std::exp(kImag * theta);
  SpinorJet out;
  for (int i = 0; i < 4; ++i)
    out.value.c[static_cast<std::size_t>(i)] = phase * jet.value.c[static_cast<std::size_t>(i)];
  for (int mu = 0; mu < 4; ++mu)
    for (int i = 0; i < 4; ++i)
      out.d[static_cast<std::size_t>(mu)].c[static_cast<std::size_t>(i)] =
          phase * (jet.d[static_cast<std::size_t>(mu)].c[static_cast<std::size_t>(i)] +
                   kImag * dtheta[static_cast<std::size_t>(mu)] *
                       jet.value.c[static_cast<std::size_t>(i)]);
  return out;
}

double norm2(const Spinor& psi) {
  double acc = 0.0;
  for (const auto& z : psi.c) acc += std::norm(z);
  return acc;
}

double jet_norm2(const SpinorJet& jet) {
  double acc = norm2(jet.value);
  for (const auto& d : jet.d) acc += norm2(d);
  return acc;
}

double quadratic_scale(const Spinor& psi) {
  const double n = 1.0 + norm2(psi);
  return n * n;
}

double jet_scale(const SpinorJet& jet) {
  const double n = 1.0 + jet_norm2(jet);
  return n * n;
}

double invariant_quadratic(const BilinearSet& b) {
  return (b.sigma * b.sigma - b.omega * b.omega).real();
}

double degeneracy_threshold(const BilinearSet& b) {
  const double n = 1.0 + b.j[0].real();  // j^0 = psi^dagger psi
  return 1e-8 * n * n;
}

void require_nondegenerate(const BilinearSet& b) {
  const double inv = invariant_quadratic(b);
  const double thr = degeneracy_threshold(b);
  if (std::abs(inv) <= thr) throw DegenerateInvariant(inv, thr);
}

}  // namespace mdstress
