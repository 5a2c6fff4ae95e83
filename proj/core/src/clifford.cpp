#include "mdstress/clifford.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace mdstress {

namespace {

using Block = std::array<Complex, 4>;  // 2x2 row-major

constexpr Block kPauli1{Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}};
constexpr Block kPauli2{Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}};
constexpr Block kPauli3{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}};

void set_block(Mat4& m, int rb, int cb, const Block& blk, Complex factor) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(2 * rb + r, 2 * cb + c) = factor * blk[static_cast<std::size_t>(2 * r + c)];
}

Mat4 transpose(const Mat4& m) {
  Mat4 t;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) t(c, r) = m(r, c);
  return t;
}

constexpr std::array<std::pair<int, int>, 6> kSigmaPairs{
    std::pair<int, int>{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

/// Gauss-Jordan inverse of a 16x16 complex matrix with partial pivoting.
using CMat16 = std::array<std::array<Complex, 16>, 16>;

CMat16 invert16(CMat16 a) {
  CMat16 inv{};
  for (int i = 0; i < 16; ++i) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
  for (int col = 0; col < 16; ++col) {
    int pivot = col;
    double best = std::abs(a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)]);
    for (int r = col + 1; r < 16; ++r) {
      const double v = std::abs(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot)]);
    std::swap(inv[static_cast<std::size_t>(col)], inv[static_cast<std::size_t>(pivot)]);
    const Complex p = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int c = 0; c < 16; ++c) {
      a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= p;
      inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= p;
    }
    for (int r = 0; r < 16; ++r) {
      if (r == col) continue;
      const Complex f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f == Complex{}) continue;
      for (int c = 0; c < 16; ++c) {
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= f * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
      }
    }
  }
  return inv;
}

}  // namespace

GammaBasis build_gamma_basis() {
  GammaBasis g;

  g.gamma[0] = Mat4::zero();
  g.gamma[0](0, 0) = 1.0;
  g.gamma[0](1, 1) = 1.0;
  g.gamma[0](2, 2) = -1.0;
  g.gamma[0](3, 3) = -1.0;

  const std::array<Block, 3> pauli{kPauli1, kPauli2, kPauli3};
  for (int k = 0; k < 3; ++k) {
    Mat4 m = Mat4::zero();
    set_block(m, 0, 1, pauli[static_cast<std::size_t>(k)], Complex{1, 0});
    set_block(m, 1, 0, pauli[static_cast<std::size_t>(k)], Complex{-1, 0});
    g.gamma[static_cast<std::size_t>(k + 1)] = m;
  }

  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      g.sigma[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] =
          (0.5 * kImag) * commutator(g.gamma[static_cast<std::size_t>(mu)], g.gamma[static_cast<std::size_t>(nu)]);

  g.gamma5 = kImag * (g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3]);

  for (int mu = 0; mu < 4; ++mu)
    g.gamma5_gamma[static_cast<std::size_t>(mu)] = g.gamma5 * g.gamma[static_cast<std::size_t>(mu)];

  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      g.gamma5_sigma[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] =
          g.gamma5 * g.sigma[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];

  g.conjugation = kImag * (g.gamma[2] * g.gamma[0]);

  g.basis[0] = Mat4::identity();
  g.basis_labels[0] = "1";
  for (int mu = 0; mu < 4; ++mu) {
    g.basis[static_cast<std::size_t>(1 + mu)] = g.gamma[static_cast<std::size_t>(mu)];
    g.basis_labels[static_cast<std::size_t>(1 + mu)] = "g" + std::to_string(mu);
  }
  for (std::size_t i = 0; i < kSigmaPairs.size(); ++i) {
    const auto [mu, nu] = kSigmaPairs[i];
    g.basis[5 + i] = g.sigma[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
    g.basis_labels[5 + i] = "s" + std::to_string(mu) + std::to_string(nu);
  }
  for (int mu = 0; mu < 4; ++mu) {
    g.basis[static_cast<std::size_t>(11 + mu)] = g.gamma5_gamma[static_cast<std::size_t>(mu)];
    g.basis_labels[static_cast<std::size_t>(11 + mu)] = "g5g" + std::to_string(mu);
  }
  g.basis[15] = g.gamma5;
  g.basis_labels[15] = "g5";

  return g;
}

const GammaBasis& dirac_basis() {
  static const GammaBasis g = build_gamma_basis();
  return g;
}

int levi_civita(int a, int b, int c, int d) {
  int v[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i)
    if (v[i] < 0 || v[i] > 3) return 0;
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (v[i] == v[j]) return 0;
      if (v[j] < v[i]) {
        std::swap(v[i], v[j]);
        sign = -sign;
      }
    }
  return sign;
}

double epsilon_upper(int a, int b, int c, int d) {
  return static_cast<double>(levi_civita(a, b, c, d));
}

double epsilon_lower(int a, int b, int c, int d) {
  return -static_cast<double>(levi_civita(a, b, c, d));
}

double epsilon_mixed(const std::array<int, 4>& idx, const std::array<bool, 4>& lower) {
  double v = static_cast<double>(levi_civita(idx[0], idx[1], idx[2], idx[3]));
  if (v == 0.0) return 0.0;
  for (int i = 0; i < 4; ++i)
    if (lower[static_cast<std::size_t>(i)]) v *= eta_sign(idx[static_cast<std::size_t>(i)]);
  return v;
}

Complex delta4(int mu, int nu, int rho, int sig) {
  return kImag * (eta(mu, rho) * eta(nu, sig) - eta(mu, sig) * eta(nu, rho));
}

IdentityReport verify_dirac_identities(const GammaBasis& g, double tol) {
  IdentityReport rep;
  rep.title = "Dirac matrix identities";

  const Mat4 one = Mat4::identity();
  auto gam = [&](int mu) -> const Mat4& { return g.gamma[static_cast<std::size_t>(mu)]; };
  auto gam_lo = [&](int mu) { return g.gamma_lower(mu); };
  auto sig = [&](int mu, int nu) -> const Mat4& {
    return g.sigma[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
  };
  auto g5g = [&](int mu) -> const Mat4& { return g.gamma5_gamma[static_cast<std::size_t>(mu)]; };
  auto g5g_lo = [&](int mu) { return eta_sign(mu) * g.gamma5_gamma[static_cast<std::size_t>(mu)]; };
  auto add = [&](const std::string& name, double res) { rep.add(name, res, 1.0, tol); };

  // {g^mu, g^nu} = 2 eta^{mu nu}
  {
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        r = std::max(r, max_abs(anticommutator(gam(mu), gam(nu)) - 2.0 * eta(mu, nu) * one));
    add("anticommutation", r);
  }

  // [g^mu, g^nu] = -2i sigma^{mu nu}
  {
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        r = std::max(r, max_abs(commutator(gam(mu), gam(nu)) - (-2.0 * kImag) * sig(mu, nu)));
    add("commutator_form", r);
  }

  // gamma_5 = i g0 g1 g2 g3
  add("gamma5_chain_product", max_abs(g.gamma5 - kImag * (gam(0) * gam(1) * gam(2) * gam(3))));

  // gamma_5 = -(i/4!) eps_{mu nu rho sig} g^mu g^nu g^rho g^sig
  {
    Mat4 acc = Mat4::zero();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            const double e = epsilon_lower(a, b, c, d);
            if (e == 0.0) continue;
            acc += e * (gam(a) * gam(b) * gam(c) * gam(d));
          }
    add("gamma5_epsilon_lower", max_abs(g.gamma5 + (kImag * (1.0 / 24.0)) * acc));
  }

  // gamma_5 = -(i/4!) eps^{mu nu rho sig} g_mu g_nu g_rho g_sig
  {
    Mat4 acc = Mat4::zero();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            const double e = epsilon_upper(a, b, c, d);
            if (e == 0.0) continue;
            acc += e * (gam_lo(a) * gam_lo(b) * gam_lo(c) * gam_lo(d));
          }
    add("gamma5_epsilon_upper", max_abs(g.gamma5 + (kImag * (1.0 / 24.0)) * acc));
  }

  add("gamma5_squared", max_abs(g.gamma5 * g.gamma5 - one));

  {
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu) r = std::max(r, max_abs(anticommutator(g.gamma5, gam(mu))));
    add("gamma5_gamma_anticommute", r);
  }

  {
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) r = std::max(r, max_abs(commutator(g.gamma5, sig(mu, nu))));
    add("gamma5_sigma_commute", r);
  }

  // g^mu g^nu = eta^{mu nu} - i sigma^{mu nu}
  {
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        r = std::max(r, max_abs(gam(mu) * gam(nu) - (eta(mu, nu) * one - kImag * sig(mu, nu))));
    add("pair_product", r);
  }

  // g^mu g_mu = 4
  {
    Mat4 acc = Mat4::zero();
    for (int mu = 0; mu < 4; ++mu) acc += gam(mu) * gam_lo(mu);
    add("vector_contraction", max_abs(acc - 4.0 * one));
  }

  // g^mu gamma_5 g_mu = -4 gamma_5
  {
    Mat4 acc = Mat4::zero();
    for (int mu = 0; mu < 4; ++mu) acc += gam(mu) * g.gamma5 * gam_lo(mu);
    add("axial_contraction", max_abs(acc + 4.0 * g.gamma5));
  }

  // g^mu g^nu g^lam = eta^{mu nu} g^lam + eta^{nu lam} g^mu - eta^{mu lam} g^nu
  //                   - i eps^{mu nu lam sig} gamma_5 g_sig
  {
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        for (int lam = 0; lam < 4; ++lam) {
          Mat4 rhs = eta(mu, nu) * gam(lam) + eta(nu, lam) * gam(mu) - eta(mu, lam) * gam(nu);
          for (int s = 0; s < 4; ++s) {
            const double e = epsilon_upper(mu, nu, lam, s);
            if (e != 0.0) rhs += (-kImag * e) * g5g_lo(s);
          }
          r = std::max(r, max_abs(gam(mu) * gam(nu) * gam(lam) - rhs));
        }
    add("triple_product", r);
  }

  // g^nu g^mu g_nu = -2 g^mu
  {
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
      Mat4 acc = Mat4::zero();
      for (int nu = 0; nu < 4; ++nu) acc += gam(nu) * gam(mu) * gam_lo(nu);
      r = std::max(r, max_abs(acc + 2.0 * gam(mu)));
    }
    add("vector_sandwich", r);
  }

  // g^nu gamma_5 g^mu g_nu = 2 gamma_5 g^mu
  {
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
      Mat4 acc = Mat4::zero();
      for (int nu = 0; nu < 4; ++nu) acc += gam(nu) * g.gamma5 * gam(mu) * gam_lo(nu);
      r = std::max(r, max_abs(acc - 2.0 * g5g(mu)));
    }
    add("axial_sandwich", r);
  }

  // g^mu g^nu g^rho g^sig: three eta-eta terms, the epsilon gamma_5 term and
  // six eta sigma terms
  {
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        for (int rho = 0; rho < 4; ++rho)
          for (int si = 0; si < 4; ++si) {
            Mat4 rhs = (eta(mu, nu) * eta(rho, si) - eta(mu, rho) * eta(nu, si) +
                        eta(mu, si) * eta(nu, rho)) *
                       one;
            rhs += (-kImag * epsilon_upper(mu, nu, rho, si)) * g.gamma5;
            Mat4 st = eta(mu, nu) * sig(rho, si) + eta(rho, si) * sig(mu, nu);
            st -= eta(mu, rho) * sig(nu, si) + eta(nu, si) * sig(mu, rho);
            st += eta(mu, si) * sig(nu, rho) + eta(nu, rho) * sig(mu, si);
            rhs += (-kImag) * st;
            r = std::max(r, max_abs(gam(mu) * gam(nu) * gam(rho) * gam(si) - rhs));
          }
    add("quadruple_product", r);
  }

  // g^eps sigma^{mu nu} = i eta^{eps mu} g^nu - i eta^{eps nu} g^mu
  //                        + eps^{mu nu eps sig} gamma_5 g_sig
  {
    double r = 0.0;
    for (int ep = 0; ep < 4; ++ep)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          Mat4 rhs = (kImag * eta(ep, mu)) * gam(nu) - (kImag * eta(ep, nu)) * gam(mu);
          for (int s = 0; s < 4; ++s) {
            const double e = epsilon_upper(mu, nu, ep, s);
            if (e != 0.0) rhs += e * g5g_lo(s);
          }
          r = std::max(r, max_abs(gam(ep) * sig(mu, nu) - rhs));
        }
    add("gamma_sigma_product", r);
  }

  // sigma^{mu nu} g^eps = -i eta^{eps mu} g^nu + i eta^{eps nu} g^mu
  //                        + eps^{mu nu eps sig} gamma_5 g_sig
  {
    double r = 0.0;
    for (int ep = 0; ep < 4; ++ep)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          Mat4 rhs = (-kImag * eta(ep, mu)) * gam(nu) + (kImag * eta(ep, nu)) * gam(mu);
          for (int s = 0; s < 4; ++s) {
            const double e = epsilon_upper(mu, nu, ep, s);
            if (e != 0.0) rhs += e * g5g_lo(s);
          }
          r = std::max(r, max_abs(sig(mu, nu) * gam(ep) - rhs));
        }
    add("sigma_gamma_product", r);
  }

  // g^mu sigma^{sig eps} g^nu = i(eta^{mu sig} eta^{nu eps} - eta^{mu eps} eta^{nu sig})
  //   + eta^{nu eps} sigma^{mu sig} - eta^{nu sig} sigma^{mu eps}
  //   - eps^{sig eps nu mu} gamma_5 + i eps^{sig eps nu lam} gamma_5 sigma^mu_lam
  {
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        for (int so = 0; so < 4; ++so)
          for (int ep = 0; ep < 4; ++ep) {
            Mat4 rhs = (kImag * (eta(mu, so) * eta(nu, ep) - eta(mu, ep) * eta(nu, so))) * one;
            rhs += eta(nu, ep) * sig(mu, so) - eta(nu, so) * sig(mu, ep);
            rhs += (-epsilon_upper(so, ep, nu, mu)) * g.gamma5;
            for (int lam = 0; lam < 4; ++lam) {
              const double e = epsilon_upper(so, ep, nu, lam);
              if (e != 0.0)
                rhs += (kImag * e * eta_sign(lam)) *
                       g.gamma5_sigma[static_cast<std::size_t>(mu)][static_cast<std::size_t>(lam)];
            }
            r = std::max(r, max_abs(gam(mu) * sig(so, ep) * gam(nu) - rhs));
          }
    add("gamma_sigma_gamma", r);
  }

  // g^sig sigma^{mu nu} g_sig = 0
  {
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        Mat4 acc = Mat4::zero();
        for (int s = 0; s < 4; ++s) acc += gam(s) * sig(mu, nu) * gam_lo(s);
        r = std::max(r, max_abs(acc));
      }
    add("sigma_sandwich_vanishes", r);
  }

  // sigma^{mu nu} g_mu = -3i g^nu
  {
    double r = 0.0;
    for (int nu = 0; nu < 4; ++nu) {
      Mat4 acc = Mat4::zero();
      for (int mu = 0; mu < 4; ++mu) acc += sig(mu, nu) * gam_lo(mu);
      r = std::max(r, max_abs(acc + (3.0 * kImag) * gam(nu)));
    }
    add("sigma_gamma_contraction", r);
  }

  // sigma^{mu nu} g^rho g_mu = 3i eta^{nu rho} + sigma^{nu rho}
  {
    double r = 0.0;
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho) {
        Mat4 acc = Mat4::zero();
        for (int mu = 0; mu < 4; ++mu) acc += sig(mu, nu) * gam(rho) * gam_lo(mu);
        r = std::max(r, max_abs(acc - ((3.0 * kImag * eta(nu, rho)) * one + sig(nu, rho))));
      }
    add("sigma_gamma_gamma_contraction", r);
  }

  // sigma^{mu nu} sigma^{rho tau} g_mu = eta^{nu rho} g^tau - eta^{nu tau} g^rho
  //                                      + i eps^{nu rho tau sig} gamma_5 g_sig
  {
    double r = 0.0;
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho)
        for (int ta = 0; ta < 4; ++ta) {
          Mat4 acc = Mat4::zero();
          for (int mu = 0; mu < 4; ++mu) acc += sig(mu, nu) * sig(rho, ta) * gam_lo(mu);
          Mat4 rhs = eta(nu, rho) * gam(ta) - eta(nu, ta) * gam(rho);
          for (int s = 0; s < 4; ++s) {
            const double e = epsilon_upper(nu, rho, ta, s);
            if (e != 0.0) rhs += (kImag * e) * g5g_lo(s);
          }
          r = std::max(r, max_abs(acc - rhs));
        }
    add("sigma_sigma_gamma_contraction", r);
  }

  // g^mu sigma_{nu mu} = -3i g_nu
  {
    double r = 0.0;
    for (int nu = 0; nu < 4; ++nu) {
      Mat4 acc = Mat4::zero();
      for (int mu = 0; mu < 4; ++mu)
        acc += (eta_sign(nu) * eta_sign(mu)) * (gam(mu) * sig(nu, mu));
      r = std::max(r, max_abs(acc + (3.0 * kImag * eta_sign(nu)) * gam(nu)));
    }
    add("gamma_sigma_contraction", r);
  }

  // g^mu g^rho sigma_{nu mu} = 3i delta_nu^rho - sigma_nu^rho
  {
    double r = 0.0;
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho) {
        Mat4 acc = Mat4::zero();
        for (int mu = 0; mu < 4; ++mu)
          acc += (eta_sign(nu) * eta_sign(mu)) * (gam(mu) * gam(rho) * sig(nu, mu));
        const double delta = (nu == rho) ? 1.0 : 0.0;
        Mat4 rhs = (3.0 * kImag * delta) * one - eta_sign(nu) * sig(nu, rho);
        r = std::max(r, max_abs(acc - rhs));
      }
    add("gamma_gamma_sigma_contraction", r);
  }

  // g^mu sigma^{rho tau} sigma_{nu mu} = delta_nu^tau g^rho - delta_nu^rho g^tau
  //                                      + i eta_{nu kap} eps^{kap rho tau sig} gamma_5 g_sig
  {
    double r = 0.0;
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho)
        for (int ta = 0; ta < 4; ++ta) {
          Mat4 acc = Mat4::zero();
          for (int mu = 0; mu < 4; ++mu)
            acc += (eta_sign(nu) * eta_sign(mu)) * (gam(mu) * sig(rho, ta) * sig(nu, mu));
          Mat4 rhs = ((nu == ta) ? 1.0 : 0.0) * gam(rho) - ((nu == rho) ? 1.0 : 0.0) * gam(ta);
          for (int s = 0; s < 4; ++s) {
            const double e = epsilon_upper(nu, rho, ta, s);
            if (e != 0.0) rhs += (kImag * eta_sign(nu) * e) * g5g_lo(s);
          }
          r = std::max(r, max_abs(acc - rhs));
        }
    add("gamma_sigma_sigma_contraction", r);
  }

  // -eps^{lam rho sig ep} eps_lam^{mu nu tau} = determinant of etas
  {
    double r = 0.0;
    for (int rho = 0; rho < 4; ++rho)
      for (int so = 0; so < 4; ++so)
        for (int ep = 0; ep < 4; ++ep)
          for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
              for (int ta = 0; ta < 4; ++ta) {
                double lhs = 0.0;
                for (int lam = 0; lam < 4; ++lam)
                  lhs += epsilon_upper(lam, rho, so, ep) *
                         epsilon_mixed({lam, mu, nu, ta}, {true, false, false, false});
                lhs = -lhs;
                const double rhs =
                    eta(rho, mu) * (eta(so, nu) * eta(ep, ta) - eta(so, ta) * eta(ep, nu)) -
                    eta(rho, nu) * (eta(so, mu) * eta(ep, ta) - eta(so, ta) * eta(ep, mu)) +
                    eta(rho, ta) * (eta(so, mu) * eta(ep, nu) - eta(so, nu) * eta(ep, mu));
                r = std::max(r, std::abs(lhs - rhs));
              }
    add("epsilon_contraction", r);
  }

  // {g^mu, sigma^{sig nu}} = 2 eps^{sig nu mu rho} gamma_5 g_rho
  {
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int so = 0; so < 4; ++so)
        for (int nu = 0; nu < 4; ++nu) {
          Mat4 rhs = Mat4::zero();
          for (int rho = 0; rho < 4; ++rho) {
            const double e = epsilon_upper(so, nu, mu, rho);
            if (e != 0.0) rhs += (2.0 * e) * g5g_lo(rho);
          }
          r = std::max(r, max_abs(anticommutator(gam(mu), sig(so, nu)) - rhs));
        }
    add("anticommutator_gamma_sigma", r);
  }

  // gamma_5 sigma^{mu nu} = (i/2) eps^{mu nu rho tau} sigma_{rho tau}
  {
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        Mat4 rhs = Mat4::zero();
        for (int rho = 0; rho < 4; ++rho)
          for (int ta = 0; ta < 4; ++ta) {
            const double e = epsilon_upper(mu, nu, rho, ta);
            if (e != 0.0)
              rhs += (0.5 * kImag * e * eta_sign(rho) * eta_sign(ta)) * sig(rho, ta);
          }
        r = std::max(r,
                     max_abs(g.gamma5_sigma[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] - rhs));
      }
    add("dual_of_sigma", r);
  }

  // g^mu C = -C (g^mu)^T  and  C^2 = -1
  {
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      r = std::max(r, max_abs(gam(mu) * g.conjugation + g.conjugation * transpose(gam(mu))));
    add("conjugation_transpose", r);
    add("conjugation_squared", max_abs(g.conjugation * g.conjugation + one));
  }

  // Trace orthogonality of the 16-element basis against its exact Gram matrix
  {
    CMat16 gram{};
    double r = 0.0;
    for (int A = 0; A < 16; ++A)
      for (int B = 0; B < 16; ++B) {
        const Complex tr = trace(g.basis[static_cast<std::size_t>(A)] * g.basis[static_cast<std::size_t>(B)]);
        gram[static_cast<std::size_t>(A)][static_cast<std::size_t>(B)] = tr;
        Complex expect{0.0, 0.0};
        if (A == 0 && B == 0) expect = 4.0;
        if (A >= 1 && A <= 4 && B >= 1 && B <= 4) expect = 4.0 * eta(A - 1, B - 1);
        if (A >= 5 && A <= 10 && B >= 5 && B <= 10) {
          const auto [m1, n1] = kSigmaPairs[static_cast<std::size_t>(A - 5)];
          const auto [m2, n2] = kSigmaPairs[static_cast<std::size_t>(B - 5)];
          expect = 4.0 * (eta(m1, m2) * eta(n1, n2) - eta(m1, n2) * eta(n1, m2));
        }
        if (A >= 11 && A <= 14 && B >= 11 && B <= 14) expect = -4.0 * eta(A - 11, B - 11);
        if (A == 15 && B == 15) expect = 4.0;
        r = std::max(r, std::abs(tr - expect));
      }
    add("trace_orthogonality", r);

    // Completeness: the Gram matrix must be invertible (the 16 elements span
    // the full matrix space).
    const CMat16 inv = invert16(gram);
    double rc = 0.0;
    for (int A = 0; A < 16; ++A)
      for (int B = 0; B < 16; ++B) {
        Complex acc{0.0, 0.0};
        for (int k = 0; k < 16; ++k)
          acc += gram[static_cast<std::size_t>(A)][static_cast<std::size_t>(k)] *
                 inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(B)];
        const Complex expect = (A == B) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
        rc = std::max(rc, std::abs(acc - expect));
      }
    add("basis_completeness", rc);
  }

  return rep;
}

}  // namespace mdstress
