#include "mdstress/rng.hpp"

#include <cmath>

namespace mdstress {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double Rng::uniform(double lo, double hi) {
  // 53 high bits of the engine output give a uniform dyadic in [0, 1);
  // fully specified by the standard, unlike the distribution adaptors.
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = kTwoPi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Complex Rng::cnormal() {
  const double re = normal();
  const double im = normal();
  return Complex{re, im};
}

Spinor Rng::spinor() {
  Spinor s;
  for (auto& z : s.c) z = cnormal();
  return s;
}

SpinorJet Rng::spinor_jet() {
  SpinorJet j;
  j.value = spinor();
  for (auto& d : j.d) d = spinor();
  return j;
}

Vec4d Rng::vec4(double scale) {
  Vec4d v{};
  for (auto& x : v) x = scale * normal();
  return v;
}

Rank2d Rng::rank2(double scale) {
  Rank2d t{};
  for (auto& row : t)
    for (auto& x : row) x = scale * normal();
  return t;
}

Spinor Rng::generic_spinor() {
  // Redraw until the invariants are away from their measure-zero degeneracies:
  // randomized identity suites divide by sigma^2 - omega^2 (and some forms by
  // sigma or omega alone).  Library thresholds stay unchanged; this only
  // keeps the random sampling generic.
  for (;;) {
    const Spinor s = spinor();
    const BilinearSet b = compute_bilinears(s);
    const double n = 1.0 + norm2(s);
    const double inv = invariant_quadratic(b);
    if (inv < 1e-6 * n * n) continue;
    if (std::abs(b.sigma.real()) < 1e-4 * n) continue;
    if (std::abs(b.omega.imag()) < 1e-4 * n) continue;
    return s;
  }
}

SpinorJet Rng::generic_jet() {
  SpinorJet j;
  j.value = generic_spinor();
  for (auto& d : j.d) d = spinor();
  return j;
}

EMField Rng::em_field(double charge, double mass) {
  return EMField::from_potential(vec4(1.0), rank2(1.0), charge, mass);
}

SphericalJet Rng::spherical_jet() {
  SphericalJet sj;
  sj.t = uniform(-1.0, 1.0);
  sj.r = uniform(0.5, 3.0);
  const double s_sign = uniform() < 0.5 ? -1.0 : 1.0;
  sj.sigma = s_sign * (0.5 + std::abs(normal()));
  sj.w = normal();
  sj.sigma_t = normal();
  sj.sigma_r = normal();
  sj.w_t = normal();
  sj.w_r = normal();
  sj.j_a = normal();
  sj.j_a_t = normal();
  sj.j_a_r = normal();
  sj.j_b = normal();
  sj.j_b_t = normal();
  sj.j_b_r = normal();
  sj.sigma_tt = normal();
  sj.sigma_rr = normal();
  sj.w_tt = normal();
  sj.w_rr = normal();
  return sj;
}

}  // namespace mdstress
