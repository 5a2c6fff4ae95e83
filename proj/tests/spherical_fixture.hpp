#pragma once

#include <cmath>
#include <cstddef>

#include "mdstress/spherical.hpp"

namespace mdstress_test {

/// Smooth analytic field set on t in [0,1], r in [1,2] with the invariant
/// sigma^2 + w^2 bounded well away from zero.  Exact derivatives are
/// available, so finite-difference output can be checked for accuracy and
/// convergence order.
inline mdstress::SphericalJet trig_jet(double t, double r) {
  mdstress::SphericalJet sj;
  sj.t = t;
  sj.r = r;
  sj.sigma = 2.0 + 0.3 * std::sin(t) * std::cos(r);
  sj.sigma_t = 0.3 * std::cos(t) * std::cos(r);
  sj.sigma_r = -0.3 * std::sin(t) * std::sin(r);
  sj.sigma_tt = -0.3 * std::sin(t) * std::cos(r);
  sj.sigma_rr = -0.3 * std::sin(t) * std::cos(r);
  sj.w = 0.5 + 0.2 * std::cos(t) * std::sin(r);
  sj.w_t = -0.2 * std::sin(t) * std::sin(r);
  sj.w_r = 0.2 * std::cos(t) * std::cos(r);
  sj.w_tt = -0.2 * std::cos(t) * std::sin(r);
  sj.w_rr = -0.2 * std::cos(t) * std::sin(r);
  sj.j_a = 1.0 + 0.4 * std::sin(t + r);
  sj.j_a_t = 0.4 * std::cos(t + r);
  sj.j_a_r = 0.4 * std::cos(t + r);
  sj.j_b = 0.3 + 0.1 * std::cos(t - r);
  sj.j_b_t = -0.1 * std::sin(t - r);
  sj.j_b_r = 0.1 * std::sin(t - r);
  return sj;
}

inline mdstress::GridTable trig_grid(std::size_t nt, std::size_t nr) {
  mdstress::GridTable g;
  g.t.resize(nt);
  g.r.resize(nr);
  for (std::size_t i = 0; i < nt; ++i)
    g.t[i] = static_cast<double>(i) / static_cast<double>(nt - 1);
  for (std::size_t i = 0; i < nr; ++i)
    g.r[i] = 1.0 + static_cast<double>(i) / static_cast<double>(nr - 1);
  g.sigma.resize(nt * nr);
  g.w.resize(nt * nr);
  g.j_a.resize(nt * nr);
  g.j_b.resize(nt * nr);
  for (std::size_t it = 0; it < nt; ++it)
    for (std::size_t ir = 0; ir < nr; ++ir) {
      const mdstress::SphericalJet sj = trig_jet(g.t[it], g.r[ir]);
      const std::size_t idx = it * nr + ir;
      g.sigma[idx] = sj.sigma;
      g.w[idx] = sj.w;
      g.j_a[idx] = sj.j_a;
      g.j_b[idx] = sj.j_b;
    }
  return g;
}

}  // namespace mdstress_test
