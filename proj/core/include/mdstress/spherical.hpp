#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "mdstress/bilinear.hpp"
#include "mdstress/stress.hpp"

namespace mdstress {

/// Static spherically symmetric reduction.  All fields are real functions of
/// (t, r); omega is stored through its imaginary part w (omega = i w).  The
/// current ansatz is j^mu = (j_a, x^k j_b) and k^mu = sign (r j_b, x^k j_a / r)
/// with sign = +-1 selecting the branch.
struct SphericalJet {
  double t = 0.0;
  double r = 1.0;

  // value, d/dt, d/dr triples
  double sigma = 0.0, sigma_t = 0.0, sigma_r = 0.0;
  double w = 0.0, w_t = 0.0, w_r = 0.0;  // omega = i w
  double j_a = 0.0, j_a_t = 0.0, j_a_r = 0.0;
  double j_b = 0.0, j_b_t = 0.0, j_b_r = 0.0;

  // second derivatives of sigma and w (needed by the radial field equation)
  double sigma_tt = 0.0, sigma_rr = 0.0;
  double w_tt = 0.0, w_rr = 0.0;

  double invariant() const { return sigma * sigma + w * w; }
};

struct SphericalParams {
  int sign = +1;  // +-1 branch of the k ansatz
  double charge = 1.0;
  double mass = 1.0;
};

/// Options of the reduced evaluation.
struct FdConfig {
  double r_floor = 1e-6;           // nodes with r below this are flagged
  double degeneracy_floor = 1e-12; // sigma^2 + w^2 threshold
};

/// Scalar functions of the reduced problem at one point.
struct SphericalResult {
  double B_a = 0.0;   // time component of the composite potential: B^0 = B_a
  double B_b = 0.0;   // radial coefficient: B^i = x_i B_b (upper index)
  double F_a = 0.0;   // radial electric coefficient: F_{0i} = x_i F_a
  double F_b = 0.0;   // monopole magnetic coefficient: F_{ij} = eps_{ijk} x^k F_b
  double T_a = 0.0;   // T_00 = T_a + scriptF
  double T_b = 0.0;   // T_0i = (x_i / r) T_b
  double T_c = 0.0;   // T_ij = (x_i x_j / r^2) T_c + delta_ij scriptF
  double scriptF = 0.0;  // r^2 (F_a^2 + F_b^2) / 2
};

/// Helper quantities W_r = sigma_r w - sigma w_r and W_t = sigma_t w - sigma w_t.
double spherical_W_r(const SphericalJet& sj);
double spherical_W_t(const SphericalJet& sj);

/// Composite potential coefficients (B_a, B_b) on the chosen branch.
std::array<double, 2> potentials(const SphericalJet& sj, const SphericalParams& p);

/// Field coefficients (F_a, F_b) determined by the Maxwell equations with the
/// reduced current as source (F_b is the exact monopole solution).
std::array<double, 2> maxwell_coeffs(const SphericalJet& sj, const SphericalParams& p);

/// (T_a, T_b, T_c, scriptF) of the reduced stress tensor.
std::array<double, 4> stress_functions(const SphericalJet& sj, const SphericalParams& p);

/// All reduced functions at once.  Throws DegenerateInvariant when
/// sigma^2 + w^2 is below the configured floor or when r is below r_floor,
/// and ZeroCharge when q == 0.
SphericalResult evaluate_spherical(const SphericalJet& sj, const SphericalParams& p,
                                   const FdConfig& cfg = {});

/// Full 4x4 tensor assembled from the reduced functions at Cartesian
/// position x (lower indices):
///   T_00 = T_a + scriptF, T_0i = (x_i/r) T_b, T_ij = (x_i x_j/r^2) T_c + delta_ij scriptF.
Tensor2 assemble_spherical(const SphericalResult& res, const Vec4d& x);

/// Cross-check of the reduction: embed the reduced data as a full bilinear
/// jet + electromagnetic field at position x and compare the general
/// current-form tensor against the assembled reduced tensor.  Returns the
/// worst absolute component difference and writes the comparison scale.
struct SphericalCrossCheck {
  double max_abs = 0.0;       // worst |T_full - T_reduced| component
  double scale = 1.0;         // 1 + |T_full|_inf + |T_reduced|_inf
  double eps_term_max = 0.0;  // worst epsilon-term component (vanishes on ansatz)
  double eps_scale = 1.0;
  double normalized() const { return max_abs / scale; }
};

SphericalCrossCheck embed_and_crosscheck(const SphericalJet& sj,
                                         const SphericalParams& p,
                                         const Vec4d& x);

/// Tabulated reduced fields on a rectangular (t, r) grid, row-major in r
/// fastest.  Derivatives are reconstructed by second-order finite
/// differences, so at least 3 points per axis are required.
struct GridTable {
  std::vector<double> t;  // nt ascending
  std::vector<double> r;  // nr ascending
  // column-major by field: values[field][it * nr + ir]
  std::vector<double> sigma, w, j_a, j_b;

  std::size_t nt() const { return t.size(); }
  std::size_t nr() const { return r.size(); }
  std::size_t index(std::size_t it, std::size_t ir) const { return it * nr() + ir; }
};

struct GridNodeResult {
  double t = 0.0;
  double r = 0.0;
  SphericalResult res{};
  bool degenerate = false;  // invariant under floor or r under r_floor
};

/// Evaluate the reduced functions at every grid node.  Degenerate nodes are
/// flagged (and filled with NaN) instead of throwing when allow_degenerate
/// is set; otherwise the first degenerate node throws.
std::vector<GridNodeResult> grid_evaluate(const GridTable& grid,
                                          const SphericalParams& p,
                                          const FdConfig& cfg,
                                          bool allow_degenerate);

/// Finite-difference weights on arbitrary nodes (used by grid_evaluate and
/// by the convergence test): derivative of given order at x0 from the
/// specified stencil nodes.
std::vector<double> fd_weights(double x0, const std::vector<double>& nodes, int order);

/// Jet of one scalar field at node (it, ir): value, d/dt, d/dr, d2/dt2, d2/dr2.
struct ScalarJet2 {
  double v = 0.0, dt = 0.0, dr = 0.0, dtt = 0.0, drr = 0.0;
};

ScalarJet2 grid_scalar_jet(const GridTable& grid, const std::vector<double>& field,
                           std::size_t it, std::size_t ir);

}  // namespace mdstress
