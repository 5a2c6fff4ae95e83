#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mdstress/bilinear.hpp"
#include "mdstress/report.hpp"
#include "mdstress/spherical.hpp"
#include "mdstress/stress.hpp"

namespace mdstress {

/// One pointwise verification input: a spinor jet plus optional
/// electromagnetic data and physical constants.
struct StressInput {
  SpinorJet jet{};
  EMField em{};
  bool has_em = false;
};

/// Parse a JSON document holding either one input object or an array of
/// them.  Schema per object:
///   {
///     "psi":  [[re, im] x 4],
///     "dpsi": [[[re, im] x 4] x 4],   // dpsi[mu] = d_mu psi
///     "A":    [4 reals],              // optional, upper index
///     "dA":   [16 reals row-major],   // optional, dA[mu][nu] = d_mu A^nu
///     "mass": real,                   // optional, default 1
///     "charge": real                  // optional, default 1
///   }
/// Throws SchemaError on malformed documents.
std::vector<StressInput> parse_stress_inputs(const std::string& json_text);

/// Serialize a tensor comparison per input.
struct StressRecord {
  Tensor2 bilinear_route{};
  Tensor2 spinor_route{};
  double max_abs_diff = 0.0;
  double scale = 1.0;
  bool pass = false;
  bool degenerate = false;
};

std::string stress_records_json(const std::vector<StressRecord>& records,
                                double tol);
std::string stress_records_csv(const std::vector<StressRecord>& records);

/// Reduced-problem grid CSV.  Input header: t,r,sigma,omega_im,j_a,j_b
/// (one node per row; nodes must form a complete rectangular grid).
GridTable read_grid_csv(std::istream& in);
GridTable read_grid_csv_file(const std::string& path);

/// Output header:
///   t,r,B_a,B_b,F_a,F_b,T_a,T_b,T_c,scriptF,T00,degenerate
/// Degenerate nodes carry nan fields and degenerate=1.
std::string grid_results_csv(const std::vector<GridNodeResult>& results);
std::string grid_results_json(const std::vector<GridNodeResult>& results);

/// Identity-report serialization shared by the CLI subcommands.
std::string report_json(const IdentityReport& report);
std::string reports_json(const std::vector<IdentityReport>& reports);

}  // namespace mdstress
