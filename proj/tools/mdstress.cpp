// mdstress: numerical laboratory for the current-form (bilinear)
// representation of the Dirac-Maxwell stress-energy tensor.
//
// Subcommands:
//   identities  randomized identity suites (gamma algebra, bilinear
//               expansions, derivative identities, combinatorial identity)
//   stress      tensors and Lagrangians from JSON spinor-jet input
//   spherical   reduced evaluation of rotationally symmetric grid data
//   selftest    the full pinned acceptance battery
//
// Exit codes: 0 ok, 1 verification failure, 2 bad flags, 3 schema violation,
// 4 data failure (degenerate input, undersized grid, unwritable output).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdstress/acceptance.hpp"
#include "mdstress/bilinear.hpp"
#include "mdstress/clifford.hpp"
#include "mdstress/errors.hpp"
#include "mdstress/fierz.hpp"
#include "mdstress/io.hpp"
#include "mdstress/linalg.hpp"
#include "mdstress/report.hpp"
#include "mdstress/rng.hpp"
#include "mdstress/spherical.hpp"
#include "mdstress/stress.hpp"

namespace {

using mdstress::Tensor2;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitFlags = 2;
constexpr int kExitSchema = 3;
constexpr int kExitData = 4;

struct CommonOptions {
  std::uint64_t seed = 42;
  int trials = 1000;
  double tol = 1e-9;
  std::string sign = "plus";
  double mass = 1.0;
  double charge = 1.0;
  std::string format = "json";
  bool allow_degenerate = false;
  std::string out_path;
};

/// Write to --out PATH when given, stdout otherwise.  Returns false when the
/// file cannot be written.
bool emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

double tensor_diff(const Tensor2& a, const Tensor2& b) {
  double r = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      r = std::max(r, std::abs(a[mu][nu] - b[mu][nu]));
  return r;
}

double tensor_max(const Tensor2& t) {
  double r = 0.0;
  for (const auto& row : t)
    for (double x : row) r = std::max(r, std::abs(x));
  return r;
}

ordered_json tensor_json(const Tensor2& t) {
  ordered_json rows = ordered_json::array();
  for (int mu = 0; mu < 4; ++mu) {
    ordered_json row = ordered_json::array();
    for (int nu = 0; nu < 4; ++nu) row.push_back(t[mu][nu]);
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// identities

std::string identity_reports_csv(const std::vector<mdstress::IdentityReport>& reports) {
  std::string out = "suite,identity,max_abs,scale,normalized,tol,pass\n";
  for (const auto& rep : reports)
    for (const auto& e : rep.entries) {
      out += rep.title;
      out += ',';
      out += e.name;
      out += ',';
      out += mdstress::format_double(e.max_abs);
      out += ',';
      out += mdstress::format_double(e.scale);
      out += ',';
      out += mdstress::format_double(e.normalized());
      out += ',';
      out += mdstress::format_double(e.tol);
      out += ',';
      out += e.pass ? '1' : '0';
      out += '\n';
    }
  return out;
}

int cmd_identities(const CommonOptions& opt) {
  const mdstress::GammaBasis g = mdstress::build_gamma_basis();

  std::vector<mdstress::IdentityReport> reports;
  reports.push_back(mdstress::verify_dirac_identities(g, opt.tol));

  // Aggregate the randomized suites: per identity, the worst normalized
  // residual across all sampled jets.
  struct Agg {
    std::vector<std::string> order;
    std::vector<double> worst;
    void feed(const std::string& name, double normalized) {
      for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == name) {
          worst[i] = std::max(worst[i], normalized);
          return;
        }
      order.push_back(name);
      worst.push_back(normalized);
    }
  };
  Agg fundamental, expansion, derivative;
  double combinatorial_worst = 0.0;

  mdstress::Rng rng(opt.seed);
  for (int trial = 0; trial < opt.trials; ++trial) {
    const mdstress::SpinorJet jet = rng.generic_jet();
    const mdstress::BilinearJet bj = mdstress::bilinear_jet(jet);

    const mdstress::IdentityReport fund =
        mdstress::fundamental_identities(bj.value, opt.tol);
    for (const auto& e : fund.entries) fundamental.feed(e.name, e.normalized());

    for (const auto& res : mdstress::fierz_expansion_suite(bj))
      expansion.feed(res.name, res.normalized());

    const mdstress::BelinfanteResidual bel =
        mdstress::belinfante_identity_residual(bj);
    derivative.feed(bel.full.name, bel.full.normalized());
    derivative.feed(bel.contracted.name, bel.contracted.normalized());
    for (const auto& res : mdstress::antiproduct_residuals(bj))
      derivative.feed(res.name, res.normalized());

    const mdstress::Rank2d dj = rng.rank2();
    const mdstress::Vec4d jv = rng.vec4();
    const mdstress::Vec4d kv = rng.vec4();
    double s = 1.0;
    for (double x : jv) s = std::max(s, 1.0 + std::abs(x));
    double sk = 1.0, sd = 1.0;
    for (double x : kv) sk = std::max(sk, 1.0 + std::abs(x));
    for (const auto& row : dj)
      for (double x : row) sd = std::max(sd, 1.0 + std::abs(x));
    combinatorial_worst =
        std::max(combinatorial_worst,
                 mdstress::combinatorial_residual(dj, jv, kv) / (s * sk * sd));
  }

  const auto to_report = [&](const char* title, const Agg& agg) {
    mdstress::IdentityReport rep;
    rep.title = title;
    for (std::size_t i = 0; i < agg.order.size(); ++i)
      rep.add(agg.order[i], agg.worst[i], 1.0, opt.tol);
    return rep;
  };
  reports.push_back(to_report("fundamental bilinear identities", fundamental));
  reports.push_back(to_report("outer-product expansion suite", expansion));
  reports.push_back(to_report("derivative (current-form) identities", derivative));
  {
    mdstress::IdentityReport rep;
    rep.title = "combinatorial index identity";
    rep.add("six_term_rearrangement", combinatorial_worst, 1.0, opt.tol);
    reports.push_back(rep);
  }

  const std::string text = opt.format == "csv"
                               ? identity_reports_csv(reports)
                               : mdstress::reports_json(reports);
  if (!emit(text, opt.out_path)) {
    std::cerr << "error: cannot write output file " << opt.out_path << "\n";
    return kExitData;
  }
  for (const auto& rep : reports)
    if (!rep.all_pass()) return kExitVerification;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// stress

struct StressRow {
  bool degenerate = false;
  bool pass = true;
  Tensor2 canonical{};
  Tensor2 belinfante_derivative{};
  Tensor2 total_derivative{};
  Tensor2 belinfante_current{};
  Tensor2 total_current{};
  double lagrangian_derivative = 0.0;
  double lagrangian_current = 0.0;
  double matter_residual = 0.0;
  double matter_scale = 1.0;
  double total_residual = 0.0;
  double total_scale = 1.0;
};

std::string stress_rows_json(const std::vector<StressRow>& rows, double tol) {
  ordered_json out;
  out["tol"] = tol;
  out["count"] = rows.size();
  std::size_t passes = 0, degenerate = 0;
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json rec;
    rec["degenerate"] = row.degenerate;
    rec["canonical"] = tensor_json(row.canonical);
    rec["belinfante_derivative_route"] = tensor_json(row.belinfante_derivative);
    rec["total_derivative_route"] = tensor_json(row.total_derivative);
    if (row.degenerate) {
      rec["belinfante_current_route"] = nullptr;
      rec["total_current_route"] = nullptr;
      rec["lagrangian_derivative_route"] = row.lagrangian_derivative;
      rec["lagrangian_current_route"] = nullptr;
      rec["matter_route_residual"] = nullptr;
      rec["total_route_residual"] = nullptr;
      rec["pass"] = nullptr;
    } else {
      rec["belinfante_current_route"] = tensor_json(row.belinfante_current);
      rec["total_current_route"] = tensor_json(row.total_current);
      rec["lagrangian_derivative_route"] = row.lagrangian_derivative;
      rec["lagrangian_current_route"] = row.lagrangian_current;
      ordered_json matter;
      matter["max_abs"] = row.matter_residual;
      matter["scale"] = row.matter_scale;
      matter["normalized"] = row.matter_residual / row.matter_scale;
      rec["matter_route_residual"] = std::move(matter);
      ordered_json total;
      total["max_abs"] = row.total_residual;
      total["scale"] = row.total_scale;
      total["normalized"] = row.total_residual / row.total_scale;
      rec["total_route_residual"] = std::move(total);
      rec["pass"] = row.pass;
      if (row.pass) ++passes;
    }
    if (row.degenerate) ++degenerate;
    arr.push_back(std::move(rec));
  }
  out["passes"] = passes;
  out["degenerate"] = degenerate;
  out["records"] = std::move(arr);
  return out.dump(2) + "\n";
}

std::string stress_rows_csv(const std::vector<StressRow>& rows) {
  std::string out =
      "index,matter_residual,matter_scale,total_residual,total_scale,"
      "lagrangian_derivative_route,lagrangian_current_route,pass,degenerate\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    out += std::to_string(i);
    out += ',';
    if (row.degenerate) {
      out += "nan,nan,nan,nan,";
      out += mdstress::format_double(row.lagrangian_derivative);
      out += ",nan,,1\n";
      continue;
    }
    out += mdstress::format_double(row.matter_residual);
    out += ',';
    out += mdstress::format_double(row.matter_scale);
    out += ',';
    out += mdstress::format_double(row.total_residual);
    out += ',';
    out += mdstress::format_double(row.total_scale);
    out += ',';
    out += mdstress::format_double(row.lagrangian_derivative);
    out += ',';
    out += mdstress::format_double(row.lagrangian_current);
    out += ',';
    out += row.pass ? '1' : '0';
    out += ",0\n";
  }
  return out;
}

int cmd_stress(const CommonOptions& opt, const std::string& input_path) {
  std::string text;
  {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot open input file " << input_path << "\n";
      return kExitData;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  std::vector<mdstress::StressInput> inputs;
  try {
    inputs = mdstress::parse_stress_inputs(text);
  } catch (const mdstress::SchemaError& err) {
    std::cerr << "schema error: " << err.what() << "\n";
    return kExitSchema;
  }

  std::vector<StressRow> rows;
  rows.reserve(inputs.size());
  for (const auto& input : inputs) {
    const mdstress::BilinearJet bj = mdstress::bilinear_jet(input.jet);
    const mdstress::EMField& em = input.em;

    StressRow row;
    row.canonical = mdstress::canonical_tensor(bj);
    row.belinfante_derivative = mdstress::belinfante_spinor(bj);
    row.total_derivative = mdstress::assemble_md_spinor_route(bj, em);
    row.lagrangian_derivative = mdstress::spinor_lagrangian(bj, em);

    const double inv = mdstress::invariant_quadratic(bj.value);
    if (inv <= mdstress::degeneracy_threshold(bj.value)) {
      row.degenerate = true;
      if (!opt.allow_degenerate) {
        std::cerr << "data error: degenerate invariant " << inv
                  << " (pass --allow-degenerate to continue)\n";
        return kExitData;
      }
      rows.push_back(row);
      continue;
    }

    row.belinfante_current = mdstress::belinfante_bilinear(bj);
    row.total_current = mdstress::assemble_md(bj, em);
    row.lagrangian_current = mdstress::bilinear_lagrangian(bj, em);
    row.matter_residual = tensor_diff(row.belinfante_current, row.belinfante_derivative);
    row.matter_scale = bj.scale;
    row.total_residual = tensor_diff(row.total_current, row.total_derivative);
    row.total_scale = 1.0 + tensor_max(row.total_current) +
                      tensor_max(row.total_derivative) + bj.scale;
    row.pass = row.matter_residual <= opt.tol * row.matter_scale &&
               row.total_residual <= opt.tol * row.total_scale;
    rows.push_back(row);
  }

  const std::string body =
      opt.format == "csv" ? stress_rows_csv(rows) : stress_rows_json(rows, opt.tol);
  if (!emit(body, opt.out_path)) {
    std::cerr << "error: cannot write output file " << opt.out_path << "\n";
    return kExitData;
  }
  for (const auto& row : rows)
    if (!row.degenerate && !row.pass) return kExitVerification;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// spherical

int cmd_spherical(const CommonOptions& opt, const std::string& input_path) {
  mdstress::GridTable grid;
  try {
    grid = mdstress::read_grid_csv_file(input_path);
  } catch (const mdstress::SchemaError& err) {
    std::cerr << "schema error: " << err.what() << "\n";
    return kExitSchema;
  }

  mdstress::SphericalParams p;
  p.sign = opt.sign == "minus" ? -1 : 1;
  p.charge = opt.charge;
  p.mass = opt.mass;

  std::vector<mdstress::GridNodeResult> nodes;
  try {
    nodes = mdstress::grid_evaluate(grid, p, mdstress::FdConfig{},
                                    opt.allow_degenerate);
  } catch (const mdstress::GridTooSmall& err) {
    std::cerr << "data error: " << err.what() << "\n";
    return kExitData;
  } catch (const mdstress::DegenerateInvariant& err) {
    std::cerr << "data error: " << err.what()
              << " (pass --allow-degenerate to continue)\n";
    return kExitData;
  } catch (const mdstress::ZeroCharge& err) {
    std::cerr << "data error: " << err.what() << "\n";
    return kExitData;
  } catch (const mdstress::SchemaError& err) {
    std::cerr << "schema error: " << err.what() << "\n";
    return kExitSchema;
  }

  const std::string body = opt.format == "json"
                               ? mdstress::grid_results_json(nodes)
                               : mdstress::grid_results_csv(nodes);
  if (!emit(body, opt.out_path)) {
    std::cerr << "error: cannot write output file " << opt.out_path << "\n";
    return kExitData;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// selftest

int cmd_selftest(std::uint64_t seed, bool corrupt_gamma,
                 const std::string& out_path) {
  mdstress::AcceptanceConfig cfg;
  cfg.seed = seed;
  cfg.corrupt_gamma = corrupt_gamma;
  const mdstress::AcceptanceOutcome outcome = mdstress::run_acceptance(cfg);
  const std::string report = mdstress::acceptance_report(outcome);
  if (!emit(report, out_path)) {
    std::cerr << "error: cannot write output file " << out_path << "\n";
    return kExitData;
  }
  return outcome.all_pass() ? kExitOk : kExitVerification;
}

void add_common_flags(CLI::App* sub, CommonOptions* opt, bool with_physics) {
  sub->add_option("--seed", opt->seed, "Random seed")->capture_default_str();
  sub->add_option("--trials", opt->trials, "Number of randomized trials")
      ->check(CLI::Range(1, 100000000))
      ->capture_default_str();
  sub->add_option("--tol", opt->tol, "Normalized residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--format", opt->format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", opt->out_path, "Write output to PATH instead of stdout");
  sub->add_flag("--allow-degenerate", opt->allow_degenerate,
                "Flag degenerate inputs instead of failing");
  if (with_physics) {
    sub->add_option("--sign", opt->sign, "Branch sign of the reduced equations")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
    sub->add_option("--mass", opt->mass, "Fermion mass")->capture_default_str();
    sub->add_option("--charge", opt->charge, "Coupling charge (nonzero)")
        ->capture_default_str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Numerical laboratory for the current-form representation of the "
      "Dirac-Maxwell stress-energy tensor"};
  app.require_subcommand(1);

  CommonOptions id_opt;
  CLI::App* identities =
      app.add_subcommand("identities", "Run the randomized identity suites");
  add_common_flags(identities, &id_opt, false);

  CommonOptions st_opt;
  std::string stress_input;
  CLI::App* stress = app.add_subcommand(
      "stress", "Compute stress tensors and Lagrangians from a JSON jet file");
  stress->add_option("input", stress_input, "JSON input file")->required();
  add_common_flags(stress, &st_opt, false);

  CommonOptions sp_opt;
  sp_opt.format = "csv";
  std::string spherical_input;
  CLI::App* spherical = app.add_subcommand(
      "spherical", "Evaluate the reduced rotationally symmetric system on a grid");
  spherical->add_option("input", spherical_input, "CSV grid file")->required();
  add_common_flags(spherical, &sp_opt, true);

  std::uint64_t selftest_seed = 42;
  bool corrupt_gamma = false;
  std::string selftest_out;
  CLI::App* selftest =
      app.add_subcommand("selftest", "Run the full pinned acceptance battery");
  selftest->add_option("--seed", selftest_seed, "Random seed")
      ->capture_default_str();
  selftest->add_option("--out", selftest_out,
                       "Write the report to PATH instead of stdout");
  selftest
      ->add_flag("--corrupt-gamma", corrupt_gamma,
                 "Negative control: perturb one gamma-matrix entry")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitFlags;
  }

  try {
    if (identities->parsed()) return cmd_identities(id_opt);
    if (stress->parsed()) return cmd_stress(st_opt, stress_input);
    if (spherical->parsed()) return cmd_spherical(sp_opt, spherical_input);
    if (selftest->parsed())
      return cmd_selftest(selftest_seed, corrupt_gamma, selftest_out);
  } catch (const mdstress::SchemaError& err) {
    std::cerr << "schema error: " << err.what() << "\n";
    return kExitSchema;
  } catch (const std::exception& err) {
    std::cerr << "data error: " << err.what() << "\n";
    return kExitData;
  }
  return kExitFlags;
}
