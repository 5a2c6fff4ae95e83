// End-to-end tests of the command-line tool: every subcommand is exercised
// through a real subprocess, checking exit codes, output documents, and
// determinism.  The binary path and a writable scratch directory are injected
// by the build system.
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#ifndef MDSTRESS_CLI_PATH
#error "MDSTRESS_CLI_PATH must point at the command-line binary"
#endif
#ifndef MDSTRESS_CLI_WORKDIR
#error "MDSTRESS_CLI_WORKDIR must point at a writable directory"
#endif

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string work_path(const std::string& name) {
  return std::string(MDSTRESS_CLI_WORKDIR) + "/" + name;
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string out = work_path("cli_stdout_" + std::to_string(counter) + ".txt");
  const std::string err = work_path("cli_stderr_" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = std::string("\"") + MDSTRESS_CLI_PATH + "\" " + args +
                          " > \"" + out + "\" 2> \"" + err + "\"";
  const int status = std::system(cmd.c_str());
  RunResult r;
  if (status != -1 && WIFEXITED(status)) r.code = WEXITSTATUS(status);
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

const char* kJetDocument = R"({
  "psi":  [[0.5, 0.1], [-0.3, 0.2], [0.7, 0.0], [0.0, -0.4]],
  "dpsi": [[[0.1, 0.0], [0.0, 0.3], [0.0, 0.0], [0.2, 0.0]],
           [[0.0, 0.2], [0.0, 0.0], [0.1, 0.0], [0.0, 0.0]],
           [[0.0, 0.0], [0.3, 0.0], [0.0, 0.0], [0.0, 0.1]],
           [[0.0, 0.0], [0.0, 0.0], [0.0, -0.1], [0.2, 0.0]]],
  "A":    [0.4, -0.1, 0.2, 0.0],
  "dA":   [0, 0.1, 0, 0, 0.2, 0, 0, 0, 0, 0, 0, 0.3, 0, 0, 0, 0],
  "mass": 0.8,
  "charge": 1.2
})";

const char* kZeroJetDocument = R"({
  "psi":  [[0, 0], [0, 0], [0, 0], [0, 0]],
  "dpsi": [[[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]],
           [[0,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[0,0],[0,0]]]
})";

/// Constant-field lattice: every derivative vanishes, so the reduced
/// functions have closed forms that the test recomputes independently.
std::string constant_grid_csv(double sigma, double w, double j_a, double j_b) {
  std::string out = "t,r,sigma,omega_im,j_a,j_b\n";
  for (int it = 0; it < 5; ++it)
    for (int ir = 0; ir < 5; ++ir) {
      const double t = 0.25 * it;
      const double r = 1.0 + 0.25 * ir;
      std::ostringstream row;
      row << t << ',' << r << ',' << sigma << ',' << w << ',' << j_a << ','
          << j_b << '\n';
      out += row.str();
    }
  return out;
}

}  // namespace

TEST_CASE("flag handling: bad invocations exit with the usage code") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("identities --trials 0").code == 2);
  CHECK(run_cli("identities --no-such-flag").code == 2);
  CHECK(run_cli("identities --format yaml").code == 2);
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("identities --help").code == 0);
}

TEST_CASE("identities: clean run, JSON document, determinism") {
  const RunResult a = run_cli("identities --seed 7 --trials 50");
  REQUIRE(a.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(a.out);
  CHECK(doc.at("pass").get<bool>());
  REQUIRE(doc.at("reports").size() == 5);
  for (const auto& rep : doc.at("reports")) {
    CHECK(rep.at("pass").get<bool>());
    CHECK(rep.at("entries").size() > 0);
  }

  const RunResult b = run_cli("identities --seed 7 --trials 50");
  CHECK(b.code == 0);
  CHECK(a.out == b.out);  // byte-identical for identical seeds

  const RunResult c = run_cli("identities --seed 8 --trials 50");
  CHECK(c.code == 0);
  CHECK(a.out != c.out);  // the seed actually feeds the sampler

  const RunResult csv = run_cli("identities --seed 7 --trials 50 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.find("suite,identity,max_abs,scale,normalized,tol,pass") == 0);
}

TEST_CASE("identities: --out writes the document to a file") {
  const std::string path = work_path("identities_report.json");
  std::remove(path.c_str());
  const RunResult r = run_cli("identities --seed 3 --trials 20 --out \"" + path + "\"");
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const nlohmann::json doc = nlohmann::json::parse(slurp(path));
  CHECK(doc.at("pass").get<bool>());
}

TEST_CASE("stress: verifies a supplied jet and reports both routes") {
  const std::string path = work_path("jet_input.json");
  spit(path, kJetDocument);
  const RunResult r = run_cli("stress \"" + path + "\"");
  REQUIRE(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("count").get<int>() == 1);
  CHECK(doc.at("passes").get<int>() == 1);
  const auto& rec = doc.at("records")[0];
  CHECK(rec.at("pass").get<bool>());
  CHECK_FALSE(rec.at("degenerate").get<bool>());
  const auto& matter = rec.at("matter_route_residual");
  CHECK(matter.at("normalized").get<double>() <= 1e-9);
  const auto& total = rec.at("total_route_residual");
  CHECK(total.at("normalized").get<double>() <= 1e-9);
  // the two Lagrangian forms are reported and agree
  const double l1 = rec.at("lagrangian_derivative_route").get<double>();
  const double l2 = rec.at("lagrangian_current_route").get<double>();
  CHECK(std::abs(l1 - l2) <= 1e-9 * (1.0 + std::abs(l1)));
  CHECK(rec.at("canonical").is_array());
  CHECK(rec.at("belinfante_current_route").is_array());

  const RunResult csv = run_cli("stress \"" + path + "\" --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.find("index,matter_residual,matter_scale,total_residual") == 0);
}

TEST_CASE("stress: degenerate jets are data errors unless explicitly allowed") {
  const std::string path = work_path("zero_jet.json");
  spit(path, kZeroJetDocument);
  CHECK(run_cli("stress \"" + path + "\"").code == 4);

  const RunResult r = run_cli("stress \"" + path + "\" --allow-degenerate");
  REQUIRE(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("records")[0].at("degenerate").get<bool>());
}

TEST_CASE("stress: malformed and missing inputs map to distinct exit codes") {
  const std::string bad = work_path("bad_input.json");
  spit(bad, "{ this is not json ");
  CHECK(run_cli("stress \"" + bad + "\"").code == 3);

  const std::string schema = work_path("schema_input.json");
  spit(schema, R"({"psi": [[1,0],[0,0],[0,0],[0,0]]})");
  CHECK(run_cli("stress \"" + schema + "\"").code == 3);

  CHECK(run_cli("stress \"" + work_path("no_such_file.json") + "\"").code == 4);
}

TEST_CASE("spherical: constant lattice matches the closed-form functions") {
  const double sigma = 2.0, w = 0.5, j_a = 1.0, j_b = 0.2;
  const double q = 1.3, m = 0.7;
  const std::string path = work_path("constant_grid.csv");
  spit(path, constant_grid_csv(sigma, w, j_a, j_b));

  const RunResult r = run_cli("spherical \"" + path +
                              "\" --charge 1.3 --mass 0.7 --format json");
  REQUIRE(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("count").get<int>() == 25);
  CHECK(doc.at("degenerate").get<int>() == 0);

  const double D = sigma * sigma + w * w;
  for (const auto& node : doc.at("nodes")) {
    const double rr = node.at("r").get<double>();
    const auto& res = node.at("result");
    // constant fields: the gradient-driven parts vanish
    CHECK(std::abs(res.at("F_a").get<double>()) <= 1e-12);
    CHECK(std::abs(res.at("F_b").get<double>() - 1.0 / (2.0 * q * rr * rr * rr)) <=
          1e-12);
    CHECK(std::abs(res.at("B_a").get<double>() - (-m * sigma * j_a / (q * D))) <=
          1e-12);
    CHECK(std::abs(res.at("T_a").get<double>() - (-m * sigma * j_a * j_a / D)) <=
          1e-10);
    CHECK(std::abs(res.at("T_b").get<double>() -
                   m * sigma * j_a * rr * j_b / D) <= 1e-10);
  }

  // the opposite branch flips the magnetic coefficient but not the mass term
  const RunResult minus = run_cli("spherical \"" + path +
                                  "\" --charge 1.3 --mass 0.7 --sign minus --format json");
  REQUIRE(minus.code == 0);
  const nlohmann::json mdoc = nlohmann::json::parse(minus.out);
  const auto& n0 = doc.at("nodes")[0].at("result");
  const auto& m0 = mdoc.at("nodes")[0].at("result");
  CHECK(std::abs(m0.at("F_b").get<double>() + n0.at("F_b").get<double>()) <= 1e-12);
  CHECK(std::abs(m0.at("T_b").get<double>() - n0.at("T_b").get<double>()) <= 1e-12);
}

TEST_CASE("spherical: CSV output is the default format") {
  const std::string path = work_path("constant_grid2.csv");
  spit(path, constant_grid_csv(2.0, 0.5, 1.0, 0.2));
  const RunResult r = run_cli("spherical \"" + path + "\"");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("t,r,B_a,B_b,F_a,F_b,T_a,T_b,T_c,scriptF,T00,degenerate") == 0);
  // header plus 25 node rows
  int lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 26);
}

TEST_CASE("spherical: undersized and degenerate lattices") {
  const std::string tiny = work_path("tiny_grid.csv");
  spit(tiny,
       "t,r,sigma,omega_im,j_a,j_b\n"
       "0,1,2,0.5,1,0.2\n"
       "0,2,2,0.5,1,0.2\n"
       "1,1,2,0.5,1,0.2\n"
       "1,2,2,0.5,1,0.2\n");
  CHECK(run_cli("spherical \"" + tiny + "\"").code == 4);

  std::string degenerate_csv = constant_grid_csv(2.0, 0.5, 1.0, 0.2);
  // zero out the invariant at the node t=0.5, r=1.5
  const std::string needle = "0.5,1.5,2,0.5,1,0.2\n";
  const std::size_t at = degenerate_csv.find(needle);
  REQUIRE(at != std::string::npos);
  degenerate_csv.replace(at, needle.size(), "0.5,1.5,0,0,1,0.2\n");
  const std::string degen = work_path("degenerate_grid.csv");
  spit(degen, degenerate_csv);

  CHECK(run_cli("spherical \"" + degen + "\"").code == 4);
  const RunResult allowed =
      run_cli("spherical \"" + degen + "\" --allow-degenerate");
  REQUIRE(allowed.code == 0);
  CHECK(allowed.out.find("nan") != std::string::npos);
  CHECK(allowed.out.find(",1\n") != std::string::npos);

  const std::string malformed = work_path("malformed_grid.csv");
  spit(malformed, "t,r,sigma\n0,1,2\n");
  CHECK(run_cli("spherical \"" + malformed + "\"").code == 3);
}

TEST_CASE("selftest: passes deterministically; the negative control fails") {
  const RunResult a = run_cli("selftest --seed 42");
  REQUIRE(a.code == 0);
  CHECK(a.out.find("ALL CRITERIA PASSED") != std::string::npos);
  CHECK(a.out.find("[PASS]") != std::string::npos);
  CHECK(a.out.find("[FAIL]") == std::string::npos);

  const RunResult b = run_cli("selftest --seed 42");
  CHECK(b.code == 0);
  CHECK(a.out == b.out);

  const RunResult bad = run_cli("selftest --seed 42 --corrupt-gamma");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("[FAIL]") != std::string::npos);
}
