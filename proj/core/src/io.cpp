#include "mdstress/io.hpp"

#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "mdstress/errors.hpp"

namespace mdstress {

namespace {

using ordered_json = nlohmann::ordered_json;

double require_number(const nlohmann::json& j, const char* where) {
  if (!j.is_number()) throw SchemaError(std::string(where) + " must be a number");
  return j.get<double>();
}

Complex parse_complex(const nlohmann::json& j, const char* where) {
  if (!j.is_array() || j.size() != 2)
    throw SchemaError(std::string(where) + " must be a [re, im] pair");
  return Complex(require_number(j[0], where), require_number(j[1], where));
}

Vec4c parse_spinor(const nlohmann::json& j, const char* where) {
  if (!j.is_array() || j.size() != 4)
    throw SchemaError(std::string(where) + " must hold 4 complex components");
  Vec4c out{};
  for (std::size_t a = 0; a < 4; ++a) out[a] = parse_complex(j[a], where);
  return out;
}

StressInput parse_one(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("input entry must be an object");
  if (!j.contains("psi")) throw SchemaError("input entry is missing \"psi\"");
  if (!j.contains("dpsi")) throw SchemaError("input entry is missing \"dpsi\"");

  StressInput in;
  in.jet.value.c = parse_spinor(j.at("psi"), "\"psi\"");
  const auto& dpsi = j.at("dpsi");
  if (!dpsi.is_array() || dpsi.size() != 4)
    throw SchemaError("\"dpsi\" must hold 4 spinors");
  for (std::size_t mu = 0; mu < 4; ++mu)
    in.jet.d[mu].c = parse_spinor(dpsi[mu], "\"dpsi\"");

  const double mass = j.contains("mass") ? require_number(j.at("mass"), "\"mass\"") : 1.0;
  const double charge =
      j.contains("charge") ? require_number(j.at("charge"), "\"charge\"") : 1.0;

  Vec4d A{};
  Rank2d dA{};
  const bool has_A = j.contains("A");
  const bool has_dA = j.contains("dA");
  if (has_A) {
    const auto& ja = j.at("A");
    if (!ja.is_array() || ja.size() != 4)
      throw SchemaError("\"A\" must hold 4 real components");
    for (std::size_t mu = 0; mu < 4; ++mu) A[mu] = require_number(ja[mu], "\"A\"");
  }
  if (has_dA) {
    const auto& jda = j.at("dA");
    if (!jda.is_array() || jda.size() != 16)
      throw SchemaError("\"dA\" must hold 16 real values, row-major");
    for (std::size_t mu = 0; mu < 4; ++mu)
      for (std::size_t nu = 0; nu < 4; ++nu)
        dA[mu][nu] = require_number(jda[4 * mu + nu], "\"dA\"");
  }
  in.has_em = has_A || has_dA;
  in.em = EMField::from_potential(A, dA, charge, mass);
  return in;
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

ordered_json entry_json(const IdentityEntry& e) {
  ordered_json out;
  out["name"] = e.name;
  out["max_abs"] = e.max_abs;
  out["scale"] = e.scale;
  out["normalized"] = e.normalized();
  out["tol"] = e.tol;
  out["pass"] = e.pass;
  return out;
}

ordered_json report_json_object(const IdentityReport& report) {
  ordered_json out;
  out["title"] = report.title;
  out["pass"] = report.all_pass();
  out["worst_normalized"] = report.worst_normalized();
  ordered_json entries = ordered_json::array();
  for (const auto& e : report.entries) entries.push_back(entry_json(e));
  out["entries"] = std::move(entries);
  return out;
}

/// Serialize with shortest-round-trip doubles so identical results produce
/// byte-identical files.
std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  return format_double(v);
}

}  // namespace

std::vector<StressInput> parse_stress_inputs(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& err) {
    throw SchemaError(std::string("invalid JSON: ") + err.what());
  }
  std::vector<StressInput> out;
  if (doc.is_object()) {
    out.push_back(parse_one(doc));
  } else if (doc.is_array()) {
    if (doc.empty()) throw SchemaError("input array is empty");
    for (const auto& item : doc) out.push_back(parse_one(item));
  } else {
    throw SchemaError("top-level JSON must be an object or an array of objects");
  }
  return out;
}

std::string stress_records_json(const std::vector<StressRecord>& records,
                                double tol) {
  ordered_json out;
  out["tol"] = tol;
  std::size_t passes = 0, degenerate = 0;
  ordered_json rows = ordered_json::array();
  for (const auto& rec : records) {
    ordered_json row;
    row["pass"] = rec.pass;
    row["degenerate"] = rec.degenerate;
    row["max_abs_diff"] = rec.max_abs_diff;
    row["scale"] = rec.scale;
    row["normalized"] = rec.max_abs_diff / rec.scale;
    row["bilinear_route"] = tensor_json(rec.bilinear_route);
    row["spinor_route"] = tensor_json(rec.spinor_route);
    rows.push_back(std::move(row));
    if (rec.pass) ++passes;
    if (rec.degenerate) ++degenerate;
  }
  out["count"] = records.size();
  out["passes"] = passes;
  out["degenerate"] = degenerate;
  out["records"] = std::move(rows);
  return dump(out);
}

std::string stress_records_csv(const std::vector<StressRecord>& records) {
  std::string out = "index,max_abs_diff,scale,normalized,pass,degenerate\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    out += std::to_string(i);
    out += ',';
    out += csv_number(rec.max_abs_diff);
    out += ',';
    out += csv_number(rec.scale);
    out += ',';
    out += csv_number(rec.max_abs_diff / rec.scale);
    out += ',';
    out += rec.pass ? '1' : '0';
    out += ',';
    out += rec.degenerate ? '1' : '0';
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_csv_number(const std::string& text, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    while (used < text.size() &&
           (text[used] == ' ' || text[used] == '\t'))
      ++used;
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw SchemaError("line " + std::to_string(line_no) +
                      ": cannot parse number from \"" + text + "\"");
  }
}

}  // namespace

GridTable read_grid_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  // Header.
  if (!std::getline(in, line)) throw SchemaError("empty grid CSV");
  ++line_no;
  {
    const auto fields = split_csv_line(line);
    const std::vector<std::string> expect = {"t",        "r",   "sigma",
                                             "omega_im", "j_a", "j_b"};
    if (fields.size() != expect.size())
      throw SchemaError("grid CSV header must be t,r,sigma,omega_im,j_a,j_b");
    for (std::size_t i = 0; i < expect.size(); ++i)
      if (fields[i] != expect[i])
        throw SchemaError("grid CSV header must be t,r,sigma,omega_im,j_a,j_b");
  }

  struct Node {
    double sigma, w, j_a, j_b;
  };
  std::map<std::pair<double, double>, Node> nodes;
  std::set<double> ts, rs;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 6)
      throw SchemaError("line " + std::to_string(line_no) +
                        ": expected 6 comma-separated values");
    const double t = parse_csv_number(fields[0], line_no);
    const double r = parse_csv_number(fields[1], line_no);
    Node node{parse_csv_number(fields[2], line_no),
              parse_csv_number(fields[3], line_no),
              parse_csv_number(fields[4], line_no),
              parse_csv_number(fields[5], line_no)};
    const auto key = std::make_pair(t, r);
    if (!nodes.emplace(key, node).second)
      throw SchemaError("line " + std::to_string(line_no) +
                        ": duplicate grid node");
    ts.insert(t);
    rs.insert(r);
  }
  if (nodes.empty()) throw SchemaError("grid CSV holds no data rows");
  if (nodes.size() != ts.size() * rs.size())
    throw SchemaError("grid CSV nodes do not form a complete rectangular grid");

  GridTable grid;
  grid.t.assign(ts.begin(), ts.end());
  grid.r.assign(rs.begin(), rs.end());
  const std::size_t nr = grid.r.size();
  const std::size_t total = grid.t.size() * nr;
  grid.sigma.resize(total);
  grid.w.resize(total);
  grid.j_a.resize(total);
  grid.j_b.resize(total);
  for (std::size_t it = 0; it < grid.t.size(); ++it)
    for (std::size_t ir = 0; ir < nr; ++ir) {
      const auto found = nodes.find(std::make_pair(grid.t[it], grid.r[ir]));
      if (found == nodes.end())
        throw SchemaError("grid CSV nodes do not form a complete rectangular grid");
      const std::size_t idx = it * nr + ir;
      grid.sigma[idx] = found->second.sigma;
      grid.w[idx] = found->second.w;
      grid.j_a[idx] = found->second.j_a;
      grid.j_b[idx] = found->second.j_b;
    }
  return grid;
}

GridTable read_grid_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open grid CSV file: " + path);
  return read_grid_csv(in);
}

std::string grid_results_csv(const std::vector<GridNodeResult>& results) {
  std::string out = "t,r,B_a,B_b,F_a,F_b,T_a,T_b,T_c,scriptF,T00,degenerate\n";
  for (const auto& node : results) {
    const auto& r = node.res;
    const double t00 = node.degenerate
                           ? std::numeric_limits<double>::quiet_NaN()
                           : r.T_a + r.scriptF;
    out += csv_number(node.t);
    out += ',';
    out += csv_number(node.r);
    for (double v : {r.B_a, r.B_b, r.F_a, r.F_b, r.T_a, r.T_b, r.T_c, r.scriptF,
                     t00}) {
      out += ',';
      out += csv_number(v);
    }
    out += ',';
    out += node.degenerate ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string grid_results_json(const std::vector<GridNodeResult>& results) {
  ordered_json rows = ordered_json::array();
  std::size_t degenerate = 0;
  for (const auto& node : results) {
    ordered_json row;
    row["t"] = node.t;
    row["r"] = node.r;
    row["degenerate"] = node.degenerate;
    if (node.degenerate) {
      row["result"] = nullptr;
    } else {
      const auto& r = node.res;
      ordered_json res;
      res["B_a"] = r.B_a;
      res["B_b"] = r.B_b;
      res["F_a"] = r.F_a;
      res["F_b"] = r.F_b;
      res["T_a"] = r.T_a;
      res["T_b"] = r.T_b;
      res["T_c"] = r.T_c;
      res["scriptF"] = r.scriptF;
      res["T00"] = r.T_a + r.scriptF;
      row["result"] = std::move(res);
    }
    rows.push_back(std::move(row));
    if (node.degenerate) ++degenerate;
  }
  ordered_json out;
  out["count"] = results.size();
  out["degenerate"] = degenerate;
  out["nodes"] = std::move(rows);
  return dump(out);
}

std::string report_json(const IdentityReport& report) {
  return dump(report_json_object(report));
}

std::string reports_json(const std::vector<IdentityReport>& reports) {
  ordered_json out = ordered_json::array();
  for (const auto& r : reports) out.push_back(report_json_object(r));
  bool all = true;
  for (const auto& r : reports) all = all && r.all_pass();
  ordered_json top;
  top["pass"] = all;
  top["reports"] = std::move(out);
  return dump(top);
}

}  // namespace mdstress
