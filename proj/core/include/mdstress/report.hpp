#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace mdstress {

/// One verified identity: worst absolute residual over all trials and
/// components, the input-scale normalizer, and the pass threshold applied
/// to max_abs / scale.
struct IdentityEntry {
  std::string name;
  double max_abs = 0.0;
  double scale = 1.0;
  double tol = 0.0;
  bool pass = false;

  double normalized() const { return scale > 0.0 ? max_abs / scale : max_abs; }
};

struct IdentityReport {
  std::string title;
  std::vector<IdentityEntry> entries;

  void add(std::string name, double max_abs, double scale, double tol) {
    IdentityEntry e;
    e.name = std::move(name);
    e.max_abs = max_abs;
    e.scale = scale;
    e.tol = tol;
    e.pass = e.normalized() <= tol;
    entries.push_back(std::move(e));
  }

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }

  double worst_normalized() const {
    double w = 0.0;
    for (const auto& e : entries) w = std::max(w, e.normalized());
    return w;
  }

  /// Fixed-format text rendering, one line per entry.  Deterministic for
  /// identical inputs (numbers via shortest round-trip formatting).
  std::string to_text() const;
};

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace mdstress
