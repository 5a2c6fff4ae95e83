#include "mdstress/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace mdstress {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string IdentityReport::to_text() const {
  std::string out;
  out += title;
  out += "\n";
  for (const auto& e : entries) {
    out += e.pass ? "PASS " : "FAIL ";
    out += e.name;
    out += "  max_abs=" + format_double(e.max_abs);
    out += "  scale=" + format_double(e.scale);
    out += "  normalized=" + format_double(e.normalized());
    out += "  tol=" + format_double(e.tol);
    out += "\n";
  }
  out += (all_pass() ? "ALL PASS" : "FAILURES PRESENT");
  out += "  worst_normalized=" + format_double(worst_normalized());
  out += "\n";
  return out;
}

}  // namespace mdstress
