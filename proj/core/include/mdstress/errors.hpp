#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdstress {

/// sigma^2 - omega^2 is too close to zero for an identity that divides by it.
struct DegenerateInvariant : std::runtime_error {
  double value;
  double threshold;
  DegenerateInvariant(double v, double thr)
      : std::runtime_error("degenerate invariant sigma^2 - omega^2 = " + std::to_string(v) +
                           " (threshold " + std::to_string(thr) + ")"),
        value(v),
        threshold(thr) {}
};

/// A coupling-dependent formula was evaluated with q = 0.
struct ZeroCharge : std::runtime_error {
  ZeroCharge() : std::runtime_error("charge q must be nonzero") {}
};

/// A spatial point was supplied whose |x| disagrees with the jet's radius.
struct RadiusMismatch : std::runtime_error {
  RadiusMismatch(double expected, double got)
      : std::runtime_error("point radius " + std::to_string(got) +
                           " does not match jet radius " + std::to_string(expected)) {}
};

/// A field-strength tensor failed its antisymmetry requirement.
struct AsymmetryError : std::runtime_error {
  explicit AsymmetryError(double residual)
      : std::runtime_error("field strength not antisymmetric, residual " +
                           std::to_string(residual)) {}
};

/// A lattice does not have enough nodes for second-order finite differences.
struct GridTooSmall : std::runtime_error {
  GridTooSmall(std::size_t nt, std::size_t nr)
      : std::runtime_error("grid needs at least 3 points per axis, got " +
                           std::to_string(nt) + " x " + std::to_string(nr)) {}
};

/// Malformed input document (JSON jet or CSV lattice).
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mdstress
