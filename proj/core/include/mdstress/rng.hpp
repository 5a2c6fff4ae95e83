#pragma once

#include <cstdint>
#include <random>

#include "mdstress/bilinear.hpp"
#include "mdstress/linalg.hpp"
#include "mdstress/spherical.hpp"
#include "mdstress/stress.hpp"

namespace mdstress {

/// Deterministic random source.  Normal deviates come from a hand-rolled
/// Box-Muller transform on top of mt19937_64 so that identical seeds produce
/// identical streams on every platform (std::normal_distribution is
/// implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi).
  double uniform(double lo = 0.0, double hi = 1.0);

  /// Standard normal deviate.
  double normal();

  /// Complex with independent standard normal parts.
  Complex cnormal();

  Spinor spinor();
  SpinorJet spinor_jet();

  Vec4d vec4(double scale = 1.0);
  Rank2d rank2(double scale = 1.0);

  /// Spinor redrawn until the bilinear invariants are comfortably generic:
  /// sigma^2 + |omega|^2 away from zero relative to |psi|^2 and both sigma
  /// and Im omega individually bounded away from zero.  Keeps randomized
  /// suites out of measure-zero degeneracies without touching library
  /// thresholds.
  Spinor generic_spinor();
  SpinorJet generic_jet();

  EMField em_field(double charge, double mass);

  /// Generic reduced-problem point: invariant bounded below, radius in
  /// [0.5, 3].
  SphericalJet spherical_jet();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace mdstress
