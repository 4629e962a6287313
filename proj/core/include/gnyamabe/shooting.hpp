#pragma once

#include <utility>

#include "gnyamabe/dims.hpp"
#include "gnyamabe/ode.hpp"

namespace gnyamabe {

/// Located ground state of Delta u - u + u^q = 0 on R^n (radial).
struct GroundState {
  Dims d;
  double alpha0;
  double alpha_lo;  ///< last initial value that turned up
  double alpha_hi;  ///< last initial value that crossed zero
  int iterations;
  /// Profile integrated at alpha0, cut before the near-critical shot diverges
  /// and continued by the exponential far-field tail.
  RadialProfile profile;
};

struct ShootingOptions {
  double tol_alpha = 1e-12;
  IntegrationControls controls{};
  /// Largest alpha tried while doubling for an upper bracket.
  double alpha_ceiling = 1048576.0;  // 2^20
};

/// [alpha_lo, alpha_hi] with alpha_lo = 1 (turns up) and alpha_hi found by
/// doubling from 2 until the shot crosses zero.
std::pair<double, double> bracket_alpha(const Dims& d, const ShootingOptions& opts = {});

/// Bisects the initial value until the TurnedUp/CrossedZero bracket is
/// narrower than opts.tol_alpha. Throws std::invalid_argument when
/// tol_alpha < 1e-14 and IntegrationError on solver failure.
GroundState find_ground_state(const Dims& d, const ShootingOptions& opts = {});

/// Keeps nodes up to the first one that decays below the threshold (or the
/// last one before h' turns non-negative) and attaches the unit-rate tail.
RadialProfile truncate_ground_state(const RadialProfile& trajectory, double decay_threshold);

}  // namespace gnyamabe
