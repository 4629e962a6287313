#pragma once

#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "gnyamabe/dims.hpp"

namespace gnyamabe {

/// Sampled radial function h(t) on ts with derivative samples.
///
/// ts[0] = 0, hs[0] = alpha, dhs[0] = 0 for solver output. d2hs carries
/// second derivatives when they are known (solver nodes recompute them from
/// the ODE); it is either empty or the same length as ts.
///
/// A profile with tail_rate > 0 continues past ts.back() as
///   h(t) = h_c exp(-tail_rate (t - t_c)) (t_c / t)^{(n-1)/2},
/// the linearized far-field of the ground-state equation. tail_rate == 0
/// means the function is zero beyond the last node.
struct RadialProfile {
  std::vector<double> ts;
  std::vector<double> hs;
  std::vector<double> dhs;
  std::vector<double> d2hs;
  double alpha = 0.0;
  int n = 0;
  double tail_rate = 0.0;

  std::size_t size() const noexcept { return ts.size(); }
  /// Throws std::invalid_argument if the shape invariants do not hold.
  void validate() const;
};

struct IntegrationControls {
  double t_max = 50.0;
  double rel_tol = 1e-11;
  double abs_tol = 1e-13;
  double decay_threshold = 1e-6;
  /// Radius of the Taylor start that steps over the t = 0 singularity.
  double t_start = 1e-4;
  /// Event times are bisected on the dense output to this width.
  double event_tol = 1e-10;

  IntegrationControls tightened(double factor) const;
};

/// Numerical failure of the stepper (step-size underflow, non-finite state).
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CrossedZero {
  double t_cross;
};

struct TurnedUp {
  double t_turn;
  double h_at_turn;
};

struct Candidate {
  RadialProfile profile;
};

using ShotOutcome = std::variant<CrossedZero, TurnedUp, Candidate>;

/// Full record of one shot: the outcome plus every accepted step up to the event.
struct ShotTrace {
  ShotOutcome outcome;
  RadialProfile trajectory;
};

/// (h', h'') for h'' + ((n-1)/t) h' - h + |h|^{q-1} h = 0. Requires t > 0.
std::pair<double, double> rhs(double t, double h, double dh, const Dims& d);

/// Second-order Taylor start at t0: h = alpha + c t0^2, h' = 2 c t0 with
/// c = (alpha - alpha^q) / (2n).
std::pair<double, double> series_start(double alpha, double t0, const Dims& d);

ShotOutcome integrate_shot(double alpha, const Dims& d, const IntegrationControls& ctrl = {});

/// As integrate_shot, keeping the trajectory of accepted steps. For
/// alpha <= 1 the trajectory holds only the origin node.
ShotTrace integrate_shot_traced(double alpha, const Dims& d,
                                const IntegrationControls& ctrl = {});

const char* outcome_name(const ShotOutcome& outcome) noexcept;

}  // namespace gnyamabe
