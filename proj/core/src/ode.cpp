#include "gnyamabe/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include <boost/numeric/odeint.hpp>

namespace gnyamabe {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::array<double, 2>;

double odd_power(double h, double q) { return std::copysign(std::pow(std::abs(h), q), h); }

struct RadialSystem {
  double radial;  // n - 1
  double q;
  void operator()(const State& y, State& dydt, double t) const {
    dydt[0] = y[1];
    dydt[1] = -(radial / t) * y[1] + y[0] - odd_power(y[0], q);
  }
};

// Shrinks [lo, hi] around the first sign change of f on the dense output.
template <class F>
double bisect_event(F&& f, double lo, double hi, double tol) {
  const bool lo_sign = f(lo);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) == lo_sign) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

void push_node(RadialProfile& p, double t, double h, double dh, double d2h) {
  p.ts.push_back(t);
  p.hs.push_back(h);
  p.dhs.push_back(dh);
  p.d2hs.push_back(d2h);
}

}  // namespace

void RadialProfile::validate() const {
  if (ts.size() < 2) throw std::invalid_argument("RadialProfile: need at least two nodes");
  if (hs.size() != ts.size() || dhs.size() != ts.size() ||
      (!d2hs.empty() && d2hs.size() != ts.size())) {
    throw std::invalid_argument("RadialProfile: array lengths differ");
  }
  if (ts.front() != 0.0) throw std::invalid_argument("RadialProfile: first node must be t = 0");
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (!(ts[i] > ts[i - 1])) {
      throw std::invalid_argument("RadialProfile: radii must be strictly increasing");
    }
  }
  if (n < 1) throw std::invalid_argument("RadialProfile: radial dimension must be >= 1");
  if (tail_rate < 0.0) throw std::invalid_argument("RadialProfile: negative tail rate");
}

IntegrationControls IntegrationControls::tightened(double factor) const {
  IntegrationControls c = *this;
  c.rel_tol /= factor;
  c.abs_tol /= factor;
  return c;
}

std::pair<double, double> rhs(double t, double h, double dh, const Dims& d) {
  if (!(t > 0.0)) throw std::invalid_argument("rhs: t must be positive (use series_start at 0)");
  return {dh, -((d.n() - 1.0) / t) * dh + h - odd_power(h, d.q())};
}

std::pair<double, double> series_start(double alpha, double t0, const Dims& d) {
  if (!(alpha > 0.0)) throw std::invalid_argument("series_start: alpha must be positive");
  if (!(t0 > 0.0) || t0 > 1e-3) {
    throw std::invalid_argument("series_start: t0 must lie in (0, 1e-3]");
  }
  const double c = (alpha - std::pow(alpha, d.q())) / (2.0 * d.n());
  return {alpha + c * t0 * t0, 2.0 * c * t0};
}

ShotOutcome integrate_shot(double alpha, const Dims& d, const IntegrationControls& ctrl) {
  return integrate_shot_traced(alpha, d, ctrl).outcome;
}

ShotTrace integrate_shot_traced(double alpha, const Dims& d, const IntegrationControls& ctrl) {
  if (!(alpha > 0.0)) throw std::invalid_argument("integrate_shot: alpha must be positive");

  const double q = d.q();
  RadialProfile traj;
  traj.alpha = alpha;
  traj.n = d.n();
  const double c0 = (alpha - std::pow(alpha, q)) / (2.0 * d.n());
  push_node(traj, 0.0, alpha, 0.0, 2.0 * c0);

  // h''(0) >= 0: the profile never starts to decay, so it cannot be the ground state.
  if (alpha <= 1.0) {
    return {TurnedUp{0.0, alpha}, std::move(traj)};
  }

  const RadialSystem system{d.n() - 1.0, q};
  const auto [h0, dh0] = series_start(alpha, ctrl.t_start, d);
  State y{h0, dh0};
  {
    State f;
    system(y, f, ctrl.t_start);
    push_node(traj, ctrl.t_start, y[0], y[1], f[1]);
  }

  auto stepper = odeint::make_dense_output(ctrl.abs_tol, ctrl.rel_tol,
                                           odeint::runge_kutta_dopri5<State>());
  stepper.initialize(y, ctrl.t_start, 1e-3);

  auto fail = [&](const std::string& what) -> IntegrationError {
    std::ostringstream os;
    os << "integrate_shot(alpha=" << alpha << ", m=" << d.m() << ", n=" << d.n()
       << "): " << what << " at t=" << std::min(stepper.current_time(), ctrl.t_max);
    return IntegrationError(os.str());
  };

  while (true) {
    std::pair<double, double> span;
    try {
      span = stepper.do_step(system);
    } catch (const odeint::step_adjustment_error&) {
      throw fail("step-size adjustment failed");
    }
    const auto [t_lo, t_hi] = span;
    if (t_hi - t_lo < 1e-14 * std::max(1.0, t_hi)) throw fail("step-size underflow");

    const State& cur = stepper.current_state();
    if (!std::isfinite(cur[0]) || !std::isfinite(cur[1])) throw fail("non-finite state");

    auto state_at = [&](double t) {
      State s;
      stepper.calc_state(t, s);
      return s;
    };

    // The last step is clipped to t_max through the dense output.
    const double t_end = std::min(t_hi, ctrl.t_max);
    const State end = t_end < t_hi ? state_at(t_end) : cur;

    // Both events can fall in one step; the earliest one classifies the shot.
    double t_zero = -1.0;
    double t_turn = -1.0;
    if (end[0] <= 0.0) {
      t_zero = bisect_event([&](double t) { return state_at(t)[0] > 0.0; }, t_lo, t_end,
                            ctrl.event_tol);
    }
    if (end[1] >= 0.0) {
      const double t = bisect_event([&](double s) { return state_at(s)[1] < 0.0; }, t_lo, t_end,
                                    ctrl.event_tol);
      const double h = state_at(t)[0];
      if (h > 0.0 && h < 1.0) t_turn = t;
    }
    if (t_zero >= 0.0 && (t_turn < 0.0 || t_zero <= t_turn)) {
      return {CrossedZero{t_zero}, std::move(traj)};
    }
    if (t_turn >= 0.0) {
      return {TurnedUp{t_turn, state_at(t_turn)[0]}, std::move(traj)};
    }

    State f;
    system(end, f, t_end);
    push_node(traj, t_end, end[0], end[1], f[1]);

    if (t_end >= ctrl.t_max) {
      if (end[0] > 0.0 && end[0] < ctrl.decay_threshold && end[1] < 0.0) {
        RadialProfile profile = traj;
        return {Candidate{std::move(profile)}, std::move(traj)};
      }
      throw fail("reached t_max without classification");
    }
  }
}

const char* outcome_name(const ShotOutcome& outcome) noexcept {
  switch (outcome.index()) {
    case 0:
      return "CrossedZero";
    case 1:
      return "TurnedUp";
    default:
      return "Candidate";
  }
}

}  // namespace gnyamabe
