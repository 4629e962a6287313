#include "gnyamabe/shooting.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace gnyamabe {

namespace {

bool is_crossed(const ShotOutcome& o) { return std::holds_alternative<CrossedZero>(o); }

}  // namespace

std::pair<double, double> bracket_alpha(const Dims& d, const ShootingOptions& opts) {
  double hi = 2.0;
  while (hi <= opts.alpha_ceiling) {
    const ShotOutcome o = integrate_shot(hi, d, opts.controls);
    if (is_crossed(o)) return {1.0, hi};
    hi *= 2.0;
  }
  std::ostringstream os;
  os << "bracket_alpha(m=" << d.m() << ", n=" << d.n() << "): no zero crossing up to alpha = "
     << opts.alpha_ceiling << "; check the integration controls";
  throw IntegrationError(os.str());
}

RadialProfile truncate_ground_state(const RadialProfile& trajectory, double decay_threshold) {
  const std::size_t size = trajectory.size();
  std::size_t cut = size - 1;
  for (std::size_t i = 1; i < size; ++i) {
    if (trajectory.dhs[i] >= 0.0) {
      cut = i - 1;
      break;
    }
    if (trajectory.hs[i] < decay_threshold) {
      cut = i;
      break;
    }
  }
  if (cut < 1) throw IntegrationError("truncate_ground_state: profile has no decaying segment");

  RadialProfile out;
  out.alpha = trajectory.alpha;
  out.n = trajectory.n;
  out.tail_rate = 1.0;
  out.ts.assign(trajectory.ts.begin(), trajectory.ts.begin() + cut + 1);
  out.hs.assign(trajectory.hs.begin(), trajectory.hs.begin() + cut + 1);
  out.dhs.assign(trajectory.dhs.begin(), trajectory.dhs.begin() + cut + 1);
  if (!trajectory.d2hs.empty()) {
    out.d2hs.assign(trajectory.d2hs.begin(), trajectory.d2hs.begin() + cut + 1);
  }
  return out;
}

GroundState find_ground_state(const Dims& d, const ShootingOptions& opts) {
  if (!(opts.tol_alpha >= 1e-14)) {
    throw std::invalid_argument("find_ground_state: tol_alpha must be >= 1e-14");
  }
  auto [lo, hi] = bracket_alpha(d, opts);
  int iterations = 0;

  while (hi - lo > opts.tol_alpha) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ShotTrace shot = integrate_shot_traced(mid, d, opts.controls);
    ++iterations;
    if (auto* c = std::get_if<Candidate>(&shot.outcome)) {
      GroundState gs{d, mid, lo, hi, iterations,
                     truncate_ground_state(c->profile, opts.controls.decay_threshold)};
      return gs;
    }
    if (is_crossed(shot.outcome)) {
      hi = mid;
    } else {
      lo = mid;
    }
    assert(lo < hi);
  }

  const double alpha0 = 0.5 * (lo + hi);
  ShotTrace shot = integrate_shot_traced(alpha0, d, opts.controls);
  RadialProfile profile = std::holds_alternative<Candidate>(shot.outcome)
                              ? std::get<Candidate>(shot.outcome).profile
                              : std::move(shot.trajectory);
  return GroundState{d, alpha0, lo, hi, iterations,
                     truncate_ground_state(profile, opts.controls.decay_threshold)};
}

}  // namespace gnyamabe
