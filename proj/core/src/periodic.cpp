#include "gnyamabe/periodic.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>
#include <boost/numeric/odeint.hpp>

#include "gnyamabe/geomconst.hpp"
#include "gnyamabe/quadrature.hpp"

namespace gnyamabe {

namespace odeint = boost::numeric::odeint;

namespace {

// Keeps the orbit energy ~ -u_min^2 a normal double.
constexpr double kSmallestMin = 1e-150;
constexpr std::size_t kEstimateOrbits = 4;

void check_dimension(int n) {
  if (n < 3) {
    throw std::invalid_argument("circle equation needs total dimension n >= 3, got " +
                                std::to_string(n));
  }
}

double coupling(int n) { return (n - 2.0) * (n - 2.0) / 8.0; }
double exponent(int n) { return 2.0 * n / (n - 2.0); }

// V(a) - V(a + delta) without cancelling the leading terms by hand.
double energy_gap(int n, double a, double delta) {
  const double p = exponent(n);
  const double u = a + delta;
  // expm1 only pays off when u and a are close; far apart it can hit 0 * inf.
  const double power_gap = std::abs(delta) < 0.5 * a
                               ? std::pow(a, p) * std::expm1(p * std::log1p(delta / a))
                               : std::pow(u, p) - std::pow(a, p);
  return coupling(n) * (delta * (2.0 * a + delta) - power_gap);
}

struct OrbitIntegrals {
  double period;
  double grad;  // int u'^2 dt over one period
  double l2;    // int u^2 dt
  double lp;    // int u^p dt
};

// One-period integrals between the turning points. The lower leg uses
// u = u_min cosh(s), the upper leg u = u_max - w sigma^2; both remove the
// inverse square-root endpoint singularity, and the cosh map also absorbs the
// logarithmic growth of the period near the separatrix.
OrbitIntegrals orbit_integrals(int n, double u_min, double u_max) {
  const double p = exponent(n);
  const double u_c = constant_solution(n);
  const double span = std::acosh(u_c / u_min);
  const double width = u_max - u_c;
  const auto& rule = gauss_legendre_16();

  auto accumulate = [&](int lower_panels, int upper_panels) {
    std::array<double, 4> acc{0.0, 0.0, 0.0, 0.0};
    auto add = [&](double u, double du, double gap) {
      const double speed = std::sqrt(2.0 * gap);
      acc[0] += du / speed;
      acc[1] += du * speed;
      acc[2] += du * u * u / speed;
      acc[3] += du * std::pow(u, p) / speed;
    };
    for (int j = 0; j < lower_panels; ++j) {
      const double a = span * j / lower_panels;
      const double b = span * (j + 1) / lower_panels;
      const double half = 0.5 * (b - a);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double s = 0.5 * (a + b) + half * rule.nodes[i];
        const double sh = std::sinh(0.5 * s);
        const double u = u_min * std::cosh(s);
        add(u, half * rule.weights[i] * u_min * std::sinh(s),
            energy_gap(n, u_min, 2.0 * u_min * sh * sh));
      }
    }
    for (int j = 0; j < upper_panels; ++j) {
      const double a = static_cast<double>(j) / upper_panels;
      const double b = static_cast<double>(j + 1) / upper_panels;
      const double half = 0.5 * (b - a);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double sigma = 0.5 * (a + b) + half * rule.nodes[i];
        const double drop = width * sigma * sigma;
        add(u_max - drop, half * rule.weights[i] * 2.0 * width * sigma,
            energy_gap(n, u_max, -drop));
      }
    }
    // Each leg is traversed twice per period.
    return OrbitIntegrals{2.0 * acc[0], 2.0 * acc[1], 2.0 * acc[2], 2.0 * acc[3]};
  };

  int lower = std::max(4, static_cast<int>(std::ceil(span / 8.0)));
  int upper = 4;
  OrbitIntegrals prev = accumulate(lower, upper);
  for (int level = 0; level < 10; ++level) {
    lower *= 2;
    upper *= 2;
    const OrbitIntegrals next = accumulate(lower, upper);
    const auto close = [](double x, double y) { return std::abs(x - y) <= 1e-13 * std::abs(y); };
    if (close(prev.period, next.period) && close(prev.grad, next.grad) &&
        close(prev.l2, next.l2) && close(prev.lp, next.lp)) {
      return next;
    }
    prev = next;
  }
  return prev;
}

// Root of V(u) = energy on (lo, hi) where V - energy changes sign, bisected
// in log u (lower branch) or u (upper branch).
double turning_point(int n, double energy, double lo, double hi, bool logarithmic) {
  auto f = [&](double u) { return circle_potential(n, u) - energy; };
  const bool lo_positive = f(lo) > 0.0;
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = logarithmic ? std::sqrt(lo) * std::sqrt(hi) : 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if ((f(mid) > 0.0) == lo_positive) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double constant_solution(int n) {
  check_dimension(n);
  return std::pow((n - 2.0) / n, (n - 2.0) / 4.0);
}

double circle_potential(int n, double u) {
  check_dimension(n);
  return coupling(n) * (std::pow(std::abs(u), exponent(n)) - u * u);
}

double circle_energy(int n, double u, double du) { return 0.5 * du * du + circle_potential(n, u); }

double circle_acceleration(int n, double u) {
  check_dimension(n);
  const double q = (n + 2.0) / (n - 2.0);
  return 0.25 * (n - 2.0) * (n - 2.0) * u -
         0.25 * n * (n - 2.0) * std::copysign(std::pow(std::abs(u), q), u);
}

double harmonic_period(int n) {
  const double u_c = constant_solution(n);
  const double p = exponent(n);
  const double curvature = coupling(n) * (p * (p - 1.0) * std::pow(u_c, p - 2.0) - 2.0);
  return 2.0 * std::numbers::pi / std::sqrt(curvature);
}

CircleOrbit orbit_through_max(int n, double u_max) {
  const double u_c = constant_solution(n);
  if (!(u_max > u_c && u_max < 1.0)) {
    throw std::invalid_argument("orbit_through_max: u_max must lie in (u_c, 1) = (" +
                                std::to_string(u_c) + ", 1)");
  }
  const double energy = circle_potential(n, u_max);
  const double u_min = turning_point(n, energy, kSmallestMin, u_c, true);
  return {n, u_min, u_max, orbit_integrals(n, u_min, u_max).period, energy};
}

CircleOrbit orbit_through_min(int n, double u_min) {
  const double u_c = constant_solution(n);
  if (!(u_min > 0.0 && u_min < u_c)) {
    throw std::invalid_argument("orbit_through_min: u_min must lie in (0, u_c)");
  }
  const double energy = circle_potential(n, u_min);
  const double u_max = turning_point(n, energy, u_c, 1.0, false);
  return {n, u_min, u_max, orbit_integrals(n, u_min, u_max).period, energy};
}

double orbit_period(int n, double u_max) { return orbit_through_max(n, u_max).period; }

std::int64_t count_periodic_solutions(int n, double r) {
  check_dimension(n);
  if (!(r > 0.0)) throw std::invalid_argument("count_periodic_solutions: r must be positive");
  // The period sweeps (T_min, infinity) monotonically, so 2 pi r / k is the
  // period of exactly one orbit whenever it exceeds T_min.
  const double ratio = 2.0 * std::numbers::pi * r / harmonic_period(n);
  if (ratio > 9e18) throw std::invalid_argument("count_periodic_solutions: r too large");
  return std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(ratio)) - 1);
}

PeriodicSolutions periodic_solutions(int n, double r, std::size_t max_orbits) {
  PeriodicSolutions out{{}, count_periodic_solutions(n, r), 0};
  const double u_c = constant_solution(n);
  const double longest = orbit_through_min(n, kSmallestMin).period;
  const std::int64_t listed = std::min<std::int64_t>(out.total, static_cast<std::int64_t>(max_orbits));

  for (std::int64_t k = 1; k <= listed; ++k) {
    const double target = 2.0 * std::numbers::pi * r / static_cast<double>(k);
    if (target > longest) {
      ++out.unresolved;
      continue;
    }
    // Period decreases in u_min; solve in log u_min.
    auto residual = [&](double log_min) {
      return orbit_through_min(n, std::exp(log_min)).period - target;
    };
    const double log_lo = std::log(kSmallestMin);
    const double log_hi = std::log(u_c) - 1e-6;
    if (residual(log_hi) >= 0.0) {
      // Indistinguishable from the harmonic limit at this resolution.
      out.solutions.push_back({static_cast<int>(k), orbit_through_min(n, std::exp(log_hi))});
      continue;
    }
    boost::uintmax_t max_iter = 200;
    const auto [lo, hi] = boost::math::tools::toms748_solve(
        residual, log_lo, log_hi, boost::math::tools::eps_tolerance<double>(48), max_iter);
    out.solutions.push_back({static_cast<int>(k), orbit_through_min(n, std::exp(0.5 * (lo + hi)))});
  }
  return out;
}

OrbitTrace integrate_orbit(int n, double u_max, double duration, const OrbitControls& ctrl) {
  check_dimension(n);
  if (!(duration > 0.0)) throw std::invalid_argument("integrate_orbit: duration must be > 0");
  using State = std::array<double, 2>;
  auto system = [n](const State& y, State& dydt, double) {
    dydt[0] = y[1];
    dydt[1] = circle_acceleration(n, y[0]);
  };

  OrbitTrace trace;
  trace.return_time = std::numeric_limits<double>::quiet_NaN();
  trace.max_energy_drift = 0.0;
  const double h0 = circle_energy(n, u_max, 0.0);

  auto stepper =
      odeint::make_dense_output(ctrl.abs_tol, ctrl.rel_tol, odeint::runge_kutta_dopri5<State>());
  stepper.initialize(State{u_max, 0.0}, 0.0, 1e-3);
  trace.ts.push_back(0.0);
  trace.us.push_back(u_max);
  trace.dus.push_back(0.0);

  State s;
  while (stepper.current_time() < duration) {
    const auto [t_lo, t_hi] = stepper.do_step(system);
    const State& cur = stepper.current_state();
    const double drift = std::abs(circle_energy(n, cur[0], cur[1]) - h0) / std::abs(h0);
    trace.max_energy_drift = std::max(trace.max_energy_drift, drift);

    if (std::isnan(trace.return_time) && t_lo > 0.0) {
      stepper.calc_state(t_lo, s);
      if (s[1] > 0.0 && cur[1] <= 0.0) {
        double lo = t_lo;
        double hi = t_hi;
        while (hi - lo > 1e-13 * hi) {
          const double mid = 0.5 * (lo + hi);
          if (mid <= lo || mid >= hi) break;
          stepper.calc_state(mid, s);
          (s[1] > 0.0 ? lo : hi) = mid;
        }
        trace.return_time = 0.5 * (lo + hi);
      }
    }
    if (t_hi <= duration) {
      trace.ts.push_back(t_hi);
      trace.us.push_back(cur[0]);
      trace.dus.push_back(cur[1]);
    }
  }
  stepper.calc_state(duration, s);
  trace.u_end = s[0];
  trace.du_end = s[1];
  if (trace.ts.back() < duration) {
    trace.ts.push_back(duration);
    trace.us.push_back(s[0]);
    trace.dus.push_back(s[1]);
  }
  return trace;
}

double s1_quotient(int n, const CircleOrbit& orbit, int k) {
  check_dimension(n);
  if (k < 1) throw std::invalid_argument("s1_quotient: k must be >= 1");
  const OrbitIntegrals in = orbit_integrals(n, orbit.u_min, orbit.u_max);
  const double volume = sphere_volume(n - 1);
  const double scalar = (n - 1.0) * (n - 2.0);
  const double a = 4.0 * (n - 1.0) / (n - 2.0);
  const double p = exponent(n);
  return volume * k * (a * in.grad + scalar * in.l2) / std::pow(volume * k * in.lp, 2.0 / p);
}

double constant_s1_quotient(int n, double r) {
  check_dimension(n);
  if (!(r > 0.0)) throw std::invalid_argument("constant_s1_quotient: r must be positive");
  const double volume = sphere_volume(n - 1) * 2.0 * std::numbers::pi * r;
  return (n - 1.0) * (n - 2.0) * std::pow(volume, 1.0 - 2.0 / exponent(n));
}

S1YamabeEstimate s1_yamabe_estimate(int n, double r) {
  S1YamabeEstimate best{constant_s1_quotient(n, r), 0, false};
  const PeriodicSolutions sols = periodic_solutions(n, r, kEstimateOrbits);
  for (const auto& sol : sols.solutions) {
    const double q = s1_quotient(n, sol.orbit, sol.k);
    if (q < best.value) best = {q, sol.k, false};
  }
  if (sols.unresolved > 0) {
    // The missing long orbits sit closer to the separatrix than any double can
    // resolve; the longest representable orbit stands in for them.
    const double q = s1_quotient(n, orbit_through_min(n, kSmallestMin), 1);
    if (q < best.value) best = {q, 1, true};
  }
  return best;
}

}  // namespace gnyamabe
