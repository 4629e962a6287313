#pragma once

#include <cstdint>
#include <vector>

namespace gnyamabe {

// Functions of the circle factor on the universal cover S^{n-1} x R of
// S^{n-1} x S^1_r, solving
//   u'' - ((n-2)^2/4) u + (n(n-2)/4) u^{(n+2)/(n-2)} = 0,
// a conservative system with H = u'^2/2 + V(u),
//   V(u) = ((n-2)^2/8) (u^{2n/(n-2)} - u^2).
// Closed orbits around the constant solution u_c fill the window
// u_c < u_max < 1; at u_max = 1 the orbit hits the separatrix H = 0.

/// A closed orbit through the turning points (u_min, 0) and (u_max, 0).
struct CircleOrbit {
  int n;
  double u_min;
  double u_max;
  double period;
  double energy;
};

/// u_c = ((n-2)/n)^{(n-2)/4}. Requires n >= 3.
double constant_solution(int n);

double circle_potential(int n, double u);
double circle_energy(int n, double u, double du);

/// Right-hand side u'' of the circle equation.
double circle_acceleration(int n, double u);

/// 2 pi / sqrt(V''(u_c)), the infimum of the period over the window.
double harmonic_period(int n);

/// Orbit through (u_max, 0); throws std::invalid_argument outside (u_c, 1).
CircleOrbit orbit_through_max(int n, double u_max);

/// Orbit through (u_min, 0); throws std::invalid_argument outside (0, u_c).
/// Long-period orbits near the separatrix are only representable this way.
CircleOrbit orbit_through_min(int n, double u_min);

/// Period of the orbit through (u_max, 0) by turning-point quadrature.
double orbit_period(int n, double u_max);

/// Number of nonconstant positive solutions with minimal period 2 pi r / k
/// for some integer k >= 1, counted up to time translation.
std::int64_t count_periodic_solutions(int n, double r);

struct PeriodicSolution {
  int k;  ///< the solution repeats k times around the circle
  CircleOrbit orbit;
};

/// The solutions counted by count_periodic_solutions, for k = 1, 2, ... up to
/// max_orbits. Orbits whose minimum would underflow a double are skipped;
/// `unresolved` reports how many.
struct PeriodicSolutions {
  std::vector<PeriodicSolution> solutions;
  std::int64_t total;
  std::int64_t unresolved;
};

PeriodicSolutions periodic_solutions(int n, double r, std::size_t max_orbits = 64);

struct OrbitControls {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
};

/// Time integration of the orbit starting at (u_max, 0) over [0, duration].
struct OrbitTrace {
  std::vector<double> ts;
  std::vector<double> us;
  std::vector<double> dus;
  double return_time;        ///< first return to u' = 0 from above; NaN if none
  double max_energy_drift;   ///< max |H - H_0| / |H_0| over accepted steps
  double u_end;              ///< state at exactly t = duration
  double du_end;
};

OrbitTrace integrate_orbit(int n, double u_max, double duration, const OrbitControls& ctrl = {});

/// Yamabe quotient on M^{n-1} x S^1_r with Vol(M) = V_{n-1} and scalar
/// curvature (n-1)(n-2), for the orbit repeated k times (2 pi r = k T).
double s1_quotient(int n, const CircleOrbit& orbit, int k);

/// Same quotient for the constant solution on a circle of radius r.
double constant_s1_quotient(int n, double r);

struct S1YamabeEstimate {
  double value;  ///< least quotient among the constant and periodic solutions
  int best_k;    ///< 0 when the constant solution wins
  bool saturated;  ///< the k = 1 orbit lies beyond double resolution
};

/// Smallest Yamabe quotient among the constant solution and the periodic
/// solutions with k <= 4 (higher multiples only raise the quotient).
S1YamabeEstimate s1_yamabe_estimate(int n, double r);

}  // namespace gnyamabe
