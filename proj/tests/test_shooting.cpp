#include <algorithm>
#include <cmath>
#include <vector>
#include <stdexcept>

#include "doctest.h"
#include "gnyamabe/ode.hpp"
#include "gnyamabe/shooting.hpp"
#include "oracles.hpp"

using namespace gnyamabe;

TEST_CASE("ground state of S2 x R2") {
  const GroundState gs = find_ground_state(Dims(2, 2));
  CHECK(gs.alpha0 == doctest::Approx(2.2062).epsilon(5e-4 / 2.2062));
  CHECK(gs.alpha_lo < gs.alpha0);
  CHECK(gs.alpha0 < gs.alpha_hi);
  CHECK(gs.alpha_hi - gs.alpha_lo <= 1e-12 * 2);
  CHECK(gs.iterations > 10);
}

TEST_CASE("bracket") {
  const auto [lo, hi] = bracket_alpha(Dims(2, 2));
  CHECK(lo == 1.0);
  CHECK(hi == 4.0);
  ShootingOptions opts;
  opts.alpha_ceiling = 1.5;
  CHECK_THROWS_AS(bracket_alpha(Dims(2, 2), opts), IntegrationError);
}

TEST_CASE("ground state matches the sech amplitude") {
  for (int m : {3, 4, 5}) {
    const Dims d(m, 1);
    const testing::SechGroundState exact{d.q()};
    const GroundState gs = find_ground_state(d);
    CHECK(std::abs(gs.alpha0 - exact.amplitude()) < 1e-9);
  }
}

TEST_CASE("ground state profiles") {
  for (int k = 3; k <= 9; ++k) {
    for (int n = 1; n < k; ++n) {
      const Dims d(k - n, n);
      const GroundState gs = find_ground_state(d);
      const RadialProfile& p = gs.profile;
      p.validate();
      CHECK(gs.alpha0 > 1.0);
      CHECK(p.n == n);
      CHECK(p.tail_rate == 1.0);
      CHECK(p.hs.front() == doctest::Approx(gs.alpha0).epsilon(1e-7));
      for (std::size_t i = 1; i < p.size(); ++i) {
        CHECK(p.hs[i] > 0.0);
        CHECK(p.dhs[i] < 0.0);
      }
      // Residual of the equation at interior nodes, relative to the largest
      // term; h'' comes from the Hermite interpolant of stored values and
      // slopes. Node 0 and the series start are excluded from the stencil.
      double worst = 0.0;
      for (std::size_t i = 2; i + 1 < p.size(); ++i) {
        const std::size_t lo = std::max<std::size_t>(1, i - 2);
    const std::size_t hi = std::min(i + 2, p.size() - 1);
    const std::vector<double> t(p.ts.begin() + lo, p.ts.begin() + hi + 1);
    const std::vector<double> h(p.hs.begin() + lo, p.hs.begin() + hi + 1);
    const std::vector<double> dh(p.dhs.begin() + lo, p.dhs.begin() + hi + 1);
    const double d2h = testing::hermite_second_derivative(t, h, dh, i - lo);
        const double res = d2h + (n - 1.0) / p.ts[i] * p.dhs[i] - p.hs[i] +
                           std::pow(p.hs[i], d.q());
        const double size = std::max({1.0, std::abs(d2h), std::abs((n - 1.0) / p.ts[i] * p.dhs[i]),
                                      std::pow(p.hs[i], d.q())});
        worst = std::max(worst, std::abs(res) / size);
      }
      CHECK_MESSAGE(worst < 1e-6, "m=" << d.m() << " n=" << n << " residual " << worst);
    }
  }
}

TEST_CASE("ground state is stable under tighter integration") {
  for (auto [m, n] : {std::pair{2, 2}, {3, 3}, {2, 6}}) {
    const Dims d(m, n);
    ShootingOptions tight;
    tight.controls = tight.controls.tightened(2.0);
    const double a = find_ground_state(d).alpha0;
    const double b = find_ground_state(d, tight).alpha0;
    CHECK(std::abs(a - b) < 1e-8);
  }
}

TEST_CASE("truncation") {
  RadialProfile traj;
  traj.ts = {0.0, 1.0, 2.0, 3.0, 4.0};
  traj.hs = {2.0, 1.0, 0.5, 1e-7, 1e-8};
  traj.dhs = {0.0, -1.0, -0.5, -0.1, -0.01};
  traj.n = 2;
  const RadialProfile cut = truncate_ground_state(traj, 1e-6);
  CHECK(cut.size() == 4);
  CHECK(cut.tail_rate == 1.0);

  traj.dhs = {0.0, -1.0, -0.5, 0.1, 0.2};
  CHECK(truncate_ground_state(traj, 1e-6).size() == 3);
}

TEST_CASE("invalid tolerance") {
  ShootingOptions opts;
  opts.tol_alpha = 1e-16;
  CHECK_THROWS_AS(find_ground_state(Dims(2, 2), opts), std::invalid_argument);
}
