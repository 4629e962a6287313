#include <algorithm>
#include <cmath>
#include <vector>
#include <stdexcept>
#include <variant>

#include "doctest.h"
#include "gnyamabe/ode.hpp"
#include "gnyamabe/shooting.hpp"
#include "oracles.hpp"

using namespace gnyamabe;

namespace {

int rank(const ShotOutcome& o) {
  if (std::holds_alternative<TurnedUp>(o)) return 0;
  if (std::holds_alternative<Candidate>(o)) return 1;
  return 2;
}

double event_time(const ShotOutcome& o) {
  if (auto* c = std::get_if<CrossedZero>(&o)) return c->t_cross;
  if (auto* u = std::get_if<TurnedUp>(&o)) return u->t_turn;
  return NAN;
}

}  // namespace

TEST_CASE("right-hand side") {
  const auto [dh, d2h] = rhs(1.0, 2.0, 0.0, Dims(2, 2));
  CHECK(dh == 0.0);
  CHECK(d2h == doctest::Approx(-6.0).epsilon(1e-15));
  const auto [dh2, d2h2] = rhs(2.0, 0.5, -0.25, Dims(2, 2));
  CHECK(dh2 == -0.25);
  CHECK(d2h2 == doctest::Approx(0.125 + 0.5 - 0.125).epsilon(1e-15));
  CHECK_THROWS_AS(rhs(0.0, 1.0, 0.0, Dims(2, 2)), std::invalid_argument);
}

TEST_CASE("series start") {
  const double t0 = 1e-4;
  const auto [h, dh] = series_start(2.0, t0, Dims(2, 2));
  const double c = (2.0 - 8.0) / 4.0;
  CHECK(c == -1.5);
  CHECK(h == doctest::Approx(2.0 + c * t0 * t0).epsilon(1e-15));
  CHECK(dh == doctest::Approx(2 * c * t0).epsilon(1e-14));
  CHECK_THROWS_AS(series_start(2.0, 0.0, Dims(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(series_start(2.0, 1e-2, Dims(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(series_start(-1.0, 1e-4, Dims(2, 2)), std::invalid_argument);
}

TEST_CASE("classification near the (2,2) ground state") {
  const Dims d(2, 2);
  CHECK(std::holds_alternative<CrossedZero>(integrate_shot(2.208, d)));
  CHECK(std::holds_alternative<TurnedUp>(integrate_shot(2.205, d)));
  CHECK(std::holds_alternative<CrossedZero>(integrate_shot(4.0, d)));
  CHECK(std::string(outcome_name(integrate_shot(4.0, d))) == "CrossedZero");
}

TEST_CASE("amplitudes at most one turn up immediately") {
  for (double a : {0.1, 0.5, 1.0}) {
    const ShotOutcome o = integrate_shot(a, Dims(2, 2));
    REQUIRE(std::holds_alternative<TurnedUp>(o));
    CHECK(std::get<TurnedUp>(o).h_at_turn == a);
  }
}

TEST_CASE("one-dimensional factor matches the sech closed form") {
  IntegrationControls ctrl;
  ctrl.t_max = 10.0;
  ctrl.decay_threshold = 1e-3;
  for (int m : {3, 4, 5}) {
    const Dims d(m, 1);
    const testing::SechGroundState exact{d.q()};
    ShotTrace shot = integrate_shot_traced(exact.amplitude(), d, ctrl);
    REQUIRE(std::holds_alternative<Candidate>(shot.outcome));
    const RadialProfile& p = std::get<Candidate>(shot.outcome).profile;
    REQUIRE(p.ts.back() == doctest::Approx(10.0));
    double err = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      err = std::max(err, std::abs(p.hs[i] - exact.value(p.ts[i])));
      err = std::max(err, std::abs(p.dhs[i] - exact.derivative(p.ts[i])));
    }
    CHECK(err < 1e-7);
  }
}

TEST_CASE("oracle solves the one-dimensional equation") {
  for (int m : {3, 4, 5}) {
    const testing::SechGroundState exact{Dims(m, 1).q()};
    const double step = 1e-3;
    for (double t = 0.2; t < 6.0; t += 0.37) {
      const double d2 =
          (exact.value(t + step) - 2 * exact.value(t) + exact.value(t - step)) / (step * step);
      CHECK(std::abs(d2 - exact.value(t) + std::pow(exact.value(t), exact.q)) < 1e-6);
    }
  }
}

TEST_CASE("shot outcomes are ordered in alpha") {
  for (int k = 3; k <= 9; ++k) {
    for (int n = 1; n < k; ++n) {
      const Dims d(k - n, n);
      const auto [lo, hi] = bracket_alpha(d);
      int prev = 0;
      for (int i = 0; i < 100; ++i) {
        const double alpha = 0.5 + (hi - 0.5) * i / 99.0;
        const int r = rank(integrate_shot(alpha, d));
        CHECK_MESSAGE(r >= prev, "m=" << d.m() << " n=" << n << " alpha=" << alpha);
        prev = r;
      }
      CHECK(lo == 1.0);
    }
  }
}

TEST_CASE("event times converge under tighter tolerances") {
  const IntegrationControls base;
  const IntegrationControls tight = base.tightened(10.0);
  CHECK(tight.rel_tol == doctest::Approx(base.rel_tol / 10));
  for (auto [m, n] : {std::pair{2, 2}, {3, 2}, {2, 5}, {6, 3}, {4, 1}}) {
    const Dims d(m, n);
    for (double alpha : {1.3, 1.9, 2.4, 3.5, 8.0}) {
      const ShotOutcome a = integrate_shot(alpha, d, base);
      const ShotOutcome b = integrate_shot(alpha, d, tight);
      REQUIRE(a.index() == b.index());
      if (alpha > 1.0) CHECK(std::abs(event_time(a) - event_time(b)) < 1e-6);
    }
  }
}

TEST_CASE("trajectory satisfies the equation between nodes") {
  const Dims d(2, 3);
  ShotTrace shot = integrate_shot_traced(3.0, d);
  const RadialProfile& p = shot.trajectory;
  p.validate();
  REQUIRE(p.size() > 10);
  for (std::size_t i = 2; i + 1 < p.size(); ++i) {
    const std::size_t lo = std::max<std::size_t>(1, i - 2);
    const std::size_t hi = std::min(i + 2, p.size() - 1);
    const std::vector<double> t(p.ts.begin() + lo, p.ts.begin() + hi + 1);
    const std::vector<double> h(p.hs.begin() + lo, p.hs.begin() + hi + 1);
    const std::vector<double> dh(p.dhs.begin() + lo, p.dhs.begin() + hi + 1);
    const double d2h = testing::hermite_second_derivative(t, h, dh, i - lo);
    const double expected = rhs(p.ts[i], p.hs[i], p.dhs[i], d).second;
    CHECK(std::abs(d2h - expected) < 1e-5 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("invalid shots") {
  CHECK_THROWS_AS(integrate_shot(0.0, Dims(2, 2)), std::invalid_argument);
  IntegrationControls ctrl;
  ctrl.t_max = 0.5;
  CHECK_THROWS_AS(integrate_shot(2.2062, Dims(2, 2), ctrl), IntegrationError);
}
