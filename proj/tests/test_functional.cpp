#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "gnyamabe/functional.hpp"
#include "gnyamabe/geomconst.hpp"
#include "gnyamabe/products.hpp"
#include "gnyamabe/shooting.hpp"
#include "oracles.hpp"

using namespace gnyamabe;
using std::numbers::pi;

namespace {

PiecewiseLinearProfile triangle() { return {{0.0, 1.0}, {1.0, 0.0}}; }

PiecewiseLinearProfile staircase() {
  return {{0.0, 0.4, 1.1, 2.0, 3.5}, {1.7, 1.5, 0.9, 0.2, 0.0}};
}

RadialProfile with_bump(const RadialProfile& base, double eps, double center, double width) {
  RadialProfile out = base;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = (out.ts[i] - center) / width;
    const double b = std::exp(-x * x);
    out.hs[i] += eps * b;
    out.dhs[i] += eps * b * (-2 * x / width);
    out.d2hs[i] += eps * b * (4 * x * x - 2) / (width * width);
  }
  return out;
}

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

}  // namespace

TEST_CASE("triangle integrals in two radial dimensions") {
  const Dims d(2, 2);
  const RadialIntegrals in = radial_integrals(triangle(), d);
  CHECK(in.l2_sq == doctest::Approx(pi / 6).epsilon(1e-13));
  CHECK(in.grad_sq == doctest::Approx(pi).epsilon(1e-13));
  CHECK(in.p_integral == doctest::Approx(pi / 15).epsilon(1e-13));
  const double q = yamabe_quotient(triangle(), d, 8 * pi);
  CHECK(q == doctest::Approx((6 * pi + 4 * pi * pi / 3) / std::sqrt(pi / 15)).epsilon(1e-13));
}

TEST_CASE("piecewise-linear integrals against brute force") {
  const PiecewiseLinearProfile f = staircase();
  const auto value = [&](double t) {
    for (std::size_t i = 0; i + 1 < f.ts.size(); ++i) {
      if (t <= f.ts[i + 1]) {
        const double w = (t - f.ts[i]) / (f.ts[i + 1] - f.ts[i]);
        return (1 - w) * f.hs[i] + w * f.hs[i + 1];
      }
    }
    return 0.0;
  };
  for (auto [m, n] : {std::pair{2, 3}, {3, 1}, {4, 4}}) {
    const Dims d(m, n);
    const double omega = sphere_surface_measure(n - 1);
    const double p = d.p();
    const double l2 = testing::brute_simpson(
        [&](double t) { return value(t) * value(t) * std::pow(t, n - 1); }, 0.0, 3.5);
    const double lp = testing::brute_simpson(
        [&](double t) { return std::pow(value(t), p) * std::pow(t, n - 1); }, 0.0, 3.5);
    const RadialIntegrals in = radial_integrals(f, d);
    CHECK(close(in.l2_sq, omega * l2, 1e-8));
    CHECK(close(in.p_integral, omega * lp, 1e-8));
  }
}

TEST_CASE("sech ground state against closed-form integrals") {
  for (int m : {3, 4, 5}) {
    const Dims d(m, 1);
    const testing::SechGroundState exact{d.q()};
    const GroundState gs = find_ground_state(d);
    const RadialIntegrals in = radial_integrals(gs.profile, d);
    CHECK(close(in.grad_sq, exact.grad_sq(), 1e-8));
    CHECK(close(in.l2_sq, exact.l2_sq(), 1e-8));
    CHECK(close(in.p_integral, exact.p_integral(d.p()), 1e-8));
    const double k = d.total();
    const double sigma = std::pow(exact.grad_sq(), 1 / k) * std::pow(exact.l2_sq(), m / k) /
                         std::pow(exact.p_integral(d.p()), 2 / d.p());
    CHECK(close(gn_value(gs.profile, d).sigma_inv, sigma, 1e-8));
  }
}

TEST_CASE("pohozaev identity for ground states") {
  // For a ground state, (n-2) |grad|^2 + n |f|^2 = (2n/p) int f^p.
  for (auto [m, n] : {std::pair{2, 2}, {3, 3}, {2, 5}, {5, 1}}) {
    const Dims d(m, n);
    const RadialIntegrals in = radial_integrals(find_ground_state(d).profile, d);
    const double lhs = (n - 2.0) * in.grad_sq + n * in.l2_sq;
    const double rhs = 2.0 * n / d.p() * in.p_integral;
    CHECK(close(lhs, rhs, 1e-7));
  }
}

TEST_CASE("scale and dilation invariance") {
  const GroundState gs = find_ground_state(Dims(2, 2));
  const Dims d(2, 2);
  const double base_lin = gn_value(staircase(), d).sigma_inv;
  const double base_gs = gn_value(gs.profile, d).sigma_inv;
  for (double c : {0.1, 3.0, 100.0}) {
    CHECK(close(gn_value(scale(staircase(), c), d).sigma_inv, base_lin, 1e-12));
    CHECK(close(gn_value(scale(gs.profile, c), d).sigma_inv, base_gs, 1e-12));
  }
  for (double lambda : {0.5, 2.0, 10.0}) {
    CHECK(close(gn_value(dilate(staircase(), lambda), d).sigma_inv, base_lin, 1e-10));
    CHECK(close(gn_value(dilate(gs.profile, lambda), d).sigma_inv, base_gs, 1e-10));
    const RadialIntegrals a = radial_integrals(staircase(), d);
    const RadialIntegrals b = radial_integrals(dilate(staircase(), lambda), d);
    CHECK(close(b.l2_sq, a.l2_sq * std::pow(lambda, -2.0), 1e-12));
  }
}

TEST_CASE("quadrature refinement") {
  for (auto [m, n] : {std::pair{2, 2}, {4, 3}, {2, 7}}) {
    const Dims d(m, n);
    const GroundState gs = find_ground_state(d);
    const double coarse = gn_value(gs.profile, d, {8}).sigma_inv;
    const double fine = gn_value(gs.profile, d, {16}).sigma_inv;
    CHECK(std::abs(coarse - fine) < 1e-8);
  }
  const GroundState gs = find_ground_state(Dims(2, 2));
  CHECK_THROWS_AS(radial_integrals(gs.profile, Dims(2, 2), {3}), std::invalid_argument);
  CHECK_THROWS_AS(radial_integrals(gs.profile, Dims(2, 3)), std::invalid_argument);
}

TEST_CASE("ground state minimises among nearby profiles") {
  const Dims d(2, 2);
  const GroundState gs = find_ground_state(d);
  const double base = gn_value(gs.profile, d).sigma_inv;
  for (double center : {0.0, 0.8, 1.5, 2.5, 3.5}) {
    for (double eps : {1e-3, -1e-3}) {
      const double bumped = gn_value(with_bump(gs.profile, eps, center, 0.5), d).sigma_inv;
      CHECK_MESSAGE(bumped >= base - 1e-10, "center " << center << " eps " << eps);
    }
  }
}

TEST_CASE("recompute agrees with the stored value") {
  const GNResult r = gn_value(staircase(), Dims(3, 2));
  CHECK(r.recompute() == doctest::Approx(r.sigma_inv).epsilon(1e-14));
  CHECK(r.lp_norm > 0.0);
}

TEST_CASE("resampling approximates the profile") {
  const Dims d(2, 2);
  const GroundState gs = find_ground_state(d);
  std::vector<double> radii;
  for (int i = 0; i <= 4000; ++i) radii.push_back(i * 0.005);
  const PiecewiseLinearProfile lin = resample(gs.profile, radii);
  CHECK(lin.hs.back() == 0.0);
  CHECK(lin.hs.front() == doctest::Approx(gs.alpha0).epsilon(1e-12));
  CHECK(close(gn_value(lin, d).sigma_inv, gn_value(gs.profile, d).sigma_inv, 1e-4));
}

TEST_CASE("invalid piecewise-linear profiles") {
  CHECK_THROWS_AS(gn_value(PiecewiseLinearProfile{{0.0, 1.0}, {1.0, 0.5}}, Dims(2, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(gn_value(PiecewiseLinearProfile{{0.1, 1.0}, {1.0, 0.0}}, Dims(2, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(gn_value(PiecewiseLinearProfile{{0.0, 0.0}, {1.0, 0.0}}, Dims(2, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(scale(triangle(), -1.0), std::invalid_argument);
  CHECK_THROWS_AS(dilate(triangle(), 0.0), std::invalid_argument);
}
