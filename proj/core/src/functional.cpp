#include "gnyamabe/functional.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "gnyamabe/geomconst.hpp"
#include "gnyamabe/quadrature.hpp"

namespace gnyamabe {

namespace {

// Hermite interpolation on one stored step, s in [0, 1]. Quintic when second
// derivatives are known, cubic otherwise. Returns (h, dh/dt).
struct HermiteSegment {
  double h0, d0, c0, h1, d1, c1, width;
  bool quintic;

  std::pair<double, double> eval(double s) const {
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double s4 = s3 * s;
    const double s5 = s4 * s;
    const double w = width;
    if (quintic) {
      const double b0 = 1 - 10 * s3 + 15 * s4 - 6 * s5;
      const double b1 = s - 6 * s3 + 8 * s4 - 3 * s5;
      const double b2 = 0.5 * (s2 - 3 * s3 + 3 * s4 - s5);
      const double b3 = 10 * s3 - 15 * s4 + 6 * s5;
      const double b4 = -4 * s3 + 7 * s4 - 3 * s5;
      const double b5 = 0.5 * (s3 - 2 * s4 + s5);
      const double e0 = -30 * s2 + 60 * s3 - 30 * s4;
      const double e1 = 1 - 18 * s2 + 32 * s3 - 15 * s4;
      const double e2 = 0.5 * (2 * s - 9 * s2 + 12 * s3 - 5 * s4);
      const double e3 = 30 * s2 - 60 * s3 + 30 * s4;
      const double e4 = -12 * s2 + 28 * s3 - 15 * s4;
      const double e5 = 0.5 * (3 * s2 - 8 * s3 + 5 * s4);
      const double h = h0 * b0 + w * d0 * b1 + w * w * c0 * b2 + h1 * b3 + w * d1 * b4 +
                       w * w * c1 * b5;
      const double dh = (h0 * e0 + h1 * e3) / w + d0 * e1 + d1 * e4 + w * (c0 * e2 + c1 * e5);
      return {h, dh};
    }
    const double b0 = 2 * s3 - 3 * s2 + 1;
    const double b1 = s3 - 2 * s2 + s;
    const double b2 = -2 * s3 + 3 * s2;
    const double b3 = s3 - s2;
    const double e0 = 6 * s2 - 6 * s;
    const double e1 = 3 * s2 - 4 * s + 1;
    const double e3 = 3 * s2 - 2 * s;
    const double h = h0 * b0 + w * d0 * b1 + h1 * b2 + w * d1 * b3;
    const double dh = (h0 * e0 - h1 * e0) / w + d0 * e1 + d1 * e3;
    return {h, dh};
  }
};

// Tail h(t) = h_c exp(-rate (t - t_c)) (t_c/t)^{(n-1)/2}, integrated in closed
// form where possible and by composite Gauss-Legendre otherwise.
RadialIntegrals tail_integrals(double t_c, double h_c, double rate, int n, double p) {
  const double radial = n - 1.0;
  const double base = h_c * h_c * std::pow(t_c, radial);
  const double l2 = base / (2.0 * rate);

  const auto& rule = gauss_legendre_16();
  constexpr int kPanels = 16;
  auto composite = [&](auto&& f, double length) {
    double sum = 0.0;
    const double step = length / kPanels;
    for (int j = 0; j < kPanels; ++j) sum += integrate(rule, f, j * step, (j + 1) * step);
    return sum;
  };

  const double grad = base * composite(
                                 [&](double u) {
                                   const double g = rate + radial / (2.0 * (t_c + u));
                                   return std::exp(-2.0 * rate * u) * g * g;
                                 },
                                 40.0 / rate);
  const double pw = std::pow(std::abs(h_c), p) * std::pow(t_c, radial * p / 2.0);
  const double pint = pw * composite(
                               [&](double u) {
                                 return std::exp(-p * rate * u) *
                                        std::pow(t_c + u, radial * (1.0 - p / 2.0));
                               },
                               80.0 / (p * rate));
  return {grad, l2, pint};
}

void check_dimension(int profile_n, const Dims& d) {
  if (profile_n != d.n()) {
    throw std::invalid_argument("radial_integrals: profile dimension " +
                                std::to_string(profile_n) + " does not match n = " +
                                std::to_string(d.n()));
  }
}

}  // namespace

void PiecewiseLinearProfile::validate() const {
  if (ts.size() < 2 || hs.size() != ts.size()) {
    throw std::invalid_argument("PiecewiseLinearProfile: need >= 2 matching (t, h) pairs");
  }
  if (ts.front() != 0.0) {
    throw std::invalid_argument("PiecewiseLinearProfile: first breakpoint must be t = 0");
  }
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (!(ts[i] > ts[i - 1])) {
      throw std::invalid_argument("PiecewiseLinearProfile: breakpoints must increase");
    }
  }
  for (double h : hs) {
    if (!(h >= 0.0)) throw std::invalid_argument("PiecewiseLinearProfile: negative value");
  }
  if (hs.back() != 0.0) {
    throw std::invalid_argument("PiecewiseLinearProfile: last value must be 0");
  }
}

double GNResult::recompute() const {
  const double k = d.total();
  return std::pow(grad_sq, d.n() / k) * std::pow(l2_sq, d.m() / k) / (lp_norm * lp_norm);
}

RadialIntegrals radial_integrals(const RadialProfile& profile, const Dims& d,
                                 const QuadratureOptions& opts) {
  profile.validate();
  check_dimension(profile.n, d);
  if (opts.subdivisions < 2 || opts.subdivisions % 2 != 0) {
    throw std::invalid_argument("radial_integrals: subdivisions must be even and >= 2");
  }
  const double radial = d.n() - 1.0;
  const double p = d.p();
  const bool quintic = !profile.d2hs.empty();
  const int sub = opts.subdivisions;

  std::vector<double> g(sub + 1);
  std::vector<double> s2(sub + 1);
  std::vector<double> sp(sub + 1);
  RadialIntegrals acc{0.0, 0.0, 0.0};

  for (std::size_t i = 0; i + 1 < profile.size(); ++i) {
    const double t0 = profile.ts[i];
    const double width = profile.ts[i + 1] - t0;
    const HermiteSegment seg{profile.hs[i],
                             profile.dhs[i],
                             quintic ? profile.d2hs[i] : 0.0,
                             profile.hs[i + 1],
                             profile.dhs[i + 1],
                             quintic ? profile.d2hs[i + 1] : 0.0,
                             width,
                             quintic};
    for (int j = 0; j <= sub; ++j) {
      const double s = static_cast<double>(j) / sub;
      const double t = t0 + s * width;
      const auto [h, dh] = seg.eval(s);
      const double weight = radial == 0.0 ? 1.0 : std::pow(t, radial);
      g[j] = dh * dh * weight;
      s2[j] = h * h * weight;
      sp[j] = std::pow(std::abs(h), p) * weight;
    }
    const double dx = width / sub;
    acc.grad_sq += simpson(g, dx);
    acc.l2_sq += simpson(s2, dx);
    acc.p_integral += simpson(sp, dx);
  }

  if (profile.tail_rate > 0.0) {
    const auto tail = tail_integrals(profile.ts.back(), profile.hs.back(), profile.tail_rate,
                                     d.n(), p);
    acc.grad_sq += tail.grad_sq;
    acc.l2_sq += tail.l2_sq;
    acc.p_integral += tail.p_integral;
  }

  const double omega = sphere_surface_measure(d.n() - 1);
  return {omega * acc.grad_sq, omega * acc.l2_sq, omega * acc.p_integral};
}

RadialIntegrals radial_integrals(const PiecewiseLinearProfile& profile, const Dims& d) {
  profile.validate();
  const double radial = d.n() - 1.0;
  const double p = d.p();
  // Polynomial integrands t^{n-1} (a + b t)^2 are integrated exactly.
  const int nodes = std::max(16, (d.n() + 3) / 2);
  const GaussLegendreRule wide = nodes > 16 ? gauss_legendre(nodes) : GaussLegendreRule{};
  const GaussLegendreRule& rule = nodes > 16 ? wide : gauss_legendre_16();

  RadialIntegrals acc{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i + 1 < profile.ts.size(); ++i) {
    const double a = profile.ts[i];
    const double b = profile.ts[i + 1];
    const double ha = profile.hs[i];
    const double slope = (profile.hs[i + 1] - ha) / (b - a);
    auto h = [&](double t) { return ha + slope * (t - a); };
    auto weight = [&](double t) { return radial == 0.0 ? 1.0 : std::pow(t, radial); };
    acc.grad_sq += slope * slope * integrate(rule, weight, a, b);
    acc.l2_sq += integrate(rule, [&](double t) { return h(t) * h(t) * weight(t); }, a, b);
    acc.p_integral +=
        integrate(rule, [&](double t) { return std::pow(std::abs(h(t)), p) * weight(t); }, a, b);
  }
  const double omega = sphere_surface_measure(d.n() - 1);
  return {omega * acc.grad_sq, omega * acc.l2_sq, omega * acc.p_integral};
}

GNResult gn_from_integrals(const RadialIntegrals& in, const Dims& d) {
  if (!(in.grad_sq > 0.0 && in.l2_sq > 0.0 && in.p_integral > 0.0)) {
    throw std::invalid_argument("gn_value: all three integrals must be positive");
  }
  const double k = d.total();
  const double p = d.p();
  const double lp = std::pow(in.p_integral, 1.0 / p);
  const double value = std::exp((d.n() / k) * std::log(in.grad_sq) +
                                (d.m() / k) * std::log(in.l2_sq) - (2.0 / p) * std::log(in.p_integral));
  return GNResult{d, in.grad_sq, in.l2_sq, lp, value};
}

GNResult gn_value(const RadialProfile& profile, const Dims& d, const QuadratureOptions& opts) {
  return gn_from_integrals(radial_integrals(profile, d, opts), d);
}

GNResult gn_value(const PiecewiseLinearProfile& profile, const Dims& d) {
  return gn_from_integrals(radial_integrals(profile, d), d);
}

double yamabe_quotient(const RadialIntegrals& in, const Dims& d, double s_g) {
  if (!(s_g > 0.0)) throw std::invalid_argument("yamabe_quotient: s_g must be positive");
  if (!(in.p_integral > 0.0)) throw std::invalid_argument("yamabe_quotient: zero function");
  return (d.a() * in.grad_sq + s_g * in.l2_sq) / std::pow(in.p_integral, 2.0 / d.p());
}

double yamabe_quotient(const RadialProfile& profile, const Dims& d, double s_g,
                       const QuadratureOptions& opts) {
  return yamabe_quotient(radial_integrals(profile, d, opts), d, s_g);
}

double yamabe_quotient(const PiecewiseLinearProfile& profile, const Dims& d, double s_g) {
  return yamabe_quotient(radial_integrals(profile, d), d, s_g);
}

RadialProfile dilate(const RadialProfile& profile, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("dilate: lambda must be positive");
  RadialProfile out = profile;
  for (double& t : out.ts) t /= lambda;
  for (double& dh : out.dhs) dh *= lambda;
  for (double& d2h : out.d2hs) d2h *= lambda * lambda;
  out.tail_rate *= lambda;
  return out;
}

PiecewiseLinearProfile dilate(const PiecewiseLinearProfile& profile, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("dilate: lambda must be positive");
  PiecewiseLinearProfile out = profile;
  for (double& t : out.ts) t /= lambda;
  return out;
}

RadialProfile scale(const RadialProfile& profile, double c) {
  if (c == 0.0) throw std::invalid_argument("scale: factor must be non-zero");
  RadialProfile out = profile;
  for (auto* v : {&out.hs, &out.dhs, &out.d2hs}) {
    for (double& x : *v) x *= c;
  }
  out.alpha *= c;
  return out;
}

PiecewiseLinearProfile scale(const PiecewiseLinearProfile& profile, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("scale: factor must be positive");
  PiecewiseLinearProfile out = profile;
  for (double& h : out.hs) h *= c;
  return out;
}

PiecewiseLinearProfile resample(const RadialProfile& profile, std::vector<double> radii) {
  profile.validate();
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  if (radii.size() < 2 || radii.front() != 0.0) {
    throw std::invalid_argument("resample: radii must start at 0 and hold >= 2 points");
  }
  PiecewiseLinearProfile out;
  out.ts = radii;
  out.hs.reserve(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double t = radii[i];
    double h = 0.0;
    if (i + 1 == radii.size()) {
      h = 0.0;
    } else if (t > profile.ts.back()) {
      if (profile.tail_rate > 0.0) {
        const double t_c = profile.ts.back();
        h = profile.hs.back() * std::exp(-profile.tail_rate * (t - t_c)) *
            std::pow(t_c / t, 0.5 * (profile.n - 1.0));
      }
    } else {
      const auto it = std::upper_bound(profile.ts.begin(), profile.ts.end(), t);
      const std::size_t j = std::min<std::size_t>(it - profile.ts.begin(), profile.size() - 1);
      const std::size_t lo = j == 0 ? 0 : j - 1;
      const double width = profile.ts[lo + 1] - profile.ts[lo];
      const bool quintic = !profile.d2hs.empty();
      const HermiteSegment seg{profile.hs[lo], profile.dhs[lo],
                               quintic ? profile.d2hs[lo] : 0.0,
                               profile.hs[lo + 1], profile.dhs[lo + 1],
                               quintic ? profile.d2hs[lo + 1] : 0.0, width, quintic};
      h = std::max(0.0, seg.eval((t - profile.ts[lo]) / width).first);
    }
    out.hs.push_back(h);
  }
  return out;
}

}  // namespace gnyamabe
