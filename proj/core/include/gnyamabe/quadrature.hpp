#pragma once

#include <span>
#include <vector>

namespace gnyamabe {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes and weights by Newton iteration on P_n. Exact for polynomials of
/// degree <= 2n - 1. Throws std::invalid_argument for n < 1.
GaussLegendreRule gauss_legendre(int n);

/// Cached 16-point rule.
const GaussLegendreRule& gauss_legendre_16();

/// Integral of f over [a, b] with the given rule.
template <class F>
double integrate(const GaussLegendreRule& rule, F&& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

/// Composite Simpson on equally spaced samples with spacing dx. The number of
/// samples must be odd and >= 3.
double simpson(std::span<const double> samples, double dx);

}  // namespace gnyamabe
