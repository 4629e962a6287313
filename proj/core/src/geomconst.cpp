#include "gnyamabe/geomconst.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gnyamabe {

Dims::Dims(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("Dims: factor dimensions must be >= 1, got (" +
                                std::to_string(m) + ", " + std::to_string(n) + ")");
  }
  if (m + n < 3) {
    throw std::invalid_argument("Dims: total dimension must be >= 3, got " +
                                std::to_string(m + n));
  }
}

double Dims::a() const noexcept {
  const double k = total();
  return 4.0 * (k - 1.0) / (k - 2.0);
}

double Dims::p() const noexcept {
  const double k = total();
  return 2.0 * k / (k - 2.0);
}

double Dims::q() const noexcept {
  const double k = total();
  return (k + 2.0) / (k - 2.0);
}

double half_integer_gamma(int twice_arg) {
  if (twice_arg < 1) {
    throw std::invalid_argument("half_integer_gamma: argument must be positive");
  }
  // Gamma(x + 1) = x Gamma(x), walking up from 1 or 1/2.
  double value = (twice_arg % 2 == 0) ? 1.0 : std::sqrt(std::numbers::pi);
  for (int j = (twice_arg % 2 == 0) ? 2 : 1; j + 2 <= twice_arg; j += 2) {
    value *= 0.5 * j;
  }
  return value;
}

double sphere_volume(int k) {
  if (k < 1) {
    throw std::invalid_argument("sphere_volume: dimension must be >= 1, got " +
                                std::to_string(k));
  }
  return 2.0 * std::pow(std::numbers::pi, 0.5 * (k + 1)) / half_integer_gamma(k + 1);
}

double sphere_surface_measure(int d) {
  if (d == 0) return 2.0;
  return sphere_volume(d);
}

double yamabe_sphere(int k) {
  if (k < 3) {
    throw std::invalid_argument("yamabe_sphere: dimension must be >= 3, got " +
                                std::to_string(k));
  }
  return k * (k - 1.0) * std::pow(sphere_volume(k), 2.0 / k);
}

double sobolev_constant(int n) {
  if (n < 3) {
    throw std::invalid_argument("sobolev_constant: dimension must be >= 3, got " +
                                std::to_string(n));
  }
  const double a = 4.0 * (n - 1.0) / (n - 2.0);
  return a / yamabe_sphere(n);
}

double theorem1_constant(const Dims& d) {
  const double m = d.m();
  const double n = d.n();
  const double k = d.total();
  const double log_c = (n / k) * std::log(d.a()) + std::log(k) - (n / k) * std::log(n) -
                       (m / k) * std::log(m);
  return std::exp(log_c);
}

double unit_volume_sphere_scalar(int m) {
  if (m < 2) {
    throw std::invalid_argument("unit_volume_sphere_scalar: dimension must be >= 2, got " +
                                std::to_string(m));
  }
  // s(c g) = s(g)/c and Vol(c g) = c^{m/2} Vol(g); pick c = Vol(S^m)^{-2/m}.
  return m * (m - 1.0) * std::pow(sphere_volume(m), 2.0 / m);
}

}  // namespace gnyamabe
