#pragma once

#include "gnyamabe/dims.hpp"

namespace gnyamabe {

/// Gamma((j)/2) for integer j >= 1, from Gamma(1) = 1 and Gamma(1/2) = sqrt(pi).
double half_integer_gamma(int twice_arg);

/// Volume of the unit round k-sphere, 2 pi^{(k+1)/2} / Gamma((k+1)/2).
/// Throws std::invalid_argument for k < 1.
double sphere_volume(int k);

/// Surface measure of the unit sphere S^{d} in R^{d+1}. Same as
/// sphere_volume for d >= 1; the 0-sphere {-1, +1} has counting measure 2.
double sphere_surface_measure(int d);

/// Yamabe invariant of the round k-sphere, k(k-1) Vol(S^k)^{2/k}. Requires k >= 3.
double yamabe_sphere(int k);

/// Best Sobolev constant sigma_n = a_n / Y_n. Requires n >= 3.
double sobolev_constant(int n);

/// C(m,n) = a_k^{n/k} k n^{-n/k} m^{-m/k}, evaluated in log-space.
double theorem1_constant(const Dims& d);

/// Scalar curvature of the round m-sphere rescaled to unit volume. Requires m >= 2.
double unit_volume_sphere_scalar(int m);

}  // namespace gnyamabe
