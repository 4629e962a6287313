#pragma once

#include <vector>

#include "gnyamabe/dims.hpp"
#include "gnyamabe/ode.hpp"

namespace gnyamabe {

/// Compactly supported radial test function, linear between breakpoints.
/// ts[0] = 0, ts strictly increasing, hs >= 0, hs.back() = 0.
struct PiecewiseLinearProfile {
  std::vector<double> ts;
  std::vector<double> hs;

  void validate() const;
};

/// The three integrals over R^n of a radial f(x) = h(|x|), each carrying
/// the unit-sphere surface factor.
struct RadialIntegrals {
  double grad_sq;     ///< int |grad f|^2
  double l2_sq;       ///< int f^2
  double p_integral;  ///< int |f|^{p_k}
};

/// L_{m,n}(f) with its ingredients. sigma_inv is the value of the functional;
/// for the ground state it equals the inverse best constant.
struct GNResult {
  Dims d;
  double grad_sq;
  double l2_sq;
  double lp_norm;
  double sigma_inv;

  /// L from the stored norms: grad_sq^{n/k} l2_sq^{m/k} / lp_norm^2.
  double recompute() const;
};

struct QuadratureOptions {
  /// Simpson sub-intervals per stored solver step (even).
  int subdivisions = 8;
};

RadialIntegrals radial_integrals(const RadialProfile& profile, const Dims& d,
                                 const QuadratureOptions& opts = {});
RadialIntegrals radial_integrals(const PiecewiseLinearProfile& profile, const Dims& d);

GNResult gn_from_integrals(const RadialIntegrals& integrals, const Dims& d);
GNResult gn_value(const RadialProfile& profile, const Dims& d, const QuadratureOptions& opts = {});
GNResult gn_value(const PiecewiseLinearProfile& profile, const Dims& d);

/// (a_k I_grad + s_g I_sq) / I_p^{2/p_k}: the Yamabe quotient on M x R^n of a
/// function of the second variable, with Vol(M) = 1 and scalar curvature s_g.
double yamabe_quotient(const RadialIntegrals& integrals, const Dims& d, double s_g);
double yamabe_quotient(const RadialProfile& profile, const Dims& d, double s_g,
                       const QuadratureOptions& opts = {});
double yamabe_quotient(const PiecewiseLinearProfile& profile, const Dims& d, double s_g);

/// h_lambda(t) = h(lambda t).
RadialProfile dilate(const RadialProfile& profile, double lambda);
PiecewiseLinearProfile dilate(const PiecewiseLinearProfile& profile, double lambda);

/// c h. Piecewise-linear profiles need c > 0 to stay non-negative.
RadialProfile scale(const RadialProfile& profile, double c);
PiecewiseLinearProfile scale(const PiecewiseLinearProfile& profile, double c);

/// Piecewise-linear interpolant of a solver profile at the given radii. Values
/// past the last node follow the attached tail; the largest radius is pinned
/// to zero so the result has compact support.
PiecewiseLinearProfile resample(const RadialProfile& profile, std::vector<double> radii);

}  // namespace gnyamabe
