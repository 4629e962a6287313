#pragma once

#include <string>
#include <vector>

#include "gnyamabe/dims.hpp"
#include "gnyamabe/functional.hpp"
#include "gnyamabe/shooting.hpp"

namespace gnyamabe {

/// One line of the constants table for S^m x R^n.
struct ConstantsRow {
  int m;
  int n;
  double alpha0;
  double sigma_inv;
  double y_inf;     ///< limiting N-Yamabe constant of S^m x S^n
  double y_sphere;  ///< Y_{m+n}
};

struct RowFailure {
  int m;
  int n;
  std::string message;
};

struct Table {
  std::vector<ConstantsRow> rows;
  std::vector<RowFailure> failures;
};

struct TableOptions {
  ShootingOptions shooting{};
  QuadratureOptions quadrature{};
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// C(m,n) s_g^{m/k} sigma_inv.
double y_infinity(const Dims& d, double s_g, double sigma_inv);

struct OptimalDilation {
  double lambda0;
  double f_min;
};

/// F(lambda) = lambda^{2m/k} A + lambda^{-2n/k} B.
double dilation_objective(double A, double B, const Dims& d, double lambda);

/// Minimizer lambda0 = sqrt(nB/(mA)) of F and the minimum value.
OptimalDilation optimal_dilation(double A, double B, const Dims& d);

struct ProfileBound {
  double functional;    ///< L_{m,n}(f)
  double bound;         ///< C(m,n) s_g^{m/k} L(f)
  double via_dilation;  ///< F(lambda0) from the A, B split of the quotient
  double lambda0;
};

/// Upper bound on the limiting N-Yamabe constant from a test function.
ProfileBound bound_from_profile(const PiecewiseLinearProfile& profile, const Dims& d, double s_g);
ProfileBound bound_from_profile(const RadialProfile& profile, const Dims& d, double s_g,
                                const QuadratureOptions& opts = {});

/// Row for one (m, n), with s_g the unit-volume round-sphere scalar curvature.
ConstantsRow compute_row(const Dims& d, const TableOptions& opts = {});

/// All m, n >= 2 with m + n <= max_total_dim, ordered by increasing m + n and
/// then decreasing n. Rows whose solve fails are listed in failures.
Table build_table(int max_total_dim, const TableOptions& opts = {});

/// Rows that break y_inf < y_sphere.
std::vector<ConstantsRow> sphere_comparison_violations(const Table& table);

struct ReferenceConstants {
  double y_cp2;             ///< 12 sqrt(2) pi
  double y_s2xs2_product;   ///< 16 pi
};

ReferenceConstants reference_constants();

}  // namespace gnyamabe
