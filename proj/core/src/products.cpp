#include "gnyamabe/products.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <thread>

#include "gnyamabe/geomconst.hpp"

namespace gnyamabe {

namespace {

ProfileBound bound_from_integrals(const RadialIntegrals& in, const Dims& d, double s_g) {
  if (!(s_g > 0.0)) throw std::invalid_argument("bound_from_profile: s_g must be positive");
  const GNResult gn = gn_from_integrals(in, d);
  const double norm = std::pow(in.p_integral, 2.0 / d.p());
  const double A = d.a() * in.grad_sq / norm;
  const double B = s_g * in.l2_sq / norm;
  const OptimalDilation opt = optimal_dilation(A, B, d);
  return {gn.sigma_inv, y_infinity(d, s_g, gn.sigma_inv), opt.f_min, opt.lambda0};
}

}  // namespace

double y_infinity(const Dims& d, double s_g, double sigma_inv) {
  if (!(s_g > 0.0)) throw std::invalid_argument("y_infinity: s_g must be positive");
  if (sigma_inv < 0.0) throw std::invalid_argument("y_infinity: sigma_inv must be >= 0");
  return theorem1_constant(d) * std::pow(s_g, static_cast<double>(d.m()) / d.total()) *
         sigma_inv;
}

double dilation_objective(double A, double B, const Dims& d, double lambda) {
  const double k = d.total();
  return std::pow(lambda, 2.0 * d.m() / k) * A + std::pow(lambda, -2.0 * d.n() / k) * B;
}

OptimalDilation optimal_dilation(double A, double B, const Dims& d) {
  if (!(A > 0.0 && B > 0.0)) throw std::invalid_argument("optimal_dilation: A, B must be > 0");
  const double m = d.m();
  const double n = d.n();
  const double k = d.total();
  const double lambda0 = std::sqrt(n * B / (m * A));
  const double log_f = (n / k) * std::log(A) + (m / k) * std::log(B) - (m / k) * std::log(m) -
                       (n / k) * std::log(n) + std::log(k);
  return {lambda0, std::exp(log_f)};
}

ProfileBound bound_from_profile(const PiecewiseLinearProfile& profile, const Dims& d,
                                double s_g) {
  return bound_from_integrals(radial_integrals(profile, d), d, s_g);
}

ProfileBound bound_from_profile(const RadialProfile& profile, const Dims& d, double s_g,
                                const QuadratureOptions& opts) {
  return bound_from_integrals(radial_integrals(profile, d, opts), d, s_g);
}

ConstantsRow compute_row(const Dims& d, const TableOptions& opts) {
  const GroundState gs = find_ground_state(d, opts.shooting);
  const GNResult gn = gn_value(gs.profile, d, opts.quadrature);
  const double s_g = unit_volume_sphere_scalar(d.m());
  return {d.m(), d.n(), gs.alpha0, gn.sigma_inv, y_infinity(d, s_g, gn.sigma_inv),
          yamabe_sphere(d.total())};
}

Table build_table(int max_total_dim, const TableOptions& opts) {
  if (max_total_dim < 4) {
    throw std::invalid_argument("build_table: max_total_dim must be >= 4");
  }
  std::vector<Dims> pairs;
  for (int k = 4; k <= max_total_dim; ++k) {
    for (int n = k - 2; n >= 2; --n) pairs.emplace_back(k - n, n);
  }

  std::vector<std::optional<ConstantsRow>> rows(pairs.size());
  std::vector<std::string> errors(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      try {
        rows[i] = compute_row(pairs[i], opts);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };

  unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(pairs.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  Table table;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (rows[i]) {
      table.rows.push_back(*rows[i]);
    } else {
      table.failures.push_back({pairs[i].m(), pairs[i].n(), errors[i]});
    }
  }
  return table;
}

std::vector<ConstantsRow> sphere_comparison_violations(const Table& table) {
  std::vector<ConstantsRow> out;
  std::copy_if(table.rows.begin(), table.rows.end(), std::back_inserter(out),
               [](const ConstantsRow& r) { return !(r.y_inf < r.y_sphere); });
  return out;
}

ReferenceConstants reference_constants() {
  constexpr double pi = std::numbers::pi;
  return {12.0 * std::numbers::sqrt2 * pi, 16.0 * pi};
}

}  // namespace gnyamabe
