#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "gnyamabe/functional.hpp"
#include "gnyamabe/geomconst.hpp"
#include "gnyamabe/periodic.hpp"
#include "gnyamabe/products.hpp"
#include "gnyamabe/profile_io.hpp"
#include "gnyamabe/shooting.hpp"

namespace gnyamabe::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kText, kCsv, kJson };

// Seven significant digits, '.' decimal point whatever the locale.
std::string sig7(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.7g", x);
  return buf;
}

std::string sig10(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// JSON number carrying the same seven digits as the CSV.
ordered_json num7(double x) { return std::stod(sig7(x)); }

struct CommonFlags {
  std::string format = "text";
  std::string out_path;
};

struct SolverFlags {
  double tol_alpha = ShootingOptions{}.tol_alpha;
  double t_max = IntegrationControls{}.t_max;

  ShootingOptions shooting() const {
    ShootingOptions opts;
    opts.tol_alpha = tol_alpha;
    opts.controls.t_max = t_max;
    return opts;
  }
};

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  return Format::kText;
}

void add_common(CLI::App* cmd, CommonFlags& flags, const std::string& default_format) {
  flags.format = default_format;
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", flags.out_path, "Write the report to PATH instead of stdout");
}

void add_solver(CLI::App* cmd, SolverFlags& flags) {
  cmd->add_option("--tol-alpha", flags.tol_alpha, "Bisection width for the initial value")
      ->check(CLI::Range(1e-14, 1e-3))
      ->capture_default_str();
  cmd->add_option("--tmax", flags.t_max, "Integration horizon for each shot")
      ->check(CLI::Range(5.0, 1000.0))
      ->capture_default_str();
}

// Either the caller's stream or the --out file.
class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open output file " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

Dims checked_dims(int m, int n) {
  if (m < 1 || n < 1 || m + n < 3) {
    throw UsageError("need m >= 1, n >= 1 and m + n >= 3 (got m = " + std::to_string(m) +
                     ", n = " + std::to_string(n) + ")");
  }
  return Dims(m, n);
}

void write_dump(const std::string& path, auto&& writer) {
  std::ofstream dump(path);
  if (!dump) throw UsageError("cannot open dump file " + path);
  writer(dump);
}

// ---------------------------------------------------------------------------

int cmd_ground_state(int m, int n, const SolverFlags& solver, const CommonFlags& common,
                     const std::string& dump_path, std::ostream& out) {
  const Dims d = checked_dims(m, n);
  const GroundState gs = find_ground_state(d, solver.shooting());
  const GNResult gn = gn_value(gs.profile, d);
  if (!dump_path.empty()) write_dump(dump_path, [&](std::ostream& s) { write_profile(s, gs.profile); });

  Sink sink(out, common.out_path);
  switch (parse_format(common.format)) {
    case Format::kJson: {
      ordered_json j{{"m", m},
                     {"n", n},
                     {"alpha0", std::stod(sig10(gs.alpha0))},
                     {"sigma_inv", num7(gn.sigma_inv)},
                     {"grad_sq", num7(gn.grad_sq)},
                     {"l2_sq", num7(gn.l2_sq)},
                     {"lp_norm", num7(gn.lp_norm)},
                     {"bisection_steps", gs.iterations}};
      *sink << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      *sink << "m,n,alpha0,sigma_inv,grad_sq,l2_sq,lp_norm\n"
            << m << ',' << n << ',' << sig10(gs.alpha0) << ',' << sig7(gn.sigma_inv) << ','
            << sig7(gn.grad_sq) << ',' << sig7(gn.l2_sq) << ',' << sig7(gn.lp_norm) << '\n';
      break;
    case Format::kText:
      *sink << "ground state for (m, n) = (" << m << ", " << n << ")\n"
            << "  alpha0      " << sig10(gs.alpha0) << "  (bracket width "
            << sig7(gs.alpha_hi - gs.alpha_lo) << ", " << gs.iterations << " bisections)\n"
            << "  sigma_inv   " << sig7(gn.sigma_inv) << '\n'
            << "  |grad f|^2  " << sig7(gn.grad_sq) << '\n'
            << "  |f|_2^2     " << sig7(gn.l2_sq) << '\n'
            << "  |f|_p       " << sig7(gn.lp_norm) << "  (p = " << sig7(d.p()) << ")\n"
            << "  profile     " << gs.profile.size() << " nodes on [0, "
            << sig7(gs.profile.ts.back()) << "] + exponential tail\n";
      break;
  }
  return kSuccess;
}

int cmd_table(int max_dim, const SolverFlags& solver, unsigned threads,
              const CommonFlags& common, std::ostream& out, std::ostream& err) {
  if (max_dim < 4) throw UsageError("--max-dim must be >= 4");
  TableOptions opts;
  opts.shooting = solver.shooting();
  opts.threads = threads;
  const Table table = build_table(max_dim, opts);

  Sink sink(out, common.out_path);
  switch (parse_format(common.format)) {
    case Format::kJson: {
      ordered_json rows = ordered_json::array();
      for (const auto& r : table.rows) {
        rows.push_back({{"m", r.m},
                        {"n", r.n},
                        {"alpha0", num7(r.alpha0)},
                        {"sigma_inv", num7(r.sigma_inv)},
                        {"y_inf", num7(r.y_inf)},
                        {"y_sphere", num7(r.y_sphere)}});
      }
      *sink << rows.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      *sink << "m,n,alpha0,sigma_inv,y_inf,y_sphere\n";
      for (const auto& r : table.rows) {
        *sink << r.m << ',' << r.n << ',' << sig7(r.alpha0) << ',' << sig7(r.sigma_inv) << ','
              << sig7(r.y_inf) << ',' << sig7(r.y_sphere) << '\n';
      }
      break;
    case Format::kText: {
      char line[128];
      std::snprintf(line, sizeof line, "%3s %3s %14s %12s %12s %12s\n", "m", "n", "alpha0",
                    "sigma_inv", "Y_inf", "Y_{m+n}");
      *sink << line;
      for (const auto& r : table.rows) {
        std::snprintf(line, sizeof line, "%3d %3d %14.7g %12.7g %12.7g %12.7g\n", r.m, r.n,
                      r.alpha0, r.sigma_inv, r.y_inf, r.y_sphere);
        *sink << line;
      }
      break;
    }
  }

  for (const auto& r : sphere_comparison_violations(table)) {
    err << "note: (" << r.m << ", " << r.n << ") has Y_inf >= Y_{m+n}\n";
  }
  for (const auto& f : table.failures) {
    err << "error: row (" << f.m << ", " << f.n << "): " << f.message << '\n';
  }
  return table.failures.empty() ? kSuccess : kNumericalFailure;
}

int cmd_bound(const std::string& path, int m, int n, const CommonFlags& common,
              std::ostream& out) {
  const Dims d = checked_dims(m, n);
  if (m < 2) throw UsageError("bound needs m >= 2 (round S^m first factor)");
  const PiecewiseLinearProfile profile = load_piecewise_profile(path);
  const double s_g = unit_volume_sphere_scalar(m);
  const ProfileBound b = bound_from_profile(profile, d, s_g);
  const double y_sphere = yamabe_sphere(d.total());
  const bool below = b.bound < y_sphere;

  Sink sink(out, common.out_path);
  switch (parse_format(common.format)) {
    case Format::kJson: {
      ordered_json j{{"m", m},
                     {"n", n},
                     {"breakpoints", profile.ts.size()},
                     {"functional", std::stod(sig10(b.functional))},
                     {"y_inf_bound", num7(b.bound)},
                     {"y_sphere", num7(y_sphere)},
                     {"bound_below_sphere", below}};
      *sink << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      *sink << "m,n,functional,y_inf_bound,y_sphere\n"
            << m << ',' << n << ',' << sig10(b.functional) << ',' << sig7(b.bound) << ','
            << sig7(y_sphere) << '\n';
      break;
    case Format::kText:
      *sink << "test function " << path << " (" << profile.ts.size() << " breakpoints), (m, n) = ("
            << m << ", " << n << ")\n"
            << "  L(f)                 " << sig10(b.functional) << '\n'
            << "  Y_inf upper bound    " << sig7(b.bound) << "  (optimal dilation "
            << sig7(b.lambda0) << ")\n"
            << "  Y_{m+n}              " << sig7(y_sphere) << '\n'
            << "  bound < Y_{m+n}: " << (below ? "PASS" : "FAIL") << '\n';
      if (m == 2 && n == 2) {
        *sink << "  L < 2.427458: " << (b.functional < 2.427458 ? "PASS" : "FAIL") << '\n';
      }
      break;
  }
  return kSuccess;
}

int cmd_periodic(int n, double r, const CommonFlags& common, const std::string& dump_path,
                 std::ostream& out, std::ostream& err) {
  if (n < 3) throw UsageError("periodic needs n >= 3");
  if (!(r > 0.0)) throw UsageError("periodic needs r > 0");
  constexpr std::size_t kListed = 10;
  const double u_c = constant_solution(n);
  const double t_min = harmonic_period(n);
  const PeriodicSolutions sols = periodic_solutions(n, r, kListed);
  const S1YamabeEstimate estimate = s1_yamabe_estimate(n, r);

  if (!dump_path.empty()) {
    if (sols.solutions.empty()) {
      err << "note: no nonconstant orbit for this radius; nothing dumped\n";
    } else {
      const CircleOrbit& orbit = sols.solutions.front().orbit;
      const OrbitTrace trace = integrate_orbit(n, orbit.u_max, orbit.period);
      write_dump(dump_path, [&](std::ostream& s) { write_orbit(s, trace); });
    }
  }

  Sink sink(out, common.out_path);
  switch (parse_format(common.format)) {
    case Format::kJson: {
      ordered_json orbits = ordered_json::array();
      for (const auto& s : sols.solutions) {
        orbits.push_back({{"k", s.k},
                          {"u_min", num7(s.orbit.u_min)},
                          {"u_max", num7(s.orbit.u_max)},
                          {"period", num7(s.orbit.period)},
                          {"energy", num7(s.orbit.energy)}});
      }
      ordered_json j{{"n", n},
                     {"r", r},
                     {"u_const", num7(u_c)},
                     {"t_min", num7(t_min)},
                     {"count", sols.total},
                     {"orbits", orbits},
                     {"unresolved", sols.unresolved},
                     {"s1_yamabe_estimate", num7(estimate.value)},
                     {"y_sphere", num7(yamabe_sphere(n))}};
      *sink << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      *sink << "k,u_min,u_max,period,energy\n";
      for (const auto& s : sols.solutions) {
        *sink << s.k << ',' << sig7(s.orbit.u_min) << ',' << sig7(s.orbit.u_max) << ','
              << sig7(s.orbit.period) << ',' << sig7(s.orbit.energy) << '\n';
      }
      break;
    case Format::kText:
      *sink << "circle factor, n = " << n << ", r = " << sig7(r) << '\n'
            << "  constant solution u_c    " << sig7(u_c) << '\n'
            << "  minimal period T_min     " << sig7(t_min) << '\n'
            << "  nonconstant solutions    " << sols.total << '\n';
      for (const auto& s : sols.solutions) {
        *sink << "    k = " << s.k << ": period " << sig7(s.orbit.period) << ", u in ["
              << sig7(s.orbit.u_min) << ", " << sig7(s.orbit.u_max) << "]\n";
      }
      if (sols.total > static_cast<std::int64_t>(sols.solutions.size() + sols.unresolved)) {
        *sink << "    ... " << sols.total - static_cast<std::int64_t>(sols.solutions.size()) -
                                   sols.unresolved
              << " more\n";
      }
      if (sols.unresolved > 0) {
        *sink << "    " << sols.unresolved << " orbit(s) too close to the separatrix to resolve\n";
      }
      *sink << "  S^1-Yamabe estimate      " << sig7(estimate.value)
            << (estimate.best_k == 0 ? "  (constant solution)" : "") << '\n'
            << "  Y_n                      " << sig7(yamabe_sphere(n)) << '\n';
      break;
  }
  return kSuccess;
}

int cmd_constants(const CommonFlags& common, std::ostream& out) {
  const ReferenceConstants ref = reference_constants();
  Sink sink(out, common.out_path);
  const Format format = parse_format(common.format);
  if (format == Format::kJson) {
    ordered_json spheres = ordered_json::array();
    for (int k = 3; k <= 12; ++k) {
      spheres.push_back({{"k", k},
                         {"sphere_volume", num7(sphere_volume(k))},
                         {"yamabe_sphere", num7(yamabe_sphere(k))},
                         {"sobolev_constant", num7(sobolev_constant(k))}});
    }
    ordered_json j{{"y_cp2", num7(ref.y_cp2)},
                   {"y_s2xs2_product", num7(ref.y_s2xs2_product)},
                   {"spheres", spheres}};
    *sink << j.dump(2) << '\n';
    return kSuccess;
  }
  if (format == Format::kCsv) {
    *sink << "k,sphere_volume,yamabe_sphere,sobolev_constant\n";
    for (int k = 3; k <= 12; ++k) {
      *sink << k << ',' << sig7(sphere_volume(k)) << ',' << sig7(yamabe_sphere(k)) << ','
            << sig7(sobolev_constant(k)) << '\n';
    }
    return kSuccess;
  }
  *sink << "Y(CP^2) = 12 sqrt(2) pi          " << sig7(ref.y_cp2) << '\n'
        << "Y(S^2 x S^2, product) = 16 pi    " << sig7(ref.y_s2xs2_product) << '\n'
        << "  k   Vol(S^k)      Y_k           sigma_k\n";
  char line[96];
  for (int k = 3; k <= 12; ++k) {
    std::snprintf(line, sizeof line, "%3d   %-12.7g  %-12.7g  %-12.7g\n", k, sphere_volume(k),
                  yamabe_sphere(k), sobolev_constant(k));
    *sink << line;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gagliardo-Nirenberg constants and limiting Yamabe constants of products",
               "gnyamabe"};
  app.require_subcommand(1, 1);

  int m = 0;
  int n = 0;
  int max_dim = 9;
  unsigned threads = 0;
  double r = 0.0;
  std::string dump_path;
  std::string profile_path;
  CommonFlags gs_io, table_io, bound_io, periodic_io, constants_io;
  SolverFlags solver;

  auto* gs = app.add_subcommand("ground-state", "Locate the ground state for (m, n)");
  gs->add_option("m", m, "Dimension of the compact factor")->required();
  gs->add_option("n", n, "Dimension of the Euclidean factor")->required();
  gs->add_option("--dump", dump_path, "Write (t, h, h') rows of the profile to PATH");
  add_solver(gs, solver);
  add_common(gs, gs_io, "text");

  auto* table = app.add_subcommand("table", "Constants table for all m, n >= 2 with m + n <= K");
  table->add_option("--max-dim", max_dim, "Largest total dimension K")->capture_default_str();
  table->add_option("--threads", threads, "Worker threads (0 = hardware)");
  add_solver(table, solver);
  add_common(table, table_io, "csv");

  auto* bound = app.add_subcommand("bound", "Upper bound from a piecewise-linear test function");
  bound->add_option("profile", profile_path, "File of \"t h\" rows")->required();
  bound->add_option("m", m, "Dimension of the sphere factor")->required();
  bound->add_option("n", n, "Dimension of the Euclidean factor")->required();
  add_common(bound, bound_io, "text");

  auto* periodic = app.add_subcommand("periodic", "Periodic solutions on M^{n-1} x S^1_r");
  periodic->add_option("n", n, "Total dimension")->required();
  periodic->add_option("r", r, "Circle radius")->required();
  periodic->add_option("--dump", dump_path, "Write (t, u, u') rows of the k = 1 orbit to PATH");
  add_common(periodic, periodic_io, "text");

  auto* constants = app.add_subcommand("constants", "Sphere and reference constants");
  add_common(constants, constants_io, "text");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    } else {
      err << app.help();
    }
    return kUsageError;
  }

  try {
    if (*gs) return cmd_ground_state(m, n, solver, gs_io, dump_path, out);
    if (*table) return cmd_table(max_dim, solver, threads, table_io, out, err);
    if (*bound) return cmd_bound(profile_path, m, n, bound_io, out);
    if (*periodic) return cmd_periodic(n, r, periodic_io, dump_path, out, err);
    if (*constants) return cmd_constants(constants_io, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ProfileParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kUsageError;
}

}  // namespace gnyamabe::cli
