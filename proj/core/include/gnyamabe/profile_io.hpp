#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

#include "gnyamabe/functional.hpp"
#include "gnyamabe/ode.hpp"
#include "gnyamabe/periodic.hpp"

namespace gnyamabe {

/// Malformed piecewise-linear profile input. line() is 1-based; 0 means the
/// problem concerns the file as a whole.
class ProfileParseError : public std::runtime_error {
 public:
  ProfileParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// Reads "t h" pairs, one per line. Blank lines and lines starting with '#'
/// are skipped. t must increase strictly from 0, h must be >= 0 and the last
/// h must be 0.
PiecewiseLinearProfile read_piecewise_profile(std::istream& in);
PiecewiseLinearProfile load_piecewise_profile(const std::filesystem::path& path);

/// Three-column "t value derivative" rows.
void write_triples(std::ostream& out, std::span<const double> ts, std::span<const double> values,
                   std::span<const double> derivatives);
void write_profile(std::ostream& out, const RadialProfile& profile);
void write_orbit(std::ostream& out, const OrbitTrace& orbit);

}  // namespace gnyamabe
