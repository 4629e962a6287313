#include "gnyamabe/profile_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace gnyamabe {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool next_number(std::string_view& rest, double& value) {
  rest = trim(rest);
  if (rest.empty()) return false;
  const auto end = rest.find_first_of(" \t");
  const std::string_view token = rest.substr(0, end);
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return false;
  rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
  return true;
}

}  // namespace

ProfileParseError::ProfileParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      line_(line),
      detail_(what) {}

PiecewiseLinearProfile read_piecewise_profile(std::istream& in) {
  PiecewiseLinearProfile profile;
  std::string raw;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    double t = 0.0;
    double h = 0.0;
    if (!next_number(line, t) || !next_number(line, h) || !trim(line).empty()) {
      throw ProfileParseError(line_no, "expected two numbers \"t h\", got \"" + raw + "\"");
    }
    if (profile.ts.empty() && t != 0.0) {
      throw ProfileParseError(line_no, "first radius must be 0");
    }
    if (!profile.ts.empty() && !(t > profile.ts.back())) {
      throw ProfileParseError(line_no, "radius does not increase");
    }
    if (!(h >= 0.0)) throw ProfileParseError(line_no, "negative value");
    profile.ts.push_back(t);
    profile.hs.push_back(h);
    last_line = line_no;
  }
  if (profile.ts.size() < 2) throw ProfileParseError(0, "profile needs at least two rows");
  if (profile.hs.back() != 0.0) {
    throw ProfileParseError(last_line, "last value must be 0 (compact support)");
  }
  return profile;
}

PiecewiseLinearProfile load_piecewise_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ProfileParseError(0, "cannot open " + path.string());
  try {
    return read_piecewise_profile(in);
  } catch (const ProfileParseError& e) {
    throw ProfileParseError(e.line(), path.string() + ": " + e.detail());
  }
}

void write_triples(std::ostream& out, std::span<const double> ts, std::span<const double> values,
                   std::span<const double> derivatives) {
  char buf[96];
  for (std::size_t i = 0; i < ts.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12e %.12e %.12e\n", ts[i], values[i], derivatives[i]);
    out << buf;
  }
}

void write_profile(std::ostream& out, const RadialProfile& profile) {
  write_triples(out, profile.ts, profile.hs, profile.dhs);
}

void write_orbit(std::ostream& out, const OrbitTrace& orbit) {
  write_triples(out, orbit.ts, orbit.us, orbit.dus);
}

}  // namespace gnyamabe
