#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gnyamabe/profile_io.hpp"

using namespace gnyamabe;

namespace {

PiecewiseLinearProfile parse(const std::string& text) {
  std::istringstream in(text);
  return read_piecewise_profile(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ProfileParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("reads comments, blank lines and numbers") {
  const PiecewiseLinearProfile p = parse("# header\n\n0 1.5\n  0.5\t1e-1 \n1.0 0\n");
  REQUIRE(p.ts.size() == 3);
  CHECK(p.ts[1] == 0.5);
  CHECK(p.hs[1] == 0.1);
  CHECK(p.hs.back() == 0.0);
}

TEST_CASE("errors name the offending line") {
  CHECK(error_line("0 1\n0.5 0.5\n0.4 0\n") == 3);
  CHECK(error_line("0.1 1\n1 0\n") == 1);
  CHECK(error_line("0 1\n1 -0.5\n2 0\n") == 2);
  CHECK(error_line("0 1\n# c\n1 x\n") == 3);
  CHECK(error_line("0 1\n1 2 3\n") == 2);
  CHECK(error_line("0 1\n1 0.5\n") == 2);
  CHECK(error_line("0 0\n") == 0);
  try {
    parse("0 1\n0.5 0.5\n0.4 0\n");
  } catch (const ProfileParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("bundled profile") {
  const PiecewiseLinearProfile p =
      load_piecewise_profile(std::filesystem::path(GNYAMABE_DATA_DIR) / "gn22_test_profile.dat");
  CHECK(p.ts.size() == 22);
  p.validate();
  CHECK_THROWS_AS(load_piecewise_profile("/nonexistent/profile.dat"), ProfileParseError);
}

TEST_CASE("triples round trip") {
  const std::vector<double> t{0.0, 0.25, 1.0 / 3.0};
  const std::vector<double> h{2.0, 1.5, 1e-7};
  const std::vector<double> dh{0.0, -0.5, -1e-7};
  std::ostringstream out;
  write_triples(out, t, h, dh);
  std::istringstream in(out.str());
  for (std::size_t i = 0; i < t.size(); ++i) {
    double a, b, c;
    REQUIRE(static_cast<bool>(in >> a >> b >> c));
    CHECK(a == doctest::Approx(t[i]).epsilon(1e-12));
    CHECK(b == doctest::Approx(h[i]).epsilon(1e-12));
    CHECK(c == doctest::Approx(dh[i]).epsilon(1e-12));
  }
  double extra;
  CHECK_FALSE(static_cast<bool>(in >> extra));
}
