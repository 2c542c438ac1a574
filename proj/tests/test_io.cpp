#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "zonal/errors.hpp"
#include "zonal/io.hpp"

using namespace zonal;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("zonal_io_test_" + name);
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("kernel spec parsing: finite") {
  const auto j = nlohmann::json::parse(
      R"({"space": {"family": "sphere", "d": 2},
          "coeffs": {"type": "finite", "values": [[0, 1.0], [3, 2.0]]}})");
  const KernelExpansion e = validate_expansion(parse_kernel_spec(j));
  CHECK(e.space() == Space::sphere(2));
  CHECK(e.is_finite());
  CHECK(e.coefficient(0) == 1.0);
  CHECK(e.coefficient(3) == 2.0);
}

TEST_CASE("kernel spec parsing: geometric") {
  const auto j = nlohmann::json::parse(
      R"({"space": {"family": "circle", "d": 1},
          "coeffs": {"type": "geometric", "scale": 1.0, "ratio": 0.5,
                     "support": {"aps": [[2,0]], "added": [5], "removed": []}}})");
  const KernelExpansion e = validate_expansion(parse_kernel_spec(j));
  CHECK_FALSE(e.is_finite());
  CHECK(e.coefficient(2) == doctest::Approx(0.25));
  CHECK(e.coefficient(5) == doctest::Approx(1.0 / 32.0));
  CHECK(e.coefficient(3) == 0.0);
}

TEST_CASE("kernel spec round trip") {
  const auto j = nlohmann::json::parse(
      R"({"space": {"family": "quaternion_projective", "d": 8},
          "coeffs": {"type": "geometric", "scale": 2.0, "ratio": 0.25,
                     "support": {"aps": [[3,1]], "added": [], "removed": [4]}}})");
  const KernelExpansion e = validate_expansion(parse_kernel_spec(j));
  const KernelExpansion back = validate_expansion(parse_kernel_spec(kernel_spec_json(e)));
  CHECK(back.space() == e.space());
  for (long k = 0; k <= 20; ++k) CHECK(back.coefficient(k) == e.coefficient(k));
}

TEST_CASE("kernel spec errors") {
  CHECK_THROWS_AS(parse_kernel_spec(nlohmann::json::parse(R"({"coeffs": {}})")), InvalidArgument);
  CHECK_THROWS_AS(parse_kernel_spec(nlohmann::json::parse(
                      R"({"space": {"family": "dodecahedron", "d": 2},
                          "coeffs": {"type": "finite", "values": []}})")),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_kernel_spec(nlohmann::json::parse(
                      R"({"space": {"family": "sphere", "d": 2},
                          "coeffs": {"type": "smooth"}})")),
                  InvalidArgument);
  const auto bad = temp_file("missing.json");
  CHECK_THROWS_AS(read_kernel_spec(bad.string()), InvalidArgument);
}

TEST_CASE("points csv round trip") {
  const Space s = Space::complex_projective(4);
  const auto pts = random_points(s, 5, 31);
  const auto path = temp_file("points.csv");
  write_points_csv(path.string(), s, pts);
  const auto [space, back] = read_points_csv(path.string());
  CHECK(space == s);
  REQUIRE(back.size() == pts.size());
  for (size_t i = 0; i < pts.size(); ++i) CHECK(same_point(pts[i], back[i]));
  fs::remove(path);
}

TEST_CASE("points csv header and row validation") {
  const auto path = temp_file("bad_points.csv");
  write_text(path, "1.0,0.0,0.0\n");
  CHECK_THROWS_AS(read_points_csv(path.string()), InvalidArgument);
  write_text(path, "# space=sphere,d=2\n1.0,0.0\n");
  CHECK_THROWS_AS(read_points_csv(path.string()), InvalidArgument);
  write_text(path, "# space=sphere,d=2\n1.0,abc,0.0\n");
  CHECK_THROWS_AS(read_points_csv(path.string()), InvalidArgument);
  write_text(path, "# space=sphere,d=2\n1.0,0.0,0.0\n0.0,1.0,0.0\n");
  const auto [space, pts] = read_points_csv(path.string());
  CHECK(space == Space::sphere(2));
  CHECK(pts.size() == 2);
  fs::remove(path);
}

TEST_CASE("report serialization") {
  const Verdict v{VerdictKind::PositiveDefiniteNotStrict, "finitely many odd indices",
                  ParityWitness{1, true}};
  const auto j = verdict_json(v);
  CHECK(j["verdict"] == "positive_definite_not_strict");
  CHECK(j["witness"]["kind"] == "parity");
  CHECK(j["witness"]["missing_parity"] == "odd");

  GramReport r;
  r.n = 2;
  r.min_eig = 0.5;
  r.max_eig = 1.5;
  r.psd = true;
  r.tolerance = 1e-8;
  const auto gj = gram_report_json(r);
  CHECK(gj["n"] == 2);
  CHECK(gj["psd"] == true);
  CHECK(gj["residual"].is_null());

  const auto mj = temp_file("matrix.csv");
  Eigen::MatrixXd a(2, 2);
  a << 1, 2, 2, 4;
  write_matrix_csv(mj.string(), a);
  std::ifstream in(mj);
  std::string line;
  std::getline(in, line);
  CHECK(line == "1,2");
  fs::remove(mj);
}
