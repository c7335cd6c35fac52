#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "csopt/benchmarks.hpp"

using namespace csopt;

namespace {

double value_at_optimizer(const BenchmarkProblem& p) {
  REQUIRE(p.known_optimizer.has_value());
  return p.evaluate(*p.known_optimizer);
}

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "csopt_bench_test";
  std::filesystem::create_directories(dir);
  return dir;
}

void write_text(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p);
  out << content;
}

}  // namespace

TEST_CASE("suite order and shape") {
  for (int dim : {10, 30, 50}) {
    const auto problems = suite(dim);
    REQUIRE(problems.size() == 20);
    CHECK(problems.front().name == "F_sph");
    CHECK(problems.back().name == "F10");
    for (const auto& p : problems) {
      CHECK(p.dim == dim);
      REQUIRE(p.lower.size() == static_cast<std::size_t>(dim));
      for (int j = 0; j < dim; ++j) CHECK(p.lower[j] < p.upper[j]);
    }
  }
}

TEST_CASE("classical optima") {
  for (int dim : {10, 30, 50}) {
    for (const char* name : {"F_sph", "F_ros", "F_ack", "F_grw", "F_ras", "F_sch", "F_sal",
                             "F_wht", "F_pn1", "F_pn2"}) {
      const auto p = get_problem(name, dim);
      const double residual = value_at_optimizer(p) - p.optimum_value;
      INFO(name << " D=" << dim << " residual=" << residual);
      CHECK(residual >= 0.0);
      if (p.name == "F_pn1" || p.name == "F_pn2")
        CHECK(residual <= 1e-30);
      else
        CHECK(residual <= 1e-9);
    }
  }
}

TEST_CASE("single-point spec values") {
  const int d = 30;
  CHECK(get_problem("F_sph", d).evaluate(std::vector<double>(d, 0.0)) == 0.0);
  CHECK(get_problem("F_ros", d).evaluate(std::vector<double>(d, 1.0)) == 0.0);

  // penalized residues at the optimizer are the floating sin(pi) floor
  const double pn1 = get_problem("F_pn1", d).evaluate(std::vector<double>(d, -1.0));
  CHECK(pn1 > 1.4e-32);
  CHECK(pn1 < 1.7e-32);
  const double pn2 = get_problem("F_pn2", d).evaluate(std::vector<double>(d, 1.0));
  CHECK(pn2 > 1.25e-32);
  CHECK(pn2 < 1.45e-32);

  CHECK(get_problem("F_sch", d).evaluate(std::vector<double>(d, 420.968746)) < 1e-3);
}

TEST_CASE("registry metadata") {
  const auto ack = get_problem("F_ack", 30);
  CHECK(ack.lower.front() == -32.0);
  CHECK(ack.upper.front() == 32.0);
  CHECK(ack.optimum_value == 0.0);
  const auto ras = get_problem("F_ras", 10);
  CHECK(ras.lower.front() == -5.12);
  CHECK(ras.upper.front() == 5.12);
  CHECK_THROWS_AS(get_problem("F_nope", 10), std::invalid_argument);
  CHECK_THROWS_AS(get_problem("F_sph", 0), std::invalid_argument);
}

TEST_CASE("evaluation dimension checks and purity") {
  const auto p = get_problem("F_sph", 10);
  CHECK_THROWS_AS(p.evaluate(std::vector<double>(9, 0.0)), std::invalid_argument);
  const std::vector<double> x(10, 1.25);
  CHECK(p.evaluate(x) == p.evaluate(x));
}

TEST_CASE("shift consistency of the synthetic cec problems") {
  for (int dim : {10, 30}) {
    for (const char* name : {"F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "F9", "F10"}) {
      const auto p = get_problem(name, dim);
      REQUIRE(p.shift.has_value());
      const double at_shift = p.evaluate(*p.shift);
      INFO(name << " D=" << dim);
      CHECK(std::abs(at_shift - p.f_bias) <= 1e-9);
      for (int j = 0; j < dim; ++j) {
        CHECK((*p.shift)[j] >= p.lower[j]);
        CHECK((*p.shift)[j] <= p.upper[j]);
      }
    }
  }
}

TEST_CASE("synthetic rotations are orthogonal") {
  for (const char* name : {"F3", "F7", "F8", "F10"}) {
    const auto p = get_problem(name, 30);
    REQUIRE(p.rotation.has_value());
    const auto& r = *p.rotation;
    double worst = 0.0;
    for (int i = 0; i < 30; ++i)
      for (int j = 0; j < 30; ++j) {
        double s = 0.0;
        for (int k = 0; k < 30; ++k) s += r[k][i] * r[k][j];
        worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
      }
    INFO(name);
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("loaded shift and rotation data") {
  const auto dir = temp_dir();
  const int d = 3;
  write_text(dir / "shift.txt", "1.5 -2.0 0.25 99 99\n");
  write_text(dir / "rot_a.txt", "0 1 0\n1 0 0\n0 0 -1\n");
  write_text(dir / "rot_b.txt", "1 0 0\n0 0 1\n0 -1 0\n");
  write_text(dir / "manifest_a.json",
             R"({"F3": {"shift": "shift.txt", "rotation": "rot_a.txt", "bias": -450}})");
  write_text(dir / "manifest_b.json",
             R"({"F3": {"shift": "shift.txt", "rotation": "rot_b.txt", "bias": -450}})");

  const auto a = get_problem("F3", d, SuiteManifest::load(dir / "manifest_a.json"));
  REQUIRE(a.shift.has_value());
  CHECK((*a.shift)[0] == 1.5);
  CHECK((*a.shift)[2] == 0.25);
  CHECK(a.f_bias == -450.0);
  CHECK(std::abs(a.evaluate(*a.shift) - a.f_bias) <= 1e-9);

  // the quadratic core is invariant under the rotation choice at the optimizer
  const auto b = get_problem("F3", d, SuiteManifest::load(dir / "manifest_b.json"));
  CHECK(a.evaluate(*a.shift) == b.evaluate(*b.shift));

  // F1 with data: evaluate(shift) equals the bias exactly at the optimum
  write_text(dir / "manifest_f1.json", R"({"F1": {"shift": "shift.txt"}})");
  const auto f1 = get_problem("F1", d, SuiteManifest::load(dir / "manifest_f1.json"));
  CHECK(f1.evaluate(*f1.shift) == f1.f_bias);
}

TEST_CASE("malformed and undersized data files") {
  const auto dir = temp_dir();
  write_text(dir / "short.txt", "1.0 2.0\n");
  write_text(dir / "bad.txt", "1.0 oops 3.0\n");
  write_text(dir / "m_short.json", R"({"F1": {"shift": "short.txt"}})");
  write_text(dir / "m_bad.json", R"({"F1": {"shift": "bad.txt"}})");
  write_text(dir / "m_missing.json", R"({"F1": {"shift": "no_such_file.txt"}})");
  CHECK_THROWS_AS(get_problem("F1", 3, SuiteManifest::load(dir / "m_short.json")),
                  std::runtime_error);
  CHECK_THROWS_AS(get_problem("F1", 3, SuiteManifest::load(dir / "m_bad.json")),
                  std::runtime_error);
  CHECK_THROWS_AS(get_problem("F1", 3, SuiteManifest::load(dir / "m_missing.json")),
                  std::runtime_error);
  // a non-orthogonal rotation is rejected
  write_text(dir / "skew.txt", "1 1 0\n0 1 0\n0 0 1\n");
  write_text(dir / "m_skew.json", R"({"F3": {"rotation": "skew.txt"}})");
  CHECK_THROWS_AS(get_problem("F3", 3, SuiteManifest::load(dir / "m_skew.json")),
                  std::runtime_error);
}

TEST_CASE("f5 optimum sits exactly on the pinned shift") {
  const auto p = get_problem("F5", 12);
  REQUIRE(p.shift.has_value());
  CHECK(p.evaluate(*p.shift) == p.f_bias);
  CHECK((*p.shift)[0] == -100.0);
  CHECK((*p.shift)[11] == 100.0);
}
