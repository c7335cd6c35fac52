#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "csopt/heavy_tail.hpp"
#include "support/oracles.hpp"

using namespace csopt;

namespace {

std::vector<double> draw_many(const DistributionSpec& spec, std::uint64_t seed, int n) {
  RandomStream stream(seed);
  const StepSampler draw(spec);
  std::vector<double> out(n);
  for (double& v : out) v = draw(stream);
  return out;
}

}  // namespace

TEST_CASE("uniform draws stay inside the open unit interval") {
  RandomStream stream(123);
  for (int i = 0; i < 1000000; ++i) {
    const double u = stream.uniform_open01();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("normal generator matches its distributional contract") {
  RandomStream stream(7);
  double sum = 0.0, sum2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = stream.normal();
    sum += z;
    sum2 += z * z;
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("mantegna phi") {
  CHECK(mantegna_phi(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  // frozen from a high-precision evaluation of the phi formula
  CHECK(std::abs(mantegna_phi(1.5) - 0.69657450255769679) < 1e-12);
  CHECK(std::abs(mantegna_phi(1.5) - 0.696575) < 1e-6);
  // lambda = 2 degenerates: sin(pi) vanishes analytically
  CHECK(mantegna_phi(2.0) >= 0.0);
  CHECK(mantegna_phi(2.0) < 1e-7);
  CHECK_THROWS_AS(mantegna_phi(0.0), std::domain_error);
  CHECK_THROWS_AS(mantegna_phi(-1.0), std::domain_error);
  CHECK_THROWS_AS(mantegna_phi(2.5), std::domain_error);
}

TEST_CASE("levy step kernel") {
  CHECK(levy_step(1.5, 0.0, 1.0) == 0.0);
  CHECK(levy_step(1.5, 0.5, 0.25) == doctest::Approx(0.87762887859249236).epsilon(1e-12));
  CHECK_THROWS_AS(levy_step(1.5, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(levy_step(2.0, 0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(StepSampler({DistKind::levy, 2.0, 0.0}), std::domain_error);
}

TEST_CASE("levy tail decays slower than a fitted exponential") {
  const auto draws = draw_many({DistKind::levy, 1.5, 0.0}, 20240817, 100000);
  auto survival_at = [&](double x) {
    int count = 0;
    for (const double v : draws)
      if (std::abs(v) > x) ++count;
    return static_cast<double>(count) / draws.size();
  };
  const double s2 = survival_at(2.0), s4 = survival_at(4.0);
  const double s8 = survival_at(8.0), s16 = survival_at(16.0);
  REQUIRE(s2 > 0.0);
  REQUIRE(s16 > 0.0);
  // exponential rate fitted through the first two grid points
  const double rate = -std::log(s4 / s2) / 2.0;
  CHECK(s8 > s2 * std::exp(-rate * 6.0));
  CHECK(s16 > s2 * std::exp(-rate * 14.0));
}

TEST_CASE("mittag-leffler step kernel") {
  const double u = std::exp(-1.0);
  // beta = 1 collapses to the exponential reduction, any v
  CHECK(mittag_leffler_step(1.0, 4.5, u, 0.7) == doctest::Approx(4.5).epsilon(1e-12));
  // sin(pi/2) = 1, tan(pi/4) = 1, cos(pi/2) = 0: bracket is exactly one
  CHECK(mittag_leffler_step(0.5, 1.0, u, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(mittag_leffler_step(1.5, 1.0, 0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(mittag_leffler_step(0.5, -1.0, 0.5, 0.5), std::domain_error);
}

TEST_CASE("mittag-leffler bracket stays positive") {
  for (int bi = 1; bi <= 9; ++bi) {
    const double beta = bi / 10.0;
    const double a = beta * std::acos(-1.0);
    for (int vi = 1; vi < 1000; ++vi) {
      const double v = vi / 1000.0;
      const double bracket = std::sin(a) / std::tan(a * v) - std::cos(a);
      REQUIRE(bracket > 0.0);
    }
  }
}

TEST_CASE("mittag-leffler reduction at beta = 1 is the exponential, bitwise") {
  RandomStream sampler_stream(99);
  RandomStream mirror(99);
  for (int i = 0; i < 100000; ++i) {
    const double tau = sample_mittag_leffler(1.0, 4.5, sampler_stream);
    const double u = mirror.uniform_open01();
    mirror.uniform_open01();  // the sampler's v draw
    REQUIRE(tau == -4.5 * std::log(u));
  }
}

TEST_CASE("mittag-leffler empirical cdf matches the series oracle") {
  // oracle self-check: at beta = 1 the series must equal 1 - exp(-x)
  for (double x : {0.1, 0.5, 1.0, 2.0, 5.0})
    CHECK(oracles::ml_series_cdf(x, 1.0, 1.0) ==
          doctest::Approx(1.0 - std::exp(-x)).epsilon(1e-12));

  const auto draws = draw_many({DistKind::mittag_leffler, 0.8, 4.5}, 4242, 100000);
  const double d = oracles::ks_distance_window(
      draws, [](double x) { return oracles::ml_series_cdf(x, 0.8, 4.5); }, 0.05, 0.95);
  CHECK(d < 0.01);
}

TEST_CASE("pareto step kernel") {
  // u -> 0 sits at the lower support point b
  CHECK(pareto_step(1.5, 4.5, 1e-300) == doctest::Approx(4.5).epsilon(1e-12));
  CHECK(pareto_step(1.5, 4.5, 0.75) == doctest::Approx(11.339289449053858).epsilon(1e-12));
}

TEST_CASE("cauchy step kernel") {
  CHECK(cauchy_step(0.8, 4.5, 0.5) == 0.8);  // median of a symmetric law
  CHECK(cauchy_step(0.8, 4.5, 0.75) == doctest::Approx(3.05).epsilon(1e-12));
}

TEST_CASE("weibull step kernel") {
  CHECK(weibull_step(0.3, 4.0, std::exp(-1.0)) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(weibull_step(0.3, 4.0, 0.5) == doctest::Approx(1.1789033310240642).epsilon(1e-12));
}

TEST_CASE("ks distances against the analytic cdfs") {
  const DistributionSpec pareto{DistKind::pareto, 1.5, 4.5};
  const DistributionSpec cauchy{DistKind::cauchy, 0.8, 4.5};
  const DistributionSpec weibull{DistKind::weibull, 0.3, 4.0};
  CHECK(oracles::ks_distance(draw_many(pareto, 11, 100000),
                             [&](double x) { return cdf(pareto, x); }) < 0.006);
  CHECK(oracles::ks_distance(draw_many(cauchy, 12, 100000),
                             [&](double x) { return cdf(cauchy, x); }) < 0.006);
  CHECK(oracles::ks_distance(draw_many(weibull, 13, 100000),
                             [&](double x) { return cdf(weibull, x); }) < 0.006);
}

TEST_CASE("inverse cdf round trip") {
  for (int i = 1; i <= 499; ++i) {
    const double u = 0.001 + 0.002 * i;  // grid in (0.001, 0.999)
    CHECK(std::abs(cdf({DistKind::pareto, 1.5, 4.5}, pareto_step(1.5, 4.5, u)) - u) < 1e-12);
    CHECK(std::abs(cdf({DistKind::cauchy, 0.8, 4.5}, cauchy_step(0.8, 4.5, u)) - u) < 1e-12);
    // the Weibull inverse is taken through its tail function
    CHECK(std::abs(survival({DistKind::weibull, 0.3, 4.0}, weibull_step(0.3, 4.0, u)) - u) <
          1e-12);
  }
}

TEST_CASE("one-sidedness before symmetrization") {
  const auto ml = draw_many({DistKind::mittag_leffler, 0.8, 4.5}, 21, 10000);
  for (const double v : ml) REQUIRE(v >= 0.0);
  const auto par = draw_many({DistKind::pareto, 1.5, 4.5}, 22, 10000);
  for (const double v : par) REQUIRE(v >= 4.5);
  const auto wei = draw_many({DistKind::weibull, 0.3, 4.0}, 23, 10000);
  for (const double v : wei) REQUIRE(v >= 0.0);
}

TEST_CASE("symmetrize composes an independent fair sign") {
  CHECK(apply_sign(4.0, 0.25) == -4.0);
  CHECK(apply_sign(4.0, 0.75) == 4.0);
  CHECK(apply_sign(-3.0, 0.75) == 3.0);
  CHECK(apply_sign(weibull_step(0.3, 4.0, std::exp(-1.0)), 0.1) ==
        doctest::Approx(-4.0).epsilon(1e-12));

  DistributionSpec spec{DistKind::weibull, 0.3, 4.0, true};
  auto draws = draw_many(spec, 31, 100000);
  int negatives = 0;
  for (double& v : draws) {
    if (v < 0.0) ++negatives;
    v = std::abs(v);
  }
  CHECK(negatives > 45000);
  CHECK(negatives < 55000);
  // magnitudes still follow the one-sided law
  const DistributionSpec one_sided{DistKind::weibull, 0.3, 4.0};
  CHECK(oracles::ks_distance(draws, [&](double x) { return cdf(one_sided, x); }) < 0.006);
}

TEST_CASE("cauchy sample median sits at the location parameter") {
  const auto draws = draw_many({DistKind::cauchy, 0.8, 4.5}, 41, 100000);
  CHECK(std::abs(oracles::median(draws) - 0.8) < 0.05);
}

TEST_CASE("sample dispatch is deterministic per seed") {
  const std::vector<DistributionSpec> specs = {
      {DistKind::levy, 1.5, 0.0},   {DistKind::mittag_leffler, 0.8, 4.5},
      {DistKind::pareto, 1.5, 4.5}, {DistKind::cauchy, 0.8, 4.5},
      {DistKind::weibull, 0.3, 4.0}};
  for (const auto& spec : specs) {
    const auto a = draw_many(spec, 77, 200);
    const auto b = draw_many(spec, 77, 200);
    REQUIRE(a == b);
  }
}

TEST_CASE("tail dominance over a fixed exponential") {
  const std::vector<double> far{10.0, 20.0, 40.0, 80.0};
  const std::vector<double> near{2.0, 4.0, 8.0, 16.0};
  CHECK(tail_dominates_exponential({DistKind::pareto, 1.5, 4.5}, 1.0, far));
  CHECK(tail_dominates_exponential({DistKind::weibull, 0.3, 4.0}, 0.5, far));
  // xi >= 1 is lighter than the exponential: -x^2 + x decreases
  CHECK_FALSE(tail_dominates_exponential({DistKind::weibull, 2.0, 1.0}, 1.0, near));
  CHECK(tail_dominates_exponential({DistKind::cauchy, 0.8, 4.5}, 1.0, far));
  // exponential reduction of mittag-leffler: rate 1/4.5 loses to rate 1
  CHECK(tail_dominates_exponential({DistKind::mittag_leffler, 1.0, 4.5}, 1.0, far));

  CHECK_THROWS_AS(tail_dominates_exponential({DistKind::levy, 1.5, 0.0}, 1.0, far),
                  std::invalid_argument);
  CHECK_THROWS_AS(tail_dominates_exponential({DistKind::mittag_leffler, 0.8, 4.5}, 1.0, far),
                  std::invalid_argument);
  const std::vector<double> single{4.0};
  CHECK_THROWS_AS(tail_dominates_exponential({DistKind::pareto, 1.5, 4.5}, 1.0, single),
                  std::invalid_argument);
  const std::vector<double> unsorted{4.0, 2.0};
  CHECK_THROWS_AS(tail_dominates_exponential({DistKind::pareto, 1.5, 4.5}, 1.0, unsorted),
                  std::invalid_argument);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(DistributionSpec({DistKind::levy, 0.0, 0.0}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(DistributionSpec({DistKind::mittag_leffler, 1.2, 1.0}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(DistributionSpec({DistKind::mittag_leffler, 0.5, 0.0}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(DistributionSpec({DistKind::pareto, -1.0, 1.0}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(DistributionSpec({DistKind::cauchy, 0.0, 0.0}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(DistributionSpec({DistKind::weibull, 0.3, -4.0}).validate(),
                  std::invalid_argument);
  CHECK_NOTHROW(DistributionSpec({DistKind::levy, 2.0, 0.0}).validate());
  CHECK_THROWS_AS(cdf({DistKind::weibull, 0.3, 4.0, true}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(cdf({DistKind::levy, 1.5, 0.0}, 1.0), std::invalid_argument);
}
