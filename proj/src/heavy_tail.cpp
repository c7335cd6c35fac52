#include "csopt/heavy_tail.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace csopt {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void bad_param(const std::string& what) {
  throw std::invalid_argument("DistributionSpec: " + what);
}

}  // namespace

std::string to_string(DistKind kind) {
  switch (kind) {
    case DistKind::levy: return "levy";
    case DistKind::mittag_leffler: return "ml";
    case DistKind::pareto: return "pareto";
    case DistKind::cauchy: return "cauchy";
    case DistKind::weibull: return "weibull";
  }
  throw std::invalid_argument("unknown DistKind");
}

DistKind dist_kind_from_string(std::string_view name) {
  if (name == "levy") return DistKind::levy;
  if (name == "ml" || name == "mittag-leffler") return DistKind::mittag_leffler;
  if (name == "pareto") return DistKind::pareto;
  if (name == "cauchy") return DistKind::cauchy;
  if (name == "weibull") return DistKind::weibull;
  throw std::invalid_argument("unknown distribution name: " + std::string(name));
}

void DistributionSpec::validate() const {
  switch (kind) {
    case DistKind::levy:
      if (!(p1 > 0.0 && p1 <= 2.0)) bad_param("levy requires 0 < lambda <= 2");
      break;
    case DistKind::mittag_leffler:
      if (!(p1 > 0.0 && p1 <= 1.0)) bad_param("mittag-leffler requires 0 < beta <= 1");
      if (!(p2 > 0.0)) bad_param("mittag-leffler requires gamma > 0");
      break;
    case DistKind::pareto:
      if (!(p1 > 0.0)) bad_param("pareto requires shape a > 0");
      if (!(p2 > 0.0)) bad_param("pareto requires scale b > 0");
      break;
    case DistKind::cauchy:
      if (!(p2 > 0.0)) bad_param("cauchy requires scale sigma > 0");
      break;
    case DistKind::weibull:
      if (!(p1 > 0.0)) bad_param("weibull requires shape xi > 0");
      if (!(p2 > 0.0)) bad_param("weibull requires scale kappa > 0");
      break;
  }
}

double mantegna_phi(double lambda) {
  if (!(lambda > 0.0) || lambda > 2.0)
    throw std::domain_error("mantegna_phi: lambda must lie in (0,2]");
  const double num = std::tgamma(1.0 + lambda) * std::sin(kPi * lambda / 2.0);
  const double den =
      std::tgamma((1.0 + lambda) / 2.0) * lambda * std::pow(2.0, (lambda - 1.0) / 2.0);
  return std::pow(num / den, 1.0 / lambda);
}

namespace {

double levy_from(double phi, double inv_lambda, double normal_mu, double normal_v) {
  return phi * normal_mu / std::pow(std::abs(normal_v), inv_lambda);
}

// beta == 1 short-circuits to the exponential reduction so shared uniform
// streams reproduce -gamma*ln(u) bit for bit.
double ml_from(double beta, double gamma, double inv_beta, double sin_a, double cos_a,
               double u, double tan_av) {
  if (beta == 1.0) return -gamma * std::log(u);
  const double bracket = sin_a / tan_av - cos_a;
  return -gamma * std::log(u) * std::pow(bracket, inv_beta);
}

}  // namespace

double levy_step(double lambda, double normal_mu, double normal_v) {
  if (!(lambda > 0.0) || lambda >= 2.0)
    throw std::domain_error("levy_step: lambda must lie in (0,2)");
  if (normal_v == 0.0) throw std::invalid_argument("levy_step: zero denominator draw");
  return levy_from(mantegna_phi(lambda), 1.0 / lambda, normal_mu, normal_v);
}

double mittag_leffler_step(double beta, double gamma, double u, double v) {
  if (!(beta > 0.0 && beta <= 1.0)) throw std::domain_error("mittag_leffler_step: beta");
  if (!(gamma > 0.0)) throw std::domain_error("mittag_leffler_step: gamma");
  const double a = beta * kPi;
  const double t = std::tan(a * v);
  if (!std::isfinite(t) || t == 0.0)
    throw std::invalid_argument("mittag_leffler_step: singular tangent draw");
  return ml_from(beta, gamma, 1.0 / beta, std::sin(a), std::cos(a), u, t);
}

double pareto_step(double a, double b, double u) {
  return b * std::pow(1.0 - u, -1.0 / a);
}

double cauchy_step(double mu, double sigma, double u) {
  return mu + 0.5 * sigma * std::tan(kPi * (u - 0.5));
}

double weibull_step(double xi, double kappa, double u) {
  return kappa * std::pow(-std::log(u), 1.0 / xi);
}

double apply_sign(double raw, double coin_u) {
  const double mag = std::abs(raw);
  return coin_u < 0.5 ? -mag : mag;
}

double sample_levy(double lambda, RandomStream& stream) {
  return StepSampler({DistKind::levy, lambda, 0.0})(stream);
}

double sample_mittag_leffler(double beta, double gamma, RandomStream& stream) {
  return StepSampler({DistKind::mittag_leffler, beta, gamma})(stream);
}

double sample_pareto(double a, double b, RandomStream& stream) {
  return StepSampler({DistKind::pareto, a, b})(stream);
}

double sample_cauchy(double mu, double sigma, RandomStream& stream) {
  return StepSampler({DistKind::cauchy, mu, sigma})(stream);
}

double sample_weibull(double xi, double kappa, RandomStream& stream) {
  return StepSampler({DistKind::weibull, xi, kappa})(stream);
}

double sample(const DistributionSpec& spec, RandomStream& stream) {
  return StepSampler(spec)(stream);
}

StepSampler::StepSampler(const DistributionSpec& spec) : spec_(spec) {
  spec_.validate();
  switch (spec_.kind) {
    case DistKind::levy:
      if (spec_.p1 >= 2.0)
        throw std::domain_error("StepSampler: lambda = 2 degenerates (phi = 0); sampling requires lambda < 2");
      c1_ = mantegna_phi(spec_.p1);
      c2_ = 1.0 / spec_.p1;
      break;
    case DistKind::mittag_leffler:
      c1_ = spec_.p1 * kPi;          // a = beta*pi
      c2_ = std::sin(c1_);
      c3_ = std::cos(c1_);
      c4_ = 1.0 / spec_.p1;
      break;
    case DistKind::pareto:
      c1_ = -1.0 / spec_.p1;
      break;
    case DistKind::cauchy:
      c1_ = 0.5 * spec_.p2;
      break;
    case DistKind::weibull:
      c1_ = 1.0 / spec_.p1;
      break;
  }
}

double StepSampler::operator()(RandomStream& stream) const {
  double value = 0.0;
  switch (spec_.kind) {
    case DistKind::levy: {
      const double mu = stream.normal();
      double v = stream.normal();
      while (v == 0.0) v = stream.normal();
      value = levy_from(c1_, c2_, mu, v);
      break;
    }
    case DistKind::mittag_leffler: {
      const double u = stream.uniform_open01();
      double t;
      do {
        t = std::tan(c1_ * stream.uniform_open01());
      } while (!std::isfinite(t) || t == 0.0);
      value = ml_from(spec_.p1, spec_.p2, c4_, c2_, c3_, u, t);
      break;
    }
    case DistKind::pareto:
      value = spec_.p2 * std::pow(1.0 - stream.uniform_open01(), c1_);
      break;
    case DistKind::cauchy: {
      double t;
      do {
        t = std::tan(kPi * (stream.uniform_open01() - 0.5));
      } while (!std::isfinite(t));
      value = spec_.p1 + c1_ * t;
      break;
    }
    case DistKind::weibull:
      value = spec_.p2 * std::pow(-std::log(stream.uniform_open01()), c1_);
      break;
  }
  if (spec_.symmetrize) value = apply_sign(value, stream.uniform_open01());
  return value;
}

bool has_closed_form_tail(const DistributionSpec& spec) {
  switch (spec.kind) {
    case DistKind::pareto:
    case DistKind::cauchy:
    case DistKind::weibull:
      return true;
    case DistKind::mittag_leffler:
      return spec.p1 == 1.0;  // exponential reduction
    case DistKind::levy:
      return false;
  }
  return false;
}

double log_survival(const DistributionSpec& spec, double x) {
  spec.validate();
  switch (spec.kind) {
    case DistKind::pareto:
      return x <= spec.p2 ? 0.0 : spec.p1 * std::log(spec.p2 / x);
    case DistKind::cauchy: {
      const double t = 2.0 * (x - spec.p1) / spec.p2;
      // complement identity avoids the 1/2 - 1/2 cancellation far out
      if (t > 0.0) return std::log(std::atan(1.0 / t) / kPi);
      return std::log(0.5 - std::atan(t) / kPi);
    }
    case DistKind::weibull:
      return x <= 0.0 ? 0.0 : -std::pow(x / spec.p2, spec.p1);
    case DistKind::mittag_leffler:
      if (spec.p1 == 1.0) return x <= 0.0 ? 0.0 : -x / spec.p2;
      break;
    case DistKind::levy:
      break;
  }
  throw std::invalid_argument("log_survival: no closed-form tail for " + to_string(spec.kind));
}

double survival(const DistributionSpec& spec, double x) {
  return std::exp(log_survival(spec, x));
}

double cdf(const DistributionSpec& spec, double x) {
  spec.validate();
  if (spec.symmetrize)
    throw std::invalid_argument("cdf: defined for the one-sided law; clear symmetrize");
  switch (spec.kind) {
    case DistKind::pareto:
      return x < spec.p2 ? 0.0 : -std::expm1(spec.p1 * std::log(spec.p2 / x));
    case DistKind::cauchy:
      return 0.5 + std::atan(2.0 * (x - spec.p1) / spec.p2) / kPi;
    case DistKind::weibull:
      return x <= 0.0 ? 0.0 : -std::expm1(-std::pow(x / spec.p2, spec.p1));
    case DistKind::mittag_leffler:
      if (spec.p1 == 1.0) return x <= 0.0 ? 0.0 : -std::expm1(-x / spec.p2);
      break;
    case DistKind::levy:
      break;
  }
  throw std::invalid_argument("cdf: no closed form for " + to_string(spec.kind));
}

bool tail_dominates_exponential(const DistributionSpec& spec, double lambda_exp,
                                std::span<const double> x_grid) {
  spec.validate();
  if (!has_closed_form_tail(spec))
    throw std::invalid_argument("tail_dominates_exponential: no closed-form tail for " +
                                to_string(spec.kind));
  if (x_grid.size() < 2)
    throw std::invalid_argument("tail_dominates_exponential: grid needs >= 2 points");
  if (!(x_grid.front() > 0.0))
    throw std::invalid_argument("tail_dominates_exponential: grid must be positive");
  double prev = log_survival(spec, x_grid.front()) + lambda_exp * x_grid.front();
  for (std::size_t i = 1; i < x_grid.size(); ++i) {
    if (!(x_grid[i] > x_grid[i - 1]))
      throw std::invalid_argument("tail_dominates_exponential: grid must increase");
    const double cur = log_survival(spec, x_grid[i]) + lambda_exp * x_grid[i];
    if (!(cur > prev)) return false;
    prev = cur;
  }
  return true;
}

}  // namespace csopt
