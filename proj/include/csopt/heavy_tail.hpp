#pragma once

#include <span>
#include <string>
#include <string_view>

#include "csopt/random.hpp"

namespace csopt {

enum class DistKind { levy, mittag_leffler, pareto, cauchy, weibull };

std::string to_string(DistKind kind);
DistKind dist_kind_from_string(std::string_view name);  // levy|ml|pareto|cauchy|weibull

/// Which heavy-tailed law drives a random walk, with its two parameters.
///
/// Parameter meaning by kind:
///   levy            p1 = stability index lambda in (0,2], p2 unused
///   mittag_leffler  p1 = index beta in (0,1],  p2 = scale gamma > 0
///   pareto          p1 = shape a > 0,          p2 = scale b > 0
///   cauchy          p1 = location mu,          p2 = scale sigma > 0
///   weibull         p1 = shape xi > 0,         p2 = scale kappa > 0
///                   (heavy-tailed iff xi < 1)
///
/// symmetrize attaches an independent fair-coin sign to the draw's
/// magnitude; off by default, matching the one-sided forms as printed.
struct DistributionSpec {
  DistKind kind = DistKind::levy;
  double p1 = 1.5;
  double p2 = 0.0;
  bool symmetrize = false;

  void validate() const;  // throws std::invalid_argument on a bad parameter
};

/// Mantegna scale factor phi(lambda) for Levy-stable step generation.
/// Defined on (0,2]; degenerates to ~0 at lambda = 2 (sin(pi) vanishes),
/// which is why sampling itself rejects lambda = 2.
double mantegna_phi(double lambda);

// Deterministic step kernels: the caller supplies the random inputs, so
// hand-computed values are directly checkable. The stream-driven samplers
// below delegate to these.
double levy_step(double lambda, double normal_mu, double normal_v);
double mittag_leffler_step(double beta, double gamma, double u, double v);
double pareto_step(double a, double b, double u);
double cauchy_step(double mu, double sigma, double u);
double weibull_step(double xi, double kappa, double u);

/// Sign composition used by symmetrize: coin_u < 1/2 flips the magnitude
/// negative, otherwise keeps it positive.
double apply_sign(double raw, double coin_u);

// One draw per call. Uniform inputs come from the open interval (0,1);
// draws that would hit a singular point (tan overflow, zero normal
// denominator) are resampled.
double sample_levy(double lambda, RandomStream& stream);
double sample_mittag_leffler(double beta, double gamma, RandomStream& stream);
double sample_pareto(double a, double b, RandomStream& stream);
double sample_cauchy(double mu, double sigma, RandomStream& stream);
double sample_weibull(double xi, double kappa, RandomStream& stream);

/// Dispatch over the five laws; applies the symmetrize flag (magnitude
/// drawn first, then the sign coin).
double sample(const DistributionSpec& spec, RandomStream& stream);

/// Per-spec constants precomputed once; the walk engines' hot path.
/// sample() and the per-law functions share this implementation, so the
/// draw sequence is identical either way.
class StepSampler {
 public:
  explicit StepSampler(const DistributionSpec& spec);
  double operator()(RandomStream& stream) const;
  const DistributionSpec& spec() const { return spec_; }

 private:
  DistributionSpec spec_;
  double c1_ = 0.0, c2_ = 0.0, c3_ = 0.0, c4_ = 0.0;
};

/// True when the law's survival function has a closed form here:
/// Pareto, Cauchy, Weibull, and the exponential reduction of
/// Mittag-Leffler at beta = 1.
bool has_closed_form_tail(const DistributionSpec& spec);

/// log of the right-tail survival function T(x) = P(X > x), computed
/// analytically per law (no exp/log round trip). Throws for laws without
/// a closed-form tail (Levy, Mittag-Leffler with beta < 1).
double log_survival(const DistributionSpec& spec, double x);
double survival(const DistributionSpec& spec, double x);

/// Distribution function of the one-sided law as printed; rejects
/// symmetrized specs (strip the flag to test a magnitude distribution).
double cdf(const DistributionSpec& spec, double x);

/// Heavy-tail certificate against a fixed exponential rate: true iff
/// log T(x) + lambda_exp * x is strictly increasing across consecutive
/// grid points. Requires a closed-form tail and an increasing positive
/// grid of at least two points.
bool tail_dominates_exponential(const DistributionSpec& spec, double lambda_exp,
                                std::span<const double> x_grid);

}  // namespace csopt
