#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csopt/benchmarks.hpp"
#include "csopt/heavy_tail.hpp"
#include "csopt/random.hpp"

namespace csopt {

/// One candidate solution: position inside the problem box plus its fitness.
struct Nest {
  std::vector<double> position;
  double fitness = 0.0;
};

struct CSConfig {
  int np = 15;                    // population size
  double pa = 0.25;               // discovery probability
  double alpha = 0.01;            // global-walk step size
  DistributionSpec dist{DistKind::levy, 1.5, 0.0};
  long long max_fes = 0;          // evaluation budget, >= np
  std::uint64_t seed = 0;
  long long checkpoint_stride = 0;  // 0 -> np
  // Local-walk randomization granularity. Per-dimension (r, eps) pairs are
  // the default: the single-scalar reading leaves three quarters of the
  // discovery phase idle and demonstrably cannot reach the reported
  // convergence depths. The scalar reading stays available behind false.
  bool local_per_dimension = true;
  std::optional<std::vector<double>> initial_guess;  // replaces nest 0

  void validate() const;
};

/// Seeded run output: best-fitness trajectory against evaluation count,
/// plus the final best nest. Serializes via the experiment harness.
struct RunRecord {
  std::string config_fingerprint;
  std::uint64_t seed = 0;
  std::vector<std::pair<long long, double>> trajectory;  // (fes, best fitness)
  Nest final_best;
  long long fes_used = 0;
};

std::string config_fingerprint(const CSConfig& config);

/// NP nests uniform in the box, all evaluated. Consumes np*dim uniforms
/// before any evaluation; an initial_guess overwrites nest 0's position.
std::vector<Nest> initialize(const BenchmarkProblem& problem, const CSConfig& config,
                             RandomStream& stream);

// Pure walk kernels with caller-supplied random inputs; results are clamped
// to [lower, upper] componentwise.
std::vector<double> global_step(std::span<const double> x, std::span<const double> x_best,
                                double alpha, std::span<const double> draws,
                                std::span<const double> lower, std::span<const double> upper);
std::vector<double> local_step(std::span<const double> x, std::span<const double> x_j,
                               std::span<const double> x_k, double pa, double r, double eps,
                               std::span<const double> lower, std::span<const double> upper);

/// Stream-driven walks: one heavy-tailed draw per dimension for the global
/// walk; (r, eps) pairs per dimension or per nest for the local walk,
/// following config.local_per_dimension.
std::vector<double> global_walk(const Nest& nest, const Nest& best,
                                const BenchmarkProblem& problem, const CSConfig& config,
                                RandomStream& stream);
std::vector<double> local_walk(const Nest& nest, const Nest& partner_j, const Nest& partner_k,
                               const BenchmarkProblem& problem, const CSConfig& config,
                               RandomStream& stream);

/// Evaluates the candidate and keeps the strictly better of the two; ties
/// keep the incumbent. Costs exactly one objective evaluation.
Nest greedy_select(const Nest& current, std::span<const double> candidate,
                   const BenchmarkProblem& problem);

/// Full run: alternating global and local phases with greedy replacement,
/// best-so-far refreshed at phase boundaries, immediate stop when the
/// evaluation budget is reached (mid-phase allowed).
RunRecord run(const BenchmarkProblem& problem, const CSConfig& config);

/// Named walk distributions: cs, csml, csp, csc, csw.
DistributionSpec make_variant(std::string_view name);

const std::vector<std::string>& variant_names();

}  // namespace csopt
