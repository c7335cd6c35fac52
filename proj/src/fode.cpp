#include "csopt/fode.hpp"

#include <cmath>
#include <limits>

namespace csopt {

void FinancialSystem::validate() const {
  if (!(h > 0.0)) throw std::invalid_argument("FinancialSystem: h must be positive");
  if (n < 1) throw std::invalid_argument("FinancialSystem: n must be >= 1");
  for (const double q : {q1, q2, q3})
    if (!(q > 0.0 && q <= 1.0))
      throw std::invalid_argument("FinancialSystem: orders must lie in (0,1]");
}

std::vector<double> gl_coefficients(double q, int count) {
  if (count < 1) throw std::invalid_argument("gl_coefficients: count must be positive");
  std::vector<double> c(count);
  c[0] = 1.0;
  for (int j = 1; j < count; ++j)
    c[j] = (1.0 - (1.0 + q) / static_cast<double>(j)) * c[j - 1];
  return c;
}

Trajectory simulate(const FinancialSystem& system) {
  system.validate();
  const int n = system.n;
  const auto cx = gl_coefficients(system.q1, n + 1);
  const auto cy = gl_coefficients(system.q2, n + 1);
  const auto cz = gl_coefficients(system.q3, n + 1);
  const double hx = std::pow(system.h, system.q1);
  const double hy = std::pow(system.h, system.q2);
  const double hz = std::pow(system.h, system.q3);

  std::vector<double> xs(n + 1), ys(n + 1), zs(n + 1);
  xs[0] = system.x0;
  ys[0] = system.y0;
  zs[0] = system.z0;

  for (int k = 1; k <= n; ++k) {
    const double x = xs[k - 1], y = ys[k - 1], z = zs[k - 1];
    const double fx = z + x * (y - system.a);
    const double fy = 1.0 - system.b * y - x * x;
    const double fz = -x - system.c * z;
    double mx = 0.0, my = 0.0, mz = 0.0;  // memory sums
    for (int j = 1; j <= k; ++j) {
      mx += cx[j] * xs[k - j];
      my += cy[j] * ys[k - j];
      mz += cz[j] * zs[k - j];
    }
    xs[k] = fx * hx - mx;
    ys[k] = fy * hy - my;
    zs[k] = fz * hz - mz;
    if (!std::isfinite(xs[k]) || !std::isfinite(ys[k]) || !std::isfinite(zs[k]))
      throw SimulationDiverged(k, "simulate: state became non-finite at step " +
                                      std::to_string(k));
  }

  Trajectory out;
  out.states.resize(n + 1);
  for (int k = 0; k <= n; ++k) out.states[k] = {xs[k], ys[k], zs[k]};
  return out;
}

IdentificationTask reference_identification_task() {
  IdentificationTask task;
  task.base = FinancialSystem{};  // defaults carry the reference values
  task.truth = {task.base.a, task.base.b, task.base.c};
  task.observed = simulate(task.base);
  return task;
}

double identification_objective(const std::array<double, 3>& candidate,
                                const IdentificationTask& task) {
  FinancialSystem system = task.base;
  system.a = candidate[0];
  system.b = candidate[1];
  system.c = candidate[2];
  Trajectory sim;
  try {
    sim = simulate(system);
  } catch (const SimulationDiverged&) {
    return kDivergenceSentinel;
  }
  double f = 0.0;
  for (std::size_t k = 1; k < task.observed.states.size(); ++k) {
    for (int c = 0; c < 3; ++c) {
      const double d = task.observed.states[k][c] - sim.states[k][c];
      f += d * d;
    }
  }
  return f;
}

BenchmarkProblem identification_problem(const IdentificationTask& task) {
  if (task.observed.states.size() != static_cast<std::size_t>(task.base.n) + 1)
    throw std::invalid_argument("identification_problem: observed length does not match n");
  BenchmarkProblem p;
  p.name = "fofs_abc";
  p.dim = 3;
  p.lower = {task.bounds_a[0], task.bounds_b[0], task.bounds_c[0]};
  p.upper = {task.bounds_a[1], task.bounds_b[1], task.bounds_c[1]};
  p.optimum_value = 0.0;
  if (task.truth) p.known_optimizer = std::vector<double>(task.truth->begin(), task.truth->end());
  p.eval_fn = [task](std::span<const double> x) {
    return identification_objective({x[0], x[1], x[2]}, task);
  };
  return p;
}

IdentifyResult identify(const IdentificationTask& task, std::string_view variant,
                        std::uint64_t seed) {
  const BenchmarkProblem problem = identification_problem(task);
  CSConfig config;
  config.np = task.np;
  config.dist = make_variant(variant);
  config.max_fes = task.np + static_cast<long long>(task.iterations) * 2 * task.np;
  config.seed = seed;
  if (task.seed_truth) {
    if (!task.truth) throw std::invalid_argument("identify: seed_truth requires the truth");
    config.initial_guess = std::vector<double>(task.truth->begin(), task.truth->end());
  }

  IdentifyResult result;
  result.record = run(problem, config);
  const auto& pos = result.record.final_best.position;
  result.estimate = {pos[0], pos[1], pos[2]};
  result.objective = result.record.final_best.fitness;
  for (int i = 0; i < 3; ++i)
    result.relative_errors[i] =
        task.truth ? std::abs(result.estimate[i] - (*task.truth)[i]) / std::abs((*task.truth)[i])
                   : std::numeric_limits<double>::quiet_NaN();
  return result;
}

}  // namespace csopt
