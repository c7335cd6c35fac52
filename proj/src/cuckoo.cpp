#include "csopt/cuckoo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace csopt {

namespace {

double clamp(double v, double lo, double hi) { return v < lo ? lo : (v > hi ? hi : v); }

std::size_t best_index(const std::vector<Nest>& nests) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < nests.size(); ++i)
    if (nests[i].fitness < nests[best].fitness) best = i;
  return best;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void CSConfig::validate() const {
  if (np < 3)
    throw std::invalid_argument("CSConfig: np must be >= 3 (the local walk draws two "
                                "distinct partners besides the current nest)");
  if (!(pa >= 0.0 && pa <= 1.0)) throw std::invalid_argument("CSConfig: pa must lie in [0,1]");
  if (!(alpha >= 0.0)) throw std::invalid_argument("CSConfig: alpha must be non-negative");
  if (max_fes < np)
    throw std::invalid_argument("CSConfig: max_fes must cover the initial population");
  if (checkpoint_stride < 0) throw std::invalid_argument("CSConfig: negative stride");
  dist.validate();
}

std::string config_fingerprint(const CSConfig& config) {
  std::string text = "np=" + std::to_string(config.np) + ";pa=" + format_g17(config.pa) +
                     ";alpha=" + format_g17(config.alpha) + ";dist=" +
                     to_string(config.dist.kind) + "," + format_g17(config.dist.p1) + "," +
                     format_g17(config.dist.p2) + "," +
                     (config.dist.symmetrize ? "sym" : "one-sided") +
                     ";max_fes=" + std::to_string(config.max_fes) +
                     ";stride=" + std::to_string(config.checkpoint_stride) +
                     ";local_pd=" + (config.local_per_dimension ? "1" : "0");
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(text)));
  return buf;
}

std::vector<Nest> initialize(const BenchmarkProblem& problem, const CSConfig& config,
                             RandomStream& stream) {
  config.validate();
  const int d = problem.dim;
  std::vector<std::vector<double>> positions(config.np, std::vector<double>(d));
  for (auto& pos : positions)
    for (int j = 0; j < d; ++j)
      pos[j] = problem.lower[j] + stream.uniform_open01() * (problem.upper[j] - problem.lower[j]);
  if (config.initial_guess) {
    if (static_cast<int>(config.initial_guess->size()) != d)
      throw std::invalid_argument("CSConfig: initial_guess dimension mismatch");
    for (int j = 0; j < d; ++j)
      positions[0][j] = clamp((*config.initial_guess)[j], problem.lower[j], problem.upper[j]);
  }
  std::vector<Nest> nests;
  nests.reserve(config.np);
  for (auto& pos : positions) {
    const double f = problem.evaluate(pos);
    nests.push_back(Nest{std::move(pos), f});
  }
  return nests;
}

std::vector<double> global_step(std::span<const double> x, std::span<const double> x_best,
                                double alpha, std::span<const double> draws,
                                std::span<const double> lower, std::span<const double> upper) {
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    out[j] = clamp(x[j] + alpha * draws[j] * (x[j] - x_best[j]), lower[j], upper[j]);
  return out;
}

std::vector<double> local_step(std::span<const double> x, std::span<const double> x_j,
                               std::span<const double> x_k, double pa, double r, double eps,
                               std::span<const double> lower, std::span<const double> upper) {
  const double gate = pa - eps >= 0.0 ? 1.0 : 0.0;  // Heaviside with H(0) = 1
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    out[j] = clamp(x[j] + r * gate * (x_j[j] - x_k[j]), lower[j], upper[j]);
  return out;
}

std::vector<double> global_walk(const Nest& nest, const Nest& best,
                                const BenchmarkProblem& problem, const CSConfig& config,
                                RandomStream& stream) {
  StepSampler draw(config.dist);
  std::vector<double> draws(problem.dim);
  for (double& v : draws) v = draw(stream);
  return global_step(nest.position, best.position, config.alpha, draws, problem.lower,
                     problem.upper);
}

std::vector<double> local_walk(const Nest& nest, const Nest& partner_j, const Nest& partner_k,
                               const BenchmarkProblem& problem, const CSConfig& config,
                               RandomStream& stream) {
  if (!config.local_per_dimension) {
    const double r = stream.uniform_open01();
    const double eps = stream.uniform_open01();
    return local_step(nest.position, partner_j.position, partner_k.position, config.pa, r, eps,
                      problem.lower, problem.upper);
  }
  std::vector<double> out(problem.dim);
  for (int m = 0; m < problem.dim; ++m) {
    const double r = stream.uniform_open01();
    const double eps = stream.uniform_open01();
    const double gate = config.pa - eps >= 0.0 ? 1.0 : 0.0;
    out[m] = clamp(nest.position[m] +
                       r * gate * (partner_j.position[m] - partner_k.position[m]),
                   problem.lower[m], problem.upper[m]);
  }
  return out;
}

Nest greedy_select(const Nest& current, std::span<const double> candidate,
                   const BenchmarkProblem& problem) {
  const double f = problem.evaluate(candidate);
  if (f < current.fitness) return Nest{{candidate.begin(), candidate.end()}, f};
  return current;
}

RunRecord run(const BenchmarkProblem& problem, const CSConfig& config) {
  config.validate();
  RandomStream stream(config.seed);
  const StepSampler draw(config.dist);
  const int np = config.np;
  const int d = problem.dim;
  const long long stride = config.checkpoint_stride > 0 ? config.checkpoint_stride : np;

  RunRecord record;
  record.config_fingerprint = config_fingerprint(config);
  record.seed = config.seed;

  long long fes = 0;
  double best_f = std::numeric_limits<double>::infinity();
  auto note_eval = [&](double f) {
    ++fes;
    if (f < best_f) best_f = f;
    if (fes % stride == 0) record.trajectory.emplace_back(fes, best_f);
  };

  std::vector<Nest> nests = initialize(problem, config, stream);
  for (const Nest& nest : nests) note_eval(nest.fitness);

  std::vector<double> best_pos = nests[best_index(nests)].position;
  std::vector<double> cand(d);
  std::vector<double> draws(d);
  auto out_of_budget = [&] { return fes >= config.max_fes; };

  while (!out_of_budget()) {
    // global explorative phase
    for (int i = 0; i < np && !out_of_budget(); ++i) {
      const auto& x = nests[i].position;
      for (int j = 0; j < d; ++j) {
        const double step = draw(stream);
        cand[j] = clamp(x[j] + config.alpha * step * (x[j] - best_pos[j]), problem.lower[j],
                        problem.upper[j]);
      }
      const double f = problem.evaluate(cand);
      if (f < nests[i].fitness) {
        nests[i].position = cand;
        nests[i].fitness = f;
      }
      note_eval(f);
    }
    if (out_of_budget()) break;
    best_pos = nests[best_index(nests)].position;

    // local discovery phase
    for (int i = 0; i < np && !out_of_budget(); ++i) {
      std::size_t j = stream.uniform_index(np - 1);
      if (j >= static_cast<std::size_t>(i)) ++j;
      std::size_t k = stream.uniform_index(np - 2);
      const std::size_t lo = std::min<std::size_t>(i, j);
      const std::size_t hi = std::max<std::size_t>(i, j);
      if (k >= lo) ++k;
      if (k >= hi) ++k;

      const auto& x = nests[i].position;
      const auto& xj = nests[j].position;
      const auto& xk = nests[k].position;
      if (config.local_per_dimension) {
        for (int m = 0; m < d; ++m) {
          const double r = stream.uniform_open01();
          const double eps = stream.uniform_open01();
          const double gate = config.pa - eps >= 0.0 ? 1.0 : 0.0;
          cand[m] = clamp(x[m] + r * gate * (xj[m] - xk[m]), problem.lower[m], problem.upper[m]);
        }
      } else {
        const double r = stream.uniform_open01();
        const double eps = stream.uniform_open01();
        const double gate = config.pa - eps >= 0.0 ? 1.0 : 0.0;
        for (int m = 0; m < d; ++m)
          cand[m] = clamp(x[m] + r * gate * (xj[m] - xk[m]), problem.lower[m], problem.upper[m]);
      }
      const double f = problem.evaluate(cand);
      if (f < nests[i].fitness) {
        nests[i].position = cand;
        nests[i].fitness = f;
      }
      note_eval(f);
    }
    if (out_of_budget()) break;
    best_pos = nests[best_index(nests)].position;
  }

  record.final_best = nests[best_index(nests)];
  record.fes_used = fes;
  if (record.trajectory.empty() || record.trajectory.back().first != fes)
    record.trajectory.emplace_back(fes, best_f);
  return record;
}

DistributionSpec make_variant(std::string_view name) {
  if (name == "cs") return {DistKind::levy, 1.5, 0.0};
  if (name == "csml") return {DistKind::mittag_leffler, 0.8, 4.5};
  if (name == "csp") return {DistKind::pareto, 1.5, 4.5};
  if (name == "csc") return {DistKind::cauchy, 0.8, 4.5};
  if (name == "csw") return {DistKind::weibull, 0.3, 4.0};
  throw std::invalid_argument("make_variant: unknown variant " + std::string(name));
}

const std::vector<std::string>& variant_names() {
  static const std::vector<std::string> names = {"cs", "csml", "csp", "csc", "csw"};
  return names;
}

}  // namespace csopt
