#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "csopt/benchmarks.hpp"
#include "csopt/cuckoo.hpp"

namespace csopt {

/// Fractional-order financial system
///   D^q1 x = z + x (y - a)
///   D^q2 y = 1 - b y - x^2
///   D^q3 z = -x - c z
/// discretized by an explicit Grunwald-Letnikov scheme with full memory and
/// the nonlinear right-hand side lagged one step.
struct FinancialSystem {
  double q1 = 1.0, q2 = 0.95, q3 = 0.99;  // fractional orders, in (0,1]
  double a = 1.0, b = 0.1, c = 1.0;       // system parameters
  double x0 = 2.0, y0 = -1.0, z0 = 1.0;   // initial state
  double h = 0.005;                       // step size
  int n = 200;                            // number of samples after t = 0

  void validate() const;
};

struct Trajectory {
  std::vector<std::array<double, 3>> states;  // n+1 entries, initial state first
};

class SimulationDiverged : public std::runtime_error {
 public:
  SimulationDiverged(int step_index, const std::string& what)
      : std::runtime_error(what), step(step_index) {}
  int step;
};

/// Grunwald-Letnikov weights: c_0 = 1, c_j = (1 - (1+q)/j) c_{j-1}.
/// At q = 1 they collapse to (1, -1, 0, ...), i.e. the first-order
/// difference.
std::vector<double> gl_coefficients(double q, int count);

/// Runs the scheme for n steps; throws SimulationDiverged (with the step
/// index) on a non-finite state.
Trajectory simulate(const FinancialSystem& system);

/// Candidate simulations that diverge score this instead of throwing, so a
/// swarm can keep moving.
inline constexpr double kDivergenceSentinel = 1e12;

struct IdentificationTask {
  Trajectory observed;
  FinancialSystem base;  // orders, initial state and discretization to use;
                         // a, b, c are replaced by the candidate
  std::array<double, 2> bounds_a{0.0, 2.0};
  std::array<double, 2> bounds_b{0.0, 1.0};
  std::array<double, 2> bounds_c{0.0, 2.0};
  std::optional<std::array<double, 3>> truth;  // enables relative errors
  int np = 40;
  int iterations = 200;  // one iteration = one full generation = 2*np evals
  bool seed_truth = false;  // test hook: plant the truth in the population
};

/// Reference setup: truth (a,b,c) = (1, 0.1, 1), orders (1, 0.95, 0.99),
/// start (2, -1, 1), h = 0.005, n = 200; observed data simulated from the
/// truth.
IdentificationTask reference_identification_task();

/// Sum of squared state errors over all samples and all three components
/// between the observed trajectory and the candidate's simulation.
double identification_objective(const std::array<double, 3>& candidate,
                                const IdentificationTask& task);

/// The task wrapped as a 3-dimensional box problem for the search engine.
BenchmarkProblem identification_problem(const IdentificationTask& task);

struct IdentifyResult {
  std::array<double, 3> estimate{};
  double objective = 0.0;
  std::array<double, 3> relative_errors{};  // NaN when the truth is unknown
  RunRecord record;
};

/// Runs the cuckoo engine of the named variant over the task's box with
/// NP = task.np and a budget of np + iterations*2*np evaluations.
IdentifyResult identify(const IdentificationTask& task, std::string_view variant,
                        std::uint64_t seed);

}  // namespace csopt
