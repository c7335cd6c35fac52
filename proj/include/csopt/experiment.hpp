#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "csopt/benchmarks.hpp"
#include "csopt/cuckoo.hpp"
#include "csopt/fode.hpp"
#include "csopt/stats.hpp"

namespace csopt {

/// Decimal text with 17 significant digits; the CSV number format.
std::string format_g17(double v);
/// Two-decimal scientific notation, the tables' display format.
std::string format_e2(double v);

/// Evaluation budget: explicit, or the protocol rule 10000 x D.
struct MaxFesRule {
  std::optional<long long> explicit_value;
  long long resolve(int dim) const {
    return explicit_value ? *explicit_value : 10000LL * dim;
  }
  static MaxFesRule parse(const std::string& text);  // "10000xD" or a number
  std::string text() const;
};

/// Population size: explicit, or the protocol rule NP = D except NP = 30
/// when D = 10.
struct NpRule {
  std::optional<int> explicit_value;
  int resolve(int dim) const {
    if (explicit_value) return *explicit_value;
    return dim == 10 ? 30 : dim;
  }
  static NpRule parse(const std::string& text);  // "paper" or a number
  std::string text() const;
};

struct ExperimentConfig {
  std::vector<std::string> problems;  // empty -> the full 20-function suite
  std::vector<int> dims{30};
  std::vector<std::string> variants{"cs", "csml", "csp", "csc", "csw"};
  int runs = 50;
  MaxFesRule max_fes;
  NpRule np;
  std::uint64_t base_seed = 1;
  std::string out_dir;
  std::string data_manifest;  // optional CEC shift/rotation manifest JSON
  long long checkpoint_stride = 0;
  int jobs = 1;
  bool use_median = false;  // aggregate tables by median instead of mean

  void validate() const;
  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
};

/// Stream seed for one run: an FNV-1a hash over
/// "<variant>/<problem>/D<dim>/r<run seed>", so variants sharing a run index
/// stay paired by index yet draw from independent streams.
std::uint64_t derive_stream_seed(std::string_view variant, std::string_view problem, int dim,
                                 std::uint64_t run_seed);

struct RunEntry {
  std::string problem;
  int dim = 0;
  std::string variant;
  int run = 0;
  std::uint64_t run_seed = 0;
  std::uint64_t stream_seed = 0;
  long long fes_used = 0;
  double final_fitness = 0.0;
  double final_error = 0.0;  // final_fitness - optimum_value
  std::string fingerprint;
  std::string trajectory_rel;  // path relative to the store root
  std::vector<double> final_position;
};

/// On-disk layout under root:
///   manifest.json   config plus one record per run
///   results.csv     per-run finals (parses back into a ResultMatrix)
///   summary.csv     per-cell aggregates
///   runs/*.csv      per-run best-fitness trajectories
struct ResultsStore {
  std::filesystem::path root;
  ExperimentConfig config;
  std::vector<RunEntry> entries;

  static ResultsStore load(const std::filesystem::path& root);
  std::vector<int> dims() const;
  ResultMatrix matrix(int dim) const;  // final errors, runs ordered by index
};

ResultsStore bench_run(const ExperimentConfig& config);

/// Re-executes one persisted run from its manifest entry; the result must
/// reproduce the stored record bit for bit.
RunRecord replay(const ResultsStore& store, const RunEntry& entry);

std::string trajectory_csv(const RunRecord& record);

/// Comparison report in the tables' layout; writes compare_D<dim>.txt/.csv
/// under the store root and returns the text.
std::string compare(const ResultsStore& store, const std::string& baseline);

ResultMatrix matrix_from_results_csv(const std::filesystem::path& csv, int dim);

struct SweepConfig {
  std::string variant = "csml";
  std::vector<double> p1_values;
  std::vector<double> p2_values;
  std::vector<std::string> problems{"F_sph", "F_ack"};
  int dim = 30;
  int repeats = 15;
  MaxFesRule max_fes;
  NpRule np;
  std::uint64_t base_seed = 1;
  std::filesystem::path out_csv = "sweep.csv";
  int jobs = 1;
};

/// Mean final error per (p1, p2, problem) grid cell; CSV shaped for surface
/// plotting with columns p1,p2,problem,mean_error.
void sweep(const SweepConfig& config);

/// Uniform grid helper: from, from+step, ... up to to (inclusive within a
/// half-step tolerance).
std::vector<double> grid_values(double from, double to, double step);

struct IdentRunConfig {
  std::string variant = "cs";
  std::vector<std::uint64_t> seeds{1};
  IdentificationTask task;
  std::filesystem::path out_csv;  // empty -> no CSV
};

/// Per-seed identification rows plus the aggregate row (average estimates,
/// their relative errors, and objective avg +/- std).
std::string ident_run(const IdentRunConfig& config);

}  // namespace csopt
