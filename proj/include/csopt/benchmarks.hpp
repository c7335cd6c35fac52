#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace csopt {

/// A named box-constrained objective. Immutable after construction;
/// evaluate is pure and safe to call concurrently.
struct BenchmarkProblem {
  std::string name;
  int dim = 0;
  std::vector<double> lower, upper;  // per-dimension bounds
  double f_bias = 0.0;
  double optimum_value = 0.0;
  std::optional<std::vector<double>> shift;                  // o
  std::optional<std::vector<std::vector<double>>> rotation;  // orthogonal R
  std::optional<std::vector<double>> known_optimizer;
  std::function<double(std::span<const double>)> eval_fn;

  double evaluate(std::span<const double> x) const;
};

/// Where a suite entry's shift/rotation data comes from. Files are
/// whitespace-separated decimal text: shift files hold one row of at least
/// D values; rotation and matrix files hold at least D rows of at least D
/// columns (the leading DxD block is used). Absent entries fall back to a
/// deterministic synthetic generator seeded from the problem name and
/// dimension.
struct ManifestEntry {
  std::filesystem::path shift;
  std::filesystem::path rotation;
  std::filesystem::path matrix;  // linear-system matrix for F5, not orthogonal
  std::optional<double> bias;
};

struct SuiteManifest {
  std::map<std::string, ManifestEntry> entries;

  /// JSON file mapping name -> {shift: path, rotation: path, matrix: path,
  /// bias: number}; relative paths resolve against the manifest's directory.
  static SuiteManifest load(const std::filesystem::path& json_file);
};

/// The 20 suite names in table order: the ten classical functions
/// F_sph..F_pn2 followed by F1..F10.
const std::vector<std::string>& suite_names();

BenchmarkProblem get_problem(const std::string& name, int dim);
BenchmarkProblem get_problem(const std::string& name, int dim, const SuiteManifest& manifest);

std::vector<BenchmarkProblem> suite(int dim);
std::vector<BenchmarkProblem> suite(int dim, const SuiteManifest& manifest);

}  // namespace csopt
