#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "csopt/experiment.hpp"
#include "csopt/heavy_tail.hpp"

namespace {

csopt::ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  nlohmann::json j;
  in >> j;
  return csopt::ExperimentConfig::from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cuckoo search with interchangeable heavy-tailed step distributions"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out;
  std::string config_path;
  app.add_option("--seed", seed, "base random seed");
  app.add_option("--jobs", jobs, "number of parallel runs");
  app.add_option("--out", out, "output directory (or file for sweep/ident)");
  app.add_option("--config", config_path, "experiment config JSON");

  // dist sample
  auto* dist = app.add_subcommand("dist", "distribution utilities");
  dist->fallthrough();
  auto* dist_sample = dist->add_subcommand("sample", "emit draws, one per line");
  dist_sample->fallthrough();
  std::string dist_name = "levy";
  double p1 = 1.5, p2 = 0.0;
  bool symmetrize = false;
  long long count = 1;
  dist_sample->add_option("--dist", dist_name, "levy|ml|pareto|cauchy|weibull")->required();
  dist_sample->add_option("--p1", p1, "first parameter");
  dist_sample->add_option("--p2", p2, "second parameter");
  dist_sample->add_flag("--symmetrize", symmetrize, "attach an independent fair-coin sign");
  dist_sample->add_option("-n", count, "number of draws")->required();

  // bench run / bench compare
  auto* bench = app.add_subcommand("bench", "benchmark experiments");
  bench->fallthrough();
  auto* bench_run_cmd = bench->add_subcommand("run", "run the benchmark protocol");
  bench_run_cmd->fallthrough();
  std::vector<std::string> problems, variants;
  std::vector<int> dims;
  int runs = 0;
  std::string max_fes_text, np_text, data_manifest;
  long long stride = -1;
  bool median = false;
  bench_run_cmd->add_option("--problems", problems, "suite subset")->delimiter(',');
  bench_run_cmd->add_option("--dims", dims, "problem dimensions")->delimiter(',');
  bench_run_cmd->add_option("--variants", variants, "subset of cs,csml,csp,csc,csw")
      ->delimiter(',');
  bench_run_cmd->add_option("--runs", runs, "runs per cell");
  bench_run_cmd->add_option("--max-fes", max_fes_text, "evaluation budget or 10000xD");
  bench_run_cmd->add_option("--np", np_text, "population size or 'paper'");
  bench_run_cmd->add_option("--data-manifest", data_manifest, "shift/rotation data manifest");
  bench_run_cmd->add_option("--stride", stride, "trajectory checkpoint stride (0 = NP)");
  bench_run_cmd->add_flag("--median", median, "aggregate tables by median instead of mean");

  auto* bench_compare = bench->add_subcommand("compare", "comparison tables for a store");
  bench_compare->fallthrough();
  std::string store_dir, baseline = "cs";
  bench_compare->add_option("--store", store_dir, "results directory")->required();
  bench_compare->add_option("--baseline", baseline, "baseline variant");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "parameter grid sweep");
  sweep_cmd->fallthrough();
  std::string sweep_variant = "csml";
  double p1_min = 0.1, p1_max = 0.9, p1_step = 0.1;
  double p2_min = 0.5, p2_max = 4.5, p2_step = 0.5;
  std::vector<std::string> sweep_problems = {"F_sph", "F_ack"};
  int sweep_dim = 30, repeats = 15;
  std::string sweep_max_fes, sweep_np;
  sweep_cmd->add_option("--variant", sweep_variant, "variant whose parameters vary");
  sweep_cmd->add_option("--p1-min", p1_min, "");
  sweep_cmd->add_option("--p1-max", p1_max, "");
  sweep_cmd->add_option("--p1-step", p1_step, "");
  sweep_cmd->add_option("--p2-min", p2_min, "");
  sweep_cmd->add_option("--p2-max", p2_max, "");
  sweep_cmd->add_option("--p2-step", p2_step, "");
  sweep_cmd->add_option("--problems", sweep_problems, "")->delimiter(',');
  sweep_cmd->add_option("--dim", sweep_dim, "");
  sweep_cmd->add_option("--repeats", repeats, "runs per grid cell");
  sweep_cmd->add_option("--max-fes", sweep_max_fes, "evaluation budget or 10000xD");
  sweep_cmd->add_option("--np", sweep_np, "population size or 'paper'");

  // ident run
  auto* ident = app.add_subcommand("ident", "fractional-order system identification");
  ident->fallthrough();
  auto* ident_run_cmd = ident->add_subcommand("run", "identify (a, b, c)");
  ident_run_cmd->fallthrough();
  std::string ident_variant = "cs";
  std::vector<std::uint64_t> ident_seeds;
  int ident_runs = 1, ident_np = 40, ident_iterations = 200, ident_samples = 200;
  double ident_h = 0.005;
  bool seed_truth = false;
  ident_run_cmd->add_option("--variant", ident_variant, "cs|csml|csp|csc|csw");
  ident_run_cmd->add_option("--seeds", ident_seeds, "explicit seed list")->delimiter(',');
  ident_run_cmd->add_option("--runs", ident_runs, "seed count (seeds = base, base+1, ...)");
  ident_run_cmd->add_option("--np", ident_np, "population size");
  ident_run_cmd->add_option("--iterations", ident_iterations, "generations");
  ident_run_cmd->add_option("--step-size", ident_h, "discretization step");
  ident_run_cmd->add_option("--samples", ident_samples, "observed sample count");
  ident_run_cmd->add_flag("--seed-truth", seed_truth, "plant the truth in the population");

  CLI11_PARSE(app, argc, argv);

  try {
    if (dist_sample->parsed()) {
      csopt::DistributionSpec spec;
      spec.kind = csopt::dist_kind_from_string(dist_name);
      spec.p1 = p1;
      spec.p2 = p2;
      spec.symmetrize = symmetrize;
      spec.validate();
      csopt::RandomStream stream(seed);
      const csopt::StepSampler draw(spec);
      for (long long i = 0; i < count; ++i)
        std::cout << csopt::format_g17(draw(stream)) << "\n";
      return 0;
    }

    if (bench_run_cmd->parsed()) {
      csopt::ExperimentConfig config;
      if (!config_path.empty()) config = load_config_file(config_path);
      if (!problems.empty()) config.problems = problems;
      if (!dims.empty()) config.dims = dims;
      if (!variants.empty()) config.variants = variants;
      if (runs > 0) config.runs = runs;
      if (!max_fes_text.empty()) config.max_fes = csopt::MaxFesRule::parse(max_fes_text);
      if (!np_text.empty()) config.np = csopt::NpRule::parse(np_text);
      if (app.count("--seed")) config.base_seed = seed;
      if (app.count("--jobs")) config.jobs = jobs;
      if (!out.empty()) config.out_dir = out;
      if (!data_manifest.empty()) config.data_manifest = data_manifest;
      if (stride >= 0) config.checkpoint_stride = stride;
      if (median) config.use_median = true;
      if (config.out_dir.empty()) config.out_dir = "results";
      const auto store = csopt::bench_run(config);
      std::cout << store.entries.size() << " runs persisted under " << store.root.string()
                << "\n";
      return 0;
    }

    if (bench_compare->parsed()) {
      const auto store = csopt::ResultsStore::load(store_dir);
      std::cout << csopt::compare(store, baseline);
      return 0;
    }

    if (sweep_cmd->parsed()) {
      csopt::SweepConfig config;
      config.variant = sweep_variant;
      config.p1_values = csopt::grid_values(p1_min, p1_max, p1_step);
      config.p2_values = csopt::grid_values(p2_min, p2_max, p2_step);
      config.problems = sweep_problems;
      config.dim = sweep_dim;
      config.repeats = repeats;
      if (!sweep_max_fes.empty()) config.max_fes = csopt::MaxFesRule::parse(sweep_max_fes);
      if (!sweep_np.empty()) config.np = csopt::NpRule::parse(sweep_np);
      config.base_seed = seed;
      config.jobs = jobs;
      if (!out.empty()) config.out_csv = out;
      csopt::sweep(config);
      std::cout << "sweep written to " << config.out_csv.string() << "\n";
      return 0;
    }

    if (ident_run_cmd->parsed()) {
      csopt::IdentRunConfig config;
      config.variant = ident_variant;
      if (!ident_seeds.empty()) {
        config.seeds = ident_seeds;
      } else {
        config.seeds.clear();
        for (int i = 0; i < ident_runs; ++i)
          config.seeds.push_back(csopt::RandomStream::derive_seed(seed, i));
      }
      csopt::FinancialSystem system;
      system.h = ident_h;
      system.n = ident_samples;
      csopt::IdentificationTask task;
      task.base = system;
      task.truth = {system.a, system.b, system.c};
      task.observed = csopt::simulate(system);
      task.np = ident_np;
      task.iterations = ident_iterations;
      task.seed_truth = seed_truth;
      config.task = task;
      if (!out.empty()) config.out_csv = out;
      std::cout << csopt::ident_run(config);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "no subcommand executed\n";
  return 1;
}
