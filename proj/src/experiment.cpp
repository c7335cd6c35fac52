#include "csopt/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace csopt {

namespace {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double s = 0.0;
  for (const double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

CSConfig make_cs_config(const ExperimentConfig& config, int dim, const std::string& variant,
                        std::uint64_t stream_seed) {
  CSConfig cs;
  cs.np = config.np.resolve(dim);
  cs.dist = make_variant(variant);
  cs.max_fes = config.max_fes.resolve(dim);
  cs.seed = stream_seed;
  cs.checkpoint_stride = config.checkpoint_stride;
  return cs;
}

std::string run_file_name(const RunEntry& e) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "_r%03d.csv", e.run);
  return e.problem + "_D" + std::to_string(e.dim) + "_" + e.variant + buf;
}

}  // namespace

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_e2(double v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%.2E", v);
  return buf;
}

MaxFesRule MaxFesRule::parse(const std::string& text) {
  if (text == "10000xD" || text == "paper") return {};
  return MaxFesRule{std::stoll(text)};
}

std::string MaxFesRule::text() const {
  return explicit_value ? std::to_string(*explicit_value) : "10000xD";
}

NpRule NpRule::parse(const std::string& text) {
  if (text == "paper") return {};
  return NpRule{std::stoi(text)};
}

std::string NpRule::text() const {
  return explicit_value ? std::to_string(*explicit_value) : "paper";
}

void ExperimentConfig::validate() const {
  if (runs < 1) throw std::invalid_argument("ExperimentConfig: runs must be >= 1");
  if (dims.empty()) throw std::invalid_argument("ExperimentConfig: no dimensions");
  if (variants.empty()) throw std::invalid_argument("ExperimentConfig: no variants");
  for (const auto& v : variants) make_variant(v);  // throws on unknown names
  const auto& known = suite_names();
  for (const auto& p : problems)
    if (std::find(known.begin(), known.end(), p) == known.end())
      throw std::invalid_argument("ExperimentConfig: unknown problem " + p);
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["problems"] = problems;
  j["dims"] = dims;
  j["variants"] = variants;
  j["runs"] = runs;
  j["max_fes"] = max_fes.text();
  j["np"] = np.text();
  j["seed"] = base_seed;
  j["out"] = out_dir;
  j["data_manifest"] = data_manifest;
  j["stride"] = checkpoint_stride;
  j["jobs"] = jobs;
  j["median"] = use_median;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  if (j.contains("problems")) c.problems = j.at("problems").get<std::vector<std::string>>();
  if (j.contains("dims")) c.dims = j.at("dims").get<std::vector<int>>();
  if (j.contains("variants")) c.variants = j.at("variants").get<std::vector<std::string>>();
  if (j.contains("runs")) c.runs = j.at("runs").get<int>();
  if (j.contains("max_fes")) {
    const auto& v = j.at("max_fes");
    c.max_fes = v.is_string() ? MaxFesRule::parse(v.get<std::string>())
                              : MaxFesRule{v.get<long long>()};
  }
  if (j.contains("np")) {
    const auto& v = j.at("np");
    c.np = v.is_string() ? NpRule::parse(v.get<std::string>()) : NpRule{v.get<int>()};
  }
  if (j.contains("seed")) c.base_seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();
  if (j.contains("data_manifest")) c.data_manifest = j.at("data_manifest").get<std::string>();
  if (j.contains("stride")) c.checkpoint_stride = j.at("stride").get<long long>();
  if (j.contains("jobs")) c.jobs = j.at("jobs").get<int>();
  if (j.contains("median")) c.use_median = j.at("median").get<bool>();
  return c;
}

std::uint64_t derive_stream_seed(std::string_view variant, std::string_view problem, int dim,
                                 std::uint64_t run_seed) {
  std::string label;
  label.reserve(variant.size() + problem.size() + 32);
  label.append(variant);
  label.push_back('/');
  label.append(problem);
  label.append("/D").append(std::to_string(dim));
  label.append("/r").append(std::to_string(run_seed));
  return fnv1a64(label);
}

std::string trajectory_csv(const RunRecord& record) {
  std::string out = "fes,best_fitness\n";
  for (const auto& [fes, best] : record.trajectory) {
    out += std::to_string(fes);
    out += ',';
    out += format_g17(best);
    out += '\n';
  }
  return out;
}

ResultsStore bench_run(const ExperimentConfig& config) {
  config.validate();
  const SuiteManifest manifest =
      config.data_manifest.empty() ? SuiteManifest{} : SuiteManifest::load(config.data_manifest);
  const std::vector<std::string>& names =
      config.problems.empty() ? suite_names() : config.problems;

  // problems built once per (name, dim), shared read-only across workers
  std::map<std::pair<std::string, int>, BenchmarkProblem> problems;
  for (const int dim : config.dims)
    for (const auto& name : names)
      problems.emplace(std::make_pair(name, dim), get_problem(name, dim, manifest));

  ResultsStore store;
  store.root = config.out_dir;
  store.config = config;
  std::vector<RunRecord> records;
  for (const int dim : config.dims)
    for (const auto& name : names)
      for (const auto& variant : config.variants)
        for (int r = 0; r < config.runs; ++r) {
          RunEntry e;
          e.problem = name;
          e.dim = dim;
          e.variant = variant;
          e.run = r;
          e.run_seed = RandomStream::derive_seed(config.base_seed, r);
          e.stream_seed = derive_stream_seed(variant, name, dim, e.run_seed);
          store.entries.push_back(std::move(e));
        }
  records.resize(store.entries.size());

  parallel_for(store.entries.size(), config.jobs, [&](std::size_t i) {
    const RunEntry& e = store.entries[i];
    const BenchmarkProblem& problem = problems.at({e.problem, e.dim});
    records[i] = run(problem, make_cs_config(config, e.dim, e.variant, e.stream_seed));
  });

  for (std::size_t i = 0; i < store.entries.size(); ++i) {
    RunEntry& e = store.entries[i];
    const RunRecord& rec = records[i];
    const BenchmarkProblem& problem = problems.at({e.problem, e.dim});
    e.fes_used = rec.fes_used;
    e.final_fitness = rec.final_best.fitness;
    e.final_error = rec.final_best.fitness - problem.optimum_value;
    e.fingerprint = rec.config_fingerprint;
    e.final_position = rec.final_best.position;
    e.trajectory_rel = "runs/" + run_file_name(e);
  }

  // persistence, sequential and in a fixed order
  std::filesystem::create_directories(store.root / "runs");
  for (std::size_t i = 0; i < store.entries.size(); ++i)
    write_file(store.root / store.entries[i].trajectory_rel, trajectory_csv(records[i]));

  std::string results =
      "problem,dim,variant,run,run_seed,stream_seed,fes_used,final_error,final_fitness\n";
  for (const RunEntry& e : store.entries) {
    results += e.problem + "," + std::to_string(e.dim) + "," + e.variant + "," +
               std::to_string(e.run) + "," + std::to_string(e.run_seed) + "," +
               std::to_string(e.stream_seed) + "," + std::to_string(e.fes_used) + "," +
               format_g17(e.final_error) + "," + format_g17(e.final_fitness) + "\n";
  }
  write_file(store.root / "results.csv", results);

  std::string summary =
      "problem,dim,variant,runs,mean_error,std_error,median_error,min_error,max_error\n";
  for (const int dim : config.dims)
    for (const auto& name : names)
      for (const auto& variant : config.variants) {
        std::vector<double> errors;
        for (const RunEntry& e : store.entries)
          if (e.problem == name && e.dim == dim && e.variant == variant)
            errors.push_back(e.final_error);
        summary += name + "," + std::to_string(dim) + "," + variant + "," +
                   std::to_string(errors.size()) + "," + format_g17(mean_of(errors)) + "," +
                   format_g17(sample_std(errors)) + "," + format_g17(median_of(errors)) + "," +
                   format_g17(*std::min_element(errors.begin(), errors.end())) + "," +
                   format_g17(*std::max_element(errors.begin(), errors.end())) + "\n";
      }
  write_file(store.root / "summary.csv", summary);

  nlohmann::json manifest_json;
  manifest_json["config"] = config.to_json();
  nlohmann::json runs_json = nlohmann::json::array();
  for (const RunEntry& e : store.entries) {
    nlohmann::json r;
    r["problem"] = e.problem;
    r["dim"] = e.dim;
    r["variant"] = e.variant;
    r["run"] = e.run;
    r["run_seed"] = e.run_seed;
    r["stream_seed"] = e.stream_seed;
    r["fes_used"] = e.fes_used;
    r["final_fitness"] = e.final_fitness;
    r["final_error"] = e.final_error;
    r["fingerprint"] = e.fingerprint;
    r["trajectory"] = e.trajectory_rel;
    r["final_position"] = e.final_position;
    runs_json.push_back(std::move(r));
  }
  manifest_json["runs"] = std::move(runs_json);
  write_file(store.root / "manifest.json", manifest_json.dump(2) + "\n");
  return store;
}

ResultsStore ResultsStore::load(const std::filesystem::path& root) {
  std::ifstream in(root / "manifest.json");
  if (!in) throw std::runtime_error("cannot open " + (root / "manifest.json").string());
  nlohmann::json j;
  in >> j;
  ResultsStore store;
  store.root = root;
  store.config = ExperimentConfig::from_json(j.at("config"));
  for (const auto& r : j.at("runs")) {
    RunEntry e;
    e.problem = r.at("problem").get<std::string>();
    e.dim = r.at("dim").get<int>();
    e.variant = r.at("variant").get<std::string>();
    e.run = r.at("run").get<int>();
    e.run_seed = r.at("run_seed").get<std::uint64_t>();
    e.stream_seed = r.at("stream_seed").get<std::uint64_t>();
    e.fes_used = r.at("fes_used").get<long long>();
    e.final_fitness = r.at("final_fitness").get<double>();
    e.final_error = r.at("final_error").get<double>();
    e.fingerprint = r.at("fingerprint").get<std::string>();
    e.trajectory_rel = r.at("trajectory").get<std::string>();
    e.final_position = r.at("final_position").get<std::vector<double>>();
    store.entries.push_back(std::move(e));
  }
  return store;
}

std::vector<int> ResultsStore::dims() const {
  std::vector<int> out;
  for (const RunEntry& e : entries)
    if (std::find(out.begin(), out.end(), e.dim) == out.end()) out.push_back(e.dim);
  return out;
}

ResultMatrix ResultsStore::matrix(int dim) const {
  ResultMatrix m;
  std::vector<std::string> problems;
  for (const RunEntry& e : entries) {
    if (e.dim != dim) continue;
    if (std::find(m.algorithms.begin(), m.algorithms.end(), e.variant) == m.algorithms.end())
      m.algorithms.push_back(e.variant);
    if (std::find(problems.begin(), problems.end(), e.problem) == problems.end())
      problems.push_back(e.problem);
  }
  if (problems.empty()) throw std::invalid_argument("ResultsStore: no runs at this dimension");
  m.problems = problems;
  m.cells.assign(m.algorithms.size(), std::vector<std::vector<double>>(problems.size()));
  for (const RunEntry& e : entries) {
    if (e.dim != dim) continue;
    const auto a = std::find(m.algorithms.begin(), m.algorithms.end(), e.variant) -
                   m.algorithms.begin();
    const auto p = std::find(problems.begin(), problems.end(), e.problem) - problems.begin();
    m.cells[a][p].push_back(e.final_error);  // entries are ordered by run index
  }
  return m;
}

RunRecord replay(const ResultsStore& store, const RunEntry& entry) {
  const SuiteManifest manifest = store.config.data_manifest.empty()
                                     ? SuiteManifest{}
                                     : SuiteManifest::load(store.config.data_manifest);
  const BenchmarkProblem problem = get_problem(entry.problem, entry.dim, manifest);
  return run(problem, make_cs_config(store.config, entry.dim, entry.variant, entry.stream_seed));
}

std::string compare(const ResultsStore& store, const std::string& baseline) {
  std::string all_text;
  for (const int dim : store.dims()) {
    const ResultMatrix matrix = store.matrix(dim);
    const MarkTable marks = mark_table(baseline, matrix);
    const FriedmanResult fr = friedman(matrix);

    const std::size_t k = matrix.algorithms.size();
    const std::size_t np = matrix.problems.size();
    std::vector<std::vector<double>> agg(k, std::vector<double>(np));
    std::vector<std::vector<double>> means(k, std::vector<double>(np));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t p = 0; p < np; ++p) {
        means[a][p] = mean_of(matrix.cells[a][p]);
        agg[a][p] = store.config.use_median ? median_of(matrix.cells[a][p]) : means[a][p];
      }
    const std::size_t bi =
        std::find(matrix.algorithms.begin(), matrix.algorithms.end(), baseline) -
        matrix.algorithms.begin();

    // Wilcoxon over the per-problem mean pairs, baseline vs each variant
    std::vector<double> mean_pair_p(k, 1.0);
    for (std::size_t a = 0; a < k; ++a) {
      if (a == bi) continue;
      mean_pair_p[a] = wilcoxon_signed_rank(means[bi], means[a]).p_value;
    }

    auto mark_for = [&](std::size_t a, std::size_t p) -> const ComparisonVerdict* {
      const auto it =
          std::find(marks.algorithms.begin(), marks.algorithms.end(), matrix.algorithms[a]);
      if (it == marks.algorithms.end()) return nullptr;
      return &marks.verdicts[it - marks.algorithms.begin()][p];
    };

    std::ostringstream text;
    const int name_w = 12, col_w = 16;
    text << "D = " << dim << ", " << matrix.cells[0][0].size() << " runs per cell, baseline "
         << baseline << "\n";
    auto pad = [&](const std::string& s, int w) {
      return s.size() >= static_cast<std::size_t>(w) ? s + " "
                                                     : s + std::string(w - s.size(), ' ');
    };
    text << pad("Fun", name_w);
    for (const auto& alg : matrix.algorithms) text << pad(alg, col_w);
    text << "\n";
    for (std::size_t p = 0; p < np; ++p) {
      text << pad(matrix.problems[p], name_w);
      for (std::size_t a = 0; a < k; ++a) {
        std::string cell = format_e2(agg[a][p]);
        if (const auto* v = mark_for(a, p)) cell += std::string(" (") + mark_char(v->mark) + ")";
        text << pad(cell, col_w);
      }
      text << "\n";
    }
    text << pad("-/=/+", name_w);
    for (std::size_t a = 0; a < k; ++a) {
      if (a == bi) {
        text << pad("-", col_w);
        continue;
      }
      const auto it =
          std::find(marks.algorithms.begin(), marks.algorithms.end(), matrix.algorithms[a]);
      const auto& t = marks.totals[it - marks.algorithms.begin()];
      text << pad(std::to_string(t.baseline_worse) + "/" + std::to_string(t.similar) + "/" +
                      std::to_string(t.baseline_better),
                  col_w);
    }
    text << "\n" << pad("p-value", name_w);
    for (std::size_t a = 0; a < k; ++a)
      text << pad(a == bi ? "-" : format_e2(mean_pair_p[a]), col_w);
    text << "\n" << pad("Avg. rank", name_w);
    for (std::size_t a = 0; a < k; ++a) {
      char buf[16];
      std::snprintf(buf, sizeof(buf), "%.2f", fr.avg_ranks[a]);
      text << pad(buf, col_w);
    }
    text << "\n";
    text << "mark legend: '-' baseline significantly worse, '=' no significant difference,\n"
         << "             '+' baseline significantly better (Wilcoxon signed-rank, 5% level)\n";

    std::string csv = "problem,variant,agg_error,mark,wilcoxon_p\n";
    for (std::size_t p = 0; p < np; ++p)
      for (std::size_t a = 0; a < k; ++a) {
        const auto* v = mark_for(a, p);
        csv += matrix.problems[p] + "," + matrix.algorithms[a] + "," + format_g17(agg[a][p]) +
               "," + (v ? std::string(1, mark_char(v->mark)) : "") + "," +
               (v ? format_g17(v->p_value) : "") + "\n";
      }
    for (std::size_t a = 0; a < k; ++a) {
      if (a == bi) continue;
      const auto it =
          std::find(marks.algorithms.begin(), marks.algorithms.end(), matrix.algorithms[a]);
      const auto& t = marks.totals[it - marks.algorithms.begin()];
      csv += "totals," + matrix.algorithms[a] + "," + std::to_string(t.baseline_worse) + "/" +
             std::to_string(t.similar) + "/" + std::to_string(t.baseline_better) + ",,\n";
    }
    for (std::size_t a = 0; a < k; ++a) {
      if (a == bi) continue;
      csv += "p_value," + matrix.algorithms[a] + "," + format_g17(mean_pair_p[a]) + ",,\n";
    }
    for (std::size_t a = 0; a < k; ++a)
      csv += "avg_rank," + matrix.algorithms[a] + "," + format_g17(fr.avg_ranks[a]) + ",,\n";

    write_file(store.root / ("compare_D" + std::to_string(dim) + ".txt"), text.str());
    write_file(store.root / ("compare_D" + std::to_string(dim) + ".csv"), csv);
    all_text += text.str() + "\n";
  }
  return all_text;
}

ResultMatrix matrix_from_results_csv(const std::filesystem::path& csv, int dim) {
  std::ifstream in(csv);
  if (!in) throw std::runtime_error("cannot open " + csv.string());
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty results csv");
  ResultMatrix m;
  std::vector<std::string> problems;
  struct Row {
    std::string problem, variant;
    double error;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() < 9) throw std::runtime_error("malformed results csv row: " + line);
    if (std::stoi(fields[1]) != dim) continue;
    rows.push_back({fields[0], fields[2], std::stod(fields[7])});
  }
  for (const Row& r : rows) {
    if (std::find(m.algorithms.begin(), m.algorithms.end(), r.variant) == m.algorithms.end())
      m.algorithms.push_back(r.variant);
    if (std::find(problems.begin(), problems.end(), r.problem) == problems.end())
      problems.push_back(r.problem);
  }
  m.problems = problems;
  m.cells.assign(m.algorithms.size(), std::vector<std::vector<double>>(problems.size()));
  for (const Row& r : rows) {
    const auto a =
        std::find(m.algorithms.begin(), m.algorithms.end(), r.variant) - m.algorithms.begin();
    const auto p = std::find(problems.begin(), problems.end(), r.problem) - problems.begin();
    m.cells[a][p].push_back(r.error);
  }
  return m;
}

std::vector<double> grid_values(double from, double to, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("grid_values: step must be positive");
  std::vector<double> out;
  for (int i = 0;; ++i) {
    const double v = from + step * i;
    if (v > to + step / 2.0) break;
    out.push_back(v);
  }
  return out;
}

void sweep(const SweepConfig& config) {
  if (config.p1_values.empty() || config.p2_values.empty())
    throw std::invalid_argument("sweep: empty parameter grid");
  const DistributionSpec base = make_variant(config.variant);

  struct Cell {
    double p1, p2;
    std::string problem;
    double mean_error;
  };
  std::vector<Cell> cells;
  std::map<std::string, BenchmarkProblem> problems;
  for (const auto& name : config.problems)
    problems.emplace(name, get_problem(name, config.dim));
  for (const double p1 : config.p1_values)
    for (const double p2 : config.p2_values)
      for (const auto& name : config.problems) cells.push_back({p1, p2, name, 0.0});

  parallel_for(cells.size(), config.jobs, [&](std::size_t i) {
    Cell& cell = cells[i];
    const BenchmarkProblem& problem = problems.at(cell.problem);
    DistributionSpec spec = base;
    spec.p1 = cell.p1;
    spec.p2 = cell.p2;
    spec.validate();
    const std::string label = config.variant + "/p1=" + format_g17(cell.p1) +
                              "/p2=" + format_g17(cell.p2);
    double sum = 0.0;
    for (int r = 0; r < config.repeats; ++r) {
      CSConfig cs;
      cs.np = config.np.resolve(config.dim);
      cs.dist = spec;
      cs.max_fes = config.max_fes.resolve(config.dim);
      cs.seed = derive_stream_seed(label, cell.problem, config.dim,
                                   RandomStream::derive_seed(config.base_seed, r));
      const RunRecord rec = run(problem, cs);
      sum += rec.final_best.fitness - problem.optimum_value;
    }
    cell.mean_error = sum / config.repeats;
  });

  std::string csv = "p1,p2,problem,mean_error\n";
  for (const Cell& cell : cells)
    csv += format_g17(cell.p1) + "," + format_g17(cell.p2) + "," + cell.problem + "," +
           format_g17(cell.mean_error) + "\n";
  if (config.out_csv.has_parent_path())
    std::filesystem::create_directories(config.out_csv.parent_path());
  write_file(config.out_csv, csv);
}

std::string ident_run(const IdentRunConfig& config) {
  if (config.seeds.empty()) throw std::invalid_argument("ident_run: no seeds");
  std::vector<IdentifyResult> results;
  results.reserve(config.seeds.size());
  for (const std::uint64_t seed : config.seeds)
    results.push_back(identify(config.task, config.variant, seed));

  std::ostringstream text;
  text << "variant " << config.variant << ", " << config.seeds.size() << " seed(s)\n";
  text << "seed,a,b,c,rel_a,rel_b,rel_c,objective\n";
  std::string csv = "seed,a,b,c,rel_a,rel_b,rel_c,objective\n";
  std::vector<double> objectives;
  std::array<double, 3> mean_est{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    std::string row = std::to_string(config.seeds[i]);
    for (int c = 0; c < 3; ++c) row += "," + format_g17(r.estimate[c]);
    for (int c = 0; c < 3; ++c) row += "," + format_g17(r.relative_errors[c]);
    row += "," + format_g17(r.objective);
    text << row << "\n";
    csv += row + "\n";
    objectives.push_back(r.objective);
    for (int c = 0; c < 3; ++c) mean_est[c] += r.estimate[c] / results.size();
  }
  const char* names[3] = {"a", "b", "c"};
  for (int c = 0; c < 3; ++c) {
    text << names[c] << " (avg): " << format_g17(mean_est[c]);
    if (config.task.truth) {
      const double rel =
          std::abs(mean_est[c] - (*config.task.truth)[c]) / std::abs((*config.task.truth)[c]);
      text << "   rel. error: " << format_e2(rel);
    }
    text << "\n";
  }
  text << "F avg+/-std: " << format_e2(mean_of(objectives)) << "+/-"
       << format_e2(sample_std(objectives)) << "\n";

  if (!config.out_csv.empty()) {
    if (config.out_csv.has_parent_path())
      std::filesystem::create_directories(config.out_csv.parent_path());
    write_file(config.out_csv, csv);
  }
  return text.str();
}

}  // namespace csopt
