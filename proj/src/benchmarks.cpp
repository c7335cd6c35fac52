#include "csopt/benchmarks.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "csopt/random.hpp"

namespace csopt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Schwefel 2.26 offset constant and the matching optimizer coordinate.
constexpr double kSchwefelConstant = 418.9828872724339;
constexpr double kSchwefelOptimizer = 420.968746359982027;

// ---- classical cores -------------------------------------------------

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (const double v : x) s += v * v;
  return s;
}

double rosenbrock(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double d = x[i + 1] - x[i] * x[i];
    const double e = x[i] - 1.0;
    s += 100.0 * d * d + e * e;
  }
  return s;
}

double ackley(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double s1 = 0.0, s2 = 0.0;
  for (const double v : x) {
    s1 += v * v;
    s2 += std::cos(kTwoPi * v);
  }
  // grouped so both terms cancel exactly at the origin
  return (20.0 - 20.0 * std::exp(-0.2 * std::sqrt(s1 / n))) +
         (std::exp(1.0) - std::exp(s2 / n));
}

double griewank(std::span<const double> x) {
  double s = 0.0, p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * x[i];
    p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return s / 4000.0 - p + 1.0;
}

double rastrigin(std::span<const double> x) {
  double s = 0.0;
  for (const double v : x) s += v * v - 10.0 * std::cos(kTwoPi * v) + 10.0;
  return s;
}

double schwefel226(std::span<const double> x) {
  double s = 0.0;
  for (const double v : x) s += v * std::sin(std::sqrt(std::abs(v)));
  return kSchwefelConstant * static_cast<double>(x.size()) - s;
}

double salomon(std::span<const double> x) {
  const double r = std::sqrt(sphere(x));
  return 1.0 - std::cos(kTwoPi * r) + 0.1 * r;
}

double whitley(std::span<const double> x) {
  double s = 0.0;
  for (const double xi : x) {
    const double xi2 = xi * xi;
    for (const double xj : x) {
      const double d = xi2 - xj;
      const double e = 1.0 - xj;
      const double y = 100.0 * d * d + e * e;
      s += y * y / 4000.0 - std::cos(y) + 1.0;
    }
  }
  return s;
}

double penalty_u(double v, double a, double k, double m) {
  if (v > a) return k * std::pow(v - a, m);
  if (v < -a) return k * std::pow(-v - a, m);
  return 0.0;
}

double penalized1(std::span<const double> x) {
  const std::size_t n = x.size();
  auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
  const double sy1 = std::sin(kPi * y(0));
  double s = 10.0 * sy1 * sy1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = y(i) - 1.0;
    const double sn = std::sin(kPi * y(i + 1));
    s += d * d * (1.0 + 10.0 * sn * sn);
  }
  const double dn = y(n - 1) - 1.0;
  s += dn * dn;
  double pen = 0.0;
  for (const double v : x) pen += penalty_u(v, 10.0, 100.0, 4.0);
  return kPi / static_cast<double>(n) * s + pen;
}

double penalized2(std::span<const double> x) {
  const std::size_t n = x.size();
  const double s1 = std::sin(3.0 * kPi * x[0]);
  double s = s1 * s1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = x[i] - 1.0;
    const double sn = std::sin(3.0 * kPi * x[i + 1]);
    s += d * d * (1.0 + sn * sn);
  }
  const double dn = x[n - 1] - 1.0;
  const double sl = std::sin(kTwoPi * x[n - 1]);
  s += dn * dn * (1.0 + sl * sl);
  double pen = 0.0;
  for (const double v : x) pen += penalty_u(v, 5.0, 100.0, 4.0);
  return 0.1 * s + pen;
}

double elliptic(std::span<const double> z) {
  const std::size_t n = z.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double expo = n > 1 ? static_cast<double>(i) / static_cast<double>(n - 1) : 0.0;
    s += std::pow(1.0e6, expo) * z[i] * z[i];
  }
  return s;
}

double schwefel12(std::span<const double> z) {
  double s = 0.0, prefix = 0.0;
  for (const double v : z) {
    prefix += v;
    s += prefix * prefix;
  }
  return s;
}

// ---- shift/rotation plumbing -----------------------------------------

using Matrix = std::vector<std::vector<double>>;

std::vector<double>& scratch_a() {
  thread_local std::vector<double> buf;
  return buf;
}
std::vector<double>& scratch_b() {
  thread_local std::vector<double> buf;
  return buf;
}

void subtract_into(std::span<const double> x, const std::vector<double>& o,
                   std::vector<double>& out) {
  out.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - o[i];
}

void matvec_into(const Matrix& m, const std::vector<double>& v, std::vector<double>& out) {
  const std::size_t n = v.size();
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += m[i][j] * v[j];
    out[i] = s;
  }
}

void check_orthogonal(const Matrix& r, const std::string& name) {
  const std::size_t n = r.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += r[k][i] * r[k][j];
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  }
  if (!(worst < 1e-10))
    throw std::runtime_error(name + ": rotation matrix is not orthogonal (max deviation " +
                             std::to_string(worst) + ")");
}

std::uint64_t synthetic_seed(const std::string& name, int dim) {
  return fnv1a64("synthetic/" + name + "/D" + std::to_string(dim));
}

std::vector<double> synthetic_shift(const std::string& name, int dim, double lo, double hi) {
  RandomStream stream(synthetic_seed(name + "/shift", dim));
  std::vector<double> o(dim);
  for (double& v : o) v = lo + (0.1 + 0.8 * stream.uniform_open01()) * (hi - lo);
  return o;
}

// Orthonormalized seeded Gaussian matrix (modified Gram-Schmidt, two passes).
Matrix synthetic_rotation(const std::string& name, int dim) {
  RandomStream stream(synthetic_seed(name + "/rotation", dim));
  Matrix m(dim, std::vector<double>(dim));
  for (auto& row : m)
    for (double& v : row) v = stream.normal();
  for (int j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < j; ++i) {
        double dot = 0.0;
        for (int k = 0; k < dim; ++k) dot += m[k][i] * m[k][j];
        for (int k = 0; k < dim; ++k) m[k][j] -= dot * m[k][i];
      }
    }
    double norm = 0.0;
    for (int k = 0; k < dim; ++k) norm += m[k][j] * m[k][j];
    norm = std::sqrt(norm);
    for (int k = 0; k < dim; ++k) m[k][j] /= norm;
  }
  return m;
}

std::vector<double> load_numbers(const std::filesystem::path& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(what + ": cannot open data file " + path.string());
  std::vector<double> values;
  double v;
  while (in >> v) values.push_back(v);
  if (!in.eof())
    throw std::runtime_error(what + ": malformed data file " + path.string());
  return values;
}

std::vector<double> load_shift(const std::filesystem::path& path, int dim,
                               const std::string& name) {
  auto values = load_numbers(path, name);
  if (static_cast<int>(values.size()) < dim)
    throw std::runtime_error(name + ": shift file " + path.string() + " holds " +
                             std::to_string(values.size()) + " values, need " +
                             std::to_string(dim));
  values.resize(dim);
  return values;
}

// Leading dim x dim block, read row by row.
Matrix load_matrix(const std::filesystem::path& path, int dim, const std::string& name) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(name + ": cannot open data file " + path.string());
  Matrix m;
  std::string line;
  while (static_cast<int>(m.size()) < dim && std::getline(in, line)) {
    std::istringstream row(line);
    std::vector<double> values;
    double v;
    while (row >> v) values.push_back(v);
    if (!row.eof())
      throw std::runtime_error(name + ": malformed data file " + path.string());
    if (values.empty()) continue;
    if (static_cast<int>(values.size()) < dim)
      throw std::runtime_error(name + ": matrix row in " + path.string() + " holds " +
                               std::to_string(values.size()) + " values, need " +
                               std::to_string(dim));
    values.resize(dim);
    m.push_back(std::move(values));
  }
  if (static_cast<int>(m.size()) < dim)
    throw std::runtime_error(name + ": matrix file " + path.string() + " holds " +
                             std::to_string(m.size()) + " rows, need " + std::to_string(dim));
  return m;
}

// ---- constructors ------------------------------------------------------

BenchmarkProblem classical(const std::string& name, int dim, double lo, double hi,
                           double optimizer_coord,
                           double (*core)(std::span<const double>)) {
  BenchmarkProblem p;
  p.name = name;
  p.dim = dim;
  p.lower.assign(dim, lo);
  p.upper.assign(dim, hi);
  p.known_optimizer = std::vector<double>(dim, optimizer_coord);
  p.eval_fn = [core](std::span<const double> x) { return core(x); };
  return p;
}

const ManifestEntry* find_entry(const SuiteManifest& manifest, const std::string& name) {
  const auto it = manifest.entries.find(name);
  return it == manifest.entries.end() ? nullptr : &it->second;
}

BenchmarkProblem cec(const std::string& name, int dim, double lo, double hi,
                     double default_bias, bool rotated,
                     double (*core)(std::span<const double>),
                     const SuiteManifest& manifest) {
  BenchmarkProblem p;
  p.name = name;
  p.dim = dim;
  p.lower.assign(dim, lo);
  p.upper.assign(dim, hi);
  const ManifestEntry* entry = find_entry(manifest, name);
  p.f_bias = entry && entry->bias ? *entry->bias : default_bias;
  p.optimum_value = p.f_bias;

  std::vector<double> o = entry && !entry->shift.empty()
                              ? load_shift(entry->shift, dim, name)
                              : synthetic_shift(name, dim, lo, hi);
  if (name == "F8") {
    // global optimum pinned to the lower bound on every other coordinate
    if (!entry || entry->shift.empty())
      for (int i = 0; i < dim; i += 2) o[i] = lo;
  }
  p.shift = o;
  p.known_optimizer = o;

  if (rotated) {
    Matrix r = entry && !entry->rotation.empty() ? load_matrix(entry->rotation, dim, name)
                                                 : synthetic_rotation(name, dim);
    check_orthogonal(r, name);
    p.rotation = r;
    const double bias = p.f_bias;
    p.eval_fn = [o, r, core, bias](std::span<const double> x) {
      auto& z = scratch_a();
      auto& y = scratch_b();
      subtract_into(x, o, z);
      matvec_into(r, z, y);
      return core(y) + bias;
    };
  } else {
    const double bias = p.f_bias;
    p.eval_fn = [o, core, bias](std::span<const double> x) {
      auto& z = scratch_a();
      subtract_into(x, o, z);
      return core(z) + bias;
    };
  }
  return p;
}

// Shifted Rosenbrock needs z = x - o + 1 so the optimum sits at x = o.
BenchmarkProblem cec_rosenbrock(const std::string& name, int dim, double default_bias,
                                const SuiteManifest& manifest) {
  BenchmarkProblem p;
  p.name = name;
  p.dim = dim;
  p.lower.assign(dim, -100.0);
  p.upper.assign(dim, 100.0);
  const ManifestEntry* entry = find_entry(manifest, name);
  p.f_bias = entry && entry->bias ? *entry->bias : default_bias;
  p.optimum_value = p.f_bias;
  std::vector<double> o = entry && !entry->shift.empty()
                              ? load_shift(entry->shift, dim, name)
                              : synthetic_shift(name, dim, -100.0, 100.0);
  p.shift = o;
  p.known_optimizer = o;
  const double bias = p.f_bias;
  p.eval_fn = [o, bias](std::span<const double> x) {
    auto& z = scratch_a();
    z.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - o[i] + 1.0;
    return rosenbrock(z) + bias;
  };
  return p;
}

// F5: max_i |A_i x - B_i| with B = A o and part of o pinned to the bounds.
BenchmarkProblem cec_f5(int dim, const SuiteManifest& manifest) {
  const std::string name = "F5";
  BenchmarkProblem p;
  p.name = name;
  p.dim = dim;
  p.lower.assign(dim, -100.0);
  p.upper.assign(dim, 100.0);
  const ManifestEntry* entry = find_entry(manifest, name);
  p.f_bias = entry && entry->bias ? *entry->bias : -310.0;
  p.optimum_value = p.f_bias;

  std::vector<double> o;
  if (entry && !entry->shift.empty()) {
    o = load_shift(entry->shift, dim, name);
  } else {
    o = synthetic_shift(name, dim, -100.0, 100.0);
    const int quarter = (dim + 3) / 4;
    for (int i = 0; i < quarter; ++i) o[i] = -100.0;
    for (int i = dim - dim / 4; i < dim; ++i) o[i] = 100.0;
  }
  Matrix a;
  if (entry && !entry->matrix.empty()) {
    a = load_matrix(entry->matrix, dim, name);
  } else {
    RandomStream stream(synthetic_seed(name + "/matrix", dim));
    a.assign(dim, std::vector<double>(dim));
    for (auto& row : a)
      for (double& v : row) v = -500.0 + 1000.0 * stream.uniform_open01();
  }
  std::vector<double> b(dim);
  for (int i = 0; i < dim; ++i) {
    double s = 0.0;
    for (int j = 0; j < dim; ++j) s += a[i][j] * o[j];
    b[i] = s;
  }
  p.shift = o;
  p.known_optimizer = o;
  const double bias = p.f_bias;
  p.eval_fn = [a, b, bias](std::span<const double> x) {
    double worst = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) s += a[i][j] * x[j];
      worst = std::max(worst, std::abs(s - b[i]));
    }
    return worst + bias;
  };
  return p;
}

}  // namespace

double BenchmarkProblem::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim)
    throw std::invalid_argument(name + ": evaluate expects dimension " + std::to_string(dim) +
                                ", got " + std::to_string(x.size()));
  return eval_fn(x);
}

SuiteManifest SuiteManifest::load(const std::filesystem::path& json_file) {
  std::ifstream in(json_file);
  if (!in) throw std::runtime_error("cannot open suite manifest " + json_file.string());
  nlohmann::json j;
  in >> j;
  const auto base = json_file.parent_path();
  auto resolve = [&](const std::string& s) {
    std::filesystem::path p(s);
    return p.is_absolute() ? p : base / p;
  };
  SuiteManifest m;
  for (const auto& [name, body] : j.items()) {
    ManifestEntry e;
    if (body.contains("shift")) e.shift = resolve(body.at("shift").get<std::string>());
    if (body.contains("rotation")) e.rotation = resolve(body.at("rotation").get<std::string>());
    if (body.contains("matrix")) e.matrix = resolve(body.at("matrix").get<std::string>());
    if (body.contains("bias")) e.bias = body.at("bias").get<double>();
    m.entries[name] = std::move(e);
  }
  return m;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "F_sph", "F_ros", "F_ack", "F_grw", "F_ras", "F_sch", "F_sal",
      "F_wht", "F_pn1", "F_pn2", "F1",    "F2",    "F3",    "F4",
      "F5",    "F6",    "F7",    "F8",    "F9",    "F10"};
  return names;
}

BenchmarkProblem get_problem(const std::string& name, int dim) {
  return get_problem(name, dim, SuiteManifest{});
}

BenchmarkProblem get_problem(const std::string& name, int dim, const SuiteManifest& manifest) {
  if (dim < 1) throw std::invalid_argument("get_problem: dim must be positive");
  if (name == "F_sph") return classical(name, dim, -100.0, 100.0, 0.0, sphere);
  if (name == "F_ros") return classical(name, dim, -30.0, 30.0, 1.0, rosenbrock);
  if (name == "F_ack") return classical(name, dim, -32.0, 32.0, 0.0, ackley);
  if (name == "F_grw") return classical(name, dim, -600.0, 600.0, 0.0, griewank);
  if (name == "F_ras") return classical(name, dim, -5.12, 5.12, 0.0, rastrigin);
  if (name == "F_sch")
    return classical(name, dim, -500.0, 500.0, kSchwefelOptimizer, schwefel226);
  if (name == "F_sal") return classical(name, dim, -100.0, 100.0, 0.0, salomon);
  if (name == "F_wht") return classical(name, dim, -10.24, 10.24, 1.0, whitley);
  if (name == "F_pn1") return classical(name, dim, -50.0, 50.0, -1.0, penalized1);
  if (name == "F_pn2") return classical(name, dim, -50.0, 50.0, 1.0, penalized2);
  if (name == "F1") return cec(name, dim, -100.0, 100.0, -450.0, false, sphere, manifest);
  if (name == "F2") return cec(name, dim, -100.0, 100.0, -450.0, false, schwefel12, manifest);
  if (name == "F3") return cec(name, dim, -100.0, 100.0, -450.0, true, elliptic, manifest);
  // F4 is the same quadratic form as F2 under its own shift; the noise term
  // of the original definition is dropped to keep evaluation pure.
  if (name == "F4") return cec(name, dim, -100.0, 100.0, -450.0, false, schwefel12, manifest);
  if (name == "F5") return cec_f5(dim, manifest);
  if (name == "F6") return cec_rosenbrock(name, dim, 390.0, manifest);
  if (name == "F7") return cec(name, dim, 0.0, 600.0, -180.0, true, griewank, manifest);
  if (name == "F8") return cec(name, dim, -32.0, 32.0, -140.0, true, ackley, manifest);
  if (name == "F9") return cec(name, dim, -5.0, 5.0, -330.0, false, rastrigin, manifest);
  if (name == "F10") return cec(name, dim, -5.0, 5.0, -330.0, true, rastrigin, manifest);
  throw std::invalid_argument("get_problem: unknown problem name " + name);
}

std::vector<BenchmarkProblem> suite(int dim) { return suite(dim, SuiteManifest{}); }

std::vector<BenchmarkProblem> suite(int dim, const SuiteManifest& manifest) {
  std::vector<BenchmarkProblem> problems;
  problems.reserve(suite_names().size());
  for (const auto& name : suite_names()) problems.push_back(get_problem(name, dim, manifest));
  return problems;
}

}  // namespace csopt
