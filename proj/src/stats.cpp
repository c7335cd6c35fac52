#include "csopt/stats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace csopt {

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Regularized incomplete gamma functions, series + continued fraction.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < 500; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_contfrac(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::domain_error("gamma_q: bad arguments");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_contfrac(a, x);
}

struct SignedRanks {
  std::vector<double> ranks;  // midranks of |d|
  std::vector<int> signs;
  double w_plus = 0.0;
  double w_minus = 0.0;
};

SignedRanks signed_ranks(std::span<const double> x, std::span<const double> y) {
  std::vector<double> abs_d;
  SignedRanks out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    if (d == 0.0) continue;  // classical treatment: zero differences dropped
    abs_d.push_back(std::abs(d));
    out.signs.push_back(d > 0.0 ? 1 : -1);
  }
  out.ranks = midranks(abs_d);
  for (std::size_t i = 0; i < out.ranks.size(); ++i)
    (out.signs[i] > 0 ? out.w_plus : out.w_minus) += out.ranks[i];
  return out;
}

// Exact null tail probabilities of W+ by enumerating all sign assignments.
// Midranks are half-integers, so doubled ranks enumerate in exact integers.
void exact_tails(const std::vector<double>& ranks, double w_plus, double& p_less,
                 double& p_greater) {
  const int n = static_cast<int>(ranks.size());
  std::vector<long long> r2(n);
  for (int i = 0; i < n; ++i) r2[i] = std::llround(ranks[i] * 2.0);
  const long long target = std::llround(w_plus * 2.0);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t count_le = 0, count_ge = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    long long w = 0;
    std::uint64_t bits = mask;
    while (bits) {
      w += r2[std::countr_zero(bits)];
      bits &= bits - 1;
    }
    if (w <= target) ++count_le;
    if (w >= target) ++count_ge;
  }
  p_less = static_cast<double>(count_le) / static_cast<double>(total);
  p_greater = static_cast<double>(count_ge) / static_cast<double>(total);
}

void approx_tails(const std::vector<double>& ranks, double w_plus, double& p_less,
                  double& p_greater) {
  const double n = static_cast<double>(ranks.size());
  const double mean = n * (n + 1.0) / 4.0;
  double tie_term = 0.0;
  std::vector<double> sorted(ranks.begin(), ranks.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }
  const double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_term / 48.0;
  const double sd = std::sqrt(var);
  p_less = normal_cdf((w_plus - mean + 0.5) / sd);
  p_greater = 1.0 - normal_cdf((w_plus - mean - 0.5) / sd);
}

}  // namespace

std::vector<double> midranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    const double mid = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = mid;
    i = j;
  }
  return ranks;
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                    Tail tail, WilcoxonMethod method) {
  if (x.size() != y.size())
    throw std::invalid_argument("wilcoxon_signed_rank: samples must be paired");
  if (x.empty()) throw std::invalid_argument("wilcoxon_signed_rank: empty samples");

  const SignedRanks sr = signed_ranks(x, y);
  WilcoxonResult result;
  result.n_effective = static_cast<int>(sr.ranks.size());
  if (result.n_effective == 0) {
    // no nonzero differences: statistic undefined, no evidence either way
    result.statistic = std::numeric_limits<double>::quiet_NaN();
    result.p_value = 1.0;
    return result;
  }
  result.w_plus = sr.w_plus;
  result.w_minus = sr.w_minus;
  result.statistic = std::min(sr.w_plus, sr.w_minus);

  const bool exact = method == WilcoxonMethod::exact ||
                     (method == WilcoxonMethod::automatic && result.n_effective <= 12);
  double p_less, p_greater;
  if (exact)
    exact_tails(sr.ranks, sr.w_plus, p_less, p_greater);
  else
    approx_tails(sr.ranks, sr.w_plus, p_less, p_greater);

  switch (tail) {
    case Tail::two_sided:
      result.p_value = std::min(1.0, 2.0 * std::min(p_less, p_greater));
      break;
    case Tail::less:
      result.p_value = std::min(1.0, p_less);
      break;
    case Tail::greater:
      result.p_value = std::min(1.0, p_greater);
      break;
  }
  return result;
}

FriedmanResult friedman(const ResultMatrix& matrix) {
  const std::size_t k = matrix.algorithms.size();
  const std::size_t n = matrix.problems.size();
  if (k < 2 || n < 2)
    throw std::invalid_argument("friedman: needs >= 2 algorithms and >= 2 problems");
  if (matrix.cells.size() != k)
    throw std::invalid_argument("friedman: cell rows do not match algorithms");

  std::vector<double> rank_sums(k, 0.0);
  double a1 = 0.0;  // sum of squared ranks over the whole table
  std::vector<double> row(k);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t a = 0; a < k; ++a) {
      const auto& runs = matrix.cells[a].at(p);
      if (runs.empty()) throw std::invalid_argument("friedman: empty cell");
      row[a] = std::accumulate(runs.begin(), runs.end(), 0.0) / runs.size();
    }
    const auto ranks = midranks(row);
    for (std::size_t a = 0; a < k; ++a) {
      rank_sums[a] += ranks[a];
      a1 += ranks[a] * ranks[a];
    }
  }

  FriedmanResult result;
  result.avg_ranks.resize(k);
  for (std::size_t a = 0; a < k; ++a) result.avg_ranks[a] = rank_sums[a] / n;

  const double kk = static_cast<double>(k);
  const double nn = static_cast<double>(n);
  const double c1 = nn * kk * (kk + 1.0) * (kk + 1.0) / 4.0;
  double s = 0.0;
  for (std::size_t a = 0; a < k; ++a) {
    const double d = rank_sums[a] - nn * (kk + 1.0) / 2.0;
    s += d * d;
  }
  const double denom = a1 - c1;
  if (denom <= 0.0) {
    // every row fully tied
    result.chi_square = 0.0;
    result.p_value = 1.0;
    return result;
  }
  result.chi_square = (kk - 1.0) * s / denom;
  result.p_value = chi_square_survival(result.chi_square, static_cast<int>(k) - 1);
  return result;
}

MarkTable mark_table(const std::string& baseline, const ResultMatrix& matrix) {
  const auto bi_it =
      std::find(matrix.algorithms.begin(), matrix.algorithms.end(), baseline);
  if (bi_it == matrix.algorithms.end())
    throw std::invalid_argument("mark_table: baseline " + baseline + " not in matrix");
  const std::size_t bi = bi_it - matrix.algorithms.begin();

  MarkTable table;
  table.baseline = baseline;
  table.problems = matrix.problems;
  for (std::size_t a = 0; a < matrix.algorithms.size(); ++a) {
    if (a == bi) continue;
    table.algorithms.push_back(matrix.algorithms[a]);
    std::vector<ComparisonVerdict> row;
    MarkTable::Totals totals;
    for (std::size_t p = 0; p < matrix.problems.size(); ++p) {
      const auto& base_runs = matrix.cells[bi].at(p);
      const auto& alg_runs = matrix.cells[a].at(p);
      if (base_runs.size() != alg_runs.size())
        throw std::invalid_argument("mark_table: run counts differ on " + matrix.problems[p]);
      const auto w = wilcoxon_signed_rank(base_runs, alg_runs);
      ComparisonVerdict verdict;
      verdict.p_value = w.p_value;
      if (w.p_value >= 0.05) {
        verdict.mark = Mark::similar;
        ++totals.similar;
      } else if (w.w_plus > w.w_minus) {
        // baseline differences mostly positive: baseline values larger, i.e.
        // worse under minimization
        verdict.mark = Mark::baseline_worse;
        ++totals.baseline_worse;
      } else {
        verdict.mark = Mark::baseline_better;
        ++totals.baseline_better;
      }
      row.push_back(verdict);
    }
    table.verdicts.push_back(std::move(row));
    table.totals.push_back(totals);
  }
  return table;
}

char mark_char(Mark mark) {
  switch (mark) {
    case Mark::baseline_worse: return '-';
    case Mark::similar: return '=';
    case Mark::baseline_better: return '+';
  }
  return '?';
}

double chi_square_survival(double x, int df) {
  if (df < 1) throw std::domain_error("chi_square_survival: df must be positive");
  if (x <= 0.0) return 1.0;
  return gamma_q(df / 2.0, x / 2.0);
}

}  // namespace csopt
