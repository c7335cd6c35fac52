#pragma once

#include <span>
#include <string>
#include <vector>

namespace csopt {

enum class Tail { two_sided, less, greater };
enum class WilcoxonMethod { automatic, exact, normal_approx };

struct WilcoxonResult {
  double statistic = 0.0;  // min(W+, W-); NaN when all differences are zero
  double p_value = 1.0;
  double w_plus = 0.0;
  double w_minus = 0.0;
  int n_effective = 0;  // pairs remaining after zero differences are dropped
};

/// Paired signed-rank test. Zero differences are dropped, tied absolute
/// differences get midranks. The null distribution is enumerated exactly up
/// to 12 effective pairs; beyond that a normal approximation with tie and
/// continuity corrections is used. Tail::less tests whether x tends below y.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                    Tail tail = Tail::two_sided,
                                    WilcoxonMethod method = WilcoxonMethod::automatic);

/// Ascending 1-based ranks with ties averaged.
std::vector<double> midranks(std::span<const double> values);

/// Final best-fitness values per (algorithm, problem) cell over repeated runs.
struct ResultMatrix {
  std::vector<std::string> algorithms;
  std::vector<std::string> problems;
  // cells[a][p] holds the runs of algorithm a on problem p
  std::vector<std::vector<std::vector<double>>> cells;
};

struct FriedmanResult {
  std::vector<double> avg_ranks;  // per algorithm; rank 1 is best (lowest)
  double chi_square = 0.0;        // tie-corrected statistic, k-1 dof
  double p_value = 1.0;
};

/// Friedman test over per-cell run means; needs at least two algorithms and
/// two problems.
FriedmanResult friedman(const ResultMatrix& matrix);

enum class Mark {
  baseline_worse,   // baseline significantly worse than the algorithm
  similar,          // no significant difference at the 5% level
  baseline_better,  // baseline significantly better
};

struct ComparisonVerdict {
  Mark mark = Mark::similar;
  double p_value = 1.0;
};

struct MarkTable {
  std::string baseline;
  std::vector<std::string> algorithms;  // everything except the baseline
  std::vector<std::string> problems;
  std::vector<std::vector<ComparisonVerdict>> verdicts;  // [algorithm][problem]
  struct Totals {
    int baseline_worse = 0;
    int similar = 0;
    int baseline_better = 0;
  };
  std::vector<Totals> totals;  // per algorithm
};

/// Per-problem Wilcoxon of baseline runs against each other algorithm's
/// paired runs, marked at the 5% level.
MarkTable mark_table(const std::string& baseline, const ResultMatrix& matrix);

char mark_char(Mark mark);  // '-' worse, '=' similar, '+' better (baseline view)

/// Upper tail of the chi-square distribution with df degrees of freedom.
double chi_square_survival(double x, int df);

}  // namespace csopt
