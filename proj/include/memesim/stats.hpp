#pragma once

#include <span>
#include <vector>

namespace memesim::stats {

struct MannWhitneyResult {
  double u = 0.0;  // U of the first sample
  double p_two_sided = 1.0;
  bool exact = false;
};

/// Rank-sum test with average ranks for ties. Exact null distribution when the
/// smaller sample has at most 8 values and there are no ties; otherwise the
/// normal approximation with tie and continuity corrections.
MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

/// Two-sided exact p for U of the first sample (tie-free null), any sizes.
double mann_whitney_exact_p(int n_a, int n_b, double u);
/// Normal approximation with tie and continuity corrections.
double mann_whitney_normal_p(std::span<const double> a, std::span<const double> b);

struct WilcoxonResult {
  double w_plus = 0.0;
  double p_two_sided = 1.0;
  int n_used = 0;
  int zero_differences = 0;
  bool exact = false;
};

/// Paired signed-rank test. Zero differences are dropped. Exact enumeration of
/// all 2^n sign assignments when n <= 12, otherwise normal approximation with
/// tie and continuity corrections. Throws LengthMismatch or AllZeroDifferences.
WilcoxonResult wilcoxon_signed(std::span<const double> a, std::span<const double> b);

/// Average ranks (1-based) of `values`.
std::vector<double> average_ranks(std::span<const double> values);

double normal_two_sided_p(double z);

}  // namespace memesim::stats
