#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mogp {

/// A nondominated, deduplicated set of (TPR, TNR) points sorted by
/// ascending TPR.
struct FrontSnapshot {
  std::vector<std::pair<double, double>> points;

  bool empty() const { return points.empty(); }
};

/// Build a snapshot from arbitrary points: dominated and duplicate points
/// are dropped.
FrontSnapshot make_front_snapshot(std::vector<std::pair<double, double>> points);

/// Area under the front against reference point (0, 0), as the sum of
/// trapezoids between consecutive points, with a virtual left point (0, y1)
/// extending the front flat to the TNR axis. Empty front yields 0.
double hypervolume_trapezoid(const FrontSnapshot& front);

/// Classical staircase hypervolume (rectangle sum) for cross-checks.
double hypervolume_staircase(const FrontSnapshot& front);

/// Nondominated union of the final fronts of all runs.
FrontSnapshot accumulate_po_front(const std::vector<FrontSnapshot>& run_fronts);

/// Two-sided Wilcoxon rank-sum p-value. Exact by enumeration of the
/// rank-sum distribution when the pooled size is <= 20 and there are no
/// ties; otherwise a normal approximation with tie-corrected variance and
/// continuity correction. An all-constant pooled sample yields 1.0.
double wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b);

inline double bonferroni_threshold(double alpha, int m) {
  return alpha / static_cast<double>(m);
}

enum class OutcomeFlag { Better, Worse, Nss, Equal };

const char* flag_symbol(OutcomeFlag f);

/// '+' / '-' when p clears the corrected threshold (by mean ordering),
/// 'NSS' otherwise; '=' is reserved for literally identical samples.
OutcomeFlag classify_outcome(double p_value, const std::vector<double>& a,
                             const std::vector<double>& b, double threshold);

/// Number of grid cells where sample `a` is significantly better than `b`
/// at the given corrected threshold. Each entry pairs one cell's samples.
int payoff_wins(
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>& cells,
    double threshold);

double mean(const std::vector<double>& v);
double stddev(const std::vector<double>& v);

}  // namespace mogp
