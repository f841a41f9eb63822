#include "mogp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace mogp {

FrontSnapshot make_front_snapshot(std::vector<std::pair<double, double>> points) {
  std::vector<std::pair<double, double>> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < points.size() && !drop; ++j) {
      if (i == j) continue;
      const auto& [xi, yi] = points[i];
      const auto& [xj, yj] = points[j];
      if (xj >= xi && yj >= yi && (xj > xi || yj > yi)) drop = true;  // dominated
      if (xj == xi && yj == yi && j < i) drop = true;                // duplicate
    }
    if (!drop) kept.push_back(points[i]);
  }
  std::sort(kept.begin(), kept.end());
  return FrontSnapshot{std::move(kept)};
}

double hypervolume_trapezoid(const FrontSnapshot& front) {
  if (front.empty()) return 0.0;
  double hv = 0.0;
  double px = 0.0, py = front.points.front().second;  // virtual left point (0, y1)
  for (const auto& [x, y] : front.points) {
    hv += (x - px) * (y + py) / 2.0;
    px = x;
    py = y;
  }
  return hv;
}

double hypervolume_staircase(const FrontSnapshot& front) {
  double hv = 0.0;
  double px = 0.0;
  for (const auto& [x, y] : front.points) {
    hv += (x - px) * y;
    px = x;
  }
  return hv;
}

FrontSnapshot accumulate_po_front(const std::vector<FrontSnapshot>& run_fronts) {
  std::vector<std::pair<double, double>> all;
  for (const auto& f : run_fronts)
    all.insert(all.end(), f.points.begin(), f.points.end());
  return make_front_snapshot(std::move(all));
}

namespace {

bool has_ties(std::vector<double> pooled) {
  std::sort(pooled.begin(), pooled.end());
  return std::adjacent_find(pooled.begin(), pooled.end()) != pooled.end();
}

// exact two-sided p over the rank-sum distribution: ways[s] = number of
// n1-subsets of ranks 1..N with rank sum s
double exact_rank_sum_p(std::size_t n1, std::size_t n2, std::uint64_t w_obs) {
  const std::size_t total_n = n1 + n2;
  const std::size_t max_sum = total_n * (total_n + 1) / 2;
  std::vector<std::vector<std::uint64_t>> ways(
      n1 + 1, std::vector<std::uint64_t>(max_sum + 1, 0));
  ways[0][0] = 1;
  for (std::size_t r = 1; r <= total_n; ++r)
    for (std::size_t k = std::min(n1, r); k >= 1; --k)
      for (std::size_t s = max_sum; s >= r; --s)
        ways[k][s] += ways[k - 1][s - r];

  std::uint64_t total = 0, below = 0, above = 0;
  for (std::size_t s = 0; s <= max_sum; ++s) {
    total += ways[n1][s];
    if (s <= w_obs) below += ways[n1][s];
    if (s >= w_obs) above += ways[n1][s];
  }
  const std::uint64_t extreme = std::min(below, above);
  return std::min(1.0, 2.0 * static_cast<double>(extreme) / static_cast<double>(total));
}

std::vector<double> midranks(const std::vector<double>& pooled_sorted,
                             const std::vector<double>& values) {
  std::vector<double> ranks;
  ranks.reserve(values.size());
  for (const double v : values) {
    const auto lo = std::lower_bound(pooled_sorted.begin(), pooled_sorted.end(), v);
    const auto hi = std::upper_bound(pooled_sorted.begin(), pooled_sorted.end(), v);
    const double first = static_cast<double>(lo - pooled_sorted.begin()) + 1.0;
    const double last = static_cast<double>(hi - pooled_sorted.begin());
    ranks.push_back((first + last) / 2.0);
  }
  return ranks;
}

double normal_approx_p(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::sort(pooled.begin(), pooled.end());
  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  const double n = n1 + n2;

  const auto ranks_a = midranks(pooled, a);
  const double w = std::accumulate(ranks_a.begin(), ranks_a.end(), 0.0);
  const double mu = n1 * (n + 1.0) / 2.0;

  double tie_sum = 0.0;  // sum of t^3 - t over tie groups
  for (std::size_t i = 0; i < pooled.size();) {
    std::size_t j = i;
    while (j < pooled.size() && pooled[j] == pooled[i]) ++j;
    const double t = static_cast<double>(j - i);
    tie_sum += t * t * t - t;
    i = j;
  }
  const double var = n1 * n2 / 12.0 * ((n + 1.0) - tie_sum / (n * (n - 1.0)));
  if (var <= 0.0) return 1.0;  // all-constant pooled sample

  const double diff = w - mu;
  const double cc = diff > 0.0 ? -0.5 : (diff < 0.0 ? 0.5 : 0.0);
  const double z = (diff + cc) / std::sqrt(var);
  return std::min(1.0, std::erfc(std::abs(z) / std::sqrt(2.0)));
}

}  // namespace

double wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("wilcoxon_rank_sum: empty sample");

  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  if (pooled.size() <= 20 && !has_ties(pooled)) {
    std::sort(pooled.begin(), pooled.end());
    std::uint64_t w = 0;
    for (const double v : a)
      w += static_cast<std::uint64_t>(
               std::lower_bound(pooled.begin(), pooled.end(), v) - pooled.begin()) +
           1;
    return exact_rank_sum_p(a.size(), b.size(), w);
  }
  return normal_approx_p(a, b);
}

const char* flag_symbol(OutcomeFlag f) {
  switch (f) {
    case OutcomeFlag::Better: return "+";
    case OutcomeFlag::Worse: return "-";
    case OutcomeFlag::Nss: return "NSS";
    case OutcomeFlag::Equal: return "=";
  }
  return "?";
}

OutcomeFlag classify_outcome(double p_value, const std::vector<double>& a,
                             const std::vector<double>& b, double threshold) {
  if (a == b) return OutcomeFlag::Equal;
  if (p_value >= threshold) return OutcomeFlag::Nss;
  return mean(a) > mean(b) ? OutcomeFlag::Better : OutcomeFlag::Worse;
}

int payoff_wins(
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>& cells,
    double threshold) {
  int wins = 0;
  for (const auto& [a, b] : cells) {
    const double p = wilcoxon_rank_sum(a, b);
    if (classify_outcome(p, a, b, threshold) == OutcomeFlag::Better) ++wins;
  }
  return wins;
}

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double stddev(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double s = 0.0;
  for (const double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

}  // namespace mogp
