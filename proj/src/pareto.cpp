#include "mogp/pareto.hpp"

#include <algorithm>
#include <numeric>

namespace mogp {

bool dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominates: objective vectors of different length");
  bool strictly = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strictly = true;
  }
  return strictly;
}

std::vector<int> dominance_rank(ObjectiveView pop) {
  std::vector<int> rank(pop.size(), 0);
  for (std::size_t i = 0; i < pop.size(); ++i)
    for (std::size_t j = 0; j < pop.size(); ++j)
      if (i != j && dominates(pop[j], pop[i])) ++rank[i];
  return rank;
}

std::vector<int> dominance_count(ObjectiveView pop) {
  std::vector<int> count(pop.size(), 0);
  for (std::size_t i = 0; i < pop.size(); ++i)
    for (std::size_t j = 0; j < pop.size(); ++j)
      if (i != j && dominates(pop[i], pop[j])) ++count[i];
  return count;
}

std::vector<double> spea2_raw_fitness(ObjectiveView pop) {
  const auto count = dominance_count(pop);
  std::vector<double> raw(pop.size(), 0.0);
  for (std::size_t i = 0; i < pop.size(); ++i)
    for (std::size_t j = 0; j < pop.size(); ++j)
      if (i != j && dominates(pop[j], pop[i])) raw[i] += count[j];
  return raw;
}

FrontPartition fast_nondominated_sort(ObjectiveView pop) {
  const std::size_t n = pop.size();
  std::vector<std::vector<std::size_t>> dominated_by(n);
  std::vector<int> dom_count(n, 0);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dominates(pop[i], pop[j])) {
        dominated_by[i].push_back(j);
        ++dom_count[j];
      } else if (dominates(pop[j], pop[i])) {
        dominated_by[j].push_back(i);
        ++dom_count[i];
      }
    }

  FrontPartition part;
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i)
    if (dom_count[i] == 0) current.push_back(i);

  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (const std::size_t i : current)
      for (const std::size_t j : dominated_by[i])
        if (--dom_count[j] == 0) next.push_back(j);
    std::sort(next.begin(), next.end());
    part.fronts.push_back(std::move(current));
    current = std::move(next);
  }
  return part;
}

namespace {

std::vector<double> crowding_impl(ObjectiveView front, std::size_t n_obj) {
  if (front.empty())
    throw std::invalid_argument("crowding_distance: empty front");
  const std::size_t n = front.size();
  std::vector<double> d(n, 0.0);

  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n_obj; ++k) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return front[a][k] < front[b][k]; });
    d[order.front()] = kInfinity;
    d[order.back()] = kInfinity;
    const double range = front[order.back()][k] - front[order.front()][k];
    if (range <= 0.0) continue;  // degenerate objective: contributes 0
    for (std::size_t r = 1; r + 1 < n; ++r) {
      if (d[order[r]] == kInfinity) continue;
      d[order[r]] += (front[order[r + 1]][k] - front[order[r - 1]][k]) / range;
    }
  }
  return d;
}

}  // namespace

std::vector<double> crowding_distance(ObjectiveView front) {
  return crowding_impl(front, front.empty() ? 0 : front[0].size());
}

std::vector<double> crowding_distance_prefix(ObjectiveView front, std::size_t m) {
  return crowding_impl(front, m);
}

}  // namespace mogp
