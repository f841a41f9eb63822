#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "mogp/individual.hpp"

namespace mogp {

using ObjectiveView = std::span<const std::vector<double>>;

/// True iff `a` is component-wise >= `b` with at least one strict >.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Per individual: how many others dominate it (0 for non-dominated).
std::vector<int> dominance_rank(ObjectiveView pop);

/// Per individual: how many others it dominates.
std::vector<int> dominance_count(ObjectiveView pop);

/// SPEA2 raw fitness R(i): sum of the dominance counts of everything that
/// dominates i. Zero exactly for the non-dominated.
std::vector<double> spea2_raw_fitness(ObjectiveView pop);

/// Ordered fronts of population indices; front 0 is the non-dominated set.
struct FrontPartition {
  std::vector<std::vector<std::size_t>> fronts;
};

FrontPartition fast_nondominated_sort(ObjectiveView pop);

/// Crowding distance over one front. Boundary solutions per objective get
/// +inf; interior ones accumulate the normalized neighbour gap. An objective
/// with zero range contributes nothing.
std::vector<double> crowding_distance(ObjectiveView front);

/// Crowding distance restricted to the first `m` objectives of each vector.
std::vector<double> crowding_distance_prefix(ObjectiveView front, std::size_t m);

}  // namespace mogp
