#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mogp/dataset.hpp"
#include "mogp/expr.hpp"
#include "mogp/individual.hpp"
#include "mogp/rng.hpp"

namespace mogp {

struct VariationConfig {
  double crossover_rate = 0.60;
  double mutation_rate = 0.40;
  int tournament_size = 7;
  double internal_node_bias = 0.90;
  int init_depth_min = 1;
  int init_depth_max = 5;
  int max_depth = 8;
  int max_length = 800;
  int mutation_subtree_depth = 5;
  int ssc_max_trials = 20;
  std::optional<double> lbss;  // SSC band; also reused by SDO/PSDO configs
  double ubss = 0.5;

  void validate() const;
};

/// Ramped half-and-half over [init_depth_min, init_depth_max], alternating
/// full and grow at each ramp level. Every program respects the depth and
/// length limits.
std::vector<Program> ramped_half_and_half(std::size_t n, std::size_t feature_count,
                                          const VariationConfig& cfg, Rng& rng);

/// Grow a single random tree of at most `max_depth` levels below the root.
Program grow_program(std::size_t feature_count, int max_depth, Rng& rng);

/// Index of the tournament winner: k uniform picks with replacement, best by
/// (rank asc, crowding desc, index asc).
std::size_t tournament_select(const std::vector<Individual>& pop, int k, Rng& rng);

/// Subtree crossover selecting internal nodes with probability 0.9 (leaves
/// 0.1). A child that violates the depth or length limit is replaced by a
/// copy of its root parent.
std::pair<Program, Program> crossover_90_10(const Program& p1, const Program& p2,
                                            const VariationConfig& cfg, Rng& rng);

/// Replace a uniformly chosen node with a freshly grown subtree; on limit
/// violation the parent copy is returned.
Program subtree_mutation(const Program& p, std::size_t feature_count,
                         const VariationConfig& cfg, Rng& rng);

/// Semantic similarity-based crossover: retry crossover_90_10 up to
/// ssc_max_trials times until a child's mean absolute semantic difference to
/// its root parent falls within the band, then fall back to one standard
/// crossover.
std::pair<Program, Program> ssc_crossover(const Individual& p1, const Individual& p2,
                                          const Dataset& train,
                                          const VariationConfig& cfg, Rng& rng);

/// Mean absolute per-case difference between two semantics vectors.
double mean_semantic_distance(const Semantics& a, const Semantics& b);

}  // namespace mogp
