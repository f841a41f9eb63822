#pragma once

#include <vector>

#include "mogp/dataset.hpp"
#include "mogp/individual.hpp"
#include "mogp/pareto.hpp"
#include "mogp/semantic.hpp"
#include "mogp/variation.hpp"

namespace mogp {

enum class Algorithm { Nsga2, Spea2 };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

struct EngineConfig {
  Algorithm algorithm = Algorithm::Nsga2;
  Method method = Method::Canonical;
  std::size_t population = 500;
  SemanticBounds bounds;
  VariationConfig variation;
};

/// Mutable state of one evolutionary run. `pop` is the current population;
/// `archive` is used by SPEA2 only (same size as the population).
struct EvolutionState {
  std::vector<Individual> pop;
  std::vector<Individual> archive;
};

Individual evaluate_program(Program p, const Dataset& train);

/// Ramped half-and-half initial population with evaluated objectives and,
/// for SPEA2, a filled archive. Ranks/crowding/fitness are assigned so the
/// first selection event can run.
EvolutionState init_state(const EngineConfig& cfg, const Dataset& train, Rng& rng);

/// One NSGA-II generation: N offspring by tournament + variation, merge to
/// 2N, nondominated sort and crowding-based truncation back to N.
void nsga2_generation(EvolutionState& state, const EngineConfig& cfg,
                      const Dataset& train, Rng& rng);

/// One SPEA2 generation: fitness R(i) + 1/(sigma_k + 2) over pop + archive,
/// environmental selection into the archive (nearest-neighbour truncation or
/// best-dominated padding), then N offspring bred from the archive.
void spea2_generation(EvolutionState& state, const EngineConfig& cfg,
                      const Dataset& train, Rng& rng);

void step_generation(EvolutionState& state, const EngineConfig& cfg,
                     const Dataset& train, Rng& rng);

/// Individuals forming the current nondominated set (the archive's for
/// SPEA2), by classification objectives only.
std::vector<const Individual*> current_front(const EvolutionState& state,
                                             const EngineConfig& cfg);

}  // namespace mogp
