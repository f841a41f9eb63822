#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mogp/individual.hpp"
#include "mogp/pareto.hpp"

namespace mogp {

enum class Method { Canonical, Ssc, Sdo, Psdo };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

/// Upper/lower bounds of semantic similarity. When lbss is absent the
/// per-case test is |diff| >= ubss; otherwise lbss <= |diff| <= ubss.
struct SemanticBounds {
  std::optional<double> lbss;
  double ubss = 0.5;
};

/// Count of fitness cases whose pivot/individual output difference falls in
/// the similarity band.
int sdo_distance(std::span<const double> pivot, std::span<const double> v,
                 const SemanticBounds& b);

/// Complement of sdo_distance: l minus the band count. Prefers individuals
/// semantically similar to the pivot.
int psdo_distance(std::span<const double> pivot, std::span<const double> v,
                  const SemanticBounds& b);

/// Index (into `front0`) of the pivot: the first-front individual with the
/// largest crowding distance over the two classification objectives, ties
/// broken by lowest index.
std::size_t select_pivot(std::span<const Individual* const> front0);

/// Extend every individual's objective vector with the semantic distance to
/// the pivot of the current first front (first front and pivot crowding are
/// computed on the two classification objectives only). Objectives 0 and 1
/// are left untouched. Recomputed every generation by the engine.
void augment_objectives(std::vector<Individual>& pop, Method method,
                        const SemanticBounds& b);

}  // namespace mogp
