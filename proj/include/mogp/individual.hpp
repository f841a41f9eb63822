#pragma once

#include <limits>
#include <vector>

#include "mogp/expr.hpp"

namespace mogp {

/// One population member: genotype, cached training semantics, objective
/// vector (TPR, TNR and optionally a semantic criterion, all maximized) and
/// the per-generation selection bookkeeping.
struct Individual {
  Program program;
  Semantics semantics;               // over the training set
  std::vector<double> objectives;    // length 2, or 3 under SDO/PSDO
  int rank = 0;                      // front index after nondominated sort
  double crowding = 0.0;             // may be +inf at front boundaries
  double spea2_fitness = 0.0;        // R(i) + density, minimized
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace mogp
