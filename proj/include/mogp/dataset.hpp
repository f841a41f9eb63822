#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mogp/expr.hpp"
#include "mogp/rng.hpp"

namespace mogp {

struct DatasetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Labeled feature rows for binary classification. Labels are true for the
/// positive (minority) class. Immutable after load.
struct Dataset {
  std::string name;
  std::size_t feature_count = 0;
  std::vector<std::vector<double>> rows;
  std::vector<bool> labels;

  std::size_t size() const { return rows.size(); }
  std::size_t positive_count() const;
  std::size_t negative_count() const { return size() - positive_count(); }
};

/// Parse a CSV with a header row. `label_column` names the class column;
/// cells equal to `positive_label` become the positive class. All other
/// columns must parse as reals.
Dataset load_csv(const std::string& path, const std::string& label_column,
                 const std::string& positive_label);

/// 50/50 split preserving the class ratio: each class is shuffled and
/// halved, odd counts give the extra example to the training half.
std::pair<Dataset, Dataset> stratified_split(const Dataset& d, Rng& rng);

struct ConfusionCounts {
  std::size_t tp = 0, tn = 0, fp = 0, fn = 0;
};

/// Output >= 0 maps to the positive (minority) class.
inline bool classify(const Program& p, std::span<const double> row) {
  return p.evaluate(row) >= 0.0;
}

ConfusionCounts confusion(const Program& p, const Dataset& d);

/// (TPR, TNR): per-class accuracies, both in [0, 1] and maximized.
std::pair<double, double> objectives(const Program& p, const Dataset& d);

/// Semantics of a program over a dataset (one output per row, in row order).
Semantics semantics_of(const Program& p, const Dataset& d);

/// Objectives computed from cached semantics, avoiding re-evaluation.
std::pair<double, double> objectives_from_semantics(const Semantics& s,
                                                    const Dataset& d);

/// In-place min-max normalization of every feature column to [0, 1].
/// Constant columns become all-zero. Off by default in experiments.
void minmax_normalize(Dataset& d);

}  // namespace mogp
