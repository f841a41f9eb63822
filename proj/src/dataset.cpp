#include "mogp/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace mogp {

std::size_t Dataset::positive_count() const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), true));
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Dataset load_csv(const std::string& path, const std::string& label_column,
                 const std::string& positive_label) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open dataset file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw DatasetError("empty dataset file: " + path);

  const auto header = split_csv_line(line);
  std::size_t label_idx = header.size();
  for (std::size_t i = 0; i < header.size(); ++i)
    if (trim(header[i]) == label_column) label_idx = i;
  if (label_idx == header.size())
    throw DatasetError("label column '" + label_column + "' not found in " + path);

  Dataset d;
  d.name = path;
  d.feature_count = header.size() - 1;

  std::size_t row_no = 1;
  while (std::getline(in, line)) {
    ++row_no;
    if (trim(line).empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != header.size())
      throw DatasetError(path + ":" + std::to_string(row_no) + ": expected " +
                         std::to_string(header.size()) + " cells, got " +
                         std::to_string(cells.size()));
    std::vector<double> row;
    row.reserve(d.feature_count);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c == label_idx) continue;
      const std::string cell = trim(cells[c]);
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size())
        throw DatasetError(path + ":" + std::to_string(row_no) + ": column '" +
                           trim(header[c]) + "': cannot parse '" + cell + "' as a real");
      row.push_back(v);
    }
    d.rows.push_back(std::move(row));
    d.labels.push_back(trim(cells[label_idx]) == positive_label);
  }
  if (d.rows.empty()) throw DatasetError("dataset has no data rows: " + path);
  return d;
}

std::pair<Dataset, Dataset> stratified_split(const Dataset& d, Rng& rng) {
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < d.size(); ++i)
    (d.labels[i] ? pos : neg).push_back(i);
  if (pos.size() < 2 || neg.size() < 2)
    throw DatasetError("stratified split needs >= 2 examples per class (" +
                       d.name + " has " + std::to_string(pos.size()) + " positive, " +
                       std::to_string(neg.size()) + " negative)");

  std::shuffle(pos.begin(), pos.end(), rng);
  std::shuffle(neg.begin(), neg.end(), rng);

  Dataset train, test;
  train.name = d.name + " (train)";
  test.name = d.name + " (test)";
  train.feature_count = test.feature_count = d.feature_count;

  auto deal = [&](const std::vector<std::size_t>& idx) {
    // odd class counts: the extra example goes to the training half
    const std::size_t train_n = (idx.size() + 1) / 2;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      Dataset& half = k < train_n ? train : test;
      half.rows.push_back(d.rows[idx[k]]);
      half.labels.push_back(d.labels[idx[k]]);
    }
  };
  deal(pos);
  deal(neg);
  return {std::move(train), std::move(test)};
}

ConfusionCounts confusion(const Program& p, const Dataset& d) {
  ConfusionCounts c;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const bool predicted = classify(p, d.rows[i]);
    if (d.labels[i]) {
      predicted ? ++c.tp : ++c.fn;
    } else {
      predicted ? ++c.fp : ++c.tn;
    }
  }
  return c;
}

std::pair<double, double> objectives(const Program& p, const Dataset& d) {
  const auto c = confusion(p, d);
  const double tpr = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  const double tnr = static_cast<double>(c.tn) / static_cast<double>(c.tn + c.fp);
  return {tpr, tnr};
}

Semantics semantics_of(const Program& p, const Dataset& d) {
  if (d.size() == 0) throw DatasetError("semantics of an empty dataset");
  Semantics s;
  s.reserve(d.size());
  for (const auto& row : d.rows) s.push_back(p.evaluate(row));
  return s;
}

std::pair<double, double> objectives_from_semantics(const Semantics& s,
                                                    const Dataset& d) {
  std::size_t tp = 0, tn = 0, fn = 0, fp = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const bool predicted = s[i] >= 0.0;
    if (d.labels[i]) {
      predicted ? ++tp : ++fn;
    } else {
      predicted ? ++fp : ++tn;
    }
  }
  return {static_cast<double>(tp) / static_cast<double>(tp + fn),
          static_cast<double>(tn) / static_cast<double>(tn + fp)};
}

void minmax_normalize(Dataset& d) {
  for (std::size_t c = 0; c < d.feature_count; ++c) {
    double lo = d.rows[0][c], hi = d.rows[0][c];
    for (const auto& row : d.rows) {
      lo = std::min(lo, row[c]);
      hi = std::max(hi, row[c]);
    }
    const double range = hi - lo;
    for (auto& row : d.rows) row[c] = range > 0.0 ? (row[c] - lo) / range : 0.0;
  }
}

}  // namespace mogp
