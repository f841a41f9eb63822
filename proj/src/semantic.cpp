#include "mogp/semantic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mogp {

const char* method_name(Method m) {
  switch (m) {
    case Method::Canonical: return "canonical";
    case Method::Ssc: return "ssc";
    case Method::Sdo: return "sdo";
    case Method::Psdo: return "psdo";
  }
  return "?";
}

Method method_from_name(const std::string& name) {
  if (name == "canonical") return Method::Canonical;
  if (name == "ssc") return Method::Ssc;
  if (name == "sdo") return Method::Sdo;
  if (name == "psdo") return Method::Psdo;
  throw std::invalid_argument("unknown method: " + name);
}

int sdo_distance(std::span<const double> pivot, std::span<const double> v,
                 const SemanticBounds& b) {
  if (pivot.size() != v.size())
    throw std::invalid_argument("sdo_distance: semantics of different length");
  int count = 0;
  if (b.lbss) {
    const double lo = *b.lbss;
    for (std::size_t i = 0; i < pivot.size(); ++i) {
      const double diff = std::abs(pivot[i] - v[i]);
      if (lo <= diff && diff <= b.ubss) ++count;
    }
  } else {
    for (std::size_t i = 0; i < pivot.size(); ++i)
      if (std::abs(pivot[i] - v[i]) >= b.ubss) ++count;
  }
  return count;
}

int psdo_distance(std::span<const double> pivot, std::span<const double> v,
                  const SemanticBounds& b) {
  return static_cast<int>(pivot.size()) - sdo_distance(pivot, v, b);
}

std::size_t select_pivot(std::span<const Individual* const> front0) {
  if (front0.empty())
    throw std::invalid_argument("select_pivot: empty front");
  std::vector<std::vector<double>> objs;
  objs.reserve(front0.size());
  for (const Individual* ind : front0)
    objs.push_back({ind->objectives[0], ind->objectives[1]});
  const auto crowd = crowding_distance(objs);
  std::size_t best = 0;
  for (std::size_t i = 1; i < crowd.size(); ++i)
    if (crowd[i] > crowd[best]) best = i;
  return best;
}

void augment_objectives(std::vector<Individual>& pop, Method method,
                        const SemanticBounds& b) {
  if (method != Method::Sdo && method != Method::Psdo) return;

  // first front and pivot crowding use the classification objectives only
  std::vector<std::vector<double>> class_objs;
  class_objs.reserve(pop.size());
  for (const auto& ind : pop)
    class_objs.push_back({ind.objectives[0], ind.objectives[1]});
  const auto part = fast_nondominated_sort(class_objs);

  std::vector<const Individual*> front0;
  front0.reserve(part.fronts[0].size());
  for (const std::size_t i : part.fronts[0]) front0.push_back(&pop[i]);
  const Semantics& pivot = front0[select_pivot(front0)]->semantics;

  for (auto& ind : pop) {
    const int d = method == Method::Sdo ? sdo_distance(pivot, ind.semantics, b)
                                        : psdo_distance(pivot, ind.semantics, b);
    ind.objectives.resize(3);
    ind.objectives[2] = static_cast<double>(d);
  }
}

}  // namespace mogp
