#include "mogp/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mogp {

const char* algorithm_name(Algorithm a) {
  return a == Algorithm::Nsga2 ? "nsga2" : "spea2";
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "nsga2") return Algorithm::Nsga2;
  if (name == "spea2") return Algorithm::Spea2;
  throw std::invalid_argument("unknown algorithm: " + name);
}

Individual evaluate_program(Program p, const Dataset& train) {
  Individual ind;
  ind.semantics = semantics_of(p, train);
  ind.program = std::move(p);
  const auto [tpr, tnr] = objectives_from_semantics(ind.semantics, train);
  ind.objectives = {tpr, tnr};
  return ind;
}

namespace {

std::vector<std::vector<double>> gather_objectives(const std::vector<Individual>& pop) {
  std::vector<std::vector<double>> objs;
  objs.reserve(pop.size());
  for (const auto& ind : pop) objs.push_back(ind.objectives);
  return objs;
}

// strips any stale third objective, then re-augments against the current
// first front's pivot
void refresh_objectives(std::vector<Individual>& pop, const EngineConfig& cfg) {
  for (auto& ind : pop) ind.objectives.resize(2);
  augment_objectives(pop, cfg.method, cfg.bounds);
}

// assigns rank and crowding to every individual from a fresh sort
void assign_rank_crowding(std::vector<Individual>& pop) {
  const auto objs = gather_objectives(pop);
  const auto part = fast_nondominated_sort(objs);
  for (std::size_t f = 0; f < part.fronts.size(); ++f) {
    std::vector<std::vector<double>> front_objs;
    front_objs.reserve(part.fronts[f].size());
    for (const std::size_t i : part.fronts[f]) front_objs.push_back(objs[i]);
    const auto crowd = crowding_distance(front_objs);
    for (std::size_t k = 0; k < part.fronts[f].size(); ++k) {
      pop[part.fronts[f][k]].rank = static_cast<int>(f);
      pop[part.fronts[f][k]].crowding = crowd[k];
    }
  }
}

// crossover-or-mutation pipeline producing two children per event
std::pair<Program, Program> breed(const Individual& p1, const Individual& p2,
                                  const EngineConfig& cfg, const Dataset& train,
                                  Rng& rng) {
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  if (u < cfg.variation.crossover_rate) {
    if (cfg.method == Method::Ssc)
      return ssc_crossover(p1, p2, train, cfg.variation, rng);
    return crossover_90_10(p1.program, p2.program, cfg.variation, rng);
  }
  return {subtree_mutation(p1.program, train.feature_count, cfg.variation, rng),
          subtree_mutation(p2.program, train.feature_count, cfg.variation, rng)};
}

std::vector<Individual> make_offspring(const std::vector<Individual>& parents,
                                       const EngineConfig& cfg, const Dataset& train,
                                       Rng& rng) {
  std::vector<Individual> offspring;
  offspring.reserve(cfg.population);
  while (offspring.size() < cfg.population) {
    const auto& p1 = parents[tournament_select(parents, cfg.variation.tournament_size, rng)];
    const auto& p2 = parents[tournament_select(parents, cfg.variation.tournament_size, rng)];
    auto [c1, c2] = breed(p1, p2, cfg, train, rng);
    offspring.push_back(evaluate_program(std::move(c1), train));
    if (offspring.size() < cfg.population)
      offspring.push_back(evaluate_program(std::move(c2), train));
  }
  return offspring;
}

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

void assign_spea2_fitness(std::vector<Individual>& pool, std::size_t k) {
  const auto objs = gather_objectives(pool);
  const auto raw = spea2_raw_fitness(objs);
  const std::size_t n = pool.size();
  std::vector<double> row(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row[j] = sq_dist(objs[i], objs[j]);
    std::nth_element(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(k), row.end());
    const double sigma_k = std::sqrt(row[k]);
    pool[i].spea2_fitness = raw[i] + 1.0 / (sigma_k + 2.0);
  }
}

// iterative nearest-neighbour truncation of the candidate archive down to
// `target`; ties on nearest distance fall through to the next neighbour,
// final ties to the lowest index
void truncate_archive(std::vector<Individual>& arch, std::size_t target) {
  const auto objs = gather_objectives(arch);
  const std::size_t n = arch.size();
  std::vector<char> alive(n, 1);
  std::vector<std::vector<double>> dist(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dist[i][j] = sq_dist(objs[i], objs[j]);

  // each alive individual keeps its distances to the other alive ones,
  // sorted ascending; a removal erases one matching value per list
  std::vector<std::vector<double>> nb(n);
  for (std::size_t i = 0; i < n; ++i) {
    nb[i].reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) nb[i].push_back(dist[i][j]);
    std::sort(nb[i].begin(), nb[i].end());
  }

  std::size_t remaining = n;
  while (remaining > target) {
    std::size_t victim = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      if (victim == n || std::lexicographical_compare(nb[i].begin(), nb[i].end(),
                                                      nb[victim].begin(),
                                                      nb[victim].end())) {
        victim = i;
      }
    }
    alive[victim] = 0;
    --remaining;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      auto it = std::lower_bound(nb[i].begin(), nb[i].end(), dist[i][victim]);
      nb[i].erase(it);
    }
  }

  std::vector<Individual> kept;
  kept.reserve(target);
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) kept.push_back(std::move(arch[i]));
  arch = std::move(kept);
}

std::vector<Individual> environmental_selection(std::vector<Individual>& pool,
                                                std::size_t archive_size) {
  std::vector<std::size_t> nondom, dominated;
  for (std::size_t i = 0; i < pool.size(); ++i)
    (pool[i].spea2_fitness < 1.0 ? nondom : dominated).push_back(i);

  std::vector<Individual> archive;
  archive.reserve(archive_size);
  for (const std::size_t i : nondom) archive.push_back(pool[i]);

  if (archive.size() > archive_size) {
    truncate_archive(archive, archive_size);
  } else if (archive.size() < archive_size) {
    // pad with the best dominated individuals by fitness, lowest index first
    std::stable_sort(dominated.begin(), dominated.end(), [&](std::size_t a, std::size_t b) {
      return pool[a].spea2_fitness < pool[b].spea2_fitness;
    });
    for (const std::size_t i : dominated) {
      if (archive.size() == archive_size) break;
      archive.push_back(pool[i]);
    }
  }
  return archive;
}

std::size_t spea2_tournament(const std::vector<Individual>& arch, int k, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, arch.size() - 1);
  std::size_t best = pick(rng);
  for (int i = 1; i < k; ++i) {
    const std::size_t c = pick(rng);
    if (arch[c].spea2_fitness != arch[best].spea2_fitness
            ? arch[c].spea2_fitness < arch[best].spea2_fitness
            : c < best)
      best = c;
  }
  return best;
}

std::vector<Individual> spea2_offspring(const std::vector<Individual>& arch,
                                        const EngineConfig& cfg, const Dataset& train,
                                        Rng& rng) {
  std::vector<Individual> offspring;
  offspring.reserve(cfg.population);
  while (offspring.size() < cfg.population) {
    const auto& p1 = arch[spea2_tournament(arch, cfg.variation.tournament_size, rng)];
    const auto& p2 = arch[spea2_tournament(arch, cfg.variation.tournament_size, rng)];
    auto [c1, c2] = breed(p1, p2, cfg, train, rng);
    offspring.push_back(evaluate_program(std::move(c1), train));
    if (offspring.size() < cfg.population)
      offspring.push_back(evaluate_program(std::move(c2), train));
  }
  return offspring;
}

}  // namespace

EvolutionState init_state(const EngineConfig& cfg, const Dataset& train, Rng& rng) {
  cfg.variation.validate();
  EvolutionState state;
  auto programs = ramped_half_and_half(cfg.population, train.feature_count,
                                       cfg.variation, rng);
  state.pop.reserve(programs.size());
  for (auto& p : programs) state.pop.push_back(evaluate_program(std::move(p), train));

  refresh_objectives(state.pop, cfg);
  if (cfg.algorithm == Algorithm::Nsga2) {
    assign_rank_crowding(state.pop);
  } else {
    const std::size_t k = static_cast<std::size_t>(
        std::floor(std::sqrt(static_cast<double>(2 * cfg.population))));
    assign_spea2_fitness(state.pop, std::min(k, state.pop.size() - 1));
    state.archive = environmental_selection(state.pop, cfg.population);
  }
  return state;
}

void nsga2_generation(EvolutionState& state, const EngineConfig& cfg,
                      const Dataset& train, Rng& rng) {
  auto offspring = make_offspring(state.pop, cfg, train, rng);

  std::vector<Individual> merged;
  merged.reserve(state.pop.size() + offspring.size());
  for (auto& ind : state.pop) merged.push_back(std::move(ind));
  for (auto& ind : offspring) merged.push_back(std::move(ind));
  refresh_objectives(merged, cfg);

  const auto objs = gather_objectives(merged);
  const auto part = fast_nondominated_sort(objs);

  std::vector<Individual> next;
  next.reserve(cfg.population);
  for (std::size_t f = 0; f < part.fronts.size() && next.size() < cfg.population; ++f) {
    const auto& front = part.fronts[f];
    std::vector<std::vector<double>> front_objs;
    front_objs.reserve(front.size());
    for (const std::size_t i : front) front_objs.push_back(objs[i]);
    const auto crowd = crowding_distance(front_objs);

    std::vector<std::size_t> order(front.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (next.size() + front.size() > cfg.population) {
      // cut front: descending crowding, ties to the lowest merged index
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return crowd[a] != crowd[b] ? crowd[a] > crowd[b] : front[a] < front[b];
      });
    }
    for (const std::size_t k : order) {
      if (next.size() == cfg.population) break;
      Individual& ind = merged[front[k]];
      ind.rank = static_cast<int>(f);
      ind.crowding = crowd[k];
      next.push_back(std::move(ind));
    }
  }
  state.pop = std::move(next);
}

void spea2_generation(EvolutionState& state, const EngineConfig& cfg,
                      const Dataset& train, Rng& rng) {
  std::vector<Individual> pool;
  pool.reserve(state.pop.size() + state.archive.size());
  for (auto& ind : state.pop) pool.push_back(std::move(ind));
  for (auto& ind : state.archive) pool.push_back(std::move(ind));
  refresh_objectives(pool, cfg);

  const std::size_t k = static_cast<std::size_t>(
      std::floor(std::sqrt(static_cast<double>(2 * cfg.population))));
  assign_spea2_fitness(pool, std::min(k, pool.size() - 1));

  state.archive = environmental_selection(pool, cfg.population);
  state.pop = spea2_offspring(state.archive, cfg, train, rng);
}

void step_generation(EvolutionState& state, const EngineConfig& cfg,
                     const Dataset& train, Rng& rng) {
  if (cfg.algorithm == Algorithm::Nsga2)
    nsga2_generation(state, cfg, train, rng);
  else
    spea2_generation(state, cfg, train, rng);
}

std::vector<const Individual*> current_front(const EvolutionState& state,
                                             const EngineConfig& cfg) {
  const auto& source =
      cfg.algorithm == Algorithm::Spea2 ? state.archive : state.pop;
  std::vector<std::vector<double>> objs;
  objs.reserve(source.size());
  for (const auto& ind : source)
    objs.push_back({ind.objectives[0], ind.objectives[1]});
  const auto part = fast_nondominated_sort(objs);
  std::vector<const Individual*> front;
  front.reserve(part.fronts[0].size());
  for (const std::size_t i : part.fronts[0]) front.push_back(&source[i]);
  return front;
}

}  // namespace mogp
