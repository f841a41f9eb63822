#include <doctest.h>

#include <algorithm>
#include <set>

#include "mogp/engine.hpp"

using namespace mogp;

namespace {

const std::string kDataDir = MOGP_DATA_DIR;

Dataset spect_train(std::uint64_t seed = 3) {
  const Dataset full = load_csv(kDataDir + "/spect.csv", "class", "abnormal");
  Rng rng = make_rng(seed);
  return stratified_split(full, rng).first;
}

EngineConfig small_config(Algorithm alg, Method method = Method::Canonical) {
  EngineConfig cfg;
  cfg.algorithm = alg;
  cfg.method = method;
  cfg.population = 20;
  if (method != Method::Canonical) {
    cfg.bounds = SemanticBounds{std::nullopt, 0.5};
    cfg.variation.ubss = 0.5;
  }
  return cfg;
}

std::vector<std::string> population_fingerprint(const std::vector<Individual>& pop) {
  std::vector<std::string> out;
  for (const auto& ind : pop) out.push_back(ind.program.to_sexpr());
  return out;
}

}  // namespace

TEST_CASE("init_state: population size and evaluated objectives") {
  const Dataset train = spect_train();
  for (Algorithm alg : {Algorithm::Nsga2, Algorithm::Spea2}) {
    Rng rng = make_rng(21);
    const auto cfg = small_config(alg);
    const auto state = init_state(cfg, train, rng);
    CHECK(state.pop.size() == cfg.population);
    for (const auto& ind : state.pop) {
      REQUIRE(ind.objectives.size() == 2);
      CHECK(ind.objectives[0] >= 0.0);
      CHECK(ind.objectives[0] <= 1.0);
      CHECK(ind.objectives[1] >= 0.0);
      CHECK(ind.objectives[1] <= 1.0);
      CHECK(ind.semantics.size() == train.size());
    }
    if (alg == Algorithm::Spea2) CHECK(state.archive.size() == cfg.population);
  }
}

TEST_CASE("nsga2: population size invariant and seeded determinism") {
  const Dataset train = spect_train();
  const auto cfg = small_config(Algorithm::Nsga2);

  Rng r1 = make_rng(31), r2 = make_rng(31);
  auto s1 = init_state(cfg, train, r1);
  auto s2 = init_state(cfg, train, r2);
  for (int g = 0; g < 2; ++g) {
    nsga2_generation(s1, cfg, train, r1);
    nsga2_generation(s2, cfg, train, r2);
    CHECK(s1.pop.size() == cfg.population);
    CHECK(population_fingerprint(s1.pop) == population_fingerprint(s2.pop));
  }
}

TEST_CASE("nsga2: front 0 of size N becomes the next population") {
  // all-identical objectives put everything in front 0; size must hold
  const Dataset train = spect_train();
  const auto cfg = small_config(Algorithm::Nsga2);
  Rng rng = make_rng(32);
  auto state = init_state(cfg, train, rng);
  for (int g = 0; g < 3; ++g) {
    nsga2_generation(state, cfg, train, rng);
    CHECK(state.pop.size() == cfg.population);
    for (const auto& ind : state.pop) CHECK(ind.rank >= 0);
  }
}

TEST_CASE("nsga2: single-objective bests never regress") {
  const Dataset train = spect_train();
  const auto cfg = small_config(Algorithm::Nsga2);
  Rng rng = make_rng(33);
  auto state = init_state(cfg, train, rng);
  double best_tpr = 0.0, best_tnr = 0.0;
  for (const auto& ind : state.pop) {
    best_tpr = std::max(best_tpr, ind.objectives[0]);
    best_tnr = std::max(best_tnr, ind.objectives[1]);
  }
  for (int g = 0; g < 5; ++g) {
    nsga2_generation(state, cfg, train, rng);
    double tpr = 0.0, tnr = 0.0;
    for (const auto& ind : state.pop) {
      tpr = std::max(tpr, ind.objectives[0]);
      tnr = std::max(tnr, ind.objectives[1]);
    }
    // the merged-pool elite survives: per-objective bests are monotone
    CHECK(tpr >= best_tpr);
    CHECK(tnr >= best_tnr);
    best_tpr = tpr;
    best_tnr = tnr;
  }
}

TEST_CASE("nsga2 with SDO: three objectives during the run") {
  const Dataset train = spect_train();
  const auto cfg = small_config(Algorithm::Nsga2, Method::Sdo);
  Rng rng = make_rng(34);
  auto state = init_state(cfg, train, rng);
  for (const auto& ind : state.pop) {
    REQUIRE(ind.objectives.size() == 3);
    CHECK(ind.objectives[2] >= 0.0);
    CHECK(ind.objectives[2] <= static_cast<double>(train.size()));
  }
  nsga2_generation(state, cfg, train, rng);
  for (const auto& ind : state.pop) CHECK(ind.objectives.size() == 3);
}

TEST_CASE("spea2: archive size constant, seeded determinism") {
  const Dataset train = spect_train();
  const auto cfg = small_config(Algorithm::Spea2);
  Rng r1 = make_rng(35), r2 = make_rng(35);
  auto s1 = init_state(cfg, train, r1);
  auto s2 = init_state(cfg, train, r2);
  for (int g = 0; g < 2; ++g) {
    spea2_generation(s1, cfg, train, r1);
    spea2_generation(s2, cfg, train, r2);
    CHECK(s1.pop.size() == cfg.population);
    CHECK(s1.archive.size() == cfg.population);
    CHECK(population_fingerprint(s1.pop) == population_fingerprint(s2.pop));
    CHECK(population_fingerprint(s1.archive) == population_fingerprint(s2.archive));
  }
}

TEST_CASE("spea2: raw fitness zero means archive membership priority") {
  // nondominated individuals enter the archive before any dominated one
  const Dataset train = spect_train();
  const auto cfg = small_config(Algorithm::Spea2);
  Rng rng = make_rng(36);
  auto state = init_state(cfg, train, rng);
  spea2_generation(state, cfg, train, rng);

  std::vector<std::vector<double>> arch_objs;
  for (const auto& ind : state.archive)
    arch_objs.push_back({ind.objectives[0], ind.objectives[1]});
  // every individual with spea2_fitness < 1 is nondominated within the
  // selection pool; the archive must contain at least one of them
  const auto part = fast_nondominated_sort(arch_objs);
  CHECK(!part.fronts[0].empty());
}

TEST_CASE("spea2 with PSDO: third objective present and archive stable") {
  const Dataset train = spect_train();
  const auto cfg = small_config(Algorithm::Spea2, Method::Psdo);
  Rng rng = make_rng(37);
  auto state = init_state(cfg, train, rng);
  spea2_generation(state, cfg, train, rng);
  CHECK(state.archive.size() == cfg.population);
  for (const auto& ind : state.archive) CHECK(ind.objectives.size() == 3);
}

TEST_CASE("ssc engine runs and respects limits") {
  const Dataset train = spect_train();
  auto cfg = small_config(Algorithm::Nsga2, Method::Ssc);
  cfg.variation.lbss = 0.001;
  cfg.variation.ubss = 0.5;
  Rng rng = make_rng(38);
  auto state = init_state(cfg, train, rng);
  for (int g = 0; g < 2; ++g) {
    nsga2_generation(state, cfg, train, rng);
    for (const auto& ind : state.pop) {
      CHECK(ind.program.depth() <= cfg.variation.max_depth);
      CHECK(ind.program.node_count() <= cfg.variation.max_length);
    }
  }
}

TEST_CASE("current_front: pairwise nondominated on classification objectives") {
  const Dataset train = spect_train();
  const auto cfg = small_config(Algorithm::Nsga2);
  Rng rng = make_rng(39);
  auto state = init_state(cfg, train, rng);
  nsga2_generation(state, cfg, train, rng);
  const auto front = current_front(state, cfg);
  REQUIRE(!front.empty());
  for (const auto* a : front)
    for (const auto* b : front) {
      if (a == b) continue;
      const std::vector<double> oa{a->objectives[0], a->objectives[1]};
      const std::vector<double> ob{b->objectives[0], b->objectives[1]};
      CHECK_FALSE(dominates(oa, ob));
    }
}

TEST_CASE("algorithm names round trip") {
  CHECK(algorithm_from_name("nsga2") == Algorithm::Nsga2);
  CHECK(algorithm_from_name("spea2") == Algorithm::Spea2);
  CHECK_THROWS_AS(algorithm_from_name("moead"), std::invalid_argument);
}
