#include "mogp/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mogp {

void VariationConfig::validate() const {
  auto is_rate = [](double r) { return r >= 0.0 && r <= 1.0; };
  if (!is_rate(crossover_rate) || !is_rate(mutation_rate) || !is_rate(internal_node_bias))
    throw std::invalid_argument("variation rates must lie in [0, 1]");
  if (tournament_size < 1) throw std::invalid_argument("tournament size must be >= 1");
  if (init_depth_min > init_depth_max || init_depth_max > max_depth)
    throw std::invalid_argument("require init_depth_min <= init_depth_max <= max_depth");
  if (max_length < 1) throw std::invalid_argument("max_length must be >= 1");
  if (lbss && (*lbss < 0.0 || *lbss >= ubss))
    throw std::invalid_argument("require 0 <= lbss < ubss");
  if (ubss <= 0.0) throw std::invalid_argument("ubss must be positive");
}

namespace {

std::unique_ptr<Node> make_feature(std::size_t feature_count, Rng& rng) {
  auto n = std::make_unique<Node>();
  n->kind = NodeKind::Feature;
  n->feature = static_cast<int>(
      std::uniform_int_distribution<std::size_t>(0, feature_count - 1)(rng));
  return n;
}

NodeKind random_op(Rng& rng) {
  static constexpr NodeKind kOps[] = {NodeKind::Add, NodeKind::Sub, NodeKind::Mul,
                                      NodeKind::Pdiv};
  return kOps[std::uniform_int_distribution<int>(0, 3)(rng)];
}

// full: every branch reaches exactly `depth`; grow: each node below the root
// is a terminal with the terminal/primitive ratio odds
std::unique_ptr<Node> build_tree(std::size_t feature_count, int depth, bool full,
                                 bool at_root, Rng& rng) {
  const bool make_terminal =
      depth == 0 ||
      (!full && !at_root &&
       std::uniform_real_distribution<double>(0.0, 1.0)(rng) < 0.5);
  if (make_terminal) return make_feature(feature_count, rng);
  auto n = std::make_unique<Node>();
  n->kind = random_op(rng);
  n->left = build_tree(feature_count, depth - 1, full, false, rng);
  n->right = build_tree(feature_count, depth - 1, full, false, rng);
  return n;
}

void collect_nodes(std::unique_ptr<Node>& slot, bool internal,
                   std::vector<std::unique_ptr<Node>*>& out) {
  if (is_binary(slot->kind) == internal) out.push_back(&slot);
  if (slot->left) collect_nodes(slot->left, internal, out);
  if (slot->right) collect_nodes(slot->right, internal, out);
}

// 90/10 biased node pick; degenerates to the other class when one is empty
std::unique_ptr<Node>* pick_node(std::unique_ptr<Node>& root, double internal_bias,
                                 Rng& rng) {
  std::vector<std::unique_ptr<Node>*> pool;
  const bool want_internal =
      std::uniform_real_distribution<double>(0.0, 1.0)(rng) < internal_bias;
  collect_nodes(root, want_internal, pool);
  if (pool.empty()) collect_nodes(root, !want_internal, pool);
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

bool within_limits(const Program& p, const VariationConfig& cfg) {
  return p.depth() <= cfg.max_depth && p.node_count() <= cfg.max_length;
}

}  // namespace

Program grow_program(std::size_t feature_count, int max_depth, Rng& rng) {
  return Program(build_tree(feature_count, max_depth, false, true, rng));
}

std::vector<Program> ramped_half_and_half(std::size_t n, std::size_t feature_count,
                                          const VariationConfig& cfg, Rng& rng) {
  if (n == 0) throw std::invalid_argument("ramped_half_and_half: n must be >= 1");
  const std::size_t levels =
      static_cast<std::size_t>(cfg.init_depth_max - cfg.init_depth_min + 1);
  std::vector<Program> pop;
  pop.reserve(n);
  for (std::size_t level = 0; level < levels; ++level) {
    const int depth = cfg.init_depth_min + static_cast<int>(level);
    // spread n evenly over the ramp levels, remainders to the lower levels
    const std::size_t quota = n / levels + (level < n % levels ? 1 : 0);
    for (std::size_t k = 0; k < quota; ++k) {
      const bool full = k < (quota + 1) / 2;
      pop.emplace_back(build_tree(feature_count, depth, full, true, rng));
    }
  }
  return pop;
}

std::size_t tournament_select(const std::vector<Individual>& pop, int k, Rng& rng) {
  if (pop.empty()) throw std::invalid_argument("tournament_select: empty population");
  std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
  std::size_t best = pick(rng);
  for (int i = 1; i < k; ++i) {
    const std::size_t c = pick(rng);
    const Individual &a = pop[c], &b = pop[best];
    if (a.rank != b.rank ? a.rank < b.rank
                         : (a.crowding != b.crowding ? a.crowding > b.crowding
                                                     : c < best))
      best = c;
  }
  return best;
}

std::pair<Program, Program> crossover_90_10(const Program& p1, const Program& p2,
                                            const VariationConfig& cfg, Rng& rng) {
  auto t1 = clone(p1.root());
  auto t2 = clone(p2.root());
  auto* slot1 = pick_node(t1, cfg.internal_node_bias, rng);
  auto* slot2 = pick_node(t2, cfg.internal_node_bias, rng);
  std::swap(*slot1, *slot2);

  Program c1{std::move(t1)};
  Program c2{std::move(t2)};
  if (!within_limits(c1, cfg)) c1 = p1;
  if (!within_limits(c2, cfg)) c2 = p2;
  return {std::move(c1), std::move(c2)};
}

Program subtree_mutation(const Program& p, std::size_t feature_count,
                         const VariationConfig& cfg, Rng& rng) {
  auto tree = clone(p.root());
  std::vector<std::unique_ptr<Node>*> all;
  collect_nodes(tree, true, all);
  collect_nodes(tree, false, all);
  auto* slot = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  *slot = build_tree(feature_count, cfg.mutation_subtree_depth, false, true, rng);

  Program child{std::move(tree)};
  return within_limits(child, cfg) ? std::move(child) : p;
}

double mean_semantic_distance(const Semantics& a, const Semantics& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("mean_semantic_distance: length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return sum / static_cast<double>(a.size());
}

std::pair<Program, Program> ssc_crossover(const Individual& p1, const Individual& p2,
                                          const Dataset& train,
                                          const VariationConfig& cfg, Rng& rng) {
  const bool has_lbss = cfg.lbss.has_value();
  auto in_band = [&](double d) {
    return has_lbss ? (*cfg.lbss <= d && d <= cfg.ubss) : d <= cfg.ubss;
  };
  for (int trial = 0; trial < cfg.ssc_max_trials; ++trial) {
    auto [c1, c2] = crossover_90_10(p1.program, p2.program, cfg, rng);
    // each child is compared against its root parent
    if (in_band(mean_semantic_distance(semantics_of(c1, train), p1.semantics)) ||
        in_band(mean_semantic_distance(semantics_of(c2, train), p2.semantics)))
      return {std::move(c1), std::move(c2)};
  }
  return crossover_90_10(p1.program, p2.program, cfg, rng);
}

}  // namespace mogp
