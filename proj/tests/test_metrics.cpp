#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mogp/metrics.hpp"
#include "mogp/rng.hpp"

using namespace mogp;

namespace {

using Points = std::vector<std::pair<double, double>>;

// exact staircase area as a union of rectangles [0,x]x[0,y], computed by a
// strip sweep over the x boundaries
double rectangle_union_area(const Points& pts) {
  std::vector<double> xs{0.0};
  for (const auto& [x, y] : pts) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  double area = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    double height = 0.0;
    for (const auto& [x, y] : pts)
      if (x >= xs[i]) height = std::max(height, y);
    area += (xs[i] - xs[i - 1]) * height;
  }
  return area;
}

// brute-force two-sided rank-sum p by enumerating every n1-subset of ranks
double enumeration_wilcoxon(std::size_t n1, std::size_t n2, std::uint64_t w_obs) {
  const std::size_t n = n1 + n2;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(n1), true);
  std::sort(mask.begin(), mask.end());  // lexicographically first combination
  std::uint64_t total = 0, below = 0, above = 0;
  do {
    std::uint64_t w = 0;
    for (std::size_t r = 0; r < n; ++r)
      if (mask[r]) w += r + 1;
    ++total;
    if (w <= w_obs) ++below;
    if (w >= w_obs) ++above;
  } while (std::next_permutation(mask.begin(), mask.end()));
  const std::uint64_t extreme = std::min(below, above);
  return std::min(1.0, 2.0 * static_cast<double>(extreme) / static_cast<double>(total));
}

std::uint64_t rank_sum_of(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::sort(pooled.begin(), pooled.end());
  std::uint64_t w = 0;
  for (const double v : a)
    w += static_cast<std::uint64_t>(
             std::lower_bound(pooled.begin(), pooled.end(), v) - pooled.begin()) +
         1;
  return w;
}

FrontSnapshot random_front(Rng& rng, int n_points) {
  std::uniform_real_distribution<double> val(0.0, 1.0);
  Points pts;
  for (int i = 0; i < n_points; ++i) pts.emplace_back(val(rng), val(rng));
  return make_front_snapshot(std::move(pts));
}

}  // namespace

TEST_CASE("make_front_snapshot drops dominated and duplicate points") {
  const auto f = make_front_snapshot({{0.5, 0.5}, {0.6, 0.6}, {0.6, 0.6}, {0.2, 0.9}});
  CHECK(f.points == Points{{0.2, 0.9}, {0.6, 0.6}});
}

TEST_CASE("hypervolume: unit square from the ideal point") {
  CHECK(hypervolume_trapezoid(make_front_snapshot({{1, 1}})) == 1.0);
  CHECK(hypervolume_staircase(make_front_snapshot({{1, 1}})) == 1.0);
}

TEST_CASE("hypervolume: two-point hand geometry") {
  const auto f = make_front_snapshot({{0.5, 1.0}, {1.0, 0.5}});
  CHECK(hypervolume_trapezoid(f) == doctest::Approx(0.875));
  CHECK(hypervolume_staircase(f) == doctest::Approx(0.75));
}

TEST_CASE("hypervolume: empty front is defined as zero") {
  CHECK(hypervolume_trapezoid(FrontSnapshot{}) == 0.0);
  CHECK(hypervolume_staircase(FrontSnapshot{}) == 0.0);
}

TEST_CASE("hypervolume: trapezoid dominates staircase, both within [0,1]") {
  Rng rng = make_rng(71);
  for (int t = 0; t < 200; ++t) {
    const auto f = random_front(rng, 1 + t % 10);
    const double trap = hypervolume_trapezoid(f);
    const double stair = hypervolume_staircase(f);
    CHECK(trap >= stair);
    CHECK(trap >= 0.0);
    CHECK(trap <= 1.0);
  }
}

TEST_CASE("hypervolume: staircase equals the rectangle-union oracle") {
  Rng rng = make_rng(72);
  for (int t = 0; t < 100; ++t) {
    const auto f = random_front(rng, 1 + t % 8);
    CHECK(hypervolume_staircase(f) ==
          doctest::Approx(rectangle_union_area(f.points)).epsilon(1e-12));
  }
}

TEST_CASE("hypervolume monotonicity") {
  Rng rng = make_rng(73);
  std::uniform_real_distribution<double> val(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    auto f = random_front(rng, 4);
    const double hv = hypervolume_trapezoid(f);
    const std::pair<double, double> extra{val(rng), val(rng)};
    auto pts = f.points;
    pts.push_back(extra);
    const auto g = make_front_snapshot(pts);
    const double hv2 = hypervolume_trapezoid(g);
    const bool dominated = std::any_of(f.points.begin(), f.points.end(), [&](auto p) {
      return p.first >= extra.first && p.second >= extra.second;
    });
    if (dominated) {
      CHECK(hv2 == hv);  // dominated or duplicate point changes nothing
    } else {
      // the trapezoid area may shrink when a point lands below the chord
      // between its neighbours; only the staircase area is monotone
      CHECK(hypervolume_staircase(g) >= hypervolume_staircase(f) - 1e-15);
    }
  }
}

TEST_CASE("accumulate_po_front") {
  const auto f = make_front_snapshot({{0.5, 0.8}, {0.9, 0.2}});
  CHECK(accumulate_po_front(std::vector<FrontSnapshot>(50, f)).points == f.points);

  const auto a = make_front_snapshot({{1, 0}});
  const auto b = make_front_snapshot({{0, 1}});
  CHECK(accumulate_po_front({a, b}).points == Points{{0, 1}, {1, 0}});

  const auto c = make_front_snapshot({{0.5, 0.5}});
  const auto d = make_front_snapshot({{0.6, 0.6}});
  CHECK(accumulate_po_front({c, d}).points == Points{{0.6, 0.6}});
}

TEST_CASE("accumulate_po_front output dominates-or-equals every input point") {
  Rng rng = make_rng(74);
  std::vector<FrontSnapshot> fronts;
  for (int i = 0; i < 10; ++i) fronts.push_back(random_front(rng, 5));
  const auto acc = accumulate_po_front(fronts);
  for (const auto& f : fronts)
    for (const auto& [x, y] : f.points) {
      const bool covered = std::any_of(
          acc.points.begin(), acc.points.end(),
          [&](auto p) { return p.first >= x && p.second >= y; });
      CHECK(covered);
    }
}

TEST_CASE("wilcoxon: identical samples are not separable") {
  const std::vector<double> a{1, 2, 3, 4, 5};
  CHECK(wilcoxon_rank_sum(a, a) >= 0.99);
}

TEST_CASE("wilcoxon: fully separated small samples, exact") {
  CHECK(wilcoxon_rank_sum({1, 2, 3}, {4, 5, 6}) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(wilcoxon_rank_sum({1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
                          {11, 12, 13, 14, 15, 16, 17, 18, 19, 20}) ==
        doctest::Approx(1.082e-5).epsilon(1e-3));
}

TEST_CASE("wilcoxon: exact path is bit-equal to full enumeration") {
  Rng rng = make_rng(75);
  std::uniform_real_distribution<double> val(0.0, 100.0);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int t = 0; t < 60; ++t) {
    std::vector<double> a(size(rng)), b(size(rng));
    for (auto& x : a) x = val(rng);
    for (auto& x : b) x = val(rng);
    const double got = wilcoxon_rank_sum(a, b);
    const double want = enumeration_wilcoxon(a.size(), b.size(), rank_sum_of(a, b));
    CHECK(got == want);  // bit-equal
  }
}

TEST_CASE("wilcoxon: all-constant pooled sample") {
  CHECK(wilcoxon_rank_sum({3, 3, 3}, {3, 3}) == 1.0);
}

TEST_CASE("wilcoxon: large samples use the normal approximation sensibly") {
  std::vector<double> a, b;
  for (int i = 0; i < 50; ++i) {
    a.push_back(i);
    b.push_back(i + 30);
  }
  CHECK(wilcoxon_rank_sum(a, b) < 1e-6);
  CHECK(wilcoxon_rank_sum(a, a) >= 0.99);
  CHECK_THROWS_AS(wilcoxon_rank_sum({}, {1.0}), std::invalid_argument);
}

TEST_CASE("bonferroni threshold for the 16-cell grid") {
  CHECK(bonferroni_threshold(0.05, 16) == 0.003125);
}

TEST_CASE("classify_outcome flags") {
  const std::vector<double> lo{1, 2, 3}, hi{4, 5, 6};
  const double thr = 0.003125;
  CHECK(classify_outcome(0.5, hi, lo, thr) == OutcomeFlag::Nss);
  CHECK(classify_outcome(0.001, hi, lo, thr) == OutcomeFlag::Better);
  CHECK(classify_outcome(0.001, lo, hi, thr) == OutcomeFlag::Worse);
  CHECK(classify_outcome(1.0, lo, lo, thr) == OutcomeFlag::Equal);
  CHECK(std::string(flag_symbol(OutcomeFlag::Better)) == "+");
  CHECK(std::string(flag_symbol(OutcomeFlag::Nss)) == "NSS");
}

TEST_CASE("payoff_wins") {
  std::vector<double> clearly_better, clearly_worse;
  for (int i = 0; i < 30; ++i) {
    clearly_better.push_back(0.9 + i * 1e-4);
    clearly_worse.push_back(0.1 + i * 1e-4);
  }
  std::vector<std::pair<std::vector<double>, std::vector<double>>> cells(
      16, {clearly_better, clearly_worse});
  CHECK(payoff_wins(cells, 0.003125) == 16);

  cells.assign(16, {clearly_worse, clearly_better});
  CHECK(payoff_wins(cells, 0.003125) == 0);

  cells.assign(2, {clearly_better, clearly_worse});
  CHECK(payoff_wins(cells, 0.003125) == 2);
}

TEST_CASE("wins in both directions cannot exceed the grid size") {
  Rng rng = make_rng(76);
  std::uniform_real_distribution<double> val(0.0, 1.0);
  std::vector<std::pair<std::vector<double>, std::vector<double>>> ab, ba;
  for (int c = 0; c < 16; ++c) {
    std::vector<double> a(20), b(20);
    for (auto& x : a) x = val(rng);
    for (auto& x : b) x = val(rng);
    ab.emplace_back(a, b);
    ba.emplace_back(b, a);
  }
  const double thr = 0.003125;
  CHECK(payoff_wins(ab, thr) + payoff_wins(ba, thr) <= 16);
}

TEST_CASE("mean and stddev") {
  CHECK(mean({1, 2, 3}) == 2.0);
  CHECK(stddev({2, 2, 2}) == 0.0);
  CHECK(stddev({1, 3}) == doctest::Approx(std::sqrt(2.0)));
}
