#include <doctest.h>

#include <cmath>

#include "mogp/dataset.hpp"
#include "mogp/expr.hpp"
#include "mogp/variation.hpp"

using namespace mogp;

namespace {

Program parse(const std::string& s) { return Program::from_sexpr(s); }

Dataset tiny_dataset(std::vector<std::vector<double>> rows) {
  Dataset d;
  d.name = "tiny";
  d.feature_count = rows.empty() ? 0 : rows[0].size();
  d.labels.assign(rows.size(), false);
  d.rows = std::move(rows);
  return d;
}

}  // namespace

TEST_CASE("evaluate: terminal identity") {
  const std::vector<double> row{3.5};
  CHECK(parse("x0").evaluate(row) == 3.5);
}

TEST_CASE("evaluate: protected division near-zero denominator") {
  const std::vector<double> row{5.0, 0.0};
  CHECK(parse("(% x0 x1)").evaluate(row) == 1.0);
  const std::vector<double> tiny{5.0, 1e-10};
  CHECK(parse("(% x0 x1)").evaluate(tiny) == 1.0);
  const std::vector<double> ok{6.0, 2.0};
  CHECK(parse("(% x0 x1)").evaluate(ok) == 3.0);
}

TEST_CASE("evaluate: hand arithmetic") {
  // (x0*x1) + (x0-x1) = 6 + (-1)
  const std::vector<double> row{2.0, 3.0};
  CHECK(parse("(+ (* x0 x1) (- x0 x1))").evaluate(row) == 5.0);
}

TEST_CASE("evaluate: out-of-bounds feature index is a malformed program") {
  const std::vector<double> row{1.0};
  CHECK_THROWS_AS(parse("x3").evaluate(row), MalformedProgramError);
}

TEST_CASE("evaluate: clamping keeps results finite") {
  // repeated squaring of a large input would overflow without the clamp
  Program p = parse("(* (* x0 x0) (* x0 x0))");
  for (double v : {1e300, -1e300, 1e12, 4.2}) {
    const std::vector<double> row{v};
    const double out = p.evaluate(row);
    CHECK(std::isfinite(out));
    CHECK(std::abs(out) <= 1e12);
  }
}

TEST_CASE("evaluate: random programs never produce NaN or Inf") {
  Rng rng = make_rng(7);
  std::uniform_real_distribution<double> val(-1e6, 1e6);
  for (int i = 0; i < 200; ++i) {
    Program p = grow_program(4, 6, rng);
    std::vector<double> row{val(rng), val(rng), val(rng), val(rng)};
    CHECK(std::isfinite(p.evaluate(row)));
  }
}

TEST_CASE("semantics: identity terminal over rows") {
  const auto d = tiny_dataset({{1}, {2}, {3}});
  CHECK(semantics_of(parse("x0"), d) == Semantics{1, 2, 3});
}

TEST_CASE("semantics: self-cancellation gives the zero vector") {
  const auto d = tiny_dataset({{1, 9}, {2, -3}, {5, 0}, {7, 1}});
  CHECK(semantics_of(parse("(- x0 x0)"), d) == Semantics(4, 0.0));
}

TEST_CASE("semantics: structurally different programs may coincide") {
  const auto d = tiny_dataset({{1, 9}, {2, -3}, {5, 0}});
  const Program a = parse("(+ x0 x1)");
  const Program b = parse("(+ x1 x0)");
  CHECK_FALSE(a == b);
  CHECK(semantics_of(a, d) == semantics_of(b, d));
}

TEST_CASE("semantics: deterministic and bit-identical across calls") {
  Rng rng = make_rng(11);
  const auto d = tiny_dataset({{0.5, -2.0, 3.0}, {1.0, 1.0, 1.0}, {-4.0, 0.1, 9.0}});
  for (int i = 0; i < 50; ++i) {
    Program p = grow_program(3, 5, rng);
    CHECK(semantics_of(p, d) == semantics_of(p, d));
  }
}

TEST_CASE("depth and node_count conventions") {
  CHECK(parse("x0").depth() == 0);  // root-only tree counts as depth 0
  CHECK(parse("x0").node_count() == 1);
  CHECK(parse("(+ x0 x1)").depth() == 1);
  CHECK(parse("(+ x0 x1)").node_count() == 3);
  CHECK(parse("(+ (+ x0 x1) x2)").depth() == 2);
  CHECK(parse("(+ (+ x0 x1) x2)").node_count() == 5);
}

TEST_CASE("s-expression round trip") {
  const std::string text = "(+ (* x0 x1) (% x2 x3))";
  CHECK(parse(text).to_sexpr() == text);

  Rng rng = make_rng(3);
  for (int i = 0; i < 100; ++i) {
    Program p = grow_program(6, 6, rng);
    CHECK(Program::from_sexpr(p.to_sexpr()) == p);
  }
}

TEST_CASE("s-expression parse errors") {
  CHECK_THROWS_AS(Program::from_sexpr("(+ x0"), MalformedProgramError);
  CHECK_THROWS_AS(Program::from_sexpr("(^ x0 x1)"), MalformedProgramError);
  CHECK_THROWS_AS(Program::from_sexpr("x0 x1"), MalformedProgramError);
  CHECK_THROWS_AS(Program::from_sexpr(""), MalformedProgramError);
}
