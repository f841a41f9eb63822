#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mogp {

/// Thrown when a program references a feature column that does not exist in
/// the data it is evaluated on. Indicates a bug in a variation operator.
struct MalformedProgramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class NodeKind : std::uint8_t { Add, Sub, Mul, Pdiv, Feature };

inline bool is_binary(NodeKind k) { return k != NodeKind::Feature; }

struct Node {
  NodeKind kind = NodeKind::Feature;
  int feature = 0;  // valid when kind == Feature
  std::unique_ptr<Node> left;
  std::unique_ptr<Node> right;
};

std::unique_ptr<Node> clone(const Node& n);

/// Arithmetic expression tree over dataset feature columns. Function set is
/// {+, -, *, %} with % the protected division. Value type with deep copy;
/// immutable through the public surface, so safe to share across threads.
class Program {
 public:
  Program() : root_(std::make_unique<Node>()) {}
  explicit Program(std::unique_ptr<Node> root);

  Program(const Program& other) : root_(clone(*other.root_)) {}
  Program& operator=(const Program& other);
  Program(Program&&) noexcept = default;
  Program& operator=(Program&&) noexcept = default;

  static Program feature(int index);
  static Program binary(NodeKind op, Program left, Program right);

  const Node& root() const { return *root_; }

  int depth() const;       // single terminal has depth 0
  int node_count() const;

  /// Evaluate on one data row. Protected division returns 1.0 when the
  /// denominator magnitude is <= 1e-9; intermediate values are clamped to
  /// [-1e12, 1e12] so no NaN/Inf can escape for finite inputs.
  double evaluate(std::span<const double> row) const;

  /// Prefix s-expression, e.g. "(+ (* x0 x1) (% x2 x3))".
  std::string to_sexpr() const;
  static Program from_sexpr(const std::string& text);

  bool operator==(const Program& other) const;

 private:
  std::unique_ptr<Node> root_;
};

/// Output vector of a program over every fitness case of a dataset, in row
/// order. Length equals the number of fitness cases.
using Semantics = std::vector<double>;

inline constexpr double kPdivEpsilon = 1e-9;
inline constexpr double kValueClamp = 1e12;

}  // namespace mogp
