#include "mogp/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace mogp {

std::unique_ptr<Node> clone(const Node& n) {
  auto out = std::make_unique<Node>();
  out->kind = n.kind;
  out->feature = n.feature;
  if (n.left) out->left = clone(*n.left);
  if (n.right) out->right = clone(*n.right);
  return out;
}

Program::Program(std::unique_ptr<Node> root) : root_(std::move(root)) {
  if (!root_) throw MalformedProgramError("program with null root");
}

Program& Program::operator=(const Program& other) {
  if (this != &other) root_ = clone(*other.root_);
  return *this;
}

Program Program::feature(int index) {
  auto n = std::make_unique<Node>();
  n->kind = NodeKind::Feature;
  n->feature = index;
  return Program(std::move(n));
}

Program Program::binary(NodeKind op, Program left, Program right) {
  auto n = std::make_unique<Node>();
  n->kind = op;
  n->left = clone(left.root());
  n->right = clone(right.root());
  return Program(std::move(n));
}

namespace {

int depth_of(const Node& n) {
  if (n.kind == NodeKind::Feature) return 0;
  return 1 + std::max(depth_of(*n.left), depth_of(*n.right));
}

int count_of(const Node& n) {
  if (n.kind == NodeKind::Feature) return 1;
  return 1 + count_of(*n.left) + count_of(*n.right);
}

double clamp_value(double v) {
  if (v > kValueClamp) return kValueClamp;
  if (v < -kValueClamp) return -kValueClamp;
  return v;
}

double eval_node(const Node& n, std::span<const double> row) {
  switch (n.kind) {
    case NodeKind::Feature:
      if (n.feature < 0 || static_cast<std::size_t>(n.feature) >= row.size())
        throw MalformedProgramError("feature index x" +
                                    std::to_string(n.feature) +
                                    " out of bounds for row of size " +
                                    std::to_string(row.size()));
      return row[static_cast<std::size_t>(n.feature)];
    case NodeKind::Add:
      return clamp_value(eval_node(*n.left, row) + eval_node(*n.right, row));
    case NodeKind::Sub:
      return clamp_value(eval_node(*n.left, row) - eval_node(*n.right, row));
    case NodeKind::Mul:
      return clamp_value(eval_node(*n.left, row) * eval_node(*n.right, row));
    case NodeKind::Pdiv: {
      const double a = eval_node(*n.left, row);
      const double b = eval_node(*n.right, row);
      if (std::abs(b) <= kPdivEpsilon) return 1.0;
      return clamp_value(a / b);
    }
  }
  throw MalformedProgramError("unknown node kind");
}

const char* op_symbol(NodeKind k) {
  switch (k) {
    case NodeKind::Add: return "+";
    case NodeKind::Sub: return "-";
    case NodeKind::Mul: return "*";
    case NodeKind::Pdiv: return "%";
    default: return "?";
  }
}

void print_node(const Node& n, std::ostream& os) {
  if (n.kind == NodeKind::Feature) {
    os << 'x' << n.feature;
    return;
  }
  os << '(' << op_symbol(n.kind) << ' ';
  print_node(*n.left, os);
  os << ' ';
  print_node(*n.right, os);
  os << ')';
}

struct SexprParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw MalformedProgramError("s-expression parse error at offset " +
                                std::to_string(pos) + ": " + what);
  }

  std::unique_ptr<Node> parse_node() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    if (text[pos] == '(') {
      ++pos;
      skip_ws();
      if (pos >= text.size()) fail("missing operator");
      NodeKind kind;
      switch (text[pos]) {
        case '+': kind = NodeKind::Add; break;
        case '-': kind = NodeKind::Sub; break;
        case '*': kind = NodeKind::Mul; break;
        case '%': kind = NodeKind::Pdiv; break;
        default: fail("unknown operator");
      }
      ++pos;
      auto n = std::make_unique<Node>();
      n->kind = kind;
      n->left = parse_node();
      n->right = parse_node();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("missing ')'");
      ++pos;
      return n;
    }
    if (text[pos] == 'x') {
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) fail("feature index expected after 'x'");
      auto n = std::make_unique<Node>();
      n->kind = NodeKind::Feature;
      n->feature = std::stoi(text.substr(start, pos - start));
      return n;
    }
    fail("unexpected character");
  }
};

bool nodes_equal(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == NodeKind::Feature) return a.feature == b.feature;
  return nodes_equal(*a.left, *b.left) && nodes_equal(*a.right, *b.right);
}

}  // namespace

int Program::depth() const { return depth_of(*root_); }
int Program::node_count() const { return count_of(*root_); }

double Program::evaluate(std::span<const double> row) const {
  return eval_node(*root_, row);
}

std::string Program::to_sexpr() const {
  std::ostringstream os;
  print_node(*root_, os);
  return os.str();
}

Program Program::from_sexpr(const std::string& text) {
  SexprParser p{text};
  auto root = p.parse_node();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  return Program(std::move(root));
}

bool Program::operator==(const Program& other) const {
  return nodes_equal(*root_, *other.root_);
}

}  // namespace mogp
