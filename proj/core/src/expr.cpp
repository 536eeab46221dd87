#include "freevl/expr.hpp"

#include <algorithm>
#include <cassert>

#include "freevl/errors.hpp"

namespace freevl {

struct Expr::Node {
  Kind kind;
  std::size_t dim = 0;
  Vector generator;                   // Gen
  Rational factor;                    // Scale
  std::shared_ptr<const Node> a, b;   // operands (Scale uses a only)
};

namespace {

void require_same_dim(const Expr& a, const Expr& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError(std::string(what) + ": operand dimensions " +
                                 std::to_string(a.dim()) + " and " +
                                 std::to_string(b.dim()));
  }
}

}  // namespace

Expr Expr::gen(Vector generator) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Gen;
  node->dim = generator.dim();
  node->generator = std::move(generator);
  return Expr(std::move(node));
}

Expr Expr::add(const Expr& lhs, const Expr& rhs) {
  require_same_dim(lhs, rhs, "+");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Add;
  node->dim = lhs.dim();
  node->a = lhs.node_;
  node->b = rhs.node_;
  return Expr(std::move(node));
}

Expr Expr::scale(const Rational& factor, const Expr& operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Scale;
  node->dim = operand.dim();
  node->factor = factor;
  node->a = operand.node_;
  return Expr(std::move(node));
}

Expr Expr::join(const Expr& lhs, const Expr& rhs) {
  require_same_dim(lhs, rhs, "\\/");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Join;
  node->dim = lhs.dim();
  node->a = lhs.node_;
  node->b = rhs.node_;
  return Expr(std::move(node));
}

Expr Expr::meet(const Expr& lhs, const Expr& rhs) {
  require_same_dim(lhs, rhs, "/\\");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Meet;
  node->dim = lhs.dim();
  node->a = lhs.node_;
  node->b = rhs.node_;
  return Expr(std::move(node));
}

Expr Expr::negate(const Expr& operand) { return scale(Rational(-1), operand); }

Expr::Kind Expr::kind() const { return node_->kind; }
std::size_t Expr::dim() const { return node_->dim; }

const Vector& Expr::generator() const {
  assert(node_->kind == Kind::Gen);
  return node_->generator;
}

const Rational& Expr::factor() const {
  assert(node_->kind == Kind::Scale);
  return node_->factor;
}

Expr Expr::operand() const {
  assert(node_->kind == Kind::Scale);
  return Expr(node_->a);
}

Expr Expr::lhs() const {
  assert(node_->kind == Kind::Add || node_->kind == Kind::Join ||
         node_->kind == Kind::Meet);
  return Expr(node_->a);
}

Expr Expr::rhs() const {
  assert(node_->kind == Kind::Add || node_->kind == Kind::Join ||
         node_->kind == Kind::Meet);
  return Expr(node_->b);
}

std::size_t Expr::node_count() const {
  switch (kind()) {
    case Kind::Gen:
      return 1;
    case Kind::Scale:
      return 1 + operand().node_count();
    default:
      return 1 + lhs().node_count() + rhs().node_count();
  }
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.dim() != b.dim()) return false;
  switch (a.kind()) {
    case Expr::Kind::Gen:
      return a.generator() == b.generator();
    case Expr::Kind::Scale:
      return a.factor() == b.factor() && a.operand() == b.operand();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

Rational eval_expr(const Expr& e, const Vector& point) {
  if (point.dim() != e.dim()) {
    throw DimensionMismatchError(
        "eval: point dimension " + std::to_string(point.dim()) +
        ", expression dimension " + std::to_string(e.dim()));
  }
  switch (e.kind()) {
    case Expr::Kind::Gen:
      return dot(e.generator(), point);
    case Expr::Kind::Add:
      return eval_expr(e.lhs(), point) + eval_expr(e.rhs(), point);
    case Expr::Kind::Scale:
      return e.factor() * eval_expr(e.operand(), point);
    case Expr::Kind::Join:
      return std::max(eval_expr(e.lhs(), point), eval_expr(e.rhs(), point));
    case Expr::Kind::Meet:
      return std::min(eval_expr(e.lhs(), point), eval_expr(e.rhs(), point));
  }
  assert(false);
  return Rational(0);
}

namespace {

// Binding strength, loosest first: \/ < /\ < + < scalar *. A child is
// parenthesized when its own level is below what its position requires;
// right operands of the left-associative binary operators require one
// level more.
enum Level : int { kJoin = 0, kMeet = 1, kAdd = 2, kScale = 3, kAtom = 4 };

int level_of(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Join:
      return kJoin;
    case Expr::Kind::Meet:
      return kMeet;
    case Expr::Kind::Add:
      return kAdd;
    case Expr::Kind::Scale:
      return kScale;
    case Expr::Kind::Gen:
      return kAtom;
  }
  return kAtom;
}

void print(const Expr& e, int min_level, std::string& out) {
  const int level = level_of(e);
  const bool parens = level < min_level;
  if (parens) out += "(";
  switch (e.kind()) {
    case Expr::Kind::Gen:
      out += to_string(e.generator());
      break;
    case Expr::Kind::Scale:
      out += to_string(e.factor());
      out += " * ";
      print(e.operand(), kAtom, out);
      break;
    case Expr::Kind::Add:
      print(e.lhs(), kAdd, out);
      out += " + ";
      print(e.rhs(), kAdd + 1, out);
      break;
    case Expr::Kind::Meet:
      print(e.lhs(), kMeet, out);
      out += " /\\ ";
      print(e.rhs(), kMeet + 1, out);
      break;
    case Expr::Kind::Join:
      print(e.lhs(), kJoin, out);
      out += " \\/ ";
      print(e.rhs(), kJoin + 1, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string format_expr(const Expr& e) {
  std::string out;
  print(e, kJoin, out);
  return out;
}

}  // namespace freevl
