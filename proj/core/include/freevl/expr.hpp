#ifndef FREEVL_EXPR_HPP
#define FREEVL_EXPR_HPP

#include <cstddef>
#include <memory>
#include <string>

#include "freevl/vector.hpp"

namespace freevl {

/// Immutable expression tree over vector generators, closed under +,
/// scalar multiplication, join and meet. All generators of one tree share
/// the same dimension; the factory functions enforce that.
///
/// Handles are cheap shared references; trees may be shared freely across
/// threads.
class Expr {
 public:
  enum class Kind { Gen, Add, Scale, Join, Meet };

  static Expr gen(Vector generator);
  static Expr add(const Expr& lhs, const Expr& rhs);
  static Expr scale(const Rational& factor, const Expr& operand);
  static Expr join(const Expr& lhs, const Expr& rhs);
  static Expr meet(const Expr& lhs, const Expr& rhs);
  /// scale(-1, operand).
  static Expr negate(const Expr& operand);

  Kind kind() const;
  std::size_t dim() const;

  /// Kind::Gen only.
  const Vector& generator() const;
  /// Kind::Scale only.
  const Rational& factor() const;
  /// Kind::Scale only.
  Expr operand() const;
  /// Kind::Add / Join / Meet only.
  Expr lhs() const;
  Expr rhs() const;

  std::size_t node_count() const;

  /// Structural equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Exact pointwise value: generators pair with the point, Add sums,
/// Scale multiplies, Join takes max, Meet takes min.
Rational eval_expr(const Expr& e, const Vector& point);

/// Grammar text that reparses to a structurally identical tree, with
/// parentheses only where precedence requires them.
std::string format_expr(const Expr& e);

}  // namespace freevl

#endif  // FREEVL_EXPR_HPP
