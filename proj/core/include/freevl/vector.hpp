#ifndef FREEVL_VECTOR_HPP
#define FREEVL_VECTOR_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "freevl/rational.hpp"

namespace freevl {

/// Dense rational coordinate tuple in Q^n. Holds generators as well as
/// evaluation points; immutable after construction.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Vector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Vector zero(std::size_t dim);
  /// Standard basis vector e_axis in Q^dim.
  static Vector unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  /// max_i |x_i|; 0 for the empty tuple.
  Rational inf_norm() const;

  friend bool operator==(const Vector& a, const Vector& b) {
    return a.coords_ == b.coords_;
  }
  /// Lexicographic by coordinate value; shorter tuples order first.
  friend std::strong_ordering operator<=>(const Vector& a, const Vector& b);

 private:
  std::vector<Rational> coords_;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& scalar, const Vector& v);

/// Standard pairing <a, b> = sum_i a_i b_i. Dims must agree.
Rational dot(const Vector& a, const Vector& b);

/// Rank of the spanned subspace, by exact Gaussian elimination.
std::size_t rank(const std::vector<Vector>& vectors);

/// "[a,b,...]" with each coordinate as "p" or "p/q".
std::string to_string(const Vector& v);

}  // namespace freevl

#endif  // FREEVL_VECTOR_HPP
