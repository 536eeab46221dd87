#include "freevl/vector.hpp"

#include <algorithm>

#include "freevl/errors.hpp"

namespace freevl {

namespace {

void require_same_dim(const Vector& a, const Vector& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError(std::string(what) + ": dimensions " +
                                 std::to_string(a.dim()) + " and " +
                                 std::to_string(b.dim()));
  }
}

}  // namespace

Vector Vector::zero(std::size_t dim) {
  return Vector(std::vector<Rational>(dim, Rational(0)));
}

Vector Vector::unit(std::size_t dim, std::size_t axis) {
  std::vector<Rational> coords(dim, Rational(0));
  coords.at(axis) = 1;
  return Vector(std::move(coords));
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& c) { return c == 0; });
}

Rational Vector::inf_norm() const {
  Rational best(0);
  for (const Rational& c : coords_) {
    Rational a = abs(c);
    if (a > best) best = a;
  }
  return best;
}

std::strong_ordering operator<=>(const Vector& a, const Vector& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (a[i] > b[i]) return std::strong_ordering::greater;
  }
  return a.dim() <=> b.dim();
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_dim(a, b, "vector addition");
  std::vector<Rational> coords;
  coords.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) coords.push_back(a[i] + b[i]);
  return Vector(std::move(coords));
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_dim(a, b, "vector subtraction");
  std::vector<Rational> coords;
  coords.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) coords.push_back(a[i] - b[i]);
  return Vector(std::move(coords));
}

Vector operator-(const Vector& a) { return Rational(-1) * a; }

Vector operator*(const Rational& scalar, const Vector& v) {
  std::vector<Rational> coords;
  coords.reserve(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) coords.push_back(scalar * v[i]);
  return Vector(std::move(coords));
}

Rational dot(const Vector& a, const Vector& b) {
  require_same_dim(a, b, "pairing");
  Rational sum(0);
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
  return sum;
}

std::size_t rank(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t n = vectors.front().dim();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(vectors.size());
  for (const Vector& v : vectors) {
    if (v.dim() != n) {
      throw DimensionMismatchError("rank: vectors of unequal dimension");
    }
    rows.push_back(v.coords());
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational factor = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < n; ++j) {
        rows[i][j] -= factor * rows[r][j];
      }
    }
    ++r;
  }
  return r;
}

std::string to_string(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  out += "]";
  return out;
}

}  // namespace freevl
