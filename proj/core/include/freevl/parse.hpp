#ifndef FREEVL_PARSE_HPP
#define FREEVL_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "freevl/expr.hpp"

namespace freevl {

/// Parses expression text over vector-literal generators.
///
///   expr   := join ; join := meet { "\/" meet } ; meet := sum { "/\" sum }
///   sum    := term { ("+"|"-") term } ; term := [ rational "*" ] atom
///   atom   := vector | "(" expr ")" | "-" atom
///   vector := "[" rational { "," rational } "]"
///   rational := ["-"] digits [ "/" digits ]
///
/// Whitespace insensitive; all binary operators left-associative; every
/// vector literal must have exactly `dim` coordinates.
Expr parse_expr(std::string_view text, std::size_t dim);

/// Same grammar extended with bare identifiers as generators. Each
/// identifier must name a member of `labels` and denotes its indicator
/// generator; coordinates follow the lexicographically sorted label order.
Expr parse_set_expr(std::string_view text, const std::vector<std::string>& labels);

/// A single vector literal, e.g. "[3,-1/2]".
Vector parse_vector(std::string_view text);

/// As above, also requiring exactly `dim` coordinates.
Vector parse_vector(std::string_view text, std::size_t dim);

/// A nonempty bracketed list of vector literals, e.g. "[[1,0],[-1,0]]".
/// Mixed coordinate counts are allowed here; callers validate as needed.
std::vector<Vector> parse_vector_list(std::string_view text);

}  // namespace freevl

#endif  // FREEVL_PARSE_HPP
