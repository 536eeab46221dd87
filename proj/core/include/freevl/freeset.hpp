#ifndef FREEVL_FREESET_HPP
#define FREEVL_FREESET_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "freevl/expr.hpp"
#include "freevl/normal_form.hpp"
#include "freevl/rational.hpp"
#include "freevl/vector.hpp"

namespace freevl {

/// A finitely supported rational-valued function on an arbitrary label set.
/// Zero values are never stored, so support() is exactly the set where the
/// function is nonzero and equality is plain map equality.
class FinSupportFn {
public:
    FinSupportFn() = default;
    explicit FinSupportFn(std::map<std::string, Rational> values);

    const std::map<std::string, Rational>& support() const { return values_; }
    Rational at(const std::string& label) const;
    bool is_zero() const { return values_.empty(); }

    friend bool operator==(const FinSupportFn& a, const FinSupportFn& b) {
        return a.values_ == b.values_;
    }

private:
    std::map<std::string, Rational> values_;
};

FinSupportFn operator+(const FinSupportFn& a, const FinSupportFn& b);
FinSupportFn operator-(const FinSupportFn& a, const FinSupportFn& b);
FinSupportFn operator-(const FinSupportFn& a);
FinSupportFn operator*(const Rational& scalar, const FinSupportFn& f);

/// The indicator function of one label.
FinSupportFn delta(const std::string& label);

/// The bilinear form sum_s f(s) * g(s); pairing(delta(s), g) recovers g(s).
Rational pairing(const FinSupportFn& f, const FinSupportFn& g);

/// Sorted and deduplicated; the coordinate order used everywhere below.
std::vector<std::string> canonical_labels(std::vector<std::string> labels);

/// Coordinates of f over the canonical order of `labels`. Throws
/// UnknownLabelError when f's support mentions a label outside the list.
Vector delta_coordinates(const FinSupportFn& f, const std::vector<std::string>& labels);

/// Inverse of delta_coordinates.
FinSupportFn from_coordinates(const Vector& x, const std::vector<std::string>& labels);

/// Realizes a set-expression (bare identifiers as generators, see
/// parse_set_expr) over the free lattice on Q^|S|, with coordinates in
/// canonical label order. Any single expression touches finitely many
/// labels, so the finite truncation loses nothing per expression.
NormalForm realize_over_set(const std::vector<std::string>& labels, std::string_view text);

/// The same for an already coordinatized expression.
NormalForm realize_over_set(const std::vector<std::string>& labels, const Expr& e);

}  // namespace freevl

#endif  // FREEVL_FREESET_HPP
