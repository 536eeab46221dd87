#ifndef FREEVL_HOM_HPP
#define FREEVL_HOM_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "freevl/expr.hpp"
#include "freevl/normal_form.hpp"
#include "freevl/rational.hpp"
#include "freevl/vector.hpp"

namespace freevl {

/// The three supported codomains for factoring a linear map through the
/// free lattice: Q with its usual order, Q^m with the pointwise order, and
/// another free lattice presented as normal forms.
struct ScalarTarget {};
struct CoordinateTarget {
    std::size_t dim;
};
struct FreeTarget {
    std::size_t dim;
};
using TargetLattice = std::variant<ScalarTarget, CoordinateTarget, FreeTarget>;

/// Tags: "scalars", "coord:m", "free:n" (m, n positive). Throws Error on
/// anything else.
TargetLattice parse_target(const std::string& tag);
std::string target_tag(const TargetLattice& target);

/// A linear map out of the source space Q^n: one functional row for
/// Scalars, m rows for CoordinateTarget, and one image per source basis
/// vector for FreeTarget.
struct LinearMapSpec {
    std::vector<Vector> rows;
    std::vector<NormalForm> images;
};

/// {"rows": [["p/q",...],...]} plus "images": [NormalForm...] when present.
std::string map_to_json(const LinearMapSpec& map);
LinearMapSpec map_from_json(const std::string& text);

using FactorValue = std::variant<Rational, Vector, NormalForm>;

/// The canonical embedding j of the source space: v as the one-generator
/// normal form {{v}}. Linear up to nf_eq.
NormalForm psi_embed(const Vector& v);

/// The induced lattice homomorphism applied to e: generators go through
/// the map, the connectives act in the target. Every variant agrees with
/// the map on generators, which pins it down on all of the free lattice.
Rational factor_to_scalar(const Vector& functional, const Expr& e);
Vector factor_to_coords(const std::vector<Vector>& rows, const Expr& e);
NormalForm factor_to_free(const std::vector<NormalForm>& images, const Expr& e);

/// Dispatches on the target variant; validates shape against it first.
FactorValue factor_map(const LinearMapSpec& map, const TargetLattice& target, const Expr& e);

/// A normal form carried together with a spanning set of evaluation
/// functionals; evaluation is only offered at rational combinations of the
/// span. Construction insists the span separates points (full rank), since
/// equality decisions against a non-separating span are unsound.
class RestrictedFunction {
public:
    /// Throws NotSeparatingError when rank(span) < dim(f).
    RestrictedFunction(NormalForm f, std::vector<Vector> span);

    const NormalForm& function() const { return f_; }
    const std::vector<Vector>& span() const { return span_; }

    /// The concrete point sum_i coeffs[i] * span[i].
    Vector point_at(const std::vector<Rational>& coeffs) const;

    /// f evaluated at point_at(coeffs).
    Rational eval_at(const std::vector<Rational>& coeffs) const;

private:
    NormalForm f_;
    std::vector<Vector> span_;
};

RestrictedFunction restrict_dual(NormalForm f, std::vector<Vector> span);

/// The two-step embedding of an expression over a size-s set: labels to
/// indicator functions, indicator functions to the free lattice, connect-
/// ives interpreted as normal-form algebra. Agrees with normalize up to
/// nf_eq; computed through factor_to_free so the two routes stay distinct.
NormalForm compose_free(std::size_t s_size, const Expr& e);

}  // namespace freevl

#endif  // FREEVL_HOM_HPP
