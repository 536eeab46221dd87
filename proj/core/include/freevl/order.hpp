#ifndef FREEVL_ORDER_HPP
#define FREEVL_ORDER_HPP

#include <optional>
#include <vector>

#include "freevl/normal_form.hpp"
#include "freevl/rational.hpp"
#include "freevl/vector.hpp"

namespace freevl {

/// Verdict of hull_contains_zero with its certificate: convex weights when
/// zero lies in the hull, otherwise a functional strictly positive on every
/// input vector (Gordan's alternative guarantees exactly one exists).
struct HullResult {
    bool contains_zero = false;
    std::optional<std::vector<Rational>> weights;
    std::optional<Vector> separator;
};

/// Decides 0 in co{v_1, ..., v_k} by exact LP feasibility. The separator in
/// the negative case is scaled so every product <v_i, x> is at least 1.
HullResult hull_contains_zero(const std::vector<Vector>& vectors);

/// True iff min_i <v_i, x> <= 0 for every x; equivalent to zero lying in
/// the convex hull of the vectors.
bool meet_leq_zero(const std::vector<Vector>& vectors);

/// True iff f(x) <= g(x) for all x. Reduces to one hull membership per
/// block of f + (-1)g: a join is below zero iff every joinand is.
bool nf_leq(const NormalForm& f, const NormalForm& g);

/// Semantic equality of the denoted functions (both inequalities).
bool nf_eq(const NormalForm& f, const NormalForm& g);

/// nf_eq against the zero form.
bool nf_is_zero(const NormalForm& f);

/// Returns nullopt when f <= 0 (the vacuous direction of the Archimedean
/// implication). Otherwise the least n >= 1 with n*f not <= g, located by
/// doubling then bisection; the doubling phase terminates because the
/// realization is Archimedean.
std::optional<Integer> archimedean_witness(const NormalForm& f, const NormalForm& g);

/// For f != g: a point x with max-norm at most 1 where the values differ
/// (the failing block's separator, rescaled by positive homogeneity);
/// nullopt when nf_eq(f, g).
std::optional<Vector> separating_witness(const NormalForm& f, const NormalForm& g);

}  // namespace freevl

#endif  // FREEVL_ORDER_HPP
