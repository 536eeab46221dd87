#include "freevl/order.hpp"

#include <stdexcept>
#include <utility>

#include "freevl/errors.hpp"
#include "freevl/lp.hpp"

namespace freevl {

HullResult hull_contains_zero(const std::vector<Vector>& vectors) {
    if (vectors.empty()) {
        throw std::invalid_argument("hull_contains_zero requires at least one vector");
    }
    const std::size_t dim = vectors[0].dim();
    for (const Vector& v : vectors) {
        if (v.dim() != dim) {
            throw DimensionMismatchError("vectors of mixed dimension");
        }
    }
    const std::size_t k = vectors.size();

    // Membership LP over convex weights: sum lambda_i v_i = 0, sum = 1,
    // lambda >= 0.
    LinearProgram membership;
    membership.num_vars = k;
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<Rational> row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = vectors[i][j];
        membership.constraints.push_back({Vector(std::move(row)), Relation::Eq, Rational(0)});
    }
    membership.constraints.push_back(
        {Vector(std::vector<Rational>(k, Rational(1))), Relation::Eq, Rational(1)});
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Rational> row(k, Rational(0));
        row[i] = 1;
        membership.constraints.push_back(
            {Vector(std::move(row)), Relation::GreaterEq, Rational(0)});
    }
    const LpOutcome inside = lp_solve(membership);
    if (inside.status == LpStatus::Feasible) {
        return {true, inside.witness->coords(), std::nullopt};
    }

    // Gordan's alternative: exactly one of the two systems is solvable, so
    // a strictly separating functional must exist; homogeneity lets us ask
    // for products >= 1 instead of > 0.
    LinearProgram separation;
    separation.num_vars = dim;
    for (const Vector& v : vectors) {
        separation.constraints.push_back({v, Relation::GreaterEq, Rational(1)});
    }
    const LpOutcome outside = lp_solve(separation);
    if (outside.status != LpStatus::Feasible) {
        throw std::logic_error("both Gordan alternatives failed");
    }
    return {false, std::nullopt, outside.witness};
}

bool meet_leq_zero(const std::vector<Vector>& vectors) {
    return hull_contains_zero(vectors).contains_zero;
}

namespace {

// A point where f exceeds g, from the first block of f - g whose meet is
// somewhere positive; nullopt means f <= g everywhere.
std::optional<Vector> first_violation(const NormalForm& f, const NormalForm& g) {
    const NormalForm difference = nf_add(f, nf_scale(Rational(-1), g));
    for (const NormalForm::Block& block : difference.blocks()) {
        HullResult verdict = hull_contains_zero(block);
        if (!verdict.contains_zero) {
            return std::move(verdict.separator);
        }
    }
    return std::nullopt;
}

}  // namespace

bool nf_leq(const NormalForm& f, const NormalForm& g) {
    return !first_violation(f, g).has_value();
}

bool nf_eq(const NormalForm& f, const NormalForm& g) {
    return nf_leq(f, g) && nf_leq(g, f);
}

bool nf_is_zero(const NormalForm& f) {
    return nf_eq(f, NormalForm::zero(f.dim()));
}

std::optional<Integer> archimedean_witness(const NormalForm& f, const NormalForm& g) {
    if (nf_leq(f, NormalForm::zero(f.dim()))) {
        return std::nullopt;
    }
    const auto holds = [&](const Integer& n) {
        return nf_leq(nf_scale(Rational(n), f), g);
    };
    if (!holds(1)) return Integer(1);
    Integer low(1);
    Integer high(2);
    while (holds(high)) {
        low = high;
        high *= 2;
    }
    // holds(low), not holds(high); close the gap to the least failure.
    while (high - low > 1) {
        const Integer mid = (low + high) / 2;
        if (holds(mid)) {
            low = mid;
        } else {
            high = mid;
        }
    }
    return high;
}

std::optional<Vector> separating_witness(const NormalForm& f, const NormalForm& g) {
    std::optional<Vector> point = first_violation(f, g);
    if (!point) point = first_violation(g, f);
    if (!point) return std::nullopt;
    return Rational(1) / point->inf_norm() * *point;
}

}  // namespace freevl
