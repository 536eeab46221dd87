#ifndef FREEVL_LP_HPP
#define FREEVL_LP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "freevl/rational.hpp"
#include "freevl/vector.hpp"

namespace freevl {

enum class Relation { LessEq, Eq, GreaterEq, Less, Greater };

enum class Direction { Maximize, Minimize };

struct Constraint {
    Vector coeffs;
    Relation relation;
    Rational rhs;
};

struct Objective {
    Direction direction;
    Vector coeffs;
};

/// Variables are free (unrestricted in sign); nonnegativity, where wanted,
/// is expressed as ordinary constraints. Strict relations are accepted by
/// the type for the elimination oracle's benefit but rejected by lp_solve.
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<Constraint> constraints;
    std::optional<Objective> objective;
};

enum class LpStatus { Feasible, Infeasible, Optimal, Unbounded };

/// Every populated field is an exact certificate: witness satisfies all
/// constraints, value equals the objective at witness, and witness + t*ray
/// stays feasible for all t >= 0 while improving the objective.
struct LpOutcome {
    LpStatus status;
    std::optional<Vector> witness;
    std::optional<Rational> value;
    std::optional<Vector> ray;
};

/// Two-phase primal simplex with exact pivots and Bland's rule, so it
/// terminates on every input and is deterministic. Free variables are split
/// into differences of nonnegatives internally. Without an objective the
/// answer is Feasible/Infeasible; with one, Optimal/Unbounded/Infeasible.
/// Throws std::invalid_argument on strict relations or a coefficient row
/// whose length differs from num_vars.
LpOutcome lp_solve(const LinearProgram& p);

/// Exact check, strict relations included.
bool constraint_satisfied(const Constraint& c, const Vector& x);

}  // namespace freevl

#endif  // FREEVL_LP_HPP
