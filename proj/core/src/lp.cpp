#include "freevl/lp.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace freevl {

namespace {

// Dictionary-form tableau over exact rationals: rows hold the current
// B^-1 A, rhs holds B^-1 b (kept nonnegative), basis[i] names the column
// basic in row i. Reduced costs are recomputed from the cost vector on
// every iteration; at this problem scale clarity beats the update trick.
struct Tableau {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<std::size_t> basis;
    std::size_t cols = 0;

    void pivot(std::size_t r, std::size_t c) {
        const Rational inv = Rational(1) / rows[r][c];
        for (Rational& entry : rows[r]) entry *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational factor = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                rows[i][j] -= factor * rows[r][j];
            }
            rhs[i] -= factor * rhs[r];
        }
        basis[r] = c;
    }

    std::vector<Rational> reduced_costs(const std::vector<Rational>& cost) const {
        std::vector<Rational> rc = cost;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational& cb = cost[basis[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                rc[j] -= cb * rows[i][j];
            }
        }
        return rc;
    }

    Rational basic_value(std::size_t col) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (basis[i] == col) return rhs[i];
        }
        return Rational(0);
    }
};

struct SimplexRun {
    bool unbounded = false;
    std::size_t entering = 0;  // set when unbounded
};

// Minimizes cost over the tableau with Bland's rule: entering column is the
// smallest eligible index with negative reduced cost, leaving row breaks
// ratio ties by the smallest basic column. That rule forbids cycling, so
// the loop terminates on every input.
SimplexRun run_simplex(Tableau& t, const std::vector<Rational>& cost,
                       std::size_t eligible_cols) {
    for (;;) {
        const std::vector<Rational> rc = t.reduced_costs(cost);
        std::size_t entering = eligible_cols;
        for (std::size_t j = 0; j < eligible_cols; ++j) {
            if (rc[j] < 0) {
                entering = j;
                break;
            }
        }
        if (entering == eligible_cols) return {};

        bool found = false;
        std::size_t leaving = 0;
        Rational best_ratio;
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            if (t.rows[i][entering] <= 0) continue;
            const Rational ratio = t.rhs[i] / t.rows[i][entering];
            if (!found || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[i] < t.basis[leaving])) {
                found = true;
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (!found) return {true, entering};
        t.pivot(leaving, entering);
    }
}

}  // namespace

LpOutcome lp_solve(const LinearProgram& p) {
    for (const Constraint& c : p.constraints) {
        if (c.relation == Relation::Less || c.relation == Relation::Greater) {
            throw std::invalid_argument("lp_solve does not accept strict relations");
        }
        if (c.coeffs.dim() != p.num_vars) {
            throw std::invalid_argument("constraint coefficient row has wrong length");
        }
    }
    if (p.objective && p.objective->coeffs.dim() != p.num_vars) {
        throw std::invalid_argument("objective coefficient row has wrong length");
    }

    const std::size_t n = p.num_vars;
    const std::size_t m = p.constraints.size();

    // Free variables split as x_j = col(2j) - col(2j+1); one slack or
    // surplus column per inequality; one artificial per >= or = row.
    std::size_t num_aux = 0;
    std::size_t num_art = 0;
    for (const Constraint& c : p.constraints) {
        Relation rel = c.relation;
        if (c.rhs < 0) {
            rel = rel == Relation::LessEq   ? Relation::GreaterEq
                  : rel == Relation::GreaterEq ? Relation::LessEq
                                               : Relation::Eq;
        }
        if (rel != Relation::Eq) ++num_aux;
        if (rel != Relation::LessEq) ++num_art;
    }
    const std::size_t struct_cols = 2 * n;
    const std::size_t art_start = struct_cols + num_aux;
    const std::size_t total_cols = art_start + num_art;

    Tableau t;
    t.cols = total_cols;
    t.rows.assign(m, std::vector<Rational>(total_cols, Rational(0)));
    t.rhs.assign(m, Rational(0));
    t.basis.assign(m, 0);

    std::size_t next_aux = struct_cols;
    std::size_t next_art = art_start;
    for (std::size_t i = 0; i < m; ++i) {
        const Constraint& c = p.constraints[i];
        const bool flip = c.rhs < 0;
        Relation rel = c.relation;
        if (flip) {
            rel = rel == Relation::LessEq   ? Relation::GreaterEq
                  : rel == Relation::GreaterEq ? Relation::LessEq
                                               : Relation::Eq;
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Rational a = flip ? -c.coeffs[j] : c.coeffs[j];
            t.rows[i][2 * j] = a;
            t.rows[i][2 * j + 1] = -a;
        }
        t.rhs[i] = flip ? -c.rhs : c.rhs;
        if (rel == Relation::LessEq) {
            t.rows[i][next_aux] = 1;
            t.basis[i] = next_aux++;
        } else {
            if (rel == Relation::GreaterEq) {
                t.rows[i][next_aux++] = -1;
            }
            t.rows[i][next_art] = 1;
            t.basis[i] = next_art++;
        }
    }

    // Phase 1: minimize the artificial sum; a positive optimum certifies
    // infeasibility.
    if (num_art > 0) {
        std::vector<Rational> cost(total_cols, Rational(0));
        for (std::size_t j = art_start; j < total_cols; ++j) cost[j] = 1;
        run_simplex(t, cost, total_cols);
        Rational art_sum(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] >= art_start) art_sum += t.rhs[i];
        }
        if (art_sum != 0) {
            return {LpStatus::Infeasible, std::nullopt, std::nullopt, std::nullopt};
        }
        // Drive leftover zero-valued artificials out of the basis; a row
        // with no usable pivot is redundant and is dropped.
        for (std::size_t i = t.rows.size(); i-- > 0;) {
            if (t.basis[i] < art_start) continue;
            std::size_t col = art_start;
            for (std::size_t j = 0; j < art_start; ++j) {
                if (t.rows[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col < art_start) {
                t.pivot(i, col);
            } else {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    const auto extract_point = [&]() {
        std::vector<Rational> coords(n, Rational(0));
        for (std::size_t j = 0; j < n; ++j) {
            coords[j] = t.basic_value(2 * j) - t.basic_value(2 * j + 1);
        }
        return Vector(std::move(coords));
    };

    if (!p.objective) {
        return {LpStatus::Feasible, extract_point(), std::nullopt, std::nullopt};
    }

    // Phase 2 minimizes the internal orientation of the objective; the
    // artificial columns are no longer eligible to enter.
    const bool maximize = p.objective->direction == Direction::Maximize;
    std::vector<Rational> cost(total_cols, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        const Rational cj = maximize ? -p.objective->coeffs[j] : p.objective->coeffs[j];
        cost[2 * j] = cj;
        cost[2 * j + 1] = -cj;
    }
    const SimplexRun run = run_simplex(t, cost, art_start);
    if (run.unbounded) {
        std::vector<Rational> full(total_cols, Rational(0));
        full[run.entering] = 1;
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            full[t.basis[i]] = -t.rows[i][run.entering];
        }
        std::vector<Rational> coords(n, Rational(0));
        for (std::size_t j = 0; j < n; ++j) {
            coords[j] = full[2 * j] - full[2 * j + 1];
        }
        return {LpStatus::Unbounded, std::nullopt, std::nullopt, Vector(std::move(coords))};
    }
    const Vector witness = extract_point();
    const Rational value = dot(p.objective->coeffs, witness);
    return {LpStatus::Optimal, witness, value, std::nullopt};
}

bool constraint_satisfied(const Constraint& c, const Vector& x) {
    const Rational lhs = dot(c.coeffs, x);
    switch (c.relation) {
        case Relation::LessEq: return lhs <= c.rhs;
        case Relation::Eq: return lhs == c.rhs;
        case Relation::GreaterEq: return lhs >= c.rhs;
        case Relation::Less: return lhs < c.rhs;
        case Relation::Greater: return lhs > c.rhs;
    }
    return false;
}

}  // namespace freevl
