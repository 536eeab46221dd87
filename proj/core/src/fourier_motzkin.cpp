#include "freevl/fourier_motzkin.hpp"

#include <algorithm>
#include <vector>

#include "freevl/errors.hpp"
#include "freevl/rational.hpp"

namespace freevl {

namespace {

using Row = std::vector<Integer>;

// Scales a rational row to a primitive integer row with the same direction,
// so that equal half-spaces deduplicate and entries stay small.
Row primitive_row(const std::vector<Rational>& row) {
    Integer common_den(1);
    for (const Rational& c : row) {
        common_den = lcm(common_den, denominator(c));
    }
    Row out;
    out.reserve(row.size());
    Integer content(0);
    for (const Rational& c : row) {
        Integer entry = numerator(c) * (common_den / denominator(c));
        content = gcd(content, entry);
        out.push_back(std::move(entry));
    }
    if (content > 1) {
        for (Integer& entry : out) entry /= content;
    }
    return out;
}

Row combine(const Row& lower, const Row& upper, std::size_t keep) {
    // lower has a positive, upper a negative coefficient on the eliminated
    // variable; the combination below cancels it with positive multipliers,
    // preserving strictness.
    const Integer a = lower[keep];
    const Integer b = -upper[keep];
    std::vector<Rational> combined(keep);
    for (std::size_t j = 0; j < keep; ++j) {
        combined[j] = Rational(b * lower[j] + a * upper[j]);
    }
    return primitive_row(combined);
}

bool all_zero(const Row& row) {
    return std::all_of(row.begin(), row.end(), [](const Integer& c) { return c == 0; });
}

}  // namespace

bool fm_decide_strict(const std::vector<Vector>& vectors, std::size_t max_rows) {
    if (vectors.empty()) return true;
    const std::size_t dim = vectors[0].dim();
    for (const Vector& v : vectors) {
        if (v.dim() != dim) {
            throw DimensionMismatchError("vectors of mixed dimension");
        }
    }

    std::vector<Row> rows;
    rows.reserve(vectors.size());
    for (const Vector& v : vectors) {
        rows.push_back(primitive_row(v.coords()));
    }

    for (std::size_t remaining = dim; /* exits inside */; --remaining) {
        for (const Row& row : rows) {
            if (all_zero(row)) return false;
        }
        if (remaining == 0 || rows.empty()) {
            // Every surviving row would read 0 > 0; none do, so some
            // assignment to the dropped variables satisfies the system.
            return true;
        }

        const std::size_t var = remaining - 1;
        std::vector<Row> lowers, uppers, next;
        for (Row& row : rows) {
            if (row[var] > 0) {
                lowers.push_back(std::move(row));
            } else if (row[var] < 0) {
                uppers.push_back(std::move(row));
            } else {
                row.pop_back();
                next.push_back(std::move(row));
            }
        }
        // With bounds on one side only, the variable escapes to whichever
        // infinity those rows need; they impose nothing on the rest.
        if (!lowers.empty() && !uppers.empty()) {
            for (const Row& lo : lowers) {
                for (const Row& up : uppers) {
                    next.push_back(combine(lo, up, var));
                    if (next.size() > max_rows) {
                        throw ResourceLimitError(
                            "elimination exceeded " + std::to_string(max_rows) + " rows");
                    }
                }
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rows = std::move(next);
    }
}

}  // namespace freevl
