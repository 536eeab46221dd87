#include "freevl/freeset.hpp"

#include <algorithm>
#include <utility>

#include "freevl/errors.hpp"
#include "freevl/parse.hpp"

namespace freevl {

FinSupportFn::FinSupportFn(std::map<std::string, Rational> values)
    : values_(std::move(values)) {
    for (auto it = values_.begin(); it != values_.end();) {
        if (it->second == 0) {
            it = values_.erase(it);
        } else {
            ++it;
        }
    }
}

Rational FinSupportFn::at(const std::string& label) const {
    const auto it = values_.find(label);
    return it == values_.end() ? Rational(0) : it->second;
}

FinSupportFn operator+(const FinSupportFn& a, const FinSupportFn& b) {
    std::map<std::string, Rational> values = a.support();
    for (const auto& [label, value] : b.support()) {
        values[label] += value;
    }
    return FinSupportFn(std::move(values));
}

FinSupportFn operator-(const FinSupportFn& a, const FinSupportFn& b) {
    return a + Rational(-1) * b;
}

FinSupportFn operator-(const FinSupportFn& a) { return Rational(-1) * a; }

FinSupportFn operator*(const Rational& scalar, const FinSupportFn& f) {
    std::map<std::string, Rational> values;
    for (const auto& [label, value] : f.support()) {
        values.emplace(label, scalar * value);
    }
    return FinSupportFn(std::move(values));
}

FinSupportFn delta(const std::string& label) {
    return FinSupportFn({{label, Rational(1)}});
}

Rational pairing(const FinSupportFn& f, const FinSupportFn& g) {
    Rational sum(0);
    for (const auto& [label, value] : f.support()) {
        sum += value * g.at(label);
    }
    return sum;
}

std::vector<std::string> canonical_labels(std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

Vector delta_coordinates(const FinSupportFn& f, const std::vector<std::string>& labels) {
    const std::vector<std::string> order = canonical_labels(labels);
    std::vector<Rational> coords(order.size(), Rational(0));
    for (const auto& [label, value] : f.support()) {
        const auto it = std::lower_bound(order.begin(), order.end(), label);
        if (it == order.end() || *it != label) {
            throw UnknownLabelError("unknown label '" + label + "'");
        }
        coords[static_cast<std::size_t>(it - order.begin())] = value;
    }
    return Vector(std::move(coords));
}

FinSupportFn from_coordinates(const Vector& x, const std::vector<std::string>& labels) {
    const std::vector<std::string> order = canonical_labels(labels);
    if (x.dim() != order.size()) {
        throw DimensionMismatchError("vector has dimension " + std::to_string(x.dim()) +
                                     ", label set has size " + std::to_string(order.size()));
    }
    std::map<std::string, Rational> values;
    for (std::size_t i = 0; i < order.size(); ++i) {
        values.emplace(order[i], x[i]);
    }
    return FinSupportFn(std::move(values));
}

NormalForm realize_over_set(const std::vector<std::string>& labels, std::string_view text) {
    return normalize(parse_set_expr(text, labels));
}

NormalForm realize_over_set(const std::vector<std::string>& labels, const Expr& e) {
    const std::size_t size = canonical_labels(labels).size();
    if (e.dim() != size) {
        throw DimensionMismatchError("expression dimension " + std::to_string(e.dim()) +
                                     " differs from label-set size " + std::to_string(size));
    }
    return normalize(e);
}

}  // namespace freevl
