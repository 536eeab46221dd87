#include "freevl/hom.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "freevl/errors.hpp"

namespace freevl {

TargetLattice parse_target(const std::string& tag) {
    if (tag == "scalars") return ScalarTarget{};
    const auto parse_size = [&](std::size_t prefix_len) {
        const std::string digits = tag.substr(prefix_len);
        if (digits.empty() ||
            !std::all_of(digits.begin(), digits.end(),
                         [](char c) { return c >= '0' && c <= '9'; })) {
            throw Error("malformed target tag '" + tag + "'");
        }
        const unsigned long value = std::stoul(digits);
        if (value == 0) {
            throw Error("target dimension must be positive in '" + tag + "'");
        }
        return static_cast<std::size_t>(value);
    };
    if (tag.rfind("coord:", 0) == 0) return CoordinateTarget{parse_size(6)};
    if (tag.rfind("free:", 0) == 0) return FreeTarget{parse_size(5)};
    throw Error("unknown target tag '" + tag + "' (expected scalars, coord:m, or free:n)");
}

std::string target_tag(const TargetLattice& target) {
    if (std::holds_alternative<ScalarTarget>(target)) return "scalars";
    if (const auto* coord = std::get_if<CoordinateTarget>(&target)) {
        return "coord:" + std::to_string(coord->dim);
    }
    return "free:" + std::to_string(std::get<FreeTarget>(target).dim);
}

std::string map_to_json(const LinearMapSpec& map) {
    nlohmann::json doc;
    nlohmann::json rows = nlohmann::json::array();
    for (const Vector& row : map.rows) {
        nlohmann::json jrow = nlohmann::json::array();
        for (std::size_t i = 0; i < row.dim(); ++i) jrow.push_back(to_string(row[i]));
        rows.push_back(std::move(jrow));
    }
    doc["rows"] = std::move(rows);
    if (!map.images.empty()) {
        nlohmann::json images = nlohmann::json::array();
        for (const NormalForm& nf : map.images) {
            images.push_back(nlohmann::json::parse(nf_to_json(nf)));
        }
        doc["images"] = std::move(images);
    }
    return doc.dump();
}

LinearMapSpec map_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid LinearMapSpec JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
        throw Error("invalid LinearMapSpec JSON: expected {\"rows\": [...]}");
    }
    LinearMapSpec map;
    for (const nlohmann::json& jrow : doc["rows"]) {
        if (!jrow.is_array()) {
            throw Error("invalid LinearMapSpec JSON: row is not an array");
        }
        std::vector<Rational> coords;
        coords.reserve(jrow.size());
        for (const nlohmann::json& jcoord : jrow) {
            if (!jcoord.is_string()) {
                throw Error("invalid LinearMapSpec JSON: coordinate is not a string");
            }
            coords.push_back(rational_from_string(jcoord.get<std::string>()));
        }
        map.rows.push_back(Vector(std::move(coords)));
    }
    if (doc.contains("images")) {
        if (!doc["images"].is_array()) {
            throw Error("invalid LinearMapSpec JSON: images is not an array");
        }
        for (const nlohmann::json& jimage : doc["images"]) {
            map.images.push_back(nf_from_json(jimage.dump()));
        }
    }
    return map;
}

NormalForm psi_embed(const Vector& v) {
    return NormalForm(v.dim(), {{v}});
}

Rational factor_to_scalar(const Vector& functional, const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::Gen:
            return dot(functional, e.generator());
        case Expr::Kind::Add:
            return factor_to_scalar(functional, e.lhs()) +
                   factor_to_scalar(functional, e.rhs());
        case Expr::Kind::Scale:
            return e.factor() * factor_to_scalar(functional, e.operand());
        case Expr::Kind::Join:
            return std::max(factor_to_scalar(functional, e.lhs()),
                            factor_to_scalar(functional, e.rhs()));
        case Expr::Kind::Meet:
            return std::min(factor_to_scalar(functional, e.lhs()),
                            factor_to_scalar(functional, e.rhs()));
    }
    throw std::logic_error("unreachable expression kind");
}

namespace {

Vector apply_rows(const std::vector<Vector>& rows, const Vector& v) {
    std::vector<Rational> out;
    out.reserve(rows.size());
    for (const Vector& row : rows) out.push_back(dot(row, v));
    return Vector(std::move(out));
}

Vector pointwise(const Vector& a, const Vector& b, bool take_max) {
    std::vector<Rational> out;
    out.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        out.push_back(take_max ? std::max(a[i], b[i]) : std::min(a[i], b[i]));
    }
    return Vector(std::move(out));
}

}  // namespace

Vector factor_to_coords(const std::vector<Vector>& rows, const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::Gen:
            return apply_rows(rows, e.generator());
        case Expr::Kind::Add:
            return factor_to_coords(rows, e.lhs()) + factor_to_coords(rows, e.rhs());
        case Expr::Kind::Scale:
            return e.factor() * factor_to_coords(rows, e.operand());
        case Expr::Kind::Join:
            return pointwise(factor_to_coords(rows, e.lhs()),
                             factor_to_coords(rows, e.rhs()), true);
        case Expr::Kind::Meet:
            return pointwise(factor_to_coords(rows, e.lhs()),
                             factor_to_coords(rows, e.rhs()), false);
    }
    throw std::logic_error("unreachable expression kind");
}

NormalForm factor_to_free(const std::vector<NormalForm>& images, const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::Gen: {
            const Vector& v = e.generator();
            if (images.size() != v.dim()) {
                throw DimensionMismatchError(
                    "map provides " + std::to_string(images.size()) +
                    " images for source dimension " + std::to_string(v.dim()));
            }
            NormalForm sum = NormalForm::zero(images.empty() ? 0 : images[0].dim());
            for (std::size_t j = 0; j < v.dim(); ++j) {
                sum = nf_add(sum, nf_scale(v[j], images[j]));
            }
            return sum;
        }
        case Expr::Kind::Add:
            return nf_add(factor_to_free(images, e.lhs()), factor_to_free(images, e.rhs()));
        case Expr::Kind::Scale:
            return nf_scale(e.factor(), factor_to_free(images, e.operand()));
        case Expr::Kind::Join:
            return nf_join(factor_to_free(images, e.lhs()), factor_to_free(images, e.rhs()));
        case Expr::Kind::Meet:
            return nf_meet(factor_to_free(images, e.lhs()), factor_to_free(images, e.rhs()));
    }
    throw std::logic_error("unreachable expression kind");
}

FactorValue factor_map(const LinearMapSpec& map, const TargetLattice& target, const Expr& e) {
    if (std::holds_alternative<ScalarTarget>(target)) {
        if (map.rows.size() != 1) {
            throw DimensionMismatchError("scalar target needs exactly one row");
        }
        if (map.rows[0].dim() != e.dim()) {
            throw DimensionMismatchError("functional length differs from source dimension");
        }
        return factor_to_scalar(map.rows[0], e);
    }
    if (const auto* coord = std::get_if<CoordinateTarget>(&target)) {
        if (map.rows.size() != coord->dim) {
            throw DimensionMismatchError("row count differs from target dimension");
        }
        for (const Vector& row : map.rows) {
            if (row.dim() != e.dim()) {
                throw DimensionMismatchError("row length differs from source dimension");
            }
        }
        return factor_to_coords(map.rows, e);
    }
    const auto& free = std::get<FreeTarget>(target);
    if (map.images.size() != e.dim()) {
        throw DimensionMismatchError("image count differs from source dimension");
    }
    for (const NormalForm& image : map.images) {
        if (image.dim() != free.dim) {
            throw DimensionMismatchError("image dimension differs from target dimension");
        }
    }
    return factor_to_free(map.images, e);
}

RestrictedFunction::RestrictedFunction(NormalForm f, std::vector<Vector> span)
    : f_(std::move(f)), span_(std::move(span)) {
    for (const Vector& v : span_) {
        if (v.dim() != f_.dim()) {
            throw DimensionMismatchError("span vector dimension differs from function's");
        }
    }
    if (rank(span_) < f_.dim()) {
        throw NotSeparatingError("span has rank " + std::to_string(rank(span_)) +
                                 " < " + std::to_string(f_.dim()) +
                                 "; it cannot separate points");
    }
}

Vector RestrictedFunction::point_at(const std::vector<Rational>& coeffs) const {
    if (coeffs.size() != span_.size()) {
        throw DimensionMismatchError("coefficient count differs from span size");
    }
    Vector point = Vector::zero(f_.dim());
    for (std::size_t i = 0; i < span_.size(); ++i) {
        point = point + coeffs[i] * span_[i];
    }
    return point;
}

Rational RestrictedFunction::eval_at(const std::vector<Rational>& coeffs) const {
    return nf_eval(f_, point_at(coeffs));
}

RestrictedFunction restrict_dual(NormalForm f, std::vector<Vector> span) {
    return RestrictedFunction(std::move(f), std::move(span));
}

NormalForm compose_free(std::size_t s_size, const Expr& e) {
    if (e.dim() != s_size) {
        throw DimensionMismatchError("expression dimension differs from set size");
    }
    std::vector<NormalForm> deltas;
    deltas.reserve(s_size);
    for (std::size_t j = 0; j < s_size; ++j) {
        deltas.push_back(psi_embed(Vector::unit(s_size, j)));
    }
    return factor_to_free(deltas, e);
}

}  // namespace freevl
