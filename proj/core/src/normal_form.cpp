#include "freevl/normal_form.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "freevl/errors.hpp"
#include "freevl/order.hpp"

namespace freevl {

namespace {

void canonicalize_block(NormalForm::Block& block) {
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
}

}  // namespace

NormalForm::NormalForm(std::size_t dim, std::vector<Block> blocks)
    : dim_(dim), blocks_(std::move(blocks)) {
    if (blocks_.empty()) {
        throw std::invalid_argument("NormalForm requires at least one block");
    }
    for (Block& block : blocks_) {
        if (block.empty()) {
            throw std::invalid_argument("NormalForm blocks must be nonempty");
        }
        for (const Vector& v : block) {
            if (v.dim() != dim_) {
                throw DimensionMismatchError(
                    "block vector has dimension " + std::to_string(v.dim()) +
                    ", expected " + std::to_string(dim_));
            }
        }
        canonicalize_block(block);
    }
    std::sort(blocks_.begin(), blocks_.end());
    blocks_.erase(std::unique(blocks_.begin(), blocks_.end()), blocks_.end());
}

NormalForm NormalForm::zero(std::size_t dim) {
    return NormalForm(dim, {{Vector::zero(dim)}});
}

std::size_t NormalForm::max_block_size() const {
    std::size_t best = 0;
    for (const Block& block : blocks_) best = std::max(best, block.size());
    return best;
}

NormalForm normalize(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::Gen:
            return NormalForm(e.dim(), {{e.generator()}});
        case Expr::Kind::Join:
            return nf_join(normalize(e.lhs()), normalize(e.rhs()));
        case Expr::Kind::Meet:
            return nf_meet(normalize(e.lhs()), normalize(e.rhs()));
        case Expr::Kind::Add:
            return nf_add(normalize(e.lhs()), normalize(e.rhs()));
        case Expr::Kind::Scale:
            return nf_scale(e.factor(), normalize(e.operand()));
    }
    throw std::logic_error("unreachable expression kind");
}

namespace {

void require_same_dim(const NormalForm& f, const NormalForm& g) {
    if (f.dim() != g.dim()) {
        throw DimensionMismatchError("normal forms have dimensions " +
                                     std::to_string(f.dim()) + " and " +
                                     std::to_string(g.dim()));
    }
}

}  // namespace

NormalForm nf_join(const NormalForm& f, const NormalForm& g) {
    require_same_dim(f, g);
    std::vector<NormalForm::Block> blocks = f.blocks();
    blocks.insert(blocks.end(), g.blocks().begin(), g.blocks().end());
    return NormalForm(f.dim(), std::move(blocks));
}

NormalForm nf_meet(const NormalForm& f, const NormalForm& g) {
    require_same_dim(f, g);
    std::vector<NormalForm::Block> blocks;
    blocks.reserve(f.block_count() * g.block_count());
    for (const NormalForm::Block& b : f.blocks()) {
        for (const NormalForm::Block& c : g.blocks()) {
            NormalForm::Block merged = b;
            merged.insert(merged.end(), c.begin(), c.end());
            blocks.push_back(std::move(merged));
        }
    }
    return NormalForm(f.dim(), std::move(blocks));
}

NormalForm nf_add(const NormalForm& f, const NormalForm& g) {
    require_same_dim(f, g);
    std::vector<NormalForm::Block> blocks;
    blocks.reserve(f.block_count() * g.block_count());
    for (const NormalForm::Block& b : f.blocks()) {
        for (const NormalForm::Block& c : g.blocks()) {
            NormalForm::Block sums;
            sums.reserve(b.size() * c.size());
            for (const Vector& u : b) {
                for (const Vector& w : c) {
                    sums.push_back(u + w);
                }
            }
            blocks.push_back(std::move(sums));
        }
    }
    return NormalForm(f.dim(), std::move(blocks));
}

NormalForm nf_scale(const Rational& factor, const NormalForm& f) {
    if (factor >= 0) {
        std::vector<NormalForm::Block> blocks;
        blocks.reserve(f.block_count());
        for (const NormalForm::Block& b : f.blocks()) {
            NormalForm::Block scaled;
            scaled.reserve(b.size());
            for (const Vector& v : b) scaled.push_back(factor * v);
            blocks.push_back(std::move(scaled));
        }
        return NormalForm(f.dim(), std::move(blocks));
    }
    // factor < 0 turns the join-of-meets into a meet-of-joins of the scaled
    // generators; redistribute by folding the per-block joins with nf_meet.
    std::optional<NormalForm> result;
    for (const NormalForm::Block& b : f.blocks()) {
        std::vector<NormalForm::Block> singletons;
        singletons.reserve(b.size());
        for (const Vector& v : b) singletons.push_back({factor * v});
        NormalForm block_join(f.dim(), std::move(singletons));
        result = result ? nf_meet(*result, block_join) : std::move(block_join);
    }
    return *result;
}

Rational nf_eval(const NormalForm& f, const Vector& x) {
    if (x.dim() != f.dim()) {
        throw DimensionMismatchError("point has dimension " + std::to_string(x.dim()) +
                                     ", expected " + std::to_string(f.dim()));
    }
    std::optional<Rational> best;
    for (const NormalForm::Block& block : f.blocks()) {
        std::optional<Rational> low;
        for (const Vector& v : block) {
            Rational value = dot(v, x);
            if (!low || value < *low) low = std::move(value);
        }
        if (!best || *low > *best) best = std::move(*low);
    }
    return *best;
}

NormalForm nf_prune(const NormalForm& f) {
    std::vector<NormalForm::Block> kept = f.blocks();
    std::size_t i = 0;
    while (kept.size() > 1 && i < kept.size()) {
        std::vector<NormalForm::Block> rest;
        rest.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (j != i) rest.push_back(kept[j]);
        }
        const NormalForm candidate(f.dim(), {kept[i]});
        if (nf_leq(candidate, NormalForm(f.dim(), std::move(rest)))) {
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    return NormalForm(f.dim(), std::move(kept));
}

std::string nf_to_json(const NormalForm& f) {
    nlohmann::json doc;
    doc["dim"] = f.dim();
    nlohmann::json blocks = nlohmann::json::array();
    for (const NormalForm::Block& block : f.blocks()) {
        nlohmann::json jblock = nlohmann::json::array();
        for (const Vector& v : block) {
            nlohmann::json jvec = nlohmann::json::array();
            for (std::size_t i = 0; i < v.dim(); ++i) {
                jvec.push_back(to_string(v[i]));
            }
            jblock.push_back(std::move(jvec));
        }
        blocks.push_back(std::move(jblock));
    }
    doc["blocks"] = std::move(blocks);
    return doc.dump();
}

NormalForm nf_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid NormalForm JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("blocks") ||
        !doc["dim"].is_number_unsigned() || !doc["blocks"].is_array()) {
        throw Error("invalid NormalForm JSON: expected {\"dim\": n, \"blocks\": [...]}");
    }
    const std::size_t dim = doc["dim"].get<std::size_t>();
    std::vector<NormalForm::Block> blocks;
    for (const nlohmann::json& jblock : doc["blocks"]) {
        if (!jblock.is_array()) {
            throw Error("invalid NormalForm JSON: block is not an array");
        }
        NormalForm::Block block;
        for (const nlohmann::json& jvec : jblock) {
            if (!jvec.is_array()) {
                throw Error("invalid NormalForm JSON: vector is not an array");
            }
            std::vector<Rational> coords;
            coords.reserve(jvec.size());
            for (const nlohmann::json& jcoord : jvec) {
                if (!jcoord.is_string()) {
                    throw Error("invalid NormalForm JSON: coordinate is not a string");
                }
                coords.push_back(rational_from_string(jcoord.get<std::string>()));
            }
            block.push_back(Vector(std::move(coords)));
        }
        blocks.push_back(std::move(block));
    }
    try {
        return NormalForm(dim, std::move(blocks));
    } catch (const std::invalid_argument& e) {
        throw Error(std::string("invalid NormalForm JSON: ") + e.what());
    }
}

}  // namespace freevl
