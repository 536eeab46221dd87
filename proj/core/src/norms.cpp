#include "freevl/norms.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "freevl/errors.hpp"
#include "freevl/lp.hpp"
#include "freevl/order.hpp"

namespace freevl {

PolyhedralBall PolyhedralBall::from_vertices(std::vector<Vector> vertices) {
    if (vertices.empty()) {
        throw MalformedBallError("vertex list is empty");
    }
    const std::size_t dim = vertices[0].dim();
    for (const Vector& v : vertices) {
        if (v.dim() != dim) {
            throw MalformedBallError("vertices of mixed dimension");
        }
    }
    std::vector<Vector> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    for (const Vector& v : sorted) {
        if (!std::binary_search(sorted.begin(), sorted.end(), -v)) {
            throw MalformedBallError("vertex set is not symmetric: missing -" +
                                     to_string(v));
        }
    }
    PolyhedralBall ball;
    ball.has_vertices_ = true;
    ball.dim_ = dim;
    ball.vertices_ = std::move(vertices);
    return ball;
}

PolyhedralBall PolyhedralBall::from_halfspaces(std::vector<HalfSpace> faces) {
    if (faces.empty()) {
        throw MalformedBallError("half-space list is empty");
    }
    const std::size_t dim = faces[0].coeffs.dim();
    for (const HalfSpace& face : faces) {
        if (face.coeffs.dim() != dim) {
            throw MalformedBallError("half-spaces of mixed dimension");
        }
        if (face.rhs <= 0) {
            throw MalformedBallError("half-space rhs " + to_string(face.rhs) +
                                     " is not positive; 0 must be interior");
        }
    }
    PolyhedralBall ball;
    ball.has_vertices_ = false;
    ball.dim_ = dim;
    ball.faces_ = std::move(faces);
    return ball;
}

PolyhedralBall PolyhedralBall::unit_cube(std::size_t dim) {
    std::vector<HalfSpace> faces;
    faces.reserve(2 * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        faces.push_back({Vector::unit(dim, i), Rational(1)});
        faces.push_back({-Vector::unit(dim, i), Rational(1)});
    }
    return from_halfspaces(std::move(faces));
}

PolyhedralBall PolyhedralBall::cross_polytope(std::size_t dim) {
    std::vector<Vector> vertices;
    vertices.reserve(2 * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        vertices.push_back(Vector::unit(dim, i));
        vertices.push_back(-Vector::unit(dim, i));
    }
    return from_vertices(std::move(vertices));
}

std::string ball_to_json(const PolyhedralBall& ball) {
    nlohmann::json doc;
    const auto vector_to_json = [](const Vector& v) {
        nlohmann::json out = nlohmann::json::array();
        for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(to_string(v[i]));
        return out;
    };
    if (ball.has_vertices()) {
        nlohmann::json vrep = nlohmann::json::array();
        for (const Vector& v : ball.vertices()) vrep.push_back(vector_to_json(v));
        doc["vrep"] = std::move(vrep);
    } else {
        nlohmann::json hrep = nlohmann::json::array();
        for (const HalfSpace& face : ball.halfspaces()) {
            nlohmann::json jface;
            jface["coeffs"] = vector_to_json(face.coeffs);
            jface["rhs"] = to_string(face.rhs);
            hrep.push_back(std::move(jface));
        }
        doc["hrep"] = std::move(hrep);
    }
    return doc.dump();
}

namespace {

Vector vector_from_json(const nlohmann::json& jvec) {
    if (!jvec.is_array()) {
        throw Error("invalid ball JSON: vector is not an array");
    }
    std::vector<Rational> coords;
    coords.reserve(jvec.size());
    for (const nlohmann::json& jcoord : jvec) {
        if (!jcoord.is_string()) {
            throw Error("invalid ball JSON: coordinate is not a string");
        }
        coords.push_back(rational_from_string(jcoord.get<std::string>()));
    }
    return Vector(std::move(coords));
}

}  // namespace

PolyhedralBall ball_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid ball JSON: ") + e.what());
    }
    if (doc.is_object() && doc.contains("vrep") && doc["vrep"].is_array()) {
        std::vector<Vector> vertices;
        for (const nlohmann::json& jvec : doc["vrep"]) {
            vertices.push_back(vector_from_json(jvec));
        }
        return PolyhedralBall::from_vertices(std::move(vertices));
    }
    if (doc.is_object() && doc.contains("hrep") && doc["hrep"].is_array()) {
        std::vector<HalfSpace> faces;
        for (const nlohmann::json& jface : doc["hrep"]) {
            if (!jface.is_object() || !jface.contains("coeffs") || !jface.contains("rhs") ||
                !jface["rhs"].is_string()) {
                throw Error("invalid ball JSON: malformed half-space entry");
            }
            faces.push_back({vector_from_json(jface["coeffs"]),
                             rational_from_string(jface["rhs"].get<std::string>())});
        }
        return PolyhedralBall::from_halfspaces(std::move(faces));
    }
    throw Error("invalid ball JSON: expected {\"vrep\": ...} or {\"hrep\": ...}");
}

namespace {

struct BlockSup {
    Rational value;
    Vector point;
};

// One LP per block: the block's meet is concave, so its sup over the ball
// is max t subject to t <= <v, x> for each v, x in the ball.
BlockSup block_sup(const NormalForm::Block& block, const PolyhedralBall& ball) {
    LinearProgram lp;
    if (ball.has_vertices()) {
        // x = sum_k mu_k u_k over convex weights mu; variables are the
        // weights plus t (last index).
        const std::vector<Vector>& verts = ball.vertices();
        const std::size_t k = verts.size();
        lp.num_vars = k + 1;
        for (const Vector& v : block) {
            std::vector<Rational> row(k + 1, Rational(0));
            for (std::size_t j = 0; j < k; ++j) row[j] = -dot(v, verts[j]);
            row[k] = 1;
            lp.constraints.push_back({Vector(std::move(row)), Relation::LessEq, Rational(0)});
        }
        std::vector<Rational> convex(k + 1, Rational(1));
        convex[k] = 0;
        lp.constraints.push_back({Vector(std::move(convex)), Relation::Eq, Rational(1)});
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<Rational> row(k + 1, Rational(0));
            row[j] = 1;
            lp.constraints.push_back({Vector(std::move(row)), Relation::GreaterEq, Rational(0)});
        }
        std::vector<Rational> objective(k + 1, Rational(0));
        objective[k] = 1;
        lp.objective = Objective{Direction::Maximize, Vector(std::move(objective))};

        const LpOutcome outcome = lp_solve(lp);
        if (outcome.status != LpStatus::Optimal) {
            throw std::logic_error("vertex-ball sup LP must be bounded and feasible");
        }
        Vector point = Vector::zero(ball.dim());
        for (std::size_t j = 0; j < k; ++j) {
            point = point + (*outcome.witness)[j] * verts[j];
        }
        return {*outcome.value, std::move(point)};
    }

    // Variables are the point x plus t (last index).
    const std::size_t n = ball.dim();
    lp.num_vars = n + 1;
    for (const Vector& v : block) {
        std::vector<Rational> row(n + 1);
        for (std::size_t j = 0; j < n; ++j) row[j] = -v[j];
        row[n] = 1;
        lp.constraints.push_back({Vector(std::move(row)), Relation::LessEq, Rational(0)});
    }
    for (const HalfSpace& face : ball.halfspaces()) {
        std::vector<Rational> row(n + 1, Rational(0));
        for (std::size_t j = 0; j < n; ++j) row[j] = face.coeffs[j];
        lp.constraints.push_back({Vector(std::move(row)), Relation::LessEq, face.rhs});
    }
    std::vector<Rational> objective(n + 1, Rational(0));
    objective[n] = 1;
    lp.objective = Objective{Direction::Maximize, Vector(std::move(objective))};

    const LpOutcome outcome = lp_solve(lp);
    if (outcome.status == LpStatus::Unbounded) {
        throw MalformedBallError("half-space system does not bound the sup");
    }
    if (outcome.status != LpStatus::Optimal) {
        throw std::logic_error("half-space sup LP cannot be infeasible");
    }
    std::vector<Rational> coords;
    coords.reserve(n);
    for (std::size_t j = 0; j < n; ++j) coords.push_back((*outcome.witness)[j]);
    return {*outcome.value, Vector(std::move(coords))};
}

// Best block of one side, preferring larger value, then earlier block, so
// the answer is the same at every jobs setting.
BlockSup side_sup(const NormalForm& side, const PolyhedralBall& ball, std::size_t jobs) {
    const std::vector<NormalForm::Block>& blocks = side.blocks();
    std::vector<BlockSup> per_block(blocks.size());
    if (jobs <= 1 || blocks.size() <= 1) {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            per_block[i] = block_sup(blocks[i], ball);
        }
    } else {
        const std::size_t workers = std::min(jobs, blocks.size());
        std::vector<std::future<void>> futures;
        futures.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            futures.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < blocks.size(); i += workers) {
                    per_block[i] = block_sup(blocks[i], ball);
                }
            }));
        }
        for (std::future<void>& f : futures) f.get();
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < per_block.size(); ++i) {
        if (per_block[i].value > per_block[best].value) best = i;
    }
    return std::move(per_block[best]);
}

}  // namespace

SupWitness sup_on_ball_witness(const NormalForm& f, const PolyhedralBall& ball,
                               std::size_t jobs) {
    if (f.dim() != ball.dim()) {
        throw DimensionMismatchError("function dimension " + std::to_string(f.dim()) +
                                     " differs from ball dimension " +
                                     std::to_string(ball.dim()));
    }
    BlockSup best = side_sup(f, ball, jobs);
    BlockSup negative = side_sup(nf_scale(Rational(-1), f), ball, jobs);
    if (negative.value > best.value) best = std::move(negative);
    return {std::move(best.value), std::move(best.point)};
}

Rational sup_on_ball(const NormalForm& f, const PolyhedralBall& ball, std::size_t jobs) {
    return sup_on_ball_witness(f, ball, jobs).value;
}

bool norm_faithful_check(const NormalForm& f, const PolyhedralBall& ball) {
    return (sup_on_ball(f, ball) == 0) == nf_is_zero(f);
}

}  // namespace freevl
