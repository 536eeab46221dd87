#ifndef FREEVL_NORMS_HPP
#define FREEVL_NORMS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "freevl/normal_form.hpp"
#include "freevl/rational.hpp"
#include "freevl/vector.hpp"

namespace freevl {

struct HalfSpace {
    Vector coeffs;
    Rational rhs;
};

/// A symmetric polyhedral neighborhood of 0, given either by its vertices
/// (the ball is their convex hull) or by half-spaces <a, x> <= b. Each
/// representation feeds the sup LP directly; neither is converted to the
/// other.
class PolyhedralBall {
public:
    /// Vertex list must be nonempty, of one dimension, and closed under
    /// negation; throws MalformedBallError otherwise.
    static PolyhedralBall from_vertices(std::vector<Vector> vertices);

    /// Every rhs must be positive (0 strictly inside); throws
    /// MalformedBallError otherwise. Boundedness is not checked here; an
    /// unbounded system surfaces as MalformedBallError in sup_on_ball.
    static PolyhedralBall from_halfspaces(std::vector<HalfSpace> faces);

    /// {x : |x_i| <= 1}, as half-spaces.
    static PolyhedralBall unit_cube(std::size_t dim);

    /// conv{±e_i}, as vertices.
    static PolyhedralBall cross_polytope(std::size_t dim);

    bool has_vertices() const { return has_vertices_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Vector>& vertices() const { return vertices_; }
    const std::vector<HalfSpace>& halfspaces() const { return faces_; }

private:
    PolyhedralBall() = default;

    bool has_vertices_ = false;
    std::size_t dim_ = 0;
    std::vector<Vector> vertices_;
    std::vector<HalfSpace> faces_;
};

/// {"vrep": [["p/q",...],...]} or {"hrep": [{"coeffs": [...], "rhs": "p/q"},...]}.
std::string ball_to_json(const PolyhedralBall& ball);
PolyhedralBall ball_from_json(const std::string& text);

/// sup over the ball of |f|, computed as max(sup f, sup -f); each block of
/// a side is one LP (its meet is concave, so the sup is a single program).
/// jobs > 1 runs the per-block LPs of a side concurrently; the result does
/// not depend on jobs. Throws MalformedBallError when a half-space ball
/// fails to bound the sup.
Rational sup_on_ball(const NormalForm& f, const PolyhedralBall& ball, std::size_t jobs = 1);

struct SupWitness {
    Rational value;
    Vector point;
};

/// The same sup together with a point of the ball attaining it:
/// max(f(point), -f(point)) = value, checkable by nf_eval.
SupWitness sup_on_ball_witness(const NormalForm& f, const PolyhedralBall& ball,
                               std::size_t jobs = 1);

/// True iff the sup-seminorm vanishes exactly on the zero element, decided
/// by running both procedures and comparing: (sup == 0) == nf_is_zero(f).
bool norm_faithful_check(const NormalForm& f, const PolyhedralBall& ball);

}  // namespace freevl

#endif  // FREEVL_NORMS_HPP
