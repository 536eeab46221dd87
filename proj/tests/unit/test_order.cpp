#include <doctest.h>

#include "freevl/errors.hpp"
#include "freevl/fourier_motzkin.hpp"
#include "freevl/normal_form.hpp"
#include "freevl/order.hpp"
#include "freevl/parse.hpp"
#include "test_support.hpp"

using namespace freevl;
using freevl::testing::Rng;

namespace {

Vector vec(std::initializer_list<int> values) {
    std::vector<Rational> coords;
    for (int v : values) coords.emplace_back(v);
    return Vector(std::move(coords));
}

void check_hull_certificate(const std::vector<Vector>& vs, const HullResult& r) {
    if (r.contains_zero) {
        REQUIRE(r.weights.has_value());
        REQUIRE(r.weights->size() == vs.size());
        Rational total = 0;
        Vector combo = Vector::zero(vs.front().dim());
        for (std::size_t i = 0; i < vs.size(); ++i) {
            CHECK((*r.weights)[i] >= 0);
            total += (*r.weights)[i];
            combo = combo + (*r.weights)[i] * vs[i];
        }
        CHECK(total == 1);
        CHECK(combo.is_zero());
    } else {
        REQUIRE(r.separator.has_value());
        for (const Vector& v : vs) CHECK(dot(v, *r.separator) > 0);
    }
}

}  // namespace

TEST_SUITE("order") {

TEST_CASE("hull membership with certificates") {
    const HullResult mid = hull_contains_zero({vec({1, 0}), vec({-1, 0})});
    CHECK(mid.contains_zero);
    CHECK(*mid.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    const HullResult tri = hull_contains_zero({vec({1, 0}), vec({-1, 1}), vec({0, -1})});
    CHECK(tri.contains_zero);
    CHECK(*tri.weights ==
          std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)});

    const HullResult apart = hull_contains_zero({vec({1, 0}), vec({0, 1})});
    CHECK_FALSE(apart.contains_zero);
    check_hull_certificate({vec({1, 0}), vec({0, 1})}, apart);
}

TEST_CASE("hull certificates verify on random sets") {
    Rng rng(7001);
    for (int i = 0; i < 150; ++i) {
        const std::size_t dim = 1 + i % 3;
        const std::vector<Vector> vs = testing::random_vector_set(
            rng, dim, testing::random_long(rng, 1, 5));
        check_hull_certificate(vs, hull_contains_zero(vs));
    }
}

TEST_CASE("meet below zero") {
    CHECK(meet_leq_zero({vec({1, 0}), vec({-1, 0})}));
    CHECK_FALSE(meet_leq_zero({vec({1, 0}), vec({0, 1})}));
    CHECK(meet_leq_zero({Vector::zero(2)}));
}

TEST_CASE("meet_leq_zero negates the strict separation oracle") {
    Rng rng(7002);
    for (int i = 0; i < 200; ++i) {
        const std::size_t dim = 1 + i % 4;
        const std::vector<Vector> vs = testing::random_vector_set(
            rng, dim, testing::random_long(rng, 1, 6));
        CHECK(meet_leq_zero(vs) == !fm_decide_strict(vs));
    }
}

TEST_CASE("order on hand normal forms") {
    const NormalForm a(2, {{vec({1, 0})}});
    const NormalForm b(2, {{vec({0, 1})}});
    const NormalForm meet_ab(2, {{vec({1, 0}), vec({0, 1})}});
    const NormalForm join_ab(2, {{vec({1, 0})}, {vec({0, 1})}});

    CHECK(nf_leq(meet_ab, a));
    CHECK(nf_leq(meet_ab, b));
    CHECK_FALSE(nf_leq(join_ab, a));
    CHECK(nf_leq(a, join_ab));

    // everything sits below its own absolute value
    const NormalForm abs_a = nf_join(a, nf_scale(Rational(-1), a));
    CHECK(nf_leq(a, abs_a));
    CHECK(nf_leq(nf_scale(Rational(-1), a), abs_a));
}

TEST_CASE("equality and the zero test") {
    const NormalForm a(2, {{vec({1, 0})}});
    const NormalForm b(2, {{vec({0, 1})}});
    CHECK(nf_eq(nf_add(nf_join(a, b), nf_meet(a, b)), nf_add(a, b)));
    CHECK_FALSE(nf_eq(a, b));

    CHECK(nf_is_zero(NormalForm::zero(2)));
    CHECK_FALSE(nf_is_zero(a));
    CHECK_FALSE(nf_is_zero(nf_join(a, nf_scale(Rational(-1), a))));
    CHECK(nf_is_zero(nf_add(a, nf_scale(Rational(-1), a))));
}

TEST_CASE("round trips through text preserve equality") {
    Rng rng(7003);
    for (int i = 0; i < 40; ++i) {
        const Expr e = testing::random_expr(rng, 2, 8);
        const NormalForm nf = normalize(e);
        CHECK(nf_eq(nf, normalize(parse_expr(format_expr(e), 2))));
    }
}

TEST_CASE("rewritten expressions stay equal, perturbed ones do not") {
    Rng rng(7004);
    int unequal_seen = 0;
    int checked = 0;
    while (checked < 30) {
        const Expr e = testing::random_expr(rng, 2, 7);
        const Expr r = testing::rewrite_equivalent(rng, e, 2);
        const NormalForm f = normalize(e);
        const NormalForm g = normalize(r);
        if (testing::eq_cost(f, g) > 50000) continue;
        ++checked;
        CHECK(nf_eq(f, g));

        const Expr shifted = Expr::add(e, Expr::gen(vec({0, 1})));
        if (!nf_eq(f, normalize(shifted))) ++unequal_seen;
    }
    CHECK(unequal_seen == 30);
}

TEST_CASE("archimedean witnesses") {
    const NormalForm e1(2, {{vec({1, 0})}});
    CHECK(archimedean_witness(e1, e1) == Integer(2));

    const NormalForm abs_e1 = nf_join(e1, nf_scale(Rational(-1), e1));
    CHECK(archimedean_witness(abs_e1, nf_scale(Rational(5), abs_e1)) == Integer(6));

    // f <= 0: no multiple of f ever escapes, by convention none is returned.
    // -|e1| is the meet of e1 and -e1; -e1 alone is not its own negative part
    const NormalForm neg_abs(2, {{vec({1, 0}), vec({-1, 0})}});
    CHECK_FALSE(archimedean_witness(neg_abs, e1).has_value());
    CHECK_FALSE(archimedean_witness(NormalForm::zero(2), e1).has_value());

    // a witness far beyond the doubling start
    CHECK(archimedean_witness(abs_e1, nf_scale(Rational(1000), abs_e1)) == Integer(1001));
}

TEST_CASE("archimedean witness is the exact boundary") {
    Rng rng(7005);
    int found = 0;
    for (int i = 0; i < 25; ++i) {
        const NormalForm f = testing::random_nf(rng, 2, 3, 2);
        const NormalForm g = testing::random_nf(rng, 2, 3, 2);
        const auto n = archimedean_witness(f, g);
        if (!n) {
            CHECK(nf_leq(f, NormalForm::zero(2)));
            continue;
        }
        ++found;
        CHECK(*n >= 1);
        CHECK_FALSE(nf_leq(nf_scale(Rational(*n), f), g));
        if (*n > 1) CHECK(nf_leq(nf_scale(Rational(Integer(*n - 1)), f), g));
    }
    CHECK(found >= 10);
}

TEST_CASE("separating witnesses") {
    const NormalForm e1(2, {{vec({1, 0})}});
    const NormalForm zero = NormalForm::zero(2);
    const auto w = separating_witness(e1, zero);
    REQUIRE(w.has_value());
    CHECK(*w == vec({1, 0}));

    CHECK_FALSE(separating_witness(e1, e1).has_value());

    const NormalForm join_ab(2, {{vec({1, 0})}, {vec({0, 1})}});
    const auto w2 = separating_witness(join_ab, e1);
    REQUIRE(w2.has_value());
    CHECK(nf_eval(join_ab, *w2) != nf_eval(e1, *w2));
    CHECK(w2->inf_norm() <= 1);
}

TEST_CASE("separating witnesses verify and are deterministic") {
    Rng rng(7006);
    int separated = 0;
    for (int i = 0; i < 40; ++i) {
        const NormalForm f = testing::random_nf(rng, 2, 3, 2);
        const NormalForm g = testing::random_nf(rng, 2, 3, 2);
        const auto w = separating_witness(f, g);
        CHECK(w.has_value() == !nf_eq(f, g));
        if (!w) continue;
        ++separated;
        CHECK(nf_eval(f, *w) != nf_eval(g, *w));
        CHECK(w->inf_norm() <= 1);
        CHECK(separating_witness(f, g) == w);
    }
    CHECK(separated >= 30);
}

TEST_CASE("leq soundness against evaluation") {
    Rng rng(7007);
    int true_seen = 0;
    for (int i = 0; i < 60; ++i) {
        const NormalForm f = testing::random_nf(rng, 2, 3, 2);
        const NormalForm g = testing::random_nf(rng, 2, 3, 2);
        if (nf_leq(f, g)) {
            ++true_seen;
            for (int k = 0; k < 100; ++k) {
                const Vector x = testing::random_point(rng, 2);
                CHECK(nf_eval(f, x) <= nf_eval(g, x));
            }
        } else {
            const auto w = separating_witness(f, g);
            // one direction fails, so the functions differ somewhere
            REQUIRE(w.has_value());
        }
        // force the sample to contain comparable pairs
        CHECK(nf_leq(nf_meet(f, g), g));
        CHECK(nf_leq(f, nf_join(f, g)));
    }
    INFO("comparable pairs in sample: ", true_seen);
}

TEST_CASE("partial order laws") {
    Rng rng(7008);
    for (int i = 0; i < 25; ++i) {
        const NormalForm f = testing::random_nf(rng, 2, 3, 2);
        const NormalForm g = testing::random_nf(rng, 2, 3, 2);
        const NormalForm h = testing::random_nf(rng, 2, 3, 2);
        CHECK(nf_leq(f, f));
        if (nf_leq(f, g) && nf_leq(g, h)) CHECK(nf_leq(f, h));
        if (nf_leq(f, g) && nf_leq(g, f)) CHECK(nf_eq(f, g));
        // meet and join are the lattice glb/lub
        const NormalForm m = nf_meet(f, g);
        CHECK(nf_leq(m, f));
        CHECK(nf_leq(m, g));
        if (nf_leq(h, f) && nf_leq(h, g)) CHECK(nf_leq(h, m));
    }
}

TEST_CASE("positive scaling preserves decisions") {
    Rng rng(7009);
    for (int i = 0; i < 25; ++i) {
        const NormalForm f = testing::random_nf(rng, 2, 3, 2);
        const NormalForm g = testing::random_nf(rng, 2, 3, 2);
        const Rational lambda = testing::random_positive_rational(rng);
        CHECK(nf_leq(f, g) ==
              nf_leq(nf_scale(lambda, f), nf_scale(lambda, g)));
    }
}

TEST_CASE("dimension mismatches throw") {
    const NormalForm f(2, {{vec({1, 0})}});
    const NormalForm g(1, {{vec({1})}});
    CHECK_THROWS_AS(nf_leq(f, g), DimensionMismatchError);
    CHECK_THROWS_AS(nf_eq(f, g), DimensionMismatchError);
    CHECK_THROWS_AS(archimedean_witness(f, g), DimensionMismatchError);
    CHECK_THROWS_AS(separating_witness(f, g), DimensionMismatchError);
}

}  // TEST_SUITE
