#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "freevl/freevl.hpp"

// Microbenchmarks for the hot paths: normalization, order decisions, the
// simplex core, variable elimination, and the sup LP. Inputs are fixed-seed
// so numbers are comparable across runs.
namespace {

using namespace freevl;
using Rng = std::mt19937_64;

Rational bench_rational(Rng& rng) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    return make_rational(Integer(num(rng)), Integer(den(rng)));
}

Vector bench_vector(Rng& rng, std::size_t dim) {
    std::vector<Rational> coords;
    coords.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) coords.push_back(bench_rational(rng));
    return Vector(std::move(coords));
}

Expr bench_expr(Rng& rng, std::size_t dim, std::size_t budget) {
    std::uniform_int_distribution<int> shape(0, 4);
    if (budget <= 1) return Expr::gen(bench_vector(rng, dim));
    switch (shape(rng)) {
        case 0:
            return Expr::gen(bench_vector(rng, dim));
        case 1:
            return Expr::scale(bench_rational(rng), bench_expr(rng, dim, budget - 1));
        default: {
            const std::size_t left =
                budget >= 3
                    ? std::uniform_int_distribution<std::size_t>(1, budget - 2)(rng)
                    : 1;
            Expr lhs = bench_expr(rng, dim, left);
            Expr rhs = bench_expr(rng, dim, budget - 1 - left > 0 ? budget - 1 - left : 1);
            switch (shape(rng) % 3) {
                case 0: return Expr::add(lhs, rhs);
                case 1: return Expr::join(lhs, rhs);
                default: return Expr::meet(lhs, rhs);
            }
        }
    }
}

NormalForm bench_nf(Rng& rng, std::size_t dim, std::size_t blocks, std::size_t block_size) {
    std::vector<NormalForm::Block> data;
    for (std::size_t b = 0; b < blocks; ++b) {
        NormalForm::Block block;
        for (std::size_t i = 0; i < block_size; ++i) block.push_back(bench_vector(rng, dim));
        data.push_back(std::move(block));
    }
    return NormalForm(dim, std::move(data));
}

void BM_normalize(benchmark::State& state) {
    Rng rng(42);
    std::vector<Expr> exprs;
    for (int i = 0; i < 64; ++i) {
        exprs.push_back(bench_expr(rng, 3, static_cast<std::size_t>(state.range(0))));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalize(exprs[i++ % exprs.size()]));
    }
}
BENCHMARK(BM_normalize)->Arg(8)->Arg(12)->Arg(16);

void BM_nf_leq(benchmark::State& state) {
    Rng rng(43);
    std::vector<std::pair<NormalForm, NormalForm>> pairs;
    const std::size_t size = static_cast<std::size_t>(state.range(0));
    for (int i = 0; i < 32; ++i) {
        pairs.emplace_back(bench_nf(rng, 2, size, 2), bench_nf(rng, 2, size, 2));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [f, g] = pairs[i++ % pairs.size()];
        benchmark::DoNotOptimize(nf_leq(f, g));
    }
}
BENCHMARK(BM_nf_leq)->Arg(2)->Arg(4)->Arg(6);

void BM_lp_solve(benchmark::State& state) {
    Rng rng(44);
    std::vector<LinearProgram> programs;
    const std::size_t vars = static_cast<std::size_t>(state.range(0));
    std::uniform_int_distribution<int> rel(0, 2);
    for (int i = 0; i < 32; ++i) {
        LinearProgram p;
        p.num_vars = vars;
        for (std::size_t r = 0; r < 2 * vars; ++r) {
            Constraint c;
            c.coeffs = bench_vector(rng, vars);
            const int pick = rel(rng);
            c.relation = pick == 0 ? Relation::Eq
                                   : (pick == 1 ? Relation::LessEq : Relation::GreaterEq);
            c.rhs = bench_rational(rng);
            p.constraints.push_back(std::move(c));
        }
        p.objective = Objective{Direction::Maximize, bench_vector(rng, vars)};
        programs.push_back(std::move(p));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lp_solve(programs[i++ % programs.size()]));
    }
}
BENCHMARK(BM_lp_solve)->Arg(3)->Arg(6)->Arg(9);

void BM_fm_decide_strict(benchmark::State& state) {
    Rng rng(45);
    std::vector<std::vector<Vector>> sets;
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    for (int i = 0; i < 32; ++i) {
        std::vector<Vector> vs;
        for (std::size_t k = 0; k < 6; ++k) vs.push_back(bench_vector(rng, dim));
        sets.push_back(std::move(vs));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fm_decide_strict(sets[i++ % sets.size()]));
    }
}
BENCHMARK(BM_fm_decide_strict)->Arg(2)->Arg(3)->Arg(4);

void BM_sup_on_ball(benchmark::State& state) {
    Rng rng(46);
    std::vector<NormalForm> forms;
    for (int i = 0; i < 16; ++i) {
        forms.push_back(bench_nf(rng, 3, static_cast<std::size_t>(state.range(0)), 3));
    }
    const PolyhedralBall cube = PolyhedralBall::unit_cube(3);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sup_on_ball(forms[i++ % forms.size()], cube));
    }
}
BENCHMARK(BM_sup_on_ball)->Arg(2)->Arg(4)->Arg(8);

void BM_hull_contains_zero(benchmark::State& state) {
    Rng rng(47);
    std::vector<std::vector<Vector>> sets;
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    for (int i = 0; i < 32; ++i) {
        std::vector<Vector> vs;
        for (std::size_t k = 0; k < 6; ++k) vs.push_back(bench_vector(rng, dim));
        sets.push_back(std::move(vs));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hull_contains_zero(sets[i++ % sets.size()]));
    }
}
BENCHMARK(BM_hull_contains_zero)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
